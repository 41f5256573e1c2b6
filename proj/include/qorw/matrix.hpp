#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace qorw {

using Cx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CMat2 = Eigen::Matrix2cd;

constexpr Cx I_UNIT{0.0, 1.0};

// Default cap on dense dimensions produced by tensor powers (dim^s ≤ this).
constexpr int kTensorDimCap = 4096;

// Pauli matrices and friends on the coin space; |+⟩ is the first basis vector.
CMat2 sigma1();
CMat2 sigma2();
CMat2 sigma3();
CMat2 sigma_plus();   // |+⟩⟨−|
CMat2 sigma_minus();  // |−⟩⟨+|
CMat2 proj_plus();    // |+⟩⟨+|
CMat2 proj_minus();   // |−⟩⟨−|

bool is_finite(const CMat& m);

// exp(iθσ₂) = [[cosθ, sinθ], [−sinθ, cosθ]]
CMat2 rotation_unitary(double theta);

// s-fold tensor product m ⊗ m ⊗ ... ⊗ m; throws resource_error past the cap.
CMat tensor_power(const CMat& m, int s);

CMat kron(const CMat& a, const CMat& b);

// Trace out the leading tensor factor of dimension first_dim.
CMat partial_trace_first(const CMat& m, int first_dim);

// Dense matrix exponential (scaling-and-squaring).
CMat matrix_exponential(const CMat& m);

double max_abs(const CMat& m);

// Fixture serialization: {dim, re[][], im[][]} as JSON text.
std::string matrix_to_json(const CMat& m);
CMat matrix_from_json(const std::string& text);

}  // namespace qorw

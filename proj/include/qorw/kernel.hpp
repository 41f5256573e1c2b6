#pragma once

#include <vector>

#include "qorw/jet.hpp"
#include "qorw/walk_model.hpp"

namespace qorw {

// The scalar kernel A(φ,φ′) by which one walk step multiplies the walker's
// Fourier-basis density kernel: M_0 = ε_t(ρ_c), M_j = V_cl(φ)ε_j(M_{j−1})V_cl(φ′)†,
// A = Tr M_k.
Cx kernel_at(const WalkModel& model, double phi, double phi_prime);

// A and its diagonal φ-derivative sampled on the uniform grid φ_a = 2πa/M.
struct KernelSample {
    int grid_size = 0;
    Eigen::MatrixXcd values;            // A(φ_a, φ′_b)
    std::vector<Cx> diag_derivative;    // [∂_φ A(φ,φ′)]_{φ′=φ} at the nodes
};

KernelSample kernel_grid(const WalkModel& model, int grid_size);

// Asymptotic characteristic function h(φ) = −i[∂_φ A(φ,φ′)]_{φ′=φ},
// via exact forward-mode differentiation through the kernel recursion.
double acf_h(const WalkModel& model, double phi);

// Same quantity through the rotated-σ₃ sum for U-quantized models:
// h = Tr[(σ + V†σV + ... + V^{†k−1}σV^{k−1})ρ_c], σ = U†σ₃U, V(φ) = V_cl(φ)U.
double acf_h_unitary(const WalkModel& model, double phi);

struct ClassicalityReport {
    bool classical = false;
    double max_phi_plus_variation = 0.0;
};

// True iff A depends only on φ_− = φ−φ′ (then A(φ_−) is the characteristic
// function of a classical step law).
ClassicalityReport classicality_test(const WalkModel& model, int grid_size, double tolerance);

// A(φ+t, φ′) as an order-`order` jet in t; shared with the moment machinery.
Jet kernel_jet(const WalkModel& model, int order, double phi, double phi_prime);

}  // namespace qorw

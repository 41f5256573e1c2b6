#pragma once

#include <string>
#include <vector>

#include "qorw/matrix.hpp"

namespace qorw {

// Validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
  public:
    // Validates the invariants and throws structural_error on failure.
    explicit DensityMatrix(CMat m);

    const CMat& mat() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

    static DensityMatrix pure(const Eigen::VectorXcd& psi);
    static DensityMatrix diag2(double q);          // diag(q, 1−q)
    static DensityMatrix coin_plus();              // |+⟩⟨+|
    static DensityMatrix coin_minus();             // |−⟩⟨−|
    static DensityMatrix maximally_mixed(int dim);

  private:
    CMat m_;
};

double smallest_eigenvalue(const CMat& hermitian);

// CPTP map given by a finite Kraus family ε(ρ) = Σᵢ KᵢρKᵢ†.
struct KrausChannel {
    std::vector<CMat> kraus;
    std::string label;

    int dim() const { return kraus.empty() ? 0 : static_cast<int>(kraus[0].rows()); }

    // Σᵢ KᵢρKᵢ† without density-matrix validation (works on any matrix).
    CMat apply_raw(const CMat& rho) const;
};

struct CptpReport {
    bool pass = false;
    double completeness_deviation = 0.0;  // ‖Σ K†K − 1‖_max
};

CptpReport validate_cptp(const KrausChannel& channel);

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho);

// Kraus family {AᵢBⱼ}: acts as a∘b.
KrausChannel compose_channels(const KrausChannel& a, const KrausChannel& b);

KrausChannel identity_channel(int dim = 2);

// Spontaneous de-excitation of the upper coin state; decay = sin²(λt) ∈ [0,1].
KrausChannel amplitude_damping(double decay);

// Same channel parametrized by (λ, t) with cos²(λt) = e^{−2λt}, so that
// composition in t obeys the semigroup law.
KrausChannel amplitude_damping_rate(double lambda, double t);

// {√(1−p)·1, √p·u}
KrausChannel mixing_channel(const CMat& u, double p);

KrausChannel unitary_channel(const CMat& u, const std::string& label = "unitary");

}  // namespace qorw

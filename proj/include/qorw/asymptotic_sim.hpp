#pragma once

#include <cstdint>

#include "qorw/distribution.hpp"
#include "qorw/walk_model.hpp"

namespace qorw {

// Quantum-simulation view of a U-quantized V^k walk's asymptotics.
struct SimulatorSpec {
    WalkModel model;   // must be U-quantized: k unitary sub-steps, common U
    int s = 1;         // moment order
    WalkerInit init;   // supplies the diagonal density ρ(φ,φ)/2π

    CMat2 reshuffle;   // U, extracted at construction
    CMat2 sigma;       // U†σ₃U

    SimulatorSpec(WalkModel m, int order, WalkerInit walker_init);
};

CMat2 v_of_phi(const SimulatorSpec& spec, double phi);  // V(φ) = V_cl(φ)U

// ε_φ(ρ) = (1/k) Σ_{j=0}^{k−1} V(φ)^j ρ V(φ)^{†j}
CMat2 eps_phi(const SimulatorSpec& spec, const CMat2& rho, double phi);

// h(φ) = k·Tr(ε_φ(ρ_c)σ); equals acf_h on U-quantized models.
double acf_via_sim(const SimulatorSpec& spec, double phi);

// ε̄^s = ∫ ρ(φ,φ)/2π · ε_φ(ρ_c)^{⊗s} dφ, exact-degree quadrature. dim 2^s.
CMat eps_bar_s(const SimulatorSpec& spec);

// Tr[σ^{⊗s} ε̄^s] = (1/2π)∫ρ(φ,φ)(h(φ)/k)^s dφ.
double simulated_moment(const SimulatorSpec& spec);

// Unitary dilation of ε_φ for k = 2: W(φ) = (1/√2)[[1, V†],[−V, 1]] on
// ancilla⊗coin with ρ_a = |+⟩⟨+|.
CMat build_W(const SimulatorSpec& spec, double phi);

// H(φ) = (π/4)[σ₊⊗V(φ)† − σ₋⊗V(φ)]; exp H = W.
CMat build_H(const SimulatorSpec& spec, double phi);

// ΔH = Σ_j 1⊗...⊗H⊗...⊗1 of dimension 4^s; exp ΔH = W^{⊗s}.
CMat build_Delta_H(const SimulatorSpec& spec, double phi, int s);

struct StochasticEstimate {
    CMat mean;            // dim 2^s estimate of ε̄^s
    CMat standard_error;  // per entry: SE(re) + i·SE(im)
    long long samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo average of ⊗_i V(φ)^{ν_i} ρ_c V(φ)^{†ν_i} with φ ~ ρ(φ,φ)/2π and
// ν_i uniform on {0..k−1}; bit-reproducible for a fixed seed.
StochasticEstimate stochastic_estimate(const SimulatorSpec& spec, long long samples,
                                       std::uint64_t seed);

}  // namespace qorw

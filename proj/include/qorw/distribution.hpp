#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qorw/kernel.hpp"
#include "qorw/walk_model.hpp"

namespace qorw {

// Finitely supported initial walker state as a density matrix over a site
// window [m_min, m_min + dim − 1].
class WalkerInit {
  public:
    // Pure state Σ amp_m |m⟩ from (site, amplitude) pairs; normalized input.
    static WalkerInit pure(const std::vector<std::pair<int, Cx>>& amplitudes);

    // Density matrix over a window starting at m_min.
    static WalkerInit density(int m_min, const CMat& rho);

    static WalkerInit site(int m);  // |m⟩⟨m|

    int m_min() const { return m_min_; }
    int m_max() const { return m_min_ + static_cast<int>(rho_.rows()) - 1; }
    int max_abs_site() const;
    const CMat& rho() const { return rho_; }
    Cx element(int m, int m_prime) const;  // ⟨m|ρ_w|m′⟩, 0 outside the window

    // ρ(φ,φ) = Σ_{m,m′} ρ_{mm′} e^{i(m−m′)φ}; real and ≥ 0.
    double diag_kernel(double phi) const;

  private:
    WalkerInit(int m_min, CMat rho);
    int m_min_ = 0;
    CMat rho_;
};

// ρ(φ_a,φ′_b) = Σ_{m,m′} ⟨m|ρ_w|m′⟩ e^{imφ_a − im′φ′_b} on the uniform grid.
Eigen::MatrixXcd init_kernel(const WalkerInit& init, int grid_size);

struct PositionDistribution {
    int n = 0;
    int m_min = 0;                // site of probs[0]
    std::vector<double> probs;

    int site(int idx) const { return m_min + idx; }
    double prob_at(int m) const;
    double total() const;
    double mean_power(int s) const;  // Σ m^s P_m
};

// Exact n-step occupation probabilities via the spectral kernel.
PositionDistribution probabilities(const WalkModel& model, const WalkerInit& init, int n);

// ⟨L^s⟩ after n steps; cross-checked against the spectral-derivative route.
double moment(const WalkModel& model, const WalkerInit& init, int n, int s);

// (1/2π)∫ ρ(φ,φ) h(φ)^s dφ by exact-degree quadrature.
double asymptotic_moment(const WalkModel& model, const WalkerInit& init, int s);

struct Histogram {
    std::vector<double> edges;   // bins+1, strictly increasing
    std::vector<double> masses;  // bins, sum to 1
    bool degenerate = false;
    std::string mode;            // "quadrature" or "monte_carlo"
    long long count = 0;         // quadrature nodes or samples
    std::uint64_t seed = 0;

    int bins() const { return static_cast<int>(masses.size()); }
    double center(int b) const { return 0.5 * (edges[b] + edges[b + 1]); }
    double width(int b) const { return edges[b + 1] - edges[b]; }
    double mean_power(int s) const;  // Σ center^s · mass
};

enum class PdfMode { Quadrature, MonteCarlo };

// Histogram of Y = h(φ) with φ weighted by ρ(φ,φ)/2π.
Histogram asymptotic_pdf(const WalkModel& model, const WalkerInit& init, int bins,
                         long long nodes, PdfMode mode, std::uint64_t seed = 0);

}  // namespace qorw

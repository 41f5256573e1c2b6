#include "qorw/distribution.hpp"

#include <cmath>

#include "qorw/channel.hpp"
#include "qorw/errors.hpp"
#include "qorw/parallel.hpp"
#include "qorw/rng.hpp"
#include "qorw/tolerances.hpp"

namespace qorw {

namespace {

int next_pow2(int n) {
    int m = 1;
    while (m < n) m *= 2;
    return m;
}

}  // namespace

WalkerInit::WalkerInit(int m_min, CMat rho) : m_min_(m_min), rho_(std::move(rho)) {
    DensityMatrix check{rho_};  // norm/trace and positivity to tolerance
}

WalkerInit WalkerInit::pure(const std::vector<std::pair<int, Cx>>& amplitudes) {
    if (amplitudes.empty()) throw structural_error("WalkerInit: empty amplitude list");
    int lo = amplitudes.front().first, hi = lo;
    for (const auto& [m, a] : amplitudes) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(hi - lo + 1);
    for (const auto& [m, a] : amplitudes) psi(m - lo) += a;
    const double norm = psi.norm();
    if (norm == 0.0) throw structural_error("WalkerInit: zero state");
    psi /= norm;
    return WalkerInit(lo, (psi * psi.adjoint()).eval());
}

WalkerInit WalkerInit::density(int m_min, const CMat& rho) {
    return WalkerInit(m_min, rho);
}

WalkerInit WalkerInit::site(int m) {
    return pure({{m, Cx{1.0}}});
}

int WalkerInit::max_abs_site() const {
    return std::max(std::abs(m_min()), std::abs(m_max()));
}

Cx WalkerInit::element(int m, int m_prime) const {
    const int i = m - m_min_, j = m_prime - m_min_;
    if (i < 0 || j < 0 || i >= rho_.rows() || j >= rho_.rows()) return Cx{0.0};
    return rho_(i, j);
}

double WalkerInit::diag_kernel(double phi) const {
    Cx sum{0.0};
    for (Eigen::Index i = 0; i < rho_.rows(); ++i)
        for (Eigen::Index j = 0; j < rho_.rows(); ++j)
            sum += rho_(i, j) * std::exp(I_UNIT * (static_cast<double>(i - j) * phi));
    return sum.real();
}

Eigen::MatrixXcd init_kernel(const WalkerInit& init, int grid_size) {
    if (grid_size < 2 * init.max_abs_site() + 2)
        throw usage_error("init_kernel: grid too small for the init support");
    Eigen::MatrixXcd out(grid_size, grid_size);
    const double step = 2.0 * M_PI / grid_size;
    for (int a = 0; a < grid_size; ++a) {
        for (int b = 0; b < grid_size; ++b) {
            Cx sum{0.0};
            for (int m = init.m_min(); m <= init.m_max(); ++m)
                for (int mp = init.m_min(); mp <= init.m_max(); ++mp)
                    sum += init.element(m, mp) *
                           std::exp(I_UNIT * (m * a * step - mp * b * step));
            out(a, b) = sum;
        }
    }
    return out;
}

double PositionDistribution::prob_at(int m) const {
    const int idx = m - m_min;
    if (idx < 0 || idx >= static_cast<int>(probs.size())) return 0.0;
    return probs[idx];
}

double PositionDistribution::total() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

double PositionDistribution::mean_power(int s) const {
    double sum = 0.0;
    for (int i = 0; i < static_cast<int>(probs.size()); ++i)
        sum += std::pow(static_cast<double>(site(i)), s) * probs[i];
    return sum;
}

PositionDistribution probabilities(const WalkModel& model, const WalkerInit& init, int n) {
    if (n < 0) throw usage_error("probabilities: n must be >= 0");
    model.validate();
    const int mmax = init.max_abs_site();
    const int deg = model.k * n + mmax;
    // Integrands are trig polynomials of degree <= deg per variable, so the
    // uniform-grid trapezoid rule is exact once M > 2*deg.
    const int M = next_pow2(2 * deg + 2);
    const double step = 2.0 * M_PI / M;

    Eigen::MatrixXcd grid = init_kernel(init, M);
    if (n > 0) {
        KernelSample ks = kernel_grid(model, M);
        for (int a = 0; a < M; ++a)
            for (int b = 0; b < M; ++b)
                grid(a, b) *= std::pow(ks.values(a, b), n);
    }

    PositionDistribution out;
    out.n = n;
    out.m_min = init.m_min() - model.k * n;
    const int sites = (init.m_max() + model.k * n) - out.m_min + 1;
    out.probs.assign(sites, 0.0);

    // P_m = (1/M²) Σ_{a,b} ρ(φ_a,φ_b) A^n(φ_a,φ_b) e^{−im(φ_a−φ_b)}
    std::vector<double> tmp(sites, 0.0);
    parallel_for(sites, [&](int idx) {
        const int m = out.m_min + idx;
        Cx sum{0.0};
        for (int b = 0; b < M; ++b) {
            const Cx eb = std::exp(I_UNIT * (m * b * step));
            Cx col{0.0};
            for (int a = 0; a < M; ++a)
                col += grid(a, b) * std::exp(-I_UNIT * (m * a * step));
            sum += col * eb;
        }
        tmp[idx] = (sum / static_cast<double>(M) / static_cast<double>(M)).real();
    });
    out.probs = std::move(tmp);

    const double total = out.total();
    if (std::abs(total - 1.0) > 1e-10)
        throw numeric_error("probabilities: normalization residual " +
                            std::to_string(total - 1.0));
    return out;
}

// Spectral-derivative route for Tr(L^s ρ_w^(n)):
// (1/2πi^s) ∫ dφ [∂_φ^s (ρ(φ,φ′) A^n(φ,φ′))]_{φ′=φ}, with the derivative taken
// by order-s jets through the kernel recursion and the init kernel.
static double moment_spectral(const WalkModel& model, const WalkerInit& init, int n, int s) {
    const int mmax = init.max_abs_site();
    const int deg = model.k * n + mmax;
    const int M = next_pow2(2 * deg + 2);
    const double step = 2.0 * M_PI / M;

    std::vector<double> node_val(M, 0.0);
    parallel_for(M, [&](int a) {
        const double phi = a * step;
        Jet an = pow_jet(kernel_jet(model, s, phi, phi), n);
        // jet of ρ(φ+t, φ): coefficient j is Σ ρ_{mm'} (im)^j/j! e^{i(m−m')φ}
        Jet rj(s);
        for (int m = init.m_min(); m <= init.m_max(); ++m) {
            for (int mp = init.m_min(); mp <= init.m_max(); ++mp) {
                const Cx base = init.element(m, mp) * std::exp(I_UNIT * ((m - mp) * phi));
                Cx term = base;
                double fact = 1.0;
                for (int j = 0; j <= s; ++j) {
                    if (j > 0) {
                        fact *= j;
                        term *= I_UNIT * static_cast<double>(m);
                    }
                    rj.c[j] += term / fact;
                }
            }
        }
        Jet f = rj * an;
        double sfact = 1.0;
        for (int j = 2; j <= s; ++j) sfact *= j;
        const Cx val = sfact * f.c[s] / std::pow(I_UNIT, s);
        node_val[a] = val.real();
    });
    double sum = 0.0;
    for (double v : node_val) sum += v;
    return sum / M;
}

double moment(const WalkModel& model, const WalkerInit& init, int n, int s) {
    if (s < 1) throw usage_error("moment: s must be >= 1");
    const double direct = probabilities(model, init, n).mean_power(s);
    const double spectral = moment_spectral(model, init, n, s);
    if (std::abs(direct - spectral) > tol().moment_agreement)
        throw numeric_error("moment: route disagreement " +
                            std::to_string(direct - spectral));
    return direct;
}

double asymptotic_moment(const WalkModel& model, const WalkerInit& init, int s) {
    if (s < 1) throw usage_error("asymptotic_moment: s must be >= 1");
    model.validate();
    const int deg_rho = init.m_max() - init.m_min();
    const int M = next_pow2(2 * (2 * model.k * s + deg_rho) + 2);
    const double step = 2.0 * M_PI / M;
    double sum = 0.0;
    for (int a = 0; a < M; ++a) {
        const double phi = a * step;
        sum += init.diag_kernel(phi) * std::pow(acf_h(model, phi), s);
    }
    return sum / M;
}

double Histogram::mean_power(int s) const {
    double sum = 0.0;
    for (int b = 0; b < bins(); ++b) sum += std::pow(center(b), s) * masses[b];
    return sum;
}

Histogram asymptotic_pdf(const WalkModel& model, const WalkerInit& init, int bins,
                         long long nodes, PdfMode mode, std::uint64_t seed) {
    if (bins < 1) throw usage_error("asymptotic_pdf: bins must be >= 1");
    if (nodes < 10LL * bins)
        throw usage_error("asymptotic_pdf: need nodes >= 10*bins");
    model.validate();

    std::vector<double> y(nodes), w(nodes);
    if (mode == PdfMode::Quadrature) {
        parallel_for(static_cast<int>(nodes), [&](int i) {
            const double phi = 2.0 * M_PI * i / static_cast<double>(nodes);
            y[i] = acf_h(model, phi);
            w[i] = init.diag_kernel(phi);
        });
    } else {
        // φ sampled by inverse transform from a 4096-node piecewise-linear CDF
        // of ρ(φ,φ)/2π; one counter-based stream per sample.
        const int cdf_nodes = 4096;
        std::vector<double> density(cdf_nodes);
        for (int i = 0; i < cdf_nodes; ++i)
            density[i] = init.diag_kernel(2.0 * M_PI * i / cdf_nodes);
        CircleSampler sampler(density);
        parallel_for(static_cast<int>(nodes), [&](int i) {
            const double phi = sampler.sample(uniform01(seed, i, 0));
            y[i] = acf_h(model, phi);
            w[i] = 1.0;
        });
    }

    double wsum = 0.0, ylo = y[0], yhi = y[0];
    for (long long i = 0; i < nodes; ++i) {
        wsum += w[i];
        ylo = std::min(ylo, y[i]);
        yhi = std::max(yhi, y[i]);
    }

    Histogram h;
    h.mode = mode == PdfMode::Quadrature ? "quadrature" : "monte_carlo";
    h.count = nodes;
    h.seed = seed;
    if (yhi - ylo < tol().degenerate_pdf) {
        h.degenerate = true;
        h.edges = {ylo - 0.5, ylo + 0.5};
        h.masses = {1.0};
        return h;
    }
    h.edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b)
        h.edges[b] = ylo + (yhi - ylo) * b / static_cast<double>(bins);
    h.masses.assign(bins, 0.0);
    const double inv_width = bins / (yhi - ylo);
    for (long long i = 0; i < nodes; ++i) {
        int b = static_cast<int>((y[i] - ylo) * inv_width);
        b = std::clamp(b, 0, bins - 1);
        h.masses[b] += w[i] / wsum;
    }
    return h;
}

}  // namespace qorw

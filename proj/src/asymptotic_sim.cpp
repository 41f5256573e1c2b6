#include "qorw/asymptotic_sim.hpp"

#include <cmath>

#include "qorw/errors.hpp"
#include "qorw/rng.hpp"
#include "qorw/tolerances.hpp"

namespace qorw {

namespace {

int next_pow2(int n) {
    int m = 1;
    while (m < n) m *= 2;
    return m;
}

CMat2 vcl2(double phi) {
    CMat2 m = CMat2::Zero();
    m(0, 0) = std::exp(I_UNIT * phi);
    m(1, 1) = std::exp(-I_UNIT * phi);
    return m;
}

// Quadrature node count exact for the ε̄^s integrand: per entry a trig
// polynomial of degree ≤ 2s(k−1) plus the diagonal init density degree.
int quad_nodes(const SimulatorSpec& spec) {
    const int deg_rho = spec.init.m_max() - spec.init.m_min();
    return next_pow2(2 * (2 * spec.s * (spec.model.k - 1) + deg_rho) + 2);
}

}  // namespace

SimulatorSpec::SimulatorSpec(WalkModel m, int order, WalkerInit walker_init)
    : model(std::move(m)), s(order), init(std::move(walker_init)) {
    if (s < 1) throw usage_error("SimulatorSpec: s must be >= 1");
    model.validate();
    reshuffle = model.reshuffling_unitary();  // throws on non-U-quantized models
    sigma = reshuffle.adjoint() * sigma3() * reshuffle;
    const double dim = std::pow(4.0, s);
    if (dim > kTensorDimCap) throw resource_error("SimulatorSpec: 4^s exceeds memory cap");
}

CMat2 v_of_phi(const SimulatorSpec& spec, double phi) {
    return vcl2(phi) * spec.reshuffle;
}

CMat2 eps_phi(const SimulatorSpec& spec, const CMat2& rho, double phi) {
    const CMat2 v = v_of_phi(spec, phi);
    CMat2 sum = CMat2::Zero();
    CMat2 vp = CMat2::Identity();
    for (int j = 0; j < spec.model.k; ++j) {
        sum += vp * rho * vp.adjoint();
        vp = v * vp;
    }
    return sum / static_cast<double>(spec.model.k);
}

double acf_via_sim(const SimulatorSpec& spec, double phi) {
    const Cx h = static_cast<double>(spec.model.k) *
                 (eps_phi(spec, spec.model.coin_init, phi) * spec.sigma).trace();
    if (std::abs(h.imag()) > tol().acf_imag)
        throw numeric_error("acf_via_sim: imaginary residue");
    return h.real();
}

CMat eps_bar_s(const SimulatorSpec& spec) {
    const int M = quad_nodes(spec);
    const int dim = 1 << spec.s;
    CMat sum = CMat::Zero(dim, dim);
    for (int a = 0; a < M; ++a) {
        const double phi = 2.0 * M_PI * a / M;
        const CMat2 e = eps_phi(spec, spec.model.coin_init, phi);
        sum += spec.init.diag_kernel(phi) * tensor_power(e, spec.s);
    }
    return sum / static_cast<double>(M);
}

double simulated_moment(const SimulatorSpec& spec) {
    const CMat sig_s = tensor_power(spec.sigma, spec.s);
    const Cx m = (sig_s * eps_bar_s(spec)).trace();
    if (std::abs(m.imag()) > tol().acf_imag)
        throw numeric_error("simulated_moment: imaginary residue");
    return m.real();
}

CMat build_W(const SimulatorSpec& spec, double phi) {
    if (spec.model.k != 2) throw usage_error("build_W: dilation is defined for k = 2 only");
    const CMat2 v = v_of_phi(spec, phi);
    CMat w = CMat::Zero(4, 4);
    w.block<2, 2>(0, 0) = CMat2::Identity();
    w.block<2, 2>(0, 2) = v.adjoint();
    w.block<2, 2>(2, 0) = -v;
    w.block<2, 2>(2, 2) = CMat2::Identity();
    return w / std::sqrt(2.0);
}

CMat build_H(const SimulatorSpec& spec, double phi) {
    if (spec.model.k != 2) throw usage_error("build_H: dilation is defined for k = 2 only");
    const CMat2 v = v_of_phi(spec, phi);
    const CMat h = kron(sigma_plus(), v.adjoint()) - kron(sigma_minus(), v);
    return (M_PI / 4.0) * h;
}

CMat build_Delta_H(const SimulatorSpec& spec, double phi, int s) {
    if (s < 1) throw usage_error("build_Delta_H: s must be >= 1");
    if (std::pow(4.0, s) > kTensorDimCap)
        throw resource_error("build_Delta_H: 4^s exceeds memory cap");
    const CMat h = build_H(spec, phi);
    auto pow4 = [](int e) { return static_cast<int>(std::pow(4.0, e)); };
    CMat sum = CMat::Zero(pow4(s), pow4(s));
    for (int j = 0; j < s; ++j) {
        // 1^{⊗j} ⊗ H ⊗ 1^{⊗(s−1−j)}
        CMat term = kron(CMat::Identity(pow4(j), pow4(j)), h);
        term = kron(term, CMat(CMat::Identity(pow4(s - 1 - j), pow4(s - 1 - j))));
        sum += term;
    }
    return sum;
}

StochasticEstimate stochastic_estimate(const SimulatorSpec& spec, long long samples,
                                       std::uint64_t seed) {
    if (samples < 1) throw usage_error("stochastic_estimate: samples must be >= 1");
    const int dim = 1 << spec.s;

    // φ sampler from the diagonal init density on 4096 nodes.
    const int cdf_nodes = 4096;
    std::vector<double> density(cdf_nodes);
    for (int i = 0; i < cdf_nodes; ++i)
        density[i] = spec.init.diag_kernel(2.0 * M_PI * i / cdf_nodes);
    CircleSampler sampler(density);

    CMat sum = CMat::Zero(dim, dim);
    Eigen::MatrixXd sum_sq_re = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd sum_sq_im = Eigen::MatrixXd::Zero(dim, dim);

    for (long long i = 0; i < samples; ++i) {
        const double phi = sampler.sample(uniform01(seed, static_cast<std::uint64_t>(i), 0));
        const CMat2 v = v_of_phi(spec, phi);
        CMat draw = CMat::Ones(1, 1);
        for (int slot = 0; slot < spec.s; ++slot) {
            const int nu = uniform_int(seed, static_cast<std::uint64_t>(i),
                                       static_cast<std::uint64_t>(slot + 1), spec.model.k);
            CMat2 vp = CMat2::Identity();
            for (int j = 0; j < nu; ++j) vp = v * vp;
            draw = kron(draw, CMat(vp * spec.model.coin_init * vp.adjoint()));
        }
        sum += draw;
        sum_sq_re += draw.real().cwiseProduct(draw.real());
        sum_sq_im += draw.imag().cwiseProduct(draw.imag());
    }

    StochasticEstimate out;
    out.samples = samples;
    out.seed = seed;
    out.mean = sum / static_cast<double>(samples);
    const double n = static_cast<double>(samples);
    Eigen::MatrixXd var_re =
        (sum_sq_re / n - out.mean.real().cwiseProduct(out.mean.real())).cwiseMax(0.0);
    Eigen::MatrixXd var_im =
        (sum_sq_im / n - out.mean.imag().cwiseProduct(out.mean.imag())).cwiseMax(0.0);
    const double denom = samples > 1 ? n - 1.0 : 1.0;
    out.standard_error = ((var_re * (n / denom) / n).cwiseSqrt().cast<Cx>() +
                          I_UNIT * (var_im * (n / denom) / n).cwiseSqrt().cast<Cx>());
    return out;
}

}  // namespace qorw

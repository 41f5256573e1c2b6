#include "qorw/channel.hpp"

#include <cmath>

#include "qorw/errors.hpp"
#include "qorw/tolerances.hpp"

namespace qorw {

double smallest_eigenvalue(const CMat& hermitian) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix::DensityMatrix(CMat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw structural_error("DensityMatrix: not square");
    if (!is_finite(m_))
        throw structural_error("DensityMatrix: non-finite entries");
    const auto& t = tol();
    if (max_abs(m_ - m_.adjoint()) > t.hermiticity)
        throw structural_error("DensityMatrix: not Hermitian");
    if (std::abs(m_.trace() - Cx(1.0)) > t.trace_one)
        throw structural_error("DensityMatrix: trace != 1");
    if (smallest_eigenvalue(m_) < t.psd_floor)
        throw structural_error("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const double norm = psi.norm();
    if (norm == 0.0) throw structural_error("DensityMatrix::pure: zero vector");
    Eigen::VectorXcd v = psi / norm;
    return DensityMatrix((v * v.adjoint()).eval());
}

DensityMatrix DensityMatrix::diag2(double q) {
    if (q < 0.0 || q > 1.0) throw structural_error("diag2: q outside [0,1]");
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = q;
    m(1, 1) = 1.0 - q;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::coin_plus() { return diag2(1.0); }
DensityMatrix DensityMatrix::coin_minus() { return diag2(0.0); }

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(CMat::Identity(dim, dim) / static_cast<double>(dim));
}

CMat KrausChannel::apply_raw(const CMat& rho) const {
    CMat out = CMat::Zero(rho.rows(), rho.cols());
    for (const auto& k : kraus) out += k * rho * k.adjoint();
    return out;
}

CptpReport validate_cptp(const KrausChannel& channel) {
    if (channel.kraus.empty())
        throw structural_error("validate_cptp: empty Kraus list");
    const int d = channel.dim();
    CMat sum = CMat::Zero(d, d);
    for (const auto& k : channel.kraus) {
        if (k.rows() != d || k.cols() != d)
            throw structural_error("validate_cptp: Kraus dimension mismatch");
        if (!is_finite(k))
            throw structural_error("validate_cptp: non-finite Kraus entries");
        sum += k.adjoint() * k;
    }
    CptpReport report;
    report.completeness_deviation = max_abs(sum - CMat::Identity(d, d));
    report.pass = report.completeness_deviation <= tol().cptp;
    return report;
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho) {
    if (channel.dim() != rho.dim())
        throw structural_error("apply_channel: dimension mismatch");
    return DensityMatrix(channel.apply_raw(rho.mat()));
}

KrausChannel compose_channels(const KrausChannel& a, const KrausChannel& b) {
    if (a.dim() != b.dim())
        throw structural_error("compose_channels: dimension mismatch");
    KrausChannel out;
    out.label = a.label + "∘" + b.label;
    for (const auto& ka : a.kraus)
        for (const auto& kb : b.kraus)
            out.kraus.push_back(ka * kb);
    return out;
}

KrausChannel identity_channel(int dim) {
    return KrausChannel{{CMat::Identity(dim, dim)}, "identity"};
}

KrausChannel amplitude_damping(double decay) {
    if (decay < 0.0 || decay > 1.0)
        throw structural_error("amplitude_damping: decay outside [0,1]");
    CMat s0 = CMat::Zero(2, 2);
    s0(0, 0) = std::sqrt(1.0 - decay);
    s0(1, 1) = 1.0;
    CMat s1 = CMat::Zero(2, 2);
    s1(1, 0) = std::sqrt(decay);
    return KrausChannel{{s0, s1}, "amplitude_damping"};
}

KrausChannel amplitude_damping_rate(double lambda, double t) {
    if (lambda < 0.0 || t < 0.0)
        throw structural_error("amplitude_damping_rate: negative rate or time");
    // cos²(λt) = e^{−2λt}  ⇒  decay = 1 − e^{−2λt}
    return amplitude_damping(1.0 - std::exp(-2.0 * lambda * t));
}

KrausChannel mixing_channel(const CMat& u, double p) {
    if (p < 0.0 || p > 1.0)
        throw structural_error("mixing_channel: p outside [0,1]");
    const int d = static_cast<int>(u.rows());
    if (max_abs(u.adjoint() * u - CMat::Identity(d, d)) > tol().unitarity)
        throw structural_error("mixing_channel: u is not unitary");
    CMat k0 = std::sqrt(1.0 - p) * CMat::Identity(d, d);
    CMat k1 = std::sqrt(p) * u;
    return KrausChannel{{k0, k1}, "mixing"};
}

KrausChannel unitary_channel(const CMat& u, const std::string& label) {
    const int d = static_cast<int>(u.rows());
    if (max_abs(u.adjoint() * u - CMat::Identity(d, d)) > tol().unitarity)
        throw structural_error("unitary_channel: u is not unitary");
    return KrausChannel{{u}, label};
}

}  // namespace qorw

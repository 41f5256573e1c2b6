#include "qorw/kernel.hpp"

#include <cmath>

#include "qorw/errors.hpp"
#include "qorw/parallel.hpp"
#include "qorw/tolerances.hpp"

namespace qorw {

namespace {

CMat2 vcl(double phi) {
    CMat2 m = CMat2::Zero();
    m(0, 0) = std::exp(I_UNIT * phi);
    m(1, 1) = std::exp(-I_UNIT * phi);
    return m;
}

CMat2 apply2(const KrausChannel& ch, const CMat2& m) {
    CMat2 out = CMat2::Zero();
    for (const auto& k : ch.kraus) out += k * m * k.adjoint();
    return out;
}

JetMat2 apply2(const KrausChannel& ch, const JetMat2& m) {
    JetMat2 out(m.order());
    for (int j = 0; j <= m.order(); ++j) out.c[j] = apply2(ch, m.c[j]);
    return out;
}

struct BuiltModel {
    std::vector<KrausChannel> quantizers;
    std::optional<KrausChannel> entry;
    CMat2 rho;

    explicit BuiltModel(const WalkModel& model)
        : quantizers(model.built_quantizers()),
          entry(model.built_entry()),
          rho(model.coin_init) {
        if (entry) rho = apply2(*entry, rho);
    }
};

}  // namespace

Cx kernel_at(const WalkModel& model, double phi, double phi_prime) {
    BuiltModel bm(model);
    const CMat2 vl = vcl(phi);
    const CMat2 vr = vcl(phi_prime).adjoint();
    CMat2 m = bm.rho;
    for (const auto& ch : bm.quantizers) m = vl * apply2(ch, m) * vr;
    return m.trace();
}

// Forward-mode diagonal derivative: D_0 = 0,
// D_j = iσ₃M_j + V_cl(φ)ε_j(D_{j−1})V_cl(φ)† evaluated at φ′ = φ.
static Cx diag_derivative_at(const BuiltModel& bm, double phi) {
    const CMat2 vl = vcl(phi);
    const CMat2 vr = vl.adjoint();
    const CMat2 is3 = I_UNIT * sigma3();
    CMat2 m = bm.rho;
    CMat2 d = CMat2::Zero();
    for (const auto& ch : bm.quantizers) {
        CMat2 dm = apply2(ch, d);
        m = vl * apply2(ch, m) * vr;
        d = is3 * m + vl * dm * vr;
    }
    return d.trace();
}

KernelSample kernel_grid(const WalkModel& model, int grid_size) {
    if (grid_size < 2 * model.k + 1)
        throw usage_error("kernel_grid: grid too small (need M >= 2k+1)");
    BuiltModel bm(model);
    KernelSample out;
    out.grid_size = grid_size;
    out.values.resize(grid_size, grid_size);
    out.diag_derivative.resize(grid_size);
    const double step = 2.0 * M_PI / grid_size;
    parallel_for(grid_size, [&](int a) {
        const double phi = a * step;
        const CMat2 vl = vcl(phi);
        for (int b = 0; b < grid_size; ++b) {
            const CMat2 vr = vcl(b * step).adjoint();
            CMat2 m = bm.rho;
            for (const auto& ch : bm.quantizers) m = vl * apply2(ch, m) * vr;
            out.values(a, b) = m.trace();
        }
        out.diag_derivative[a] = diag_derivative_at(bm, phi);
    });
    return out;
}

double acf_h(const WalkModel& model, double phi) {
    BuiltModel bm(model);
    const Cx h = -I_UNIT * diag_derivative_at(bm, phi);
    if (std::abs(h.imag()) > tol().acf_imag)
        throw numeric_error("acf_h: imaginary residue " + std::to_string(h.imag()));
    return h.real();
}

double acf_h_unitary(const WalkModel& model, double phi) {
    const CMat2 u = model.reshuffling_unitary();
    const CMat2 v = vcl(phi) * u;
    const CMat2 sigma = u.adjoint() * sigma3() * u;
    CMat2 sum = CMat2::Zero();
    CMat2 vp = CMat2::Identity();  // V^j
    for (int j = 0; j < model.k; ++j) {
        sum += vp.adjoint() * sigma * vp;
        vp = v * vp;
    }
    const Cx h = (sum * model.coin_init).trace();
    if (std::abs(h.imag()) > tol().acf_imag)
        throw numeric_error("acf_h_unitary: imaginary residue");
    return h.real();
}

ClassicalityReport classicality_test(const WalkModel& model, int grid_size, double tolerance) {
    if (grid_size < 4 * model.k + 2)
        throw usage_error("classicality_test: grid too small (need M >= 4k+2)");
    ClassicalityReport report;
    const double step = 2.0 * M_PI / grid_size;
    // Sample on the (φ_+, φ_−) grid: φ = (φ_+ + φ_−)/2, φ′ = (φ_+ − φ_−)/2.
    for (int b = 0; b < grid_size; ++b) {
        const double pm = b * step;
        double re_lo = 1e300, re_hi = -1e300, im_lo = 1e300, im_hi = -1e300;
        for (int a = 0; a < grid_size; ++a) {
            const double pp = a * step;
            const Cx v = kernel_at(model, 0.5 * (pp + pm), 0.5 * (pp - pm));
            re_lo = std::min(re_lo, v.real());
            re_hi = std::max(re_hi, v.real());
            im_lo = std::min(im_lo, v.imag());
            im_hi = std::max(im_hi, v.imag());
        }
        const double var = std::hypot(re_hi - re_lo, im_hi - im_lo);
        report.max_phi_plus_variation = std::max(report.max_phi_plus_variation, var);
    }
    report.classical = report.max_phi_plus_variation <= tolerance;
    return report;
}

Jet kernel_jet(const WalkModel& model, int order, double phi, double phi_prime) {
    BuiltModel bm(model);
    const JetMat2 vl = vcl_jet(order, phi);
    const JetMat2 vr = JetMat2::constant(order, vcl(phi_prime).adjoint());
    JetMat2 m = JetMat2::constant(order, bm.rho);
    for (const auto& ch : bm.quantizers) m = vl * apply2(ch, m) * vr;
    return trace(m);
}

}  // namespace qorw

#include "qorw/oracle.hpp"

#include <cmath>

#include "qorw/channel.hpp"
#include "qorw/errors.hpp"
#include "qorw/tolerances.hpp"

namespace qorw {

namespace {

// Truncated step operator E_±: amplitude at the edge is dropped, never wrapped.
CMat shift_matrix(int lattice_dim, int direction) {
    CMat e = CMat::Zero(lattice_dim, lattice_dim);
    for (int m = 0; m + 1 < lattice_dim; ++m) {
        if (direction > 0)
            e(m + 1, m) = 1.0;  // |m+1⟩⟨m|
        else
            e(m, m + 1) = 1.0;
    }
    return e;
}

// Conditional shift V_cl = P_+⊗E_+ + P_−⊗E_− on coin⊗sites.
CMat conditional_shift(int lattice_dim) {
    return kron(proj_plus(), shift_matrix(lattice_dim, +1)) +
           kron(proj_minus(), shift_matrix(lattice_dim, -1));
}

// Channel on the coin factor: (ε ⊗ 1)(ρ).
CMat apply_coin_channel(const KrausChannel& ch, const CMat& joint, int lattice_dim) {
    CMat out = CMat::Zero(joint.rows(), joint.cols());
    const CMat id = CMat::Identity(lattice_dim, lattice_dim);
    for (const auto& k : ch.kraus) {
        const CMat kk = kron(k, id);
        out += kk * joint * kk.adjoint();
    }
    return out;
}

// Largest diagonal weight within `band` sites of either lattice edge.
double guard_band_weight(const CMat& walker, int band) {
    const int dim = static_cast<int>(walker.rows());
    double w = 0.0;
    for (int m = 0; m < dim; ++m)
        if (m < band || m >= dim - band)
            w = std::max(w, std::abs(walker(m, m)));
    return w;
}

}  // namespace

CMat JointState::walker() const {
    return partial_trace_first(matrix, 2);
}

JointState oracle_step(const WalkModel& model, const JointState& state,
                       const DensityMatrix& fresh_coin) {
    const int dim = state.lattice_dim();
    CMat walker = state.walker();
    if (guard_band_weight(walker, model.k) > 1e-14)
        throw resource_error("oracle_step: amplitude inside the edge guard band; lattice too small");

    CMat coin = fresh_coin.mat();
    if (auto entry = model.built_entry()) coin = entry->apply_raw(coin);

    JointState out;
    out.half_width = state.half_width;
    out.matrix = kron(coin, walker);
    const CMat vcl = conditional_shift(dim);
    for (const auto& ch : model.built_quantizers())
        out.matrix = vcl * apply_coin_channel(ch, out.matrix, dim) * vcl.adjoint();
    return out;
}

PositionDistribution oracle_run(const WalkModel& model, const WalkerInit& init, int n) {
    if (n < 0) throw usage_error("oracle_run: n must be >= 0");
    model.validate();
    const int half_width = model.k * n + init.max_abs_site() + model.k + 1;
    if (half_width > kOracleHalfWidthCap)
        throw resource_error("oracle_run: lattice half-width exceeds cap");
    const int dim = 2 * half_width + 1;

    // Embed the init window into the truncated lattice (site m at index m+N).
    CMat walker = CMat::Zero(dim, dim);
    for (int m = init.m_min(); m <= init.m_max(); ++m)
        for (int mp = init.m_min(); mp <= init.m_max(); ++mp)
            walker(m + half_width, mp + half_width) = init.element(m, mp);

    const DensityMatrix coin{CMat(model.coin_init)};
    JointState state{half_width, kron(DensityMatrix::coin_plus().mat(), walker)};
    for (int step = 0; step < n; ++step) {
        state = oracle_step(model, state, coin);
        const CMat w = state.walker();
        if (std::abs(w.trace() - Cx(1.0)) > tol().trace_one * 10)
            throw numeric_error("oracle_run: trace drift");
        if (smallest_eigenvalue(w) < tol().psd_floor)
            throw numeric_error("oracle_run: positivity violation");
    }

    const CMat w = state.walker();
    PositionDistribution out;
    out.n = n;
    out.m_min = -half_width;
    out.probs.resize(dim);
    for (int m = 0; m < dim; ++m) out.probs[m] = w(m, m).real();
    return out;
}

}  // namespace qorw

#pragma once

#include "qorw/distribution.hpp"
#include "qorw/walk_model.hpp"

namespace qorw {

// Brute-force ground truth: evolve the joint coin⊗walker density matrix on a
// truncated lattice, independent of the spectral engine.
struct JointState {
    int half_width = 0;  // lattice sites −N..N
    CMat matrix;         // (2·(2N+1)) × (2·(2N+1)), coin ⊗ sites

    int lattice_dim() const { return 2 * half_width + 1; }

    // Walker density matrix after tracing out the coin.
    CMat walker() const;
};

// Maximum lattice half-width before oracle_run refuses to allocate.
constexpr int kOracleHalfWidthCap = 512;

// One walk step: entry channel on the fresh coin, then coin⊗walker,
// then k alternations of (ε_j ⊗ 1) and the conditional shift, coin traced out
// by the caller via JointState::walker(). Throws if amplitude sits inside the
// guard band of width k at either lattice edge.
JointState oracle_step(const WalkModel& model, const JointState& state,
                       const DensityMatrix& fresh_coin);

// n repeated steps with a fresh coin each step; N auto-sized to kn + m_max + k + 1.
PositionDistribution oracle_run(const WalkModel& model, const WalkerInit& init, int n);

}  // namespace qorw

#pragma once

#include <complex>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/core_state.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

// Verification oracle for the stepping kernel, used only by tests: builds
// the explicit step matrix S (C (x) 1) on the truncated lattice and
// multiplies the full state vector. Independent of step()/evolve().
//
// The shift wraps around at the window edges so every per-step matrix is
// exactly unitary; this matches the infinite lattice as long as the walk
// support never reaches the window boundary.
inline constexpr int kDenseOracleMaxDim = 2048;

// Row-major (2*sites) x (2*sites) matrix; basis index 2*k + s with k the
// array index of the site and s = 0 (up) or 1 (down).
std::vector<std::complex<double>> dense_step_matrix(const CoinMatrix& coin, int sites);

// Refuses windows with 2 * sites > kDenseOracleMaxDim.
WalkState dense_oracle_evolve(const WalkState& state, const CoinSequence& seq);

}  // namespace qwalk

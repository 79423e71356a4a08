#pragma once

#include <complex>

#include "qwalk/core_state.hpp"

namespace qwalk {

// Reduced 2x2 coin density matrix [[A, gamma], [conj(gamma), B]] with
// A = sum_j |a(j)|^2, B = sum_j |b(j)|^2, gamma = sum_j a(j) conj(b(j)).
struct ReducedCoinState {
    double A = 0.0;
    double B = 0.0;
    std::complex<double> gamma;
};

// Partial trace over the positions of a normalized state.
ReducedCoinState reduce_coin(const WalkState& state);

// Von Neumann entropy (base 2) from the closed-form eigenvalues
// lambda_pm = 1/2 +- sqrt(1/4 - A(1-A) + |gamma|^2), with 0 log 0 = 0.
// Eigenvalues up to 1e-12 outside [0, 1] are clamped; larger violations
// raise NumericsError.
double entropy(const ReducedCoinState& rc);

}  // namespace qwalk

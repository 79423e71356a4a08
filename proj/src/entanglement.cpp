#include "qwalk/entanglement.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// Tolerance for eigenvalues pushed slightly outside [0, 1] by accumulated
// rounding; anything worse signals an upstream bug.
constexpr double kClampTol = 1e-12;

double entropy_term(double lambda) { return lambda > 0.0 ? -lambda * std::log2(lambda) : 0.0; }

}  // namespace

ReducedCoinState reduce_coin(const WalkState& state) {
    ReducedCoinState rc;
    for (int j = state.support_lo; j <= state.support_hi; ++j) {
        const Amplitude a = state.up(j);
        const Amplitude b = state.down(j);
        rc.A += std::norm(a);
        rc.B += std::norm(b);
        rc.gamma += a * std::conj(b);
    }
    return rc;
}

double entropy(const ReducedCoinState& rc) {
    if (std::abs(rc.A + rc.B - 1.0) > 1e-10) throw NumericsError("reduced coin state trace differs from 1");
    double radicand = 0.25 - rc.A * (1.0 - rc.A) + std::norm(rc.gamma);
    if (radicand < 0.0) {
        if (radicand < -kClampTol) throw NumericsError("reduced coin state eigenvalue radicand is negative");
        radicand = 0.0;
    }
    double root = std::sqrt(radicand);
    if (root > 0.5) {
        if (root > 0.5 + kClampTol) throw NumericsError("reduced coin state eigenvalue outside [0, 1]");
        root = 0.5;
    }
    return entropy_term(0.5 + root) + entropy_term(0.5 - root);
}

}  // namespace qwalk

#pragma once

#include <complex>

#include "qwalk/constants.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

// (q, theta, phi) triple selecting one SU(2) coin: q in [0, 1] sets the
// bias, theta and phi in [0, 2*pi] set the relative phases.
struct CoinParams {
    double q = 0.5;
    double theta = 0.0;
    double phi = 0.0;

    bool operator==(const CoinParams&) const = default;
};

struct CoinMatrix {
    std::complex<double> c00, c01, c10, c11;
};

CoinParams hadamard();
CoinParams fourier();

void validate_coin_params(const CoinParams& p);

// [ sqrt(q),            sqrt(1-q) e^{i theta} ]
// [ sqrt(1-q) e^{i phi}, -sqrt(q) e^{i(theta+phi)} ]
CoinMatrix coin_matrix(const CoinParams& p);

// q uniform on [0, 1); theta, phi uniform on [0, 2*pi). Consumes three draws.
template <UnitSource S>
CoinParams sample_su2_uniform(S& src) {
    CoinParams p;
    p.q = src.next_unit();
    p.theta = kTwoPi * src.next_unit();
    p.phi = kTwoPi * src.next_unit();
    return p;
}

// Fourier with probability prob_fourier, Hadamard otherwise. Consumes
// exactly one draw regardless of outcome, so schedules built on this
// sampler share draw alignment across different p.
template <UnitSource S>
CoinParams sample_two_coin(double prob_fourier, S& src) {
    if (!(prob_fourier >= 0.0 && prob_fourier <= 1.0))
        throw DomainError("prob_fourier must lie in [0, 1]");
    return src.next_unit() < prob_fourier ? fourier() : hadamard();
}

}  // namespace qwalk

#include "qwalk/coins.hpp"

#include <cmath>

namespace qwalk {

CoinParams hadamard() { return {0.5, 0.0, 0.0}; }

// theta = phi = pi/2; 0.25 * kTwoPi rounds to the same double as pi/2, so a
// forced draw of 0.25 in sample_su2_uniform reproduces these parameters
// bitwise.
CoinParams fourier() { return {0.5, 0.25 * kTwoPi, 0.25 * kTwoPi}; }

void validate_coin_params(const CoinParams& p) {
    if (!(p.q >= 0.0 && p.q <= 1.0)) throw DomainError("coin parameter q must lie in [0, 1]");
    if (!(p.theta >= 0.0 && p.theta <= kTwoPi)) throw DomainError("coin parameter theta must lie in [0, 2*pi]");
    if (!(p.phi >= 0.0 && p.phi <= kTwoPi)) throw DomainError("coin parameter phi must lie in [0, 2*pi]");
}

CoinMatrix coin_matrix(const CoinParams& p) {
    validate_coin_params(p);
    const double rq = std::sqrt(p.q);
    const double rr = std::sqrt(1.0 - p.q);
    const std::complex<double> et = std::polar(1.0, p.theta);
    const std::complex<double> ep = std::polar(1.0, p.phi);
    return {rq, rr * et, rr * ep, -rq * et * ep};
}

}  // namespace qwalk

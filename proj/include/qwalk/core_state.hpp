#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qwalk/constants.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

using Amplitude = std::complex<double>;

// Bloch-sphere angles of an initial qubit: alpha in [0, pi], beta in [0, 2*pi].
struct QubitSpec {
    double alpha = 0.0;
    double beta = 0.0;

    bool operator==(const QubitSpec&) const = default;
};

struct Spinor {
    Amplitude up;
    Amplitude down;
};

// (cos(alpha/2), e^{i beta} sin(alpha/2))
Spinor make_qubit(const QubitSpec& spec);

// Initial Gaussian position profile with dispersion sigma0, truncated at
// |j| <= cutoff and renormalized.
struct GaussianSpec {
    double sigma0 = 10.0;
    int cutoff = 100;
};

// Joint coin-position state on a fixed window of lattice sites. Element k
// of the amplitude arrays belongs to site origin_offset + k. The window is
// sized up front for the planned number of steps; [support_lo, support_hi]
// bounds the possibly-nonzero sites, everything outside is exactly zero.
struct WalkState {
    int origin_offset = 0;
    std::vector<Amplitude> up_amps;
    std::vector<Amplitude> down_amps;
    int support_lo = 0;
    int support_hi = 0;

    int window_lo() const { return origin_offset; }
    int window_hi() const { return origin_offset + static_cast<int>(up_amps.size()) - 1; }

    std::size_t index_of(int site) const { return static_cast<std::size_t>(site - origin_offset); }

    Amplitude& up(int site) { return up_amps[index_of(site)]; }
    Amplitude& down(int site) { return down_amps[index_of(site)]; }
    const Amplitude& up(int site) const { return up_amps[index_of(site)]; }
    const Amplitude& down(int site) const { return down_amps[index_of(site)]; }

    double norm_sq() const;
};

// Zeroed state spanning sites [window_lo, window_hi].
WalkState make_blank_state(int window_lo, int window_hi);

// Qubit entirely at site 0; window spans [-planned_steps, planned_steps].
WalkState make_local_state(const QubitSpec& qubit, int planned_steps);

// Amplitude at site j proportional to exp(-j^2 / 4 sigma0^2), truncated to
// |j| <= cutoff and renormalized to exactly unit norm; window spans
// [-(cutoff + planned_steps), cutoff + planned_steps].
WalkState make_gaussian_state(const QubitSpec& qubit, const GaussianSpec& g, int planned_steps);

// (site, |a|^2 + |b|^2) for every site carrying nonzero probability.
std::vector<std::pair<int, double>> position_probabilities(const WalkState& state);

// Sum_j j^2 p(j) - (Sum_j j p(j))^2
double position_variance(const WalkState& state);

}  // namespace qwalk

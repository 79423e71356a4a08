#include "qwalk/dense_oracle.hpp"

#include "qwalk/errors.hpp"

namespace qwalk {

std::vector<std::complex<double>> dense_step_matrix(const CoinMatrix& coin, int sites) {
    if (sites < 1) throw DomainError("dense step matrix needs at least one site");
    const int dim = 2 * sites;
    std::vector<std::complex<double>> m(static_cast<std::size_t>(dim) * dim);
    auto at = [&](int row, int col) -> std::complex<double>& {
        return m[static_cast<std::size_t>(row) * dim + col];
    };
    const std::complex<double> c[2][2] = {{coin.c00, coin.c01}, {coin.c10, coin.c11}};
    for (int k = 0; k < sites; ++k) {
        const int right = (k + 1) % sites;
        const int left = (k + sites - 1) % sites;
        for (int s = 0; s < 2; ++s) {
            // Column for (site k, spin s): coin first, shift after.
            at(2 * right + 0, 2 * k + s) = c[0][s];
            at(2 * left + 1, 2 * k + s) = c[1][s];
        }
    }
    return m;
}

WalkState dense_oracle_evolve(const WalkState& state, const CoinSequence& seq) {
    const int sites = static_cast<int>(state.up_amps.size());
    const int dim = 2 * sites;
    if (dim > kDenseOracleMaxDim) throw DomainError("window too large for the dense oracle");

    std::vector<std::complex<double>> v(static_cast<std::size_t>(dim));
    for (int k = 0; k < sites; ++k) {
        v[static_cast<std::size_t>(2 * k)] = state.up_amps[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(2 * k + 1)] = state.down_amps[static_cast<std::size_t>(k)];
    }

    std::vector<std::complex<double>> next(static_cast<std::size_t>(dim));
    for (int t = 1; t <= seq.steps(); ++t) {
        const std::vector<std::complex<double>> m = dense_step_matrix(coin_matrix(seq.at_step(t)), sites);
        for (int row = 0; row < dim; ++row) {
            std::complex<double> acc;
            const std::complex<double>* mrow = m.data() + static_cast<std::size_t>(row) * dim;
            for (int col = 0; col < dim; ++col) acc += mrow[col] * v[static_cast<std::size_t>(col)];
            next[static_cast<std::size_t>(row)] = acc;
        }
        v.swap(next);
    }

    WalkState out = make_blank_state(state.window_lo(), state.window_hi());
    for (int k = 0; k < sites; ++k) {
        out.up_amps[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(2 * k)];
        out.down_amps[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(2 * k + 1)];
    }
    out.support_lo = out.window_lo();
    out.support_hi = out.window_hi();
    return out;
}

}  // namespace qwalk

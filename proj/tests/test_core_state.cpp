#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qwalk/core_state.hpp"
#include "qwalk/evolution.hpp"
#include "support/oracles.hpp"

using namespace qwalk;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Raw truncated profile of the initial Gaussian, summed directly.
double truncated_gaussian_weight(double sigma0, int cutoff) {
    double sum = 0.0;
    for (int j = -cutoff; j <= cutoff; ++j) sum += std::exp(-j * j / (2.0 * sigma0 * sigma0));
    return sum / std::sqrt(kTwoPi * sigma0 * sigma0);
}
}  // namespace

TEST_CASE("qubits at the Bloch sphere poles and equator") {
    const Spinor up = make_qubit({0.0, 5.1});
    CHECK(up.up == Amplitude{1.0, 0.0});
    CHECK(up.down == Amplitude{0.0, 0.0});

    const Spinor down = make_qubit({kPi, 0.0});
    CHECK(std::abs(down.up) < 1e-15);
    CHECK(std::abs(down.down - 1.0) < 1e-15);

    const Spinor eq = make_qubit({kPi / 2, kPi / 2});
    CHECK(std::abs(eq.up - kInvSqrt2) < 1e-15);
    CHECK(std::abs(eq.down - Amplitude{0.0, kInvSqrt2}) < 1e-15);
}

TEST_CASE("qubit angles outside their ranges are rejected") {
    CHECK_THROWS_AS(make_qubit({-0.1, 0.0}), DomainError);
    CHECK_THROWS_AS(make_qubit({kPi + 0.2, 0.0}), DomainError);
    CHECK_THROWS_AS(make_qubit({1.0, -1.0}), DomainError);
    CHECK_THROWS_AS(make_qubit({1.0, kTwoPi + 0.3}), DomainError);
}

TEST_CASE("local state puts the qubit at the origin") {
    const WalkState st = make_local_state({0.0, 0.0}, 3);
    CHECK(st.window_lo() <= -3);
    CHECK(st.window_hi() >= 3);
    CHECK(st.up(0) == Amplitude{1.0, 0.0});
    CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

    const WalkState down = make_local_state({kPi, 0.0}, 0);
    CHECK(std::abs(down.down(0) - 1.0) < 1e-15);

    const WalkState eq = make_local_state({kPi / 2, 0.0}, 1);
    CHECK(std::abs(eq.up(0) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(eq.down(0) - kInvSqrt2) < 1e-15);

    CHECK_THROWS_AS(make_local_state({0.0, 0.0}, -1), DomainError);
}

TEST_CASE("gaussian truncation deficit stays below 1e-7 at sigma0 = 10") {
    const double kept = truncated_gaussian_weight(10.0, 100);
    CHECK(std::abs(1.0 - kept) < 1e-7);
}

TEST_CASE("very narrow gaussian reproduces the local state") {
    const WalkState st = make_gaussian_state({0.0, 0.0}, {1e-3, 100}, 0);
    CHECK(std::norm(st.up(0)) >= 1.0 - 1e-12);
}

TEST_CASE("gaussian site probability matches direct summation") {
    const double sigma0 = 2.0;
    const WalkState st = make_gaussian_state({0.0, 0.0}, {sigma0, 100}, 0);

    double denom = 0.0;
    for (int j = -100; j <= 100; ++j) denom += std::exp(-j * j / (2.0 * sigma0 * sigma0));
    const double expected_p0 = 1.0 / denom;

    CHECK(std::abs(std::norm(st.up(0)) - expected_p0) < 1e-12);
}

TEST_CASE("gaussian construction rejects bad dispersions") {
    CHECK_THROWS_AS(make_gaussian_state({0.0, 0.0}, {0.0, 100}, 0), DomainError);
    CHECK_THROWS_AS(make_gaussian_state({0.0, 0.0}, {-1.0, 100}, 0), DomainError);
}

TEST_CASE("gaussian states are exactly unit norm and symmetric") {
    for (const double sigma0 : {1.0, 2.0, 5.0, 10.0}) {
        const WalkState st = make_gaussian_state({1.0, 2.0}, {sigma0, 100}, 0);
        CHECK(std::abs(st.norm_sq() - 1.0) < 1e-10);
        for (int j = 1; j <= 100; ++j) {
            const double pj = std::norm(st.up(j)) + std::norm(st.down(j));
            const double pmj = std::norm(st.up(-j)) + std::norm(st.down(-j));
            CHECK(pj == pmj);
        }
    }
}

TEST_CASE("position probabilities of simple states") {
    const WalkState local = make_local_state({0.0, 0.0}, 2);
    const auto probs = position_probabilities(local);
    REQUIRE(probs.size() == 1);
    CHECK(probs[0].first == 0);
    CHECK(probs[0].second == 1.0);
}

TEST_CASE("one hadamard step from spin-up splits evenly") {
    // Single-step oracle: coin by hand, then shift.
    const auto coined = qwalk::testing::apply(qwalk::testing::from_coin(coin_matrix(hadamard())), {1.0, 0.0},
                                              {0.0, 0.0});
    const double expect_right = std::norm(coined.first);
    const double expect_left = std::norm(coined.second);
    CHECK(expect_right == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(expect_left == doctest::Approx(0.5).epsilon(1e-14));

    const WalkState stepped = step(make_local_state({0.0, 0.0}, 1), coin_matrix(hadamard()));
    const auto probs = position_probabilities(stepped);
    REQUIRE(probs.size() == 2);
    CHECK(probs[0].first == -1);
    CHECK(probs[0].second == doctest::Approx(expect_left).epsilon(1e-14));
    CHECK(probs[1].first == 1);
    CHECK(probs[1].second == doctest::Approx(expect_right).epsilon(1e-14));

    double total = 0.0;
    for (const auto& [site, p] : probs) total += p;
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("position variance of reference states") {
    CHECK(position_variance(make_local_state({1.0, 1.0}, 5)) == 0.0);

    const WalkState g = make_gaussian_state({0.0, 0.0}, {10.0, 100}, 0);
    // Direct-summation oracle for the discrete truncated profile.
    double denom = 0.0;
    double second = 0.0;
    for (int j = -100; j <= 100; ++j) {
        const double w = std::exp(-j * j / (2.0 * 10.0 * 10.0));
        denom += w;
        second += j * j * w;
    }
    const double expected = second / denom;
    CHECK(position_variance(g) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(position_variance(g) - 100.0) / 100.0 < 1e-3);
}

TEST_CASE("one balanced step from a spin-symmetric qubit has unit variance") {
    // Hadamard with the (1, i)/sqrt(2) qubit and Fourier with (1, 1)/sqrt(2)
    // both send half the probability each way, so the variance is exactly 1.
    const WalkState h = step(make_local_state({kPi / 2, kPi / 2}, 1), coin_matrix(hadamard()));
    CHECK(position_variance(h) == doctest::Approx(1.0).epsilon(1e-14));

    const WalkState f = step(make_local_state({kPi / 2, 0.0}, 1), coin_matrix(fourier()));
    CHECK(position_variance(f) == doctest::Approx(1.0).epsilon(1e-14));
}

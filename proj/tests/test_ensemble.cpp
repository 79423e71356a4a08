#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "qwalk/ensemble.hpp"
#include "qwalk/evolution.hpp"
#include "support/oracles.hpp"

using namespace qwalk;

TEST_CASE("default bloch grid has 2016 qubits") {
    const BlochGrid grid = bloch_grid();
    CHECK(grid.qubits.size() == 2016);
}

TEST_CASE("coarsest grid keeps the four corner qubits") {
    const BlochGrid grid = bloch_grid(kPi, kTwoPi);
    REQUIRE(grid.qubits.size() == 4);
    CHECK(grid.qubits[0] == QubitSpec{0.0, 0.0});
    CHECK(grid.qubits[1] == QubitSpec{0.0, kTwoPi});
    CHECK(grid.qubits[2] == QubitSpec{kPi, 0.0});
    CHECK(grid.qubits[3] == QubitSpec{kPi, kTwoPi});
}

TEST_CASE("half-step grid size matches an independent count") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    // Count multiples of 0.5 in [0, pi] and [0, 2*pi] directly.
    int alphas = 0;
    for (int k = 0; k * 0.5 <= kPi; ++k) ++alphas;
    int betas = 0;
    for (int k = 0; k * 0.5 <= kTwoPi; ++k) ++betas;
    CHECK(alphas == 7);
    CHECK(betas == 13);
    CHECK(grid.qubits.size() == static_cast<std::size_t>(alphas * betas));
    CHECK(grid.qubits.size() == 91);
}

TEST_CASE("grid steps must be positive") {
    CHECK_THROWS_AS(bloch_grid(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(bloch_grid(0.1, -1.0), DomainError);
}

TEST_CASE("all grid qubits are valid") {
    for (const QubitSpec& q : bloch_grid(0.3, 0.7).qubits) CHECK_NOTHROW(make_qubit(q));
}

TEST_CASE("zero-step ensemble reports zero initial entanglement") {
    BlochGrid grid;
    grid.qubits = {{0.0, 0.0}};
    const EnsembleResult res = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 0, 9, {});
    REQUIRE(res.mean_entropy.size() == 1);
    CHECK(std::abs(res.mean_entropy[0]) < 1e-12);
}

TEST_CASE("wdd at p = 1/2 reproduces the sdd2 ensemble exactly") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    const EnsembleOptions opts{RealizationPolicy::shared, 1, 2, false};
    const EnsembleResult wdd = average_entanglement(grid, LocalInit{}, schedules::WDDConst{0.5}, 30, 1234, opts);
    const EnsembleResult sdd = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 30, 1234, opts);
    CHECK(wdd.mean_entropy == sdd.mean_entropy);
}

TEST_CASE("results are bitwise reproducible and worker-count independent") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    EnsembleOptions serial{RealizationPolicy::shared, 2, 1, false};
    EnsembleOptions parallel{RealizationPolicy::shared, 2, 4, false};
    const EnsembleResult a = average_entanglement(grid, GaussianSpec{2.0, 20}, schedules::SDD2{}, 25, 777, serial);
    const EnsembleResult b = average_entanglement(grid, GaussianSpec{2.0, 20}, schedules::SDD2{}, 25, 777, parallel);
    CHECK(a.mean_entropy == b.mean_entropy);
    CHECK(a.stderr_entropy == b.stderr_entropy);

    const EnsembleResult c = average_entanglement(grid, GaussianSpec{2.0, 20}, schedules::SDD2{}, 25, 777, serial);
    CHECK(a.mean_entropy == c.mean_entropy);
}

TEST_CASE("grid order changes the mean only at rounding level") {
    BlochGrid grid = bloch_grid(0.5, 0.5);
    BlochGrid reversed = grid;
    std::reverse(reversed.qubits.begin(), reversed.qubits.end());
    const EnsembleResult fwd = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 20, 31, {});
    const EnsembleResult rev = average_entanglement(reversed, LocalInit{}, schedules::SDD2{}, 20, 31, {});
    for (std::size_t t = 0; t < fwd.mean_entropy.size(); ++t)
        CHECK(std::abs(fwd.mean_entropy[t] - rev.mean_entropy[t]) < 1e-12);
}

TEST_CASE("mean entanglement stays inside [0, 1]") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    const EnsembleResult res = average_entanglement(grid, LocalInit{}, schedules::SDDInf{}, 50, 4, {});
    for (const double v : res.mean_entropy) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    CHECK(res.mean_entropy[10] > 0.5);  // disorder entangles quickly
}

TEST_CASE("per-qubit realization policy is deterministic and distinct") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    EnsembleOptions shared;
    EnsembleOptions per_qubit;
    per_qubit.policy = RealizationPolicy::per_qubit;
    const EnsembleResult a = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 20, 5, per_qubit);
    const EnsembleResult b = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 20, 5, per_qubit);
    const EnsembleResult c = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 20, 5, shared);
    CHECK(a.mean_entropy == b.mean_entropy);
    CHECK(a.mean_entropy != c.mean_entropy);
}

TEST_CASE("realization averaging reports standard errors") {
    const BlochGrid grid = bloch_grid(1.0, 1.0);
    EnsembleOptions opts;
    opts.realizations = 3;
    const EnsembleResult res = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 15, 6, opts);
    REQUIRE(res.stderr_entropy.size() == res.mean_entropy.size());
    CHECK(res.stderr_entropy[0] == 0.0);  // t = 0 entropy is schedule independent
    for (const double se : res.stderr_entropy) CHECK(se >= 0.0);
    CHECK(*std::max_element(res.stderr_entropy.begin(), res.stderr_entropy.end()) > 0.0);
}

TEST_CASE("final entropies are exposed on request") {
    const BlochGrid grid = bloch_grid(1.0, 1.0);
    EnsembleOptions opts;
    opts.keep_final_entropies = true;
    const EnsembleResult res = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 12, 6, opts);
    REQUIRE(res.final_entropies.size() == grid.qubits.size());
    // The deterministic reduction must equal the plain mean of the finals.
    double mean = 0.0;
    for (const double v : res.final_entropies) mean += v;
    mean /= static_cast<double>(res.final_entropies.size());
    CHECK(std::abs(mean - res.mean_entropy.back()) < 1e-12);
}

TEST_CASE("invalid ensemble arguments are rejected") {
    const BlochGrid grid = bloch_grid(1.0, 1.0);
    BlochGrid empty;
    CHECK_THROWS_AS(average_entanglement(empty, LocalInit{}, schedules::SDD2{}, 5, 1, {}), DomainError);
    CHECK_THROWS_AS(average_entanglement(grid, LocalInit{}, schedules::SDD2{}, -1, 1, {}), DomainError);
    EnsembleOptions opts;
    opts.realizations = 0;
    CHECK_THROWS_AS(average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 5, 1, opts), DomainError);
}

TEST_CASE("eta compares series at the reference step") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    const EnsembleResult res = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 20, 8, {});
    CHECK(eta(res, res, 20) == 0.0);
    CHECK_THROWS_AS(eta(res, res, 21), DomainError);
}

TEST_CASE("p scan shares the seed and finds the argmax") {
    const BlochGrid grid = bloch_grid(0.5, 0.5);
    const std::vector<double> ps{0.5, 0.0, 0.12};  // deliberately unsorted
    const PScanResult scan = best_p_scan(ps, LocalInit{}, grid, 25, 99, {});
    REQUIRE(scan.points.size() == 3);
    CHECK(scan.points[0].p == 0.0);
    CHECK(scan.points[1].p == 0.12);
    CHECK(scan.points[2].p == 0.5);

    // p = 0 entry equals the ordered hadamard run with the same seed.
    const EnsembleResult ordered =
        average_entanglement(grid, LocalInit{}, schedules::Ordered{hadamard()}, 25, 99, {});
    CHECK(scan.points[0].mean_entropy_at_tref == ordered.mean_entropy[25]);

    // p = 0.5 entry equals the sdd2 run with the same seed.
    const EnsembleResult sdd = average_entanglement(grid, LocalInit{}, schedules::SDD2{}, 25, 99, {});
    CHECK(scan.points[2].mean_entropy_at_tref == sdd.mean_entropy[25]);

    std::size_t expect_argmax = 0;
    for (std::size_t i = 1; i < scan.points.size(); ++i)
        if (scan.points[i].mean_entropy_at_tref > scan.points[expect_argmax].mean_entropy_at_tref) expect_argmax = i;
    CHECK(scan.argmax == expect_argmax);

    const std::vector<double> bad{1.2};
    CHECK_THROWS_AS(best_p_scan(bad, LocalInit{}, grid, 10, 1, {}), DomainError);
}

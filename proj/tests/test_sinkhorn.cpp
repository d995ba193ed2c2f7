#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qols/golden.hpp"
#include "qols/sinkhorn.hpp"
#include "qols/tensor_ops.hpp"

using namespace qols;

TEST_CASE("the order-36 solution is a fixed point") {
    const ComplexMatrix u = build_golden_u();
    const ComplexMatrix next = iterate_once(u, {6, 6});
    CHECK(frobenius_distance(next, u) < 1e-9);
}

TEST_CASE("random unitaries are unitary and seed-deterministic") {
    std::mt19937_64 rng1(42), rng2(42), rng3(43);
    const ComplexMatrix a = random_unitary(9, rng1);
    const ComplexMatrix b = random_unitary(9, rng2);
    const ComplexMatrix c = random_unitary(9, rng3);
    CHECK(unitarity_deficit(a) < 1e-12);
    CHECK(a == b);
    CHECK(frobenius_distance(a, c) > 1e-3);
}

TEST_CASE("degenerate inputs raise the dedicated error") {
    // the partial transpose of the identity has rank 1 at d=2
    CHECK_THROWS_AS(iterate_once(ComplexMatrix::identity(4), {2, 2}), RankDeficientError);
    CHECK_THROWS_AS(iterate_once(ComplexMatrix(4, 4), {2, 2}), RankDeficientError);
    CHECK_THROWS_AS(iterate_once(ComplexMatrix::identity(4), {2, 2}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(iterate_once(ComplexMatrix::identity(4), {2, 2}, 1.5), std::invalid_argument);
}

TEST_CASE("one sweep improves a random start") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SearchConfig cfg;
        cfg.local_dim = 3;
        cfg.seed = seed;
        cfg.max_iterations = 2;
        const SearchTrace t = search(cfg);
        REQUIRE(t.deficits.size() >= 2);
        // the sweep ends with the third-leg projection, so that deficit vanishes
        CHECK(t.deficits[1].gamma < 1e-12);
        const bool improved = t.deficits[1].r < t.deficits[0].r ||
                              t.deficits[1].gamma < t.deficits[0].gamma;
        CHECK(improved);
    }
}

TEST_CASE("order-9 searches converge and certify") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SearchConfig cfg;
        cfg.local_dim = 3;
        cfg.seed = seed;
        const SearchTrace t = search(cfg);
        CAPTURE(seed);
        REQUIRE(t.converged);
        CHECK(t.iterations < 100);
        CHECK(certify(t, cfg.target_deficit).all_pass());
        CHECK(t.deficits.back().max() < cfg.target_deficit);
    }
}

TEST_CASE("order-4 searches never converge") {
    int converged = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SearchConfig cfg;
        cfg.local_dim = 2;
        cfg.seed = seed;
        const SearchTrace t = search(cfg);
        if (t.converged) ++converged;
        CHECK((t.stagnated || t.iterations == cfg.max_iterations));
    }
    CHECK(converged == 0);
}

TEST_CASE("damped sweeps still make progress") {
    SearchConfig cfg;
    cfg.local_dim = 3;
    cfg.seed = 4;
    cfg.damping = 0.5;
    cfg.max_iterations = 500;
    const SearchTrace t = search(cfg);
    REQUIRE(t.deficits.size() >= 2);
    CHECK(t.deficits.back().max() < t.deficits.front().max());
}

TEST_CASE("dual-unitary relaxation skips the third leg") {
    SearchConfig cfg;
    cfg.local_dim = 2;
    cfg.seed = 1;
    cfg.skip_gamma_leg = true;
    const SearchTrace t = search(cfg);
    // dual-unitary matrices exist at d=2, so this relaxation converges
    CHECK(t.converged);
    CHECK(std::max(t.deficits.back().u, t.deficits.back().r) < cfg.target_deficit);
}

TEST_CASE("trace export") {
    SearchConfig cfg;
    cfg.local_dim = 3;
    cfg.seed = 0;
    const SearchTrace t = search(cfg);
    const std::string lines = trace_to_json_lines(t);
    std::istringstream is(lines);
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("iter").get<int>() == n);
        CHECK(j.contains("delta_u"));
        CHECK(j.contains("delta_r"));
        CHECK(j.contains("delta_gamma"));
        ++n;
    }
    CHECK(n == static_cast<int>(t.deficits.size()));
    // byte-identical on a repeated run with the same configuration
    CHECK(trace_to_json_lines(search(cfg)) == lines);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "qols/classical.hpp"

using namespace qols;

namespace {

OrthogonalPair reference_gl3() {
    OrthogonalPair p;
    p.order = 3;
    p.first = {3, {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}};
    p.second = {3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
    return p;
}

}  // namespace

TEST_CASE("cyclic construction") {
    for (int d : {1, 2, 3, 6, 9}) {
        const LatinSquare s = latin_cyclic(d);
        CHECK(is_latin(s));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) CHECK(s.grid[j][i] == (i + j) % d);
    }
    CHECK_THROWS_AS(latin_cyclic(0), std::invalid_argument);
}

TEST_CASE("odd-order orthogonal pairs") {
    for (int d : {3, 5, 7, 9}) {
        const OrthogonalPair p = ols_odd(d);
        CHECK(is_latin(p.first));
        CHECK(is_latin(p.second));
        CHECK(is_orthogonal_pair(p).orthogonal);
    }
    CHECK_THROWS_AS(ols_odd(4), std::invalid_argument);
    CHECK_THROWS_AS(ols_odd(1), std::invalid_argument);
}

TEST_CASE("orthogonality counterexample cells") {
    const LatinSquare s = latin_cyclic(4);
    const OrthogonalityResult r = is_orthogonal_pair({4, s, s});
    REQUIRE_FALSE(r.orthogonal);
    // the reported cells really carry the same (rank, color) pair
    CHECK(s.grid[r.row1][r.col1] == s.grid[r.row2][r.col2]);
    CHECK((r.row1 != r.row2 || r.col1 != r.col2));

    LatinSquare bad = s;
    bad.grid[0][0] = 3;
    CHECK_THROWS_AS(is_orthogonal_pair({4, bad, s}), std::invalid_argument);
}

TEST_CASE("magic squares") {
    const MagicSquare m3 = magic_square_of(ols_odd(3));
    CHECK(m3.common_sum == 15);
    const MagicSquare m5 = magic_square_of(ols_odd(5));
    CHECK(m5.common_sum == 65);
    // entries form a permutation of 1..d^2
    std::vector<long> vals;
    for (const auto& row : m5.grid) vals.insert(vals.end(), row.begin(), row.end());
    std::sort(vals.begin(), vals.end());
    for (long k = 0; k < 25; ++k) CHECK(vals[k] == k + 1);
}

TEST_CASE("permutation encoding reproduces the order-3 reference matrix") {
    const ComplexMatrix p = permutation_encoding(reference_gl3());
    const int expected[9][9] = {
        {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}};
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) CHECK(p.at(r, c) == Complex(expected[r][c]));
}

TEST_CASE("table form and inverse functions") {
    const DesignTable t = table_form(ols_odd(5));
    CHECK(t.records.size() == 25);
    const InverseFunctions f = inverse_functions(t);
    for (const auto* perm : {&f.f1, &f.f2, &f.f3}) {
        std::vector<int> sorted = *perm;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < 25; ++k) CHECK(sorted[k] == k);  // a true permutation
    }

    DesignTable broken = t;
    broken.records[1] = broken.records[0];
    CHECK_THROWS_AS(inverse_functions(broken), std::runtime_error);
}

TEST_CASE("exhaustive small-order search") {
    CHECK_FALSE(search_ols_exhaustive(2).has_value());  // certified absence
    const auto p3 = search_ols_exhaustive(3);
    REQUIRE(p3.has_value());
    CHECK(is_orthogonal_pair(*p3).orthogonal);
    CHECK_THROWS_AS(search_ols_exhaustive(5), std::invalid_argument);
}

TEST_CASE("orthogonal mate search") {
    for (int d : {3, 5, 7}) {
        const auto mate = orthogonal_mate_search(ols_odd(d).first);
        REQUIRE(mate.has_value());
        CHECK(is_orthogonal_pair(*mate).orthogonal);
    }
    // cyclic squares of even order have no transversal at all
    CHECK_FALSE(orthogonal_mate_search(latin_cyclic(4)).has_value());
    CHECK_FALSE(orthogonal_mate_search(latin_cyclic(6)).has_value());
    CHECK_THROWS_AS(orthogonal_mate_search(latin_cyclic(8)), std::invalid_argument);
}

TEST_CASE("mutually orthogonal sets") {
    const OrthogonalPair p = ols_odd(5);
    CHECK(mols_check({p.first, p.second}).ok);

    const MolsResult clash = mols_check({p.first, p.first});
    CHECK_FALSE(clash.ok);
    CHECK(clash.failing_i == 0);
    CHECK(clash.failing_j == 1);

    const LatinSquare s = latin_cyclic(3);
    const MolsResult bound = mols_check({s, s, s});  // three squares of order 3
    CHECK(bound.bound_violated);
}

TEST_CASE("text round trip") {
    const OrthogonalPair p = ols_odd(5);
    const OrthogonalPair q = pair_from_text(to_text(p));
    CHECK(q.first.grid == p.first.grid);
    CHECK(q.second.grid == p.second.grid);
    CHECK(latin_from_text(to_text(p.first)).grid == p.first.grid);
    CHECK_THROWS(latin_from_text("3\n0 1 2\n1 2"));
}

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "corpus.hpp"
#include "qols/classical.hpp"
#include "qols/golden.hpp"
#include "qols/quantum.hpp"
#include "qols/sinkhorn.hpp"
#include "qols/tensor_ops.hpp"

using namespace qols;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s) {
        ok = false;
        note += " (over time budget)";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  %s  [%.2fs]%s\n", number, ok ? "PASS" : "FAIL", title.c_str(),
                elapsed, note.c_str());
}

bool check_all(const std::array<ConditionEntry, 2>& e) { return e[0].pass && e[1].pass; }

}  // namespace

int main() {
    const ComplexMatrix u = build_golden_u();
    const BipartiteShape s6{6, 6};

    criterion(1, "order-36 construction is 2-unitary", 1.0, [&] {
        return unitarity_deficit(u) < 1e-10 && unitarity_deficit(reshuffle(u, s6)) < 1e-10 &&
               unitarity_deficit(partial_transpose(u, s6)) < 1e-10;
    });

    criterion(2, "state-wise conditions pass and agree with 2-unitarity on the corpus", 0, [&] {
        const QolsDesign q = QolsDesign::from_matrix(u);
        if (!check_a_prime(q, 1e-10).pass || !check_all(check_b_prime(q, 1e-10)) ||
            !check_all(check_c_prime(q, 1e-10)))
            return false;
        const auto corpus = testing::verification_corpus();
        if (corpus.size() < 20) return false;
        for (const auto& entry : corpus) {
            const VerificationReport r = verify_matrix(entry.matrix, 1e-8);
            const bool abc = r.find("A'")->pass && r.find("B'_B")->pass && r.find("B'_A")->pass &&
                             r.find("C'_B")->pass && r.find("C'_A")->pass;
            const bool two_u =
                r.find("2U_U")->pass && r.find("2U_R")->pass && r.find("2U_G")->pass;
            if (abc != two_u) return false;
            if (entry.expected && r.all_pass() != *entry.expected) return false;
        }
        return true;
    });

    criterion(3, "all 36 rows are locally Bell states", 0, [&] {
        const double c = 1.0 / std::sqrt(2.0);
        for (int r = 0; r < 36; ++r) {
            const auto sv = schmidt_values(BipartiteState{s6, u.row(r)});
            int above = 0;
            for (double v : sv)
                if (v > 1e-8) ++above;
            if (above != 2 || std::abs(sv[0] - c) > 1e-10 || std::abs(sv[1] - c) > 1e-10)
                return false;
        }
        return true;
    });

    criterion(4, "permutations yield nine unitary blocks of entangled rows", 0, [&] {
        const BlockDecomposition dec = block_decompose();  // throws if not block diagonal
        if (dec.blocks.size() != 9) return false;
        for (const ComplexMatrix& blk : dec.blocks) {
            if (unitarity_deficit(blk) > 1e-12) return false;
            for (int r = 0; r < 4; ++r) {
                const auto sv = schmidt_values(BipartiteState{{2, 2}, blk.row(r)});
                if (std::abs(sv[0] - sv[1]) > 1e-10) return false;
            }
        }
        return true;
    });

    criterion(5, "amplitude identities and exact phase order", 0, [&] {
        const GoldenConstants g = golden_constants();
        return std::abs(g.amp_a * g.amp_a + g.amp_b * g.amp_b - g.amp_c * g.amp_c) < 1e-14 &&
               std::abs(g.amp_b / g.amp_a - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-14 &&
               omega_power(20) == Complex{1.0, 0.0};
    });

    criterion(6, "gamma basis Gram matrix is the identity", 0, [&] {
        const auto gamma = basis_gamma();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const Complex g = inner_product(gamma[i], gamma[j]);
                if (std::abs(g - (i == j ? Complex{1.0} : Complex{})) > 1e-12) return false;
            }
        return std::abs(inner_product(gamma[1], gamma[2])) < 1e-12;
    });

    criterion(7, "classical constructions, encoding and small-order absence", 10.0, [&] {
        for (int d : {3, 5, 7})
            if (!is_orthogonal_pair(ols_odd(d)).orthogonal) return false;
        if (magic_square_of(ols_odd(3)).common_sum != 15) return false;
        if (magic_square_of(ols_odd(5)).common_sum != 65) return false;
        OrthogonalPair gl3;
        gl3.order = 3;
        gl3.first = {3, {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}};
        gl3.second = {3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
        const ComplexMatrix p = permutation_encoding(gl3);
        const int expected[9][9] = {
            {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0},
            {1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}};
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c)
                if (p.at(r, c) != Complex(expected[r][c])) return false;
        return !search_ols_exhaustive(2).has_value();
    });

    criterion(8, "cyclic order-6 square has no orthogonal mate", 60.0,
              [&] { return !orthogonal_mate_search(latin_cyclic(6)).has_value(); });

    criterion(9, "all 24 Bell-state grids fail", 1.0, [&] {
        const auto outcomes = check_d2_bell_grids();
        if (outcomes.size() != 24) return false;
        for (const auto& o : outcomes)
            if (o.first_failing.empty()) return false;
        return true;
    });

    criterion(10, "cardinality separates classical, rotated and genuinely quantum", 0, [&] {
        // basis-state square of order 4
        const int sym[4][4] = {{0, 1, 2, 3}, {2, 3, 0, 1}, {3, 2, 1, 0}, {1, 0, 3, 2}};
        QuantumLatinSquare plain;
        plain.order = 4;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                std::vector<Complex> v(4);
                v[sym[i][j]] = 1.0;
                plain.states.push_back(std::move(v));
            }
        QuantumLatinSquare rotated = plain;
        const double c = 1.0 / std::sqrt(2.0);
        for (auto& v : rotated.states) {
            const Complex x = v[1], y = v[2];
            v[1] = c * (x + y);
            v[2] = c * (x - y);
        }
        if (!is_qls(plain) || !is_qls(rotated)) return false;
        const CardinalityResult c1 = cardinality(plain);
        const CardinalityResult c2 = cardinality(rotated);
        if (c1.cardinality != 4 || c1.genuinely_quantum) return false;
        if (c2.cardinality != 4 || c2.genuinely_quantum) return false;

        // two rotated planes, four bases: eight distinct states
        QuantumLatinSquare synth;
        synth.order = 4;
        synth.states.resize(16);
        const double theta[4] = {0.2, 0.5, 0.8, 1.1};
        const int plane[2][2] = {{0, 1}, {1, 0}};
        const int basis[2][2] = {{0, 1}, {2, 3}};
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj)
                for (int r = 0; r < 2; ++r)
                    for (int col = 0; col < 2; ++col) {
                        std::vector<Complex> v(4);
                        const double t = theta[basis[bi][bj]];
                        const int lo = 2 * plane[bi][bj];
                        if ((r ^ col) == 0) {
                            v[lo] = std::cos(t);
                            v[lo + 1] = std::sin(t);
                        } else {
                            v[lo] = -std::sin(t);
                            v[lo + 1] = std::cos(t);
                        }
                        synth.states[static_cast<size_t>(2 * bi + r) * 4 + (2 * bj + col)] = v;
                    }
        if (!is_qls(synth)) return false;
        const CardinalityResult c3 = cardinality(synth);
        return c3.cardinality > 4 && c3.genuinely_quantum;
    });

    criterion(11, "search fixed point, small-case non-convergence, certification", 0, [&] {
        if (frobenius_distance(iterate_once(u, s6), u) > 1e-9) return false;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            SearchConfig cfg;
            cfg.local_dim = 2;
            cfg.seed = seed;
            cfg.max_iterations = 100000;
            cfg.target_deficit = 1e-8;
            if (search(cfg).converged) return false;
        }
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SearchConfig cfg;
            cfg.local_dim = 3;
            cfg.seed = seed;
            const SearchTrace t = search(cfg);
            if (t.converged && !certify(t, cfg.target_deficit).all_pass()) return false;
        }
        return true;
    });

    criterion(12, "seeded runs are byte-identical", 0, [&] {
        SearchConfig cfg;
        cfg.local_dim = 3;
        cfg.seed = 2024;
        if (trace_to_json_lines(search(cfg)) != trace_to_json_lines(search(cfg))) return false;
        return to_json(build_golden_u()) == to_json(build_golden_u()) &&
               golden_chess_json() == golden_chess_json();
    });

    if (failures == 0) std::printf("acceptance: all 12 criteria PASS\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

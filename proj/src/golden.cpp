#include "qols/golden.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "qols/tensor_ops.hpp"

namespace qols {

GoldenConstants golden_constants() {
    GoldenConstants g;
    const double r5 = std::sqrt(5.0);
    g.amp_a = 0.5 * std::sqrt(1.0 - 1.0 / r5);
    g.amp_b = 0.5 * std::sqrt(1.0 + 1.0 / r5);
    g.amp_c = 1.0 / std::sqrt(2.0);
    g.golden_ratio = (1.0 + r5) / 2.0;
    g.omega = omega_power(1);
    return g;
}

Complex omega_power(int k) {
    int r = k % 20;
    if (r < 0) r += 20;
    switch (r) {
        case 0: return {1.0, 0.0};
        case 5: return {0.0, 1.0};
        case 10: return {-1.0, 0.0};
        case 15: return {0.0, -1.0};
        default: return std::polar(1.0, std::numbers::pi * r / 10.0);
    }
}

const char* figure_name(int figure) {
    static const char* names[] = {"king", "queen", "rook", "bishop", "knight", "pawn"};
    if (figure < 0 || figure > 5) throw std::out_of_range("figure_name: index out of range");
    return names[figure];
}

const char* color_name(int color) {
    static const char* names[] = {"red", "cyan", "green", "magenta", "blue", "yellow"};
    if (color < 0 || color > 5) throw std::out_of_range("color_name: index out of range");
    return names[color];
}

namespace {

// Appendix table of |psi_ij>: amplitude class, omega exponent, figure, color.
const std::vector<std::vector<GoldenTerm>>& golden_table() {
    auto make = [] {
        // (amp, phase, figure, color) per term, rows in (i, j) order
        struct Raw {
            char amp;
            int phase, figure, color;
        };
        static const std::vector<Raw> raw[36] = {
            /* 00 */ {{'c', 0, 1, 0}, {'a', 3, 4, 3}, {'b', 0, 5, 3}},
            /* 01 */ {{'c', 0, 0, 0}, {'b', 0, 4, 3}, {'a', 7, 5, 3}},
            /* 02 */ {{'c', 17, 0, 1}, {'b', 0, 2, 4}, {'a', 5, 3, 4}},
            /* 03 */ {{'c', 19, 1, 1}, {'a', 5, 2, 4}, {'b', 0, 3, 4}},
            /* 04 */ {{'b', 14, 2, 5}, {'a', 15, 3, 5}, {'a', 18, 4, 2}, {'b', 3, 5, 2}},
            /* 05 */ {{'a', 1, 2, 5}, {'b', 12, 3, 5}, {'b', 3, 4, 2}, {'a', 18, 5, 2}},
            /* 10 */ {{'c', 10, 2, 3}, {'c', 10, 5, 0}},
            /* 11 */ {{'c', 6, 3, 3}, {'c', 0, 4, 0}},
            /* 12 */ {{'a', 2, 0, 4}, {'b', 5, 1, 4}, {'c', 7, 4, 1}},
            /* 13 */ {{'b', 1, 0, 4}, {'a', 14, 1, 4}, {'c', 19, 5, 1}},
            /* 14 */ {{'b', 4, 0, 5}, {'a', 9, 1, 5}, {'a', 2, 2, 2}, {'b', 13, 3, 2}},
            /* 15 */ {{'a', 3, 0, 5}, {'b', 18, 1, 5}, {'b', 19, 2, 2}, {'a', 0, 3, 2}},
            /* 20 */ {{'c', 2, 3, 1}, {'c', 13, 4, 4}},
            /* 21 */ {{'c', 2, 2, 1}, {'c', 7, 5, 4}},
            /* 22 */ {{'c', 19, 1, 2}, {'a', 12, 4, 5}, {'b', 1, 5, 5}},
            /* 23 */ {{'c', 5, 0, 2}, {'b', 15, 4, 5}, {'a', 14, 5, 5}},
            /* 24 */ {{'a', 1, 0, 3}, {'b', 4, 1, 3}, {'c', 8, 2, 0}},
            /* 25 */ {{'b', 10, 0, 3}, {'a', 3, 1, 3}, {'c', 16, 3, 0}},
            /* 30 */ {{'b', 10, 0, 1}, {'a', 15, 1, 1}, {'a', 4, 2, 4}, {'b', 7, 3, 4}},
            /* 31 */ {{'a', 5, 0, 1}, {'b', 0, 1, 1}, {'b', 17, 2, 4}, {'a', 10, 3, 4}},
            /* 32 */ {{'a', 0, 2, 5}, {'b', 15, 3, 5}, {'b', 14, 4, 2}, {'a', 13, 5, 2}},
            /* 33 */ {{'b', 15, 2, 5}, {'a', 0, 3, 5}, {'a', 7, 4, 2}, {'b', 16, 5, 2}},
            /* 34 */ {{'a', 1, 0, 0}, {'b', 16, 1, 0}, {'b', 10, 4, 3}, {'a', 5, 5, 3}},
            /* 35 */ {{'b', 14, 0, 0}, {'a', 19, 1, 0}, {'a', 5, 4, 3}, {'b', 10, 5, 3}},
            /* 40 */ {{'c', 0, 0, 5}, {'b', 7, 2, 2}, {'a', 0, 3, 2}},
            /* 41 */ {{'c', 0, 1, 5}, {'a', 10, 2, 2}, {'b', 13, 3, 2}},
            /* 42 */ {{'c', 0, 2, 3}, {'c', 10, 5, 0}},
            /* 43 */ {{'c', 10, 3, 3}, {'c', 14, 4, 0}},
            /* 44 */ {{'b', 2, 0, 4}, {'a', 15, 1, 4}, {'c', 10, 5, 1}},
            /* 45 */ {{'a', 5, 0, 4}, {'b', 8, 1, 4}, {'c', 0, 4, 1}},
            /* 50 */ {{'a', 10, 0, 2}, {'b', 5, 1, 2}, {'b', 9, 4, 5}, {'a', 16, 5, 5}},
            /* 51 */ {{'b', 15, 0, 2}, {'a', 0, 1, 2}, {'a', 16, 4, 5}, {'b', 13, 5, 5}},
            /* 52 */ {{'b', 14, 0, 3}, {'a', 7, 1, 3}, {'c', 10, 3, 0}},
            /* 53 */ {{'a', 3, 0, 3}, {'b', 6, 1, 3}, {'c', 0, 2, 0}},
            /* 54 */ {{'c', 0, 3, 1}, {'c', 1, 4, 4}},
            /* 55 */ {{'c', 16, 2, 1}, {'c', 11, 5, 4}},
        };
        std::vector<std::vector<GoldenTerm>> t(36);
        for (int n = 0; n < 36; ++n)
            for (const Raw& e : raw[n]) t[n].push_back({e.figure, e.color, e.amp, e.phase});
        return t;
    };
    static const std::vector<std::vector<GoldenTerm>> table = make();
    return table;
}

double amp_value(char amp) {
    const GoldenConstants g = golden_constants();
    switch (amp) {
        case 'a': return g.amp_a;
        case 'b': return g.amp_b;
        case 'c': return g.amp_c;
        default: throw std::invalid_argument("unknown amplitude class");
    }
}

// Eq. (permut) vectors, 1-based as printed.
constexpr int kP1[36] = {6,  2,  36, 24, 13, 29, 22, 10, 32, 27, 1,  17,
                         31, 26, 3,  19, 23, 9,  18, 5,  12, 33, 28, 16,
                         11, 34, 25, 15, 20, 7,  14, 30, 8,  4,  35, 21};
constexpr int kP2[36] = {3,  4,  9,  10, 7,  8,  1,  2,  27, 28, 33, 34,
                         16, 15, 22, 21, 11, 5,  12, 6,  25, 26, 31, 32,
                         13, 14, 19, 20, 17, 18, 23, 24, 29, 35, 30, 36};

Permutation36 from_printed(const int (&v)[36]) {
    Permutation36 p{};
    for (int n = 0; n < 36; ++n) p[n] = v[n] - 1;
    return p;
}

ComplexMatrix perm_matrix(const Permutation36& p) {
    ComplexMatrix m(36, 36);
    for (int n = 0; n < 36; ++n) m.at(p[n], n) = 1.0;
    return m;
}

void require_unitary(const ComplexMatrix& m, double tol, const char* what) {
    if (unitarity_deficit(m) > tol)
        throw std::invalid_argument(std::string("assemble_from_scheme: ") + what + " is not unitary");
}

}  // namespace

const std::vector<GoldenTerm>& chess_encoding(int i, int j) {
    if (i < 0 || i > 5 || j < 0 || j > 5)
        throw std::out_of_range("chess_encoding: index out of range");
    return golden_table()[6 * i + j];
}

ComplexMatrix build_golden_u() {
    ComplexMatrix u(36, 36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (const GoldenTerm& t : chess_encoding(i, j))
                u.at(6 * i + j, 6 * t.figure + t.color) = amp_value(t.amp) * omega_power(t.phase);
    return u;
}

std::array<BipartiteState, 4> bell_basis_alpha() {
    const double c = 1.0 / std::sqrt(2.0);
    auto mk = [c](double a00, double a01, double a10, double a11) {
        return BipartiteState{{2, 2}, {c * a00, c * a01, c * a10, c * a11}};
    };
    return {mk(1, 0, 0, 1), mk(0, 1, 1, 0), mk(0, 1, -1, 0), mk(1, 0, 0, -1)};
}

ComplexMatrix bell_matrix() {
    const auto alpha = bell_basis_alpha();
    ComplexMatrix b(4, 4);
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) b.at(row, col) = alpha[col].amplitudes[row];
    return b;
}

std::array<BipartiteState, 4> basis_beta() {
    auto mk = [](double s00, double s01, double s10, double s11) {
        return BipartiteState{{2, 2}, {0.5 * s00, 0.5 * s01, 0.5 * s10, 0.5 * s11}};
    };
    return {mk(1, 1, 1, 1), mk(1, 1, -1, 1), mk(1, -1, 1, 1), mk(-1, 1, 1, 1)};
}

std::array<BipartiteState, 4> basis_gamma() {
    const GoldenConstants g = golden_constants();
    const double a = g.amp_a, b = g.amp_b;
    auto mk = [](double m0, int p0, double m1, int p1, double m2, int p2, double m3, int p3) {
        return BipartiteState{{2, 2},
                              {m0 * omega_power(p0), m1 * omega_power(p1), m2 * omega_power(p2),
                               m3 * omega_power(p3)}};
    };
    return {mk(a, 1, a, 19, b, 14, b, 16), mk(a, 1, a, 3, b, 10, b, 4),
            mk(b, 4, b, 18, a, 3, a, 9), mk(b, 2, b, 8, a, 5, a, 15)};
}

Permutation36 inverse_permutation(const Permutation36& p) {
    Permutation36 inv{};
    for (int n = 0; n < 36; ++n) inv[p[n]] = n;
    return inv;
}

BlockDecomposition block_decompose() {
    BlockDecomposition d;
    d.perm_left = from_printed(kP1);
    d.perm_right = from_printed(kP2);
    const ComplexMatrix m =
        perm_matrix(d.perm_left) * reshuffle(build_golden_u(), {6, 6}) * perm_matrix(d.perm_right);
    double off_mass = 0.0;
    for (int r = 0; r < 36; ++r)
        for (int c = 0; c < 36; ++c)
            if (r / 4 != c / 4) off_mass += std::norm(m.at(r, c));
    if (std::sqrt(off_mass) > 1e-12)
        throw std::logic_error("block_decompose: permutations do not block-diagonalize");
    for (int blk = 0; blk < 9; ++blk) {
        ComplexMatrix b(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) b.at(r, c) = m.at(4 * blk + r, 4 * blk + c);
        d.blocks.push_back(std::move(b));
    }
    return d;
}

ComplexMatrix assemble_from_blocks(const std::vector<ComplexMatrix>& blocks,
                                   const Permutation36& perm_left,
                                   const Permutation36& perm_right) {
    if (blocks.size() != 9) throw std::invalid_argument("assemble_from_blocks: expected 9 blocks");
    ComplexMatrix diag(36, 36);
    for (int blk = 0; blk < 9; ++blk) {
        if (blocks[blk].rows() != 4 || blocks[blk].cols() != 4)
            throw std::invalid_argument("assemble_from_blocks: blocks must be 4x4");
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) diag.at(4 * blk + r, 4 * blk + c) = blocks[blk].at(r, c);
    }
    return reshuffle(perm_matrix(perm_left) * diag * perm_matrix(perm_right), {6, 6});
}

ComplexMatrix assemble_from_scheme(const std::array<ComplexMatrix, 9>& local_left,
                                   const std::array<ComplexMatrix, 9>& local_right,
                                   const std::array<ComplexMatrix, 9>& phases,
                                   const Permutation36& perm_left,
                                   const Permutation36& perm_right) {
    const ComplexMatrix b = bell_matrix();
    std::vector<ComplexMatrix> blocks;
    for (int i = 0; i < 9; ++i) {
        const ComplexMatrix &w = local_left[i], &wt = local_right[i], &d = phases[i];
        if (w.rows() != 2 || w.cols() != 2 || wt.rows() != 2 || wt.cols() != 2)
            throw std::invalid_argument("assemble_from_scheme: local factors must be 2x2");
        if (d.rows() != 4 || d.cols() != 4)
            throw std::invalid_argument("assemble_from_scheme: phase factors must be 4x4");
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (r != c && d.at(r, c) != Complex{})
                    throw std::invalid_argument("assemble_from_scheme: phase factor not diagonal");
        require_unitary(w, 1e-10, "local left factor");
        require_unitary(wt, 1e-10, "local right factor");
        require_unitary(d, 1e-10, "phase factor");
        ComplexMatrix kron(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                kron.at(r, c) = w.at(r / 2, c / 2) * wt.at(r % 2, c % 2);
        blocks.push_back(kron * b * d);
    }
    return assemble_from_blocks(blocks, perm_left, perm_right);
}

std::string golden_chess_json() {
    auto list = nlohmann::json::array();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (const GoldenTerm& t : chess_encoding(i, j))
                list.push_back({{"row", {i, j}},
                                {"figure", figure_name(t.figure)},
                                {"color", color_name(t.color)},
                                {"amp", std::string(1, t.amp)},
                                {"phase", t.phase}});
    return list.dump();
}

}  // namespace qols

#include "qols/classical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

namespace qols {

namespace {

LatinSquare empty_square(int d) {
    LatinSquare s;
    s.order = d;
    s.grid.assign(d, std::vector<int>(d, -1));
    return s;
}

void require_latin(const LatinSquare& s, const char* op) {
    if (!is_latin(s)) throw std::invalid_argument(std::string(op) + ": input square is not Latin");
}

}  // namespace

bool is_latin(const LatinSquare& s) {
    const int d = s.order;
    if (d <= 0 || s.grid.size() != static_cast<size_t>(d)) return false;
    for (const auto& row : s.grid)
        if (row.size() != static_cast<size_t>(d)) return false;
    for (int i = 0; i < d; ++i) {
        std::vector<bool> row_seen(d, false), col_seen(d, false);
        for (int j = 0; j < d; ++j) {
            const int r = s.grid[i][j], c = s.grid[j][i];
            if (r < 0 || r >= d || row_seen[r]) return false;
            if (c < 0 || c >= d || col_seen[c]) return false;
            row_seen[r] = col_seen[c] = true;
        }
    }
    return true;
}

LatinSquare latin_cyclic(int d) {
    if (d < 1) throw std::invalid_argument("latin_cyclic: order must be positive");
    LatinSquare s = empty_square(d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) s.grid[j][i] = (i + j) % d;
    return s;
}

OrthogonalPair ols_odd(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("ols_odd: order must be odd and >= 3");
    OrthogonalPair p;
    p.order = d;
    p.first = empty_square(d);
    p.second = empty_square(d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            p.first.grid[j][i] = (i + j) % d;
            p.second.grid[j][i] = (i + 2 * j) % d;
        }
    }
    return p;
}

OrthogonalityResult is_orthogonal_pair(const OrthogonalPair& p) {
    if (p.first.order != p.order || p.second.order != p.order)
        throw std::invalid_argument("is_orthogonal_pair: order mismatch");
    require_latin(p.first, "is_orthogonal_pair");
    require_latin(p.second, "is_orthogonal_pair");
    const int d = p.order;
    std::vector<int> seen_at(d * d, -1);  // pair code -> cell index
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int code = p.first.grid[i][j] * d + p.second.grid[i][j];
            if (seen_at[code] >= 0) {
                OrthogonalityResult r;
                r.orthogonal = false;
                r.row1 = seen_at[code] / d;
                r.col1 = seen_at[code] % d;
                r.row2 = i;
                r.col2 = j;
                return r;
            }
            seen_at[code] = i * d + j;
        }
    }
    OrthogonalityResult r;
    r.orthogonal = true;
    return r;
}

MagicSquare magic_square_of(const OrthogonalPair& p) {
    if (!is_orthogonal_pair(p).orthogonal)
        throw std::invalid_argument("magic_square_of: pair is not orthogonal");
    const int d = p.order;
    MagicSquare m;
    m.order = d;
    m.grid.assign(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m.grid[i][j] = static_cast<long>(p.first.grid[i][j]) * d + p.second.grid[i][j] + 1;
    long sum0 = 0;
    for (int j = 0; j < d; ++j) sum0 += m.grid[0][j];
    for (int i = 0; i < d; ++i) {
        long rs = 0, cs = 0;
        for (int j = 0; j < d; ++j) {
            rs += m.grid[i][j];
            cs += m.grid[j][i];
        }
        if (rs != sum0 || cs != sum0)
            throw std::logic_error("magic_square_of: row/column sums differ");
    }
    m.common_sum = sum0;
    return m;
}

ComplexMatrix permutation_encoding(const OrthogonalPair& p) {
    if (!is_orthogonal_pair(p).orthogonal)
        throw std::invalid_argument("permutation_encoding: pair is not orthogonal");
    const int d = p.order;
    ComplexMatrix m(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m.at(d * p.first.grid[i][j] + p.second.grid[i][j], d * i + j) = 1.0;
    return m;
}

DesignTable table_form(const OrthogonalPair& p) {
    if (p.first.order != p.order || p.second.order != p.order)
        throw std::invalid_argument("table_form: order mismatch");
    const int d = p.order;
    DesignTable t;
    t.order = d;
    t.records.reserve(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            t.records.push_back({i, j, p.first.grid[i][j], p.second.grid[i][j]});
    return t;
}

InverseFunctions inverse_functions(const DesignTable& t) {
    const int d = t.order;
    const int n = d * d;
    InverseFunctions f;
    f.f1.assign(n, -1);
    f.f2.assign(n, -1);
    f.f3.assign(n, -1);
    auto assign = [&](std::vector<int>& perm, int from, int to, const char* which) {
        if (perm[from] != -1)
            throw std::runtime_error(std::string("inverse_functions: collision in ") + which +
                                     " (pairing is not bijective)");
        perm[from] = to;
    };
    for (const auto& rec : t.records) {
        assign(f.f1, d * rec.row + rec.col, d * rec.rank + rec.color, "F1");
        assign(f.f2, d * rec.row + rec.rank, d * rec.col + rec.color, "F2");
        assign(f.f3, d * rec.row + rec.color, d * rec.rank + rec.col, "F3");
    }
    for (const auto* perm : {&f.f1, &f.f2, &f.f3})
        if (std::count(perm->begin(), perm->end(), -1) != 0)
            throw std::runtime_error("inverse_functions: pairing is not total");
    return f;
}

namespace {

// All Latin squares of order d, by row-wise backtracking.
std::vector<LatinSquare> all_latin_squares(int d) {
    std::vector<LatinSquare> out;
    LatinSquare s = empty_square(d);
    std::vector<uint32_t> col_used(d, 0);
    std::function<void(int, int, uint32_t)> fill = [&](int row, int col, uint32_t row_used) {
        if (col == d) {
            if (row + 1 == d)
                out.push_back(s);
            else
                fill(row + 1, 0, 0);
            return;
        }
        for (int v = 0; v < d; ++v) {
            const uint32_t bit = 1u << v;
            if ((row_used & bit) || (col_used[col] & bit)) continue;
            s.grid[row][col] = v;
            col_used[col] |= bit;
            fill(row, col + 1, row_used | bit);
            col_used[col] &= ~bit;
        }
    };
    fill(0, 0, 0);
    return out;
}

}  // namespace

std::optional<OrthogonalPair> search_ols_exhaustive(int d) {
    if (d < 1) throw std::invalid_argument("search_ols_exhaustive: order must be positive");
    if (d > 4) throw std::invalid_argument("search_ols_exhaustive: full exhaustion limited to d <= 4");
    const auto squares = all_latin_squares(d);
    for (const auto& a : squares) {
        for (const auto& b : squares) {
            OrthogonalPair p{d, a, b};
            if (is_orthogonal_pair(p).orthogonal) return p;
        }
    }
    return std::nullopt;  // search exhausted
}

namespace {

// Transversals of s as cell bitmasks (bit d*row + col). d <= 7 keeps the
// mask in 64 bits.
std::vector<uint64_t> enumerate_transversals(const LatinSquare& s) {
    const int d = s.order;
    std::vector<uint64_t> out;
    std::vector<int> cols;
    std::function<void(int, uint32_t, uint32_t, uint64_t)> step =
        [&](int row, uint32_t cols_used, uint32_t syms_used, uint64_t mask) {
            if (row == d) {
                out.push_back(mask);
                return;
            }
            for (int c = 0; c < d; ++c) {
                const uint32_t cbit = 1u << c;
                if (cols_used & cbit) continue;
                const uint32_t sbit = 1u << s.grid[row][c];
                if (syms_used & sbit) continue;
                step(row + 1, cols_used | cbit, syms_used | sbit,
                     mask | (uint64_t{1} << (d * row + c)));
            }
        };
    step(0, 0, 0, 0);
    return out;
}

// Exact cover of the d^2 cells by d disjoint transversals, fewest-candidates
// cell first. Returns the chosen transversals, or nullopt once exhausted.
std::optional<std::vector<uint64_t>> disjoint_transversal_cover(int d,
                                                                const std::vector<uint64_t>& options) {
    const int cells = d * d;
    std::vector<uint64_t> chosen;
    std::function<bool(uint64_t, std::vector<uint64_t>)> solve =
        [&](uint64_t covered, std::vector<uint64_t> active) -> bool {
        if (covered == (cells == 64 ? ~uint64_t{0} : (uint64_t{1} << cells) - 1)) return true;
        // pick the uncovered cell with the fewest covering options
        int best_cell = -1;
        size_t best_count = SIZE_MAX;
        for (int cell = 0; cell < cells; ++cell) {
            if (covered & (uint64_t{1} << cell)) continue;
            size_t count = 0;
            for (uint64_t o : active)
                if (o & (uint64_t{1} << cell)) ++count;
            if (count < best_count) {
                best_count = count;
                best_cell = cell;
                if (count == 0) return false;
            }
        }
        for (uint64_t o : active) {
            if (!(o & (uint64_t{1} << best_cell))) continue;
            std::vector<uint64_t> next;
            next.reserve(active.size());
            for (uint64_t q : active)
                if (!(q & o)) next.push_back(q);
            chosen.push_back(o);
            if (solve(covered | o, std::move(next))) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (solve(0, options)) return chosen;
    return std::nullopt;
}

}  // namespace

std::optional<OrthogonalPair> orthogonal_mate_search(const LatinSquare& s) {
    require_latin(s, "orthogonal_mate_search");
    const int d = s.order;
    if (d > 7) throw std::invalid_argument("orthogonal_mate_search: transversal enumeration limited to d <= 7");
    const auto transversals = enumerate_transversals(s);
    auto cover = disjoint_transversal_cover(d, transversals);
    if (!cover) return std::nullopt;  // certified absence
    LatinSquare mate = empty_square(d);
    for (int t = 0; t < d; ++t)
        for (int cell = 0; cell < d * d; ++cell)
            if ((*cover)[t] & (uint64_t{1} << cell)) mate.grid[cell / d][cell % d] = t;
    OrthogonalPair p{d, s, mate};
    if (!is_orthogonal_pair(p).orthogonal)
        throw std::logic_error("orthogonal_mate_search: cover did not yield an orthogonal mate");
    return p;
}

MolsResult mols_check(const std::vector<LatinSquare>& squares) {
    MolsResult r;
    if (squares.empty()) throw std::invalid_argument("mols_check: empty set");
    const int d = squares.front().order;
    for (const auto& s : squares) {
        if (s.order != d) throw std::invalid_argument("mols_check: mixed orders");
        require_latin(s, "mols_check");
    }
    if (d >= 2 && squares.size() > static_cast<size_t>(d - 1)) {
        r.bound_violated = true;  // at most d-1 MOLS exist
        return r;
    }
    for (size_t i = 0; i < squares.size(); ++i) {
        for (size_t j = i + 1; j < squares.size(); ++j) {
            OrthogonalPair p{d, squares[i], squares[j]};
            if (!is_orthogonal_pair(p).orthogonal) {
                r.failing_i = static_cast<int>(i);
                r.failing_j = static_cast<int>(j);
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

std::string to_text(const LatinSquare& s) {
    std::ostringstream os;
    os << s.order << "\n";
    for (const auto& row : s.grid) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    return os.str();
}

std::string to_text(const OrthogonalPair& p) {
    return to_text(p.first) + "\n" + to_text(p.second);
}

LatinSquare latin_from_text(const std::string& text) {
    std::istringstream is(text);
    int d = 0;
    if (!(is >> d) || d < 1) throw std::invalid_argument("latin_from_text: bad order line");
    LatinSquare s = empty_square(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!(is >> s.grid[i][j])) throw std::invalid_argument("latin_from_text: truncated grid");
    return s;
}

OrthogonalPair pair_from_text(const std::string& text) {
    std::istringstream is(text);
    auto read_square = [&is]() {
        int d = 0;
        if (!(is >> d) || d < 1) throw std::invalid_argument("pair_from_text: bad order line");
        LatinSquare s = empty_square(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!(is >> s.grid[i][j])) throw std::invalid_argument("pair_from_text: truncated grid");
        return s;
    };
    OrthogonalPair p;
    p.first = read_square();
    p.second = read_square();
    if (p.first.order != p.second.order)
        throw std::invalid_argument("pair_from_text: squares have different orders");
    p.order = p.first.order;
    return p;
}

}  // namespace qols

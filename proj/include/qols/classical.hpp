#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qols/matrix.hpp"

namespace qols {

/// d x d grid over symbols {0..d-1}, each symbol once per row and column.
struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> grid;
};

bool is_latin(const LatinSquare& s);

/// Two superposed Latin squares; orthogonal when the cell pairs exhaust all
/// d^2 ordered symbol pairs.
struct OrthogonalPair {
    int order = 0;
    LatinSquare first;   // ranks
    LatinSquare second;  // colors
};

struct OrthogonalityResult {
    bool orthogonal = false;
    // On failure, two cells carrying the same (rank, color) pair.
    int row1 = -1, col1 = -1, row2 = -1, col2 = -1;
};

/// Cyclic construction: grid[j][i] = (i + j) mod d.
LatinSquare latin_cyclic(int d);

/// Odd-order pair with cell (i + j, i + 2j) mod d at column i, row j.
OrthogonalPair ols_odd(int d);

/// Throws on non-Latin input.
OrthogonalityResult is_orthogonal_pair(const OrthogonalPair& p);

struct MagicSquare {
    int order = 0;
    std::vector<std::vector<long>> grid;
    long common_sum = 0;
};

/// X[i][j] = rank*d + color + 1; all row and column sums equal.
MagicSquare magic_square_of(const OrthogonalPair& p);

/// d^2 x d^2 permutation matrix with the unity of column d*i+j placed in
/// row d*rank + color. For the order-3 reference pair this is P_9.
ComplexMatrix permutation_encoding(const OrthogonalPair& p);

/// Four-column table (row, column, rank, color), one record per cell.
struct DesignTable {
    int order = 0;
    struct Record {
        int row, col, rank, color;
    };
    std::vector<Record> records;
};

DesignTable table_form(const OrthogonalPair& p);

/// The three pairings of a design table as explicit d^2 permutations:
///   f1: (row, col)   -> (rank, color)
///   f2: (row, rank)  -> (col, color)
///   f3: (row, color) -> (rank, col)
/// Throws if any pairing collides (broken orthogonality).
struct InverseFunctions {
    std::vector<int> f1, f2, f3;
};

InverseFunctions inverse_functions(const DesignTable& t);

/// Full enumeration over all Latin square pairs of order d <= 4.
/// nullopt means certified absence (search exhausted).
std::optional<OrthogonalPair> search_ols_exhaustive(int d);

/// Transversal enumeration + exact cover over d disjoint transversals.
/// Returns (s, mate) or nullopt for certified absence. Requires d <= 7.
std::optional<OrthogonalPair> orthogonal_mate_search(const LatinSquare& s);

struct MolsResult {
    bool ok = false;
    bool bound_violated = false;  // more than d-1 squares claimed
    int failing_i = -1, failing_j = -1;
};

/// Pairwise orthogonality of a set of Latin squares, plus the d-1 bound.
MolsResult mols_check(const std::vector<LatinSquare>& squares);

// Text format: first line "d", then d lines of d space-separated symbols.
// A pair is two squares separated by a blank line.
std::string to_text(const LatinSquare& s);
std::string to_text(const OrthogonalPair& p);
LatinSquare latin_from_text(const std::string& text);
OrthogonalPair pair_from_text(const std::string& text);

}  // namespace qols

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qols/matrix.hpp"

namespace qols {

/// Amplitudes and phase of the golden AME(4,6) construction:
///   a = (1/2) sqrt(1 - 1/sqrt(5)),  b = (1/2) sqrt(1 + 1/sqrt(5)),
///   c = 1/sqrt(2),  omega = exp(i pi / 10),  b/a = golden ratio.
struct GoldenConstants {
    double amp_a;
    double amp_b;
    double amp_c;
    double golden_ratio;
    Complex omega;
};

GoldenConstants golden_constants();

/// omega^k with the exponent reduced mod 20; exact at multiples of 5.
Complex omega_power(int k);

/// One non-zero entry of the golden matrix: column |figure color>, amplitude
/// class 'a'/'b'/'c', and phase exponent in {0..19}.
struct GoldenTerm {
    int figure;  // 0=king .. 5=pawn
    int color;   // 0=red, 1=cyan, 2=green, 3=magenta, 4=blue, 5=yellow
    char amp;    // 'a', 'b' or 'c'
    int phase;   // omega exponent
};

const char* figure_name(int figure);
const char* color_name(int color);

/// Terms of |psi_ij>, i.e. of row 6i+j of the golden matrix.
const std::vector<GoldenTerm>& chess_encoding(int i, int j);

/// The 36 x 36 golden 2-unitary matrix; row 6i+j holds |psi_ij>.
ComplexMatrix build_golden_u();

/// Bell basis |alpha_i> and the 4x4 Bell matrix B with columns B|i> = |alpha_i>.
std::array<BipartiteState, 4> bell_basis_alpha();
ComplexMatrix bell_matrix();

/// The beta and gamma two-qubit bases, entered as printed. beta_1 is in fact
/// a product state and overlaps beta_2; gamma states are orthonormal but not
/// maximally entangled. Tests freeze both facts.
std::array<BipartiteState, 4> basis_beta();
std::array<BipartiteState, 4> basis_gamma();

/// Permutation of 36 elements; entry n holds the row of the unity in column n
/// of the corresponding permutation matrix (zero-based).
using Permutation36 = std::array<int, 36>;

Permutation36 inverse_permutation(const Permutation36& p);

/// The golden matrix reshuffled and conjugated by P1, P2 splits into nine
/// unitary 4x4 blocks whose rows are maximally entangled (2,2) states.
struct BlockDecomposition {
    Permutation36 perm_left;   // P1
    Permutation36 perm_right;  // P2
    std::vector<ComplexMatrix> blocks;  // nine 4x4 blocks, diagonal order
};

BlockDecomposition block_decompose();

/// Direct sum of nine 4x4 blocks, conjugated by the given permutations and
/// reordered back: reshuffle(P1 * blockdiag * P2). The output is unitary only
/// when the reordering happens to preserve it; the golden parameters do.
ComplexMatrix assemble_from_blocks(const std::vector<ComplexMatrix>& blocks,
                                   const Permutation36& perm_left,
                                   const Permutation36& perm_right);

/// Scheme form: block i is (W_i (x) Wt_i) * B * D_i with 2x2 unitaries W, Wt
/// and a diagonal 4x4 unitary D. Throws on non-unitary parameters.
ComplexMatrix assemble_from_scheme(const std::array<ComplexMatrix, 9>& local_left,
                                   const std::array<ComplexMatrix, 9>& local_right,
                                   const std::array<ComplexMatrix, 9>& phases,
                                   const Permutation36& perm_left,
                                   const Permutation36& perm_right);

/// Chess-encoding export: one record per non-zero entry of the golden matrix.
std::string golden_chess_json();

}  // namespace qols

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qols/classical.hpp"
#include "qols/matrix.hpp"

namespace qols {

/// d x d grid of bipartite states |psi_ij> in H_d (x) H_d, stored row-major
/// by (i, j). Equivalently a d^2 x d^2 matrix whose row i*d+j is |psi_ij>.
struct QolsDesign {
    int order = 0;
    std::vector<BipartiteState> states;

    const BipartiteState& state(int i, int j) const { return states[static_cast<size_t>(i) * order + j]; }
    BipartiteState& state(int i, int j) { return states[static_cast<size_t>(i) * order + j]; }

    ComplexMatrix matrix_form() const;
    static QolsDesign from_matrix(const ComplexMatrix& m);
};

struct ConditionEntry {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    double tolerance = 0.0;
    std::vector<ConditionEntry> entries;

    bool all_pass() const;
    const ConditionEntry* find(const std::string& name) const;
};

/// A': all d^2 states mutually orthonormal.
/// Residual: max over pairs of |<psi_ij|psi_kl> - delta_ik delta_jl|.
ConditionEntry check_a_prime(const QolsDesign& q, double tolerance);

/// B': for every ordered row pair (i,j),
///   Tr_B( sum_k |psi_ik><psi_jk| ) = delta_ij I_d, plus the Tr_A dual.
/// Returns {B'_B, B'_A}; residuals are max Frobenius norms over pairs.
std::array<ConditionEntry, 2> check_b_prime(const QolsDesign& q, double tolerance);

/// C': the column analog of B'. Returns {C'_B, C'_A}.
std::array<ConditionEntry, 2> check_c_prime(const QolsDesign& q, double tolerance);

/// Unitarity deficits of U, U^R, U^Gamma. The design is a QOLS iff all pass.
std::array<ConditionEntry, 3> check_two_unitary(const ComplexMatrix& u, double tolerance);

/// All seven conditions: A', B'_B, B'_A, C'_B, C'_A plus 2U_U, 2U_R, 2U_G.
VerificationReport verify_design(const QolsDesign& q, double tolerance);
VerificationReport verify_matrix(const ComplexMatrix& u, double tolerance);

/// d x d grid of states in H_d whose rows and columns are orthonormal bases.
struct QuantumLatinSquare {
    int order = 0;
    std::vector<std::vector<Complex>> states;  // d^2 states, row-major

    const std::vector<Complex>& state(int i, int j) const { return states[static_cast<size_t>(i) * order + j]; }
};

bool is_qls(const QuantumLatinSquare& q, double tolerance = 1e-10);

struct CardinalityResult {
    int cardinality = 0;
    bool genuinely_quantum = false;  // iff cardinality > order
};

/// Number of distinct states up to phase: u ~ v iff |<u|v>| >= 1 - epsilon.
CardinalityResult cardinality(const QuantumLatinSquare& q, double epsilon = 1e-8);

/// One 2x2 arrangement of (not necessarily distinct) Bell states alpha_1..4,
/// indexed 0..3 in grid order (0,0),(0,1),(1,0),(1,1).
struct BellGridOutcome {
    std::array<int, 4> assignment{};
    std::string first_failing;  // empty if every condition passed
    double residual = 0.0;
};

BellGridOutcome check_bell_grid(const std::array<int, 4>& assignment, double tolerance = 1e-10);

/// All 24 assignments of the four Bell states to the 2x2 grid.
std::vector<BellGridOutcome> check_d2_bell_grids(double tolerance = 1e-10);

/// Product-state design |rank> (x) |color| from a classical orthogonal pair.
QolsDesign embed_classical(const OrthogonalPair& p);

// QOLS JSON: {"d": n, "states": [[ [re,im], ... ], ...]} row-major by (i,j).
std::string to_json(const QolsDesign& q);
QolsDesign design_from_json(const std::string& text);

std::string to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace qols

#pragma once

#include <vector>

#include "qols/matrix.hpp"

namespace qols {

enum class Subsystem { A, B };

/// Reshuffling X^R: Z[(i,l),(k,j)] = X[(i,j),(k,l)].
/// With this index convention the map is an involution. Requires d_a == d_b.
ComplexMatrix reshuffle(const ComplexMatrix& m, BipartiteShape shape);

/// Partial transpose X^Gamma: Y[(i,j),(k,l)] = X[(i,k),(j,l)].
/// Involution. Requires d_a == d_b.
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteShape shape);

/// Trace out the selected subsystem of a (d_a*d_b) x (d_a*d_b) matrix.
/// Returns a matrix of size d_b (tracing A) or d_a (tracing B).
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteShape shape, Subsystem which);

/// Frobenius norm of m^dagger m - I. Zero iff m is unitary.
double unitarity_deficit(const ComplexMatrix& m);

/// Singular values of the d_a x d_b coefficient matrix of a normalized state,
/// in descending order. Their squares sum to one.
std::vector<double> schmidt_values(const BipartiteState& v, double norm_tolerance = 1e-8);

/// Unitary factor of the polar decomposition: the unitary nearest to m in
/// Frobenius norm. Throws on rank-deficient input.
ComplexMatrix polar_unitary(const ComplexMatrix& m, double rank_tolerance = 1e-12);

}  // namespace qols

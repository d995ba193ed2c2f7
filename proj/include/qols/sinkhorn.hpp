#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qols/matrix.hpp"
#include "qols/quantum.hpp"

namespace qols {

struct SearchConfig {
    int local_dim = 2;          // d; the matrix has size d^2
    int max_iterations = 100000;
    double target_deficit = 1e-8;
    std::uint64_t seed = 0;
    double damping = 1.0;       // in (0,1]; 1 = undamped projection
    bool skip_gamma_leg = false;  // dual-unitary relaxation: only U and U^R
};

struct DeficitTriple {
    double u = 0.0, r = 0.0, gamma = 0.0;
    double max() const { return u > r ? (u > gamma ? u : gamma) : (r > gamma ? r : gamma); }
};

struct SearchTrace {
    std::vector<DeficitTriple> deficits;  // one per iteration
    ComplexMatrix final_matrix;
    bool converged = false;
    int iterations = 0;
    bool stagnated = false;
};

/// Raised when a projection hits a rank-deficient intermediate; callers may
/// restart from a fresh seed.
struct RankDeficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One alternating-unitarization sweep, legs in fixed order U -> R -> Gamma:
/// polar-project the matrix, its reshuffle, and its partial transpose in turn
/// (each reordered back). With damping lambda the update per leg is
/// polar((1 - lambda) m + lambda candidate).
ComplexMatrix iterate_once(const ComplexMatrix& m, BipartiteShape shape, double damping = 1.0,
                           bool skip_gamma_leg = false);

/// Haar-like random unitary: polar factor of a complex Gaussian matrix.
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

/// Run from a seeded random unitary until the target deficit, stagnation
/// (relative improvement < 1e-12 over 100 iterations) or the iteration cap.
/// Deterministic given the config.
SearchTrace search(const SearchConfig& config);

/// Full design verification of the trace's final matrix.
VerificationReport certify(const SearchTrace& trace, double tolerance);

/// Trace export, one JSON record per line:
///   {"iter": n, "delta_u": x, "delta_r": y, "delta_gamma": z}
std::string trace_to_json_lines(const SearchTrace& trace);

}  // namespace qols

#include "qols/sinkhorn.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "qols/tensor_ops.hpp"

namespace qols {

namespace {

ComplexMatrix polar_or_throw(const ComplexMatrix& m) {
    try {
        return polar_unitary(m);
    } catch (const std::invalid_argument& e) {
        throw RankDeficientError(e.what());
    }
}

// Damped polar step: polar((1 - lambda) m + lambda polar(m)).
ComplexMatrix leg(const ComplexMatrix& m, double damping) {
    ComplexMatrix candidate = polar_or_throw(m);
    if (damping >= 1.0) return candidate;
    ComplexMatrix blend(m.rows(), m.cols());
    for (size_t i = 0; i < blend.entries().size(); ++i)
        blend.entries()[i] = (1.0 - damping) * m.entries()[i] + damping * candidate.entries()[i];
    return polar_or_throw(blend);
}

DeficitTriple deficits_of(const ComplexMatrix& m, BipartiteShape shape) {
    DeficitTriple t;
    t.u = unitarity_deficit(m);
    t.r = unitarity_deficit(reshuffle(m, shape));
    t.gamma = unitarity_deficit(partial_transpose(m, shape));
    return t;
}

}  // namespace

ComplexMatrix iterate_once(const ComplexMatrix& m, BipartiteShape shape, double damping,
                           bool skip_gamma_leg) {
    if (damping <= 0.0 || damping > 1.0)
        throw std::invalid_argument("iterate_once: damping must lie in (0, 1]");
    ComplexMatrix out = leg(m, damping);
    out = reshuffle(leg(reshuffle(out, shape), damping), shape);
    if (!skip_gamma_leg) out = partial_transpose(leg(partial_transpose(out, shape), damping), shape);
    return out;
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (Complex& z : g.entries()) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = Complex(re, im);
    }
    return polar_or_throw(g);
}

SearchTrace search(const SearchConfig& config) {
    const int d = config.local_dim;
    if (d < 2) throw std::invalid_argument("search: local_dim must be at least 2");
    const BipartiteShape shape{d, d};
    std::mt19937_64 rng(config.seed);
    ComplexMatrix m = random_unitary(d * d, rng);

    SearchTrace trace;
    auto objective = [&](const DeficitTriple& t) {
        return config.skip_gamma_leg ? std::max(t.u, t.r) : t.max();
    };
    for (int it = 0; it < config.max_iterations; ++it) {
        const DeficitTriple t = deficits_of(m, shape);
        trace.deficits.push_back(t);
        if (objective(t) < config.target_deficit) {
            trace.converged = true;
            break;
        }
        // stagnation: relative improvement < 1e-12 over the last 100 sweeps
        const size_t n = trace.deficits.size();
        if (n > 100) {
            const double before = objective(trace.deficits[n - 101]);
            const double now = objective(t);
            if (before - now < 1e-12 * before) {
                trace.stagnated = true;
                break;
            }
        }
        m = iterate_once(m, shape, config.damping, config.skip_gamma_leg);
        trace.iterations = it + 1;
    }
    trace.final_matrix = m;
    return trace;
}

VerificationReport certify(const SearchTrace& trace, double tolerance) {
    return verify_matrix(trace.final_matrix, tolerance);
}

std::string trace_to_json_lines(const SearchTrace& trace) {
    std::ostringstream os;
    for (size_t i = 0; i < trace.deficits.size(); ++i) {
        const DeficitTriple& t = trace.deficits[i];
        nlohmann::json j{{"iter", i}, {"delta_u", t.u}, {"delta_r", t.r}, {"delta_gamma", t.gamma}};
        os << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace qols

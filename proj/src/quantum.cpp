#include "qols/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "qols/golden.hpp"
#include "qols/tensor_ops.hpp"

namespace qols {

namespace {

void require_design(const QolsDesign& q, const char* op) {
    const int d = q.order;
    if (d <= 0 || q.states.size() != static_cast<size_t>(d) * d)
        throw std::invalid_argument(std::string(op) + ": state count does not match order");
    for (const auto& s : q.states)
        if (s.shape.dim_a != d || s.shape.dim_b != d ||
            s.amplitudes.size() != static_cast<size_t>(d) * d)
            throw std::invalid_argument(std::string(op) + ": state shape does not match order");
}

// Tr_B |u><v| as a d x d matrix.
ComplexMatrix trace_b_outer(const BipartiteState& u, const BipartiteState& v) {
    const int d = u.shape.dim_a;
    ComplexMatrix m(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int l = 0; l < d; ++l) m.at(p, q) += u.at(p, l) * std::conj(v.at(q, l));
    return m;
}

// Tr_A |u><v| as a d x d matrix.
ComplexMatrix trace_a_outer(const BipartiteState& u, const BipartiteState& v) {
    const int d = u.shape.dim_a;
    ComplexMatrix m(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int k = 0; k < d; ++k) m.at(p, q) += u.at(k, p) * std::conj(v.at(k, q));
    return m;
}

ConditionEntry make_entry(std::string name, double residual, double tolerance) {
    return {std::move(name), residual, tolerance, residual < tolerance};
}

// Shared body of B' (rows) and C' (columns): max residual of
// Tr_X( sum_k |psi(i,k)><psi(j,k)| ) - delta_ij I over ordered pairs.
std::array<double, 2> line_residuals(const QolsDesign& q, bool by_rows) {
    const int d = q.order;
    double worst_b = 0.0, worst_a = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            ComplexMatrix sum_b(d, d), sum_a(d, d);
            for (int k = 0; k < d; ++k) {
                const auto& u = by_rows ? q.state(i, k) : q.state(k, i);
                const auto& v = by_rows ? q.state(j, k) : q.state(k, j);
                const ComplexMatrix tb = trace_b_outer(u, v);
                const ComplexMatrix ta = trace_a_outer(u, v);
                for (size_t n = 0; n < sum_b.entries().size(); ++n) {
                    sum_b.entries()[n] += tb.entries()[n];
                    sum_a.entries()[n] += ta.entries()[n];
                }
            }
            if (i == j)
                for (int p = 0; p < d; ++p) {
                    sum_b.at(p, p) -= 1.0;
                    sum_a.at(p, p) -= 1.0;
                }
            worst_b = std::max(worst_b, frobenius_norm(sum_b));
            worst_a = std::max(worst_a, frobenius_norm(sum_a));
        }
    }
    return {worst_b, worst_a};
}

}  // namespace

ComplexMatrix QolsDesign::matrix_form() const {
    require_design(*this, "matrix_form");
    const int n = order * order;
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = states[r].amplitudes[c];
    return m;
}

QolsDesign QolsDesign::from_matrix(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("from_matrix: non-square matrix");
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.rows()))));
    if (d * d != m.rows()) throw std::invalid_argument("from_matrix: size is not a perfect square");
    QolsDesign q;
    q.order = d;
    q.states.reserve(static_cast<size_t>(d) * d);
    for (int r = 0; r < d * d; ++r) q.states.push_back({{d, d}, m.row(r)});
    return q;
}

bool VerificationReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

const ConditionEntry* VerificationReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

ConditionEntry check_a_prime(const QolsDesign& q, double tolerance) {
    require_design(q, "check_a_prime");
    const int n = q.order * q.order;
    double worst = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex g = inner_product(q.states[r], q.states[c]);
            if (r == c) g -= 1.0;
            worst = std::max(worst, std::abs(g));
        }
    return make_entry("A'", worst, tolerance);
}

std::array<ConditionEntry, 2> check_b_prime(const QolsDesign& q, double tolerance) {
    require_design(q, "check_b_prime");
    const auto [rb, ra] = line_residuals(q, /*by_rows=*/true);
    return {make_entry("B'_B", rb, tolerance), make_entry("B'_A", ra, tolerance)};
}

std::array<ConditionEntry, 2> check_c_prime(const QolsDesign& q, double tolerance) {
    require_design(q, "check_c_prime");
    const auto [rb, ra] = line_residuals(q, /*by_rows=*/false);
    return {make_entry("C'_B", rb, tolerance), make_entry("C'_A", ra, tolerance)};
}

std::array<ConditionEntry, 3> check_two_unitary(const ComplexMatrix& u, double tolerance) {
    if (!u.is_square()) throw std::invalid_argument("check_two_unitary: non-square matrix");
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(u.rows()))));
    if (d * d != u.rows())
        throw std::invalid_argument("check_two_unitary: size is not a perfect square");
    const BipartiteShape shape{d, d};
    return {make_entry("2U_U", unitarity_deficit(u), tolerance),
            make_entry("2U_R", unitarity_deficit(reshuffle(u, shape)), tolerance),
            make_entry("2U_G", unitarity_deficit(partial_transpose(u, shape)), tolerance)};
}

VerificationReport verify_design(const QolsDesign& q, double tolerance) {
    VerificationReport r;
    r.tolerance = tolerance;
    r.entries.push_back(check_a_prime(q, tolerance));
    for (auto& e : check_b_prime(q, tolerance)) r.entries.push_back(std::move(e));
    for (auto& e : check_c_prime(q, tolerance)) r.entries.push_back(std::move(e));
    for (auto& e : check_two_unitary(q.matrix_form(), tolerance)) r.entries.push_back(std::move(e));
    return r;
}

VerificationReport verify_matrix(const ComplexMatrix& u, double tolerance) {
    return verify_design(QolsDesign::from_matrix(u), tolerance);
}

bool is_qls(const QuantumLatinSquare& q, double tolerance) {
    const int d = q.order;
    if (d <= 0 || q.states.size() != static_cast<size_t>(d) * d) return false;
    for (const auto& s : q.states)
        if (s.size() != static_cast<size_t>(d)) return false;
    auto gram_ok = [&](bool rows) {
        for (int line = 0; line < d; ++line)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const auto& u = rows ? q.state(line, a) : q.state(a, line);
                    const auto& v = rows ? q.state(line, b) : q.state(b, line);
                    Complex g = 0.0;
                    for (int n = 0; n < d; ++n) g += std::conj(u[n]) * v[n];
                    if (a == b) g -= 1.0;
                    if (std::abs(g) > tolerance) return false;
                }
        return true;
    };
    return gram_ok(true) && gram_ok(false);
}

CardinalityResult cardinality(const QuantumLatinSquare& q, double epsilon) {
    const int d = q.order;
    std::vector<const std::vector<Complex>*> reps;
    for (const auto& s : q.states) {
        double nrm = 0.0;
        for (const Complex& z : s) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        bool found = false;
        for (const auto* r : reps) {
            Complex g = 0.0;
            double rn = 0.0;
            for (size_t n = 0; n < s.size(); ++n) {
                g += std::conj((*r)[n]) * s[n];
                rn += std::norm((*r)[n]);
            }
            if (std::abs(g) / (nrm * std::sqrt(rn)) >= 1.0 - epsilon) {
                found = true;
                break;
            }
        }
        if (!found) reps.push_back(&s);
    }
    CardinalityResult r;
    r.cardinality = static_cast<int>(reps.size());
    r.genuinely_quantum = r.cardinality > d;
    return r;
}

BellGridOutcome check_bell_grid(const std::array<int, 4>& assignment, double tolerance) {
    const auto bell = bell_basis_alpha();
    QolsDesign q;
    q.order = 2;
    for (int g = 0; g < 4; ++g) {
        const int a = assignment[g];
        if (a < 0 || a > 3) throw std::invalid_argument("check_bell_grid: index out of range");
        q.states.push_back(bell[a]);
    }
    BellGridOutcome out;
    out.assignment = assignment;
    const VerificationReport rep = verify_design(q, tolerance);
    for (const auto& e : rep.entries) {
        if (!e.pass) {
            out.first_failing = e.name;
            out.residual = e.residual;
            break;
        }
    }
    return out;
}

std::vector<BellGridOutcome> check_d2_bell_grids(double tolerance) {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<BellGridOutcome> out;
    do {
        out.push_back(check_bell_grid(perm, tolerance));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

QolsDesign embed_classical(const OrthogonalPair& p) {
    if (!is_orthogonal_pair(p).orthogonal)
        throw std::invalid_argument("embed_classical: pair is not orthogonal");
    const int d = p.order;
    QolsDesign q;
    q.order = d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            BipartiteState s{{d, d}, std::vector<Complex>(static_cast<size_t>(d) * d)};
            s.at(p.first.grid[i][j], p.second.grid[i][j]) = 1.0;
            q.states.push_back(std::move(s));
        }
    return q;
}

std::string to_json(const QolsDesign& q) {
    require_design(q, "to_json");
    nlohmann::json j;
    j["d"] = q.order;
    auto states = nlohmann::json::array();
    for (const auto& s : q.states) {
        auto amps = nlohmann::json::array();
        for (const Complex& z : s.amplitudes) amps.push_back({z.real(), z.imag()});
        states.push_back(std::move(amps));
    }
    j["states"] = std::move(states);
    return j.dump();
}

QolsDesign design_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QolsDesign q;
    q.order = j.at("d").get<int>();
    const int d = q.order;
    const auto& states = j.at("states");
    if (d <= 0 || states.size() != static_cast<size_t>(d) * d)
        throw std::invalid_argument("design_from_json: state count does not match d");
    for (const auto& amps : states) {
        if (amps.size() != static_cast<size_t>(d) * d)
            throw std::invalid_argument("design_from_json: amplitude count does not match d");
        BipartiteState s{{d, d}, {}};
        s.amplitudes.reserve(amps.size());
        for (const auto& a : amps)
            s.amplitudes.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        q.states.push_back(std::move(s));
    }
    return q;
}

std::string to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["tolerance"] = r.tolerance;
    j["all_pass"] = r.all_pass();
    auto conditions = nlohmann::json::array();
    for (const auto& e : r.entries)
        conditions.push_back({{"name", e.name},
                              {"residual", e.residual},
                              {"tolerance", e.tolerance},
                              {"pass", e.pass}});
    j["conditions"] = std::move(conditions);
    return j.dump();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << std::scientific;
    for (const auto& e : r.entries)
        os << (e.pass ? "PASS" : "FAIL") << "  " << e.name << "  residual " << e.residual
           << "  (tolerance " << e.tolerance << ")\n";
    os << (r.all_pass() ? "overall: PASS" : "overall: FAIL") << "\n";
    return os.str();
}

}  // namespace qols

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qols/classical.hpp"
#include "qols/golden.hpp"
#include "qols/quantum.hpp"
#include "qols/sinkhorn.hpp"
#include "qols/tensor_ops.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

int perfect_square_root(int n) {
    int d = 1;
    while (d * d < n) ++d;
    return d * d == n ? d : -1;
}

// Matrix JSON or QOLS JSON, either way reduced to the square matrix.
qols::ComplexMatrix load_square(const std::string& text) {
    try {
        return qols::matrix_from_json(text);
    } catch (...) {
        return qols::design_from_json(text).matrix_form();
    }
}

int run_verify(const std::string& file, double tolerance, bool as_json) {
    qols::ComplexMatrix m;
    try {
        m = load_square(read_file(file));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!m.is_square() || perfect_square_root(m.rows()) < 0) {
        std::cerr << "error: matrix size " << m.rows() << "x" << m.cols()
                  << " is not of d^2 x d^2 form\n";
        return kExitUsage;
    }
    const qols::VerificationReport rep = qols::verify_matrix(m, tolerance);
    std::cout << (as_json ? qols::to_json(rep) + "\n" : qols::to_text(rep));
    return rep.all_pass() ? kExitPass : kExitFail;
}

int run_golden(const std::string& subtarget, const std::string& out, double tolerance) {
    const qols::ComplexMatrix u = qols::build_golden_u();
    const qols::BipartiteShape shape{6, 6};
    std::string payload;
    if (subtarget == "u") {
        payload = qols::to_json(u);
    } else if (subtarget == "r") {
        payload = qols::to_json(qols::reshuffle(u, shape));
    } else if (subtarget == "gamma") {
        payload = qols::to_json(qols::partial_transpose(u, shape));
    } else if (subtarget == "blocks") {
        std::string list = "[";
        const auto dec = qols::block_decompose();
        for (size_t i = 0; i < dec.blocks.size(); ++i)
            list += (i ? "," : "") + qols::to_json(dec.blocks[i]);
        payload = list + "]";
    } else if (subtarget == "chess") {
        payload = qols::golden_chess_json();
    } else {
        std::cerr << "error: unknown golden target '" << subtarget << "'\n";
        return kExitUsage;
    }
    if (!out.empty()) write_file(out, payload);
    else std::cout << payload << "\n";
    const auto rep = qols::verify_matrix(u, tolerance);
    std::cout << "2-unitary: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    return rep.all_pass() ? kExitPass : kExitFail;
}

void print_grid(const std::vector<std::vector<long>>& grid) {
    for (const auto& row : grid) {
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "\n";
    }
}

int run_classical(const std::string& action, int d, const std::string& in,
                  const std::string& out) {
    if (action == "build-ols") {
        if (d < 3 || d % 2 == 0) {
            std::cerr << "error: build-ols supports odd orders >= 3\n";
            return kExitUsage;
        }
        const auto pair = qols::ols_odd(d);
        const auto check = qols::is_orthogonal_pair(pair);
        if (!out.empty()) write_file(out, qols::to_text(pair));
        else std::cout << qols::to_text(pair);
        std::cout << "orthogonal: " << (check.orthogonal ? "yes" : "no") << "\n";
        return check.orthogonal ? kExitPass : kExitFail;
    }
    if (action == "magic") {
        const auto m = qols::magic_square_of(qols::ols_odd(d));
        print_grid(m.grid);
        std::cout << "magic sum " << m.common_sum << "\n";
        return kExitPass;
    }
    if (action == "mate") {
        qols::LatinSquare s = in.empty() ? qols::latin_cyclic(d) : qols::latin_from_text(read_file(in));
        const auto mate = qols::orthogonal_mate_search(s);
        if (!mate) {
            std::cout << "no orthogonal mate (search exhausted)\n";
            return kExitFail;
        }
        if (!out.empty()) write_file(out, qols::to_text(*mate));
        else std::cout << qols::to_text(*mate);
        std::cout << "orthogonal mate found\n";
        return kExitPass;
    }
    if (action == "encode") {
        qols::OrthogonalPair pair =
            in.empty() ? qols::ols_odd(d) : qols::pair_from_text(read_file(in));
        const std::string payload = qols::to_json(qols::permutation_encoding(pair));
        if (!out.empty()) write_file(out, payload);
        else std::cout << payload << "\n";
        return kExitPass;
    }
    std::cerr << "error: unknown classical action '" << action << "'\n";
    return kExitUsage;
}

int run_search(int d, int seeds, int iterations, double target, double damping,
               const std::string& out) {
    int converged = 0;
    bool all_certified = true;
    for (int seed = 0; seed < seeds; ++seed) {
        qols::SearchConfig cfg;
        cfg.local_dim = d;
        cfg.max_iterations = iterations;
        cfg.target_deficit = target;
        cfg.damping = damping;
        cfg.seed = static_cast<std::uint64_t>(seed);
        qols::SearchTrace trace;
        try {
            trace = qols::search(cfg);
        } catch (const qols::RankDeficientError&) {
            std::cout << "seed " << seed << ": rank-deficient projection, aborted\n";
            continue;
        }
        if (!out.empty()) {
            std::ostringstream name;
            name << out << ".seed" << seed << ".jsonl";
            write_file(name.str(), qols::trace_to_json_lines(trace));
        }
        const double final_deficit =
            trace.deficits.empty() ? 0.0 : trace.deficits.back().max();
        std::cout << "seed " << seed << ": " << (trace.converged ? "converged" : "not converged")
                  << " after " << trace.iterations << " iterations, max deficit "
                  << fmt(final_deficit);
        if (trace.converged) {
            ++converged;
            // re-certify at the deficit the trace claims to have reached
            const auto rep = qols::certify(trace, target);
            std::cout << ", certified " << (rep.all_pass() ? "PASS" : "FAIL");
            if (!rep.all_pass()) all_certified = false;
        }
        std::cout << "\n";
    }
    std::cout << "converged " << converged << "/" << seeds << "\n";
    return all_certified ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical and quantum orthogonal Latin square toolkit"};
    app.require_subcommand(1);

    double tolerance = 1e-10;
    app.add_option("--tolerance", tolerance, "verification tolerance")->capture_default_str();

    std::string golden_target, golden_out;
    auto* golden = app.add_subcommand("golden", "export the 2-unitary order-36 construction");
    golden->add_option("target", golden_target, "u|r|gamma|blocks|chess")->required();
    golden->add_option("--out", golden_out, "output path");

    std::string verify_file;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "verify a matrix or design file");
    verify->add_option("file", verify_file, "matrix or design JSON file")->required();
    verify->add_flag("--json", verify_json, "print the report as JSON");

    std::string cls_action, cls_in, cls_out;
    int cls_d = 3;
    auto* classical = app.add_subcommand("classical", "classical design constructions");
    classical->add_option("action", cls_action, "build-ols|magic|mate|encode")->required();
    classical->add_option("d", cls_d, "order");
    classical->add_option("--in", cls_in, "input square/pair file");
    classical->add_option("--out", cls_out, "output path");

    int search_d = 3, search_seeds = 1, search_iters = 100000;
    double search_target = 1e-8, search_damping = 1.0;
    std::string search_out;
    auto* search = app.add_subcommand("search", "alternating-unitarization search");
    search->add_option("d", search_d, "local dimension")->required()->check(CLI::Range(2, 16));
    search->add_option("--seeds", search_seeds, "number of seeds")->capture_default_str();
    search->add_option("--iterations", search_iters, "iteration cap")->capture_default_str();
    search->add_option("--target", search_target, "target deficit")->capture_default_str();
    search->add_option("--damping", search_damping, "damping in (0,1]")->capture_default_str();
    search->add_option("--out", search_out, "trace file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (golden->parsed()) return run_golden(golden_target, golden_out, tolerance);
        if (verify->parsed()) return run_verify(verify_file, tolerance, verify_json);
        if (classical->parsed()) return run_classical(cls_action, cls_d, cls_in, cls_out);
        if (search->parsed())
            return run_search(search_d, search_seeds, search_iters, search_target, search_damping,
                              search_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

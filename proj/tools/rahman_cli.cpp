// Command-line front end: one verb per verification or construction the
// library performs. Exit codes: 0 success/pass, 1 mathematical verification
// failure, 2 usage error, 3 degenerate parameter point.

#include "rahman/bispectral.hpp"
#include "rahman/errors.hpp"
#include "rahman/kernel.hpp"
#include "rahman/params.hpp"
#include "rahman/polyeval.hpp"
#include "rahman/serialization.hpp"
#include "rahman/simulator.hpp"
#include "rahman/spectral.hpp"
#include "rahman/statespace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace rahman;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct CommonOptions {
    std::string format = "json";
    int float_digits = 12;
    std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--float-digits", opts.float_digits,
                    "Significant digits for CSV output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    cmd->add_option("-o,--output", opts.output, "Write to file instead of stdout");
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out << text;
    if (!out) {
        throw IoError("failed writing output file: " + path);
    }
}

void emit_json(const json& j, const CommonOptions& opts)
{
    write_output(j.dump(2), opts.output);
}

void emit_matrix(const Matrix& m, const json& j, const CommonOptions& opts)
{
    if (opts.format == "csv") {
        write_output(matrix_to_csv(m, opts.float_digits), opts.output);
    } else {
        emit_json(j, opts);
    }
}

ParamSet parse_params(const std::vector<std::string>& values)
{
    return ParamSet{parse_rational(values[0]), parse_rational(values[1]),
                    parse_rational(values[2]), parse_rational(values[3])};
}

// Resolves the alpha pair: either given explicitly or alpha2 derived from
// the compatibility link.
std::pair<Rational, Rational> resolve_alphas(const ParamSet& p,
                                             const std::vector<std::string>& alpha,
                                             const std::string& alpha1_only)
{
    if (!alpha.empty()) {
        return {parse_rational(alpha[0]), parse_rational(alpha[1])};
    }
    const Rational a1 = parse_rational(alpha1_only);
    return {a1, compatible_alpha2(p, a1)};
}

int parse_index(const std::string& text)
{
    try {
        size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) {
            throw ParseError("not an index: '" + text + "'");
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError("not an index: '" + text + "'");
    }
}

StencilPattern named_pattern(const std::string& name, const StateSpace& space)
{
    if (name == "local") {
        return StencilPattern::adjacency(space, true);
    }
    if (name == "diagonal") {
        return StencilPattern::diagonal_only(space);
    }
    return StencilPattern::full(space);
}

// Named-entry layout of the 21-row frequency operator, for eyeball
// comparison with the published row-by-row entry list.
const char* n5_entry_name(int row, int col)
{
    static const std::map<std::pair<int, int>, const char*> names = {
        {{0, 0}, "s_1"}, {{0, 1}, "a_1"}, {{0, 6}, "b_1"},
        {{1, 0}, "a_2"}, {{1, 1}, "s_2"}, {{1, 2}, "c_2"}, {{1, 7}, "d_2"},
        {{2, 1}, "a_3"}, {{2, 2}, "s_3"}, {{2, 3}, "c_3"}, {{2, 8}, "d_3"},
        {{3, 2}, "a_4"}, {{3, 3}, "s_4"}, {{3, 4}, "c_4"}, {{3, 9}, "d_4"},
        {{4, 3}, "a_5"}, {{4, 4}, "s_5"}, {{4, 5}, "c_5"}, {{4, 10}, "e_5"},
        {{5, 4}, "a_6"}, {{5, 5}, "s_6"},
        {{6, 0}, "d_7"}, {{6, 6}, "s_7"}, {{6, 7}, "c_7"}, {{6, 11}, "a_7"},
        {{7, 1}, "a_8"}, {{7, 6}, "b_8"}, {{7, 7}, "s_8"}, {{7, 8}, "d_8"}, {{7, 12}, "e_8"},
        {{8, 2}, "e_9"}, {{8, 7}, "c_9"}, {{8, 8}, "s_9"}, {{8, 9}, "a_9"}, {{8, 13}, "d_9"},
        {{9, 3}, "d_10"}, {{9, 8}, "a_10"}, {{9, 9}, "s_10"}, {{9, 10}, "c_10"}, {{9, 14}, "e_10"},
        {{10, 4}, "b_11"}, {{10, 9}, "a_11"}, {{10, 10}, "s_11"},
        {{11, 6}, "a_12"}, {{11, 11}, "s_12"}, {{11, 12}, "d_12"}, {{11, 15}, "c_12"},
        {{12, 7}, "c_13"}, {{12, 11}, "a_13"}, {{12, 12}, "s_13"}, {{12, 13}, "d_13"}, {{12, 16}, "e_13"},
        {{13, 8}, "d_14"}, {{13, 12}, "a_14"}, {{13, 13}, "s_14"}, {{13, 14}, "c_14"}, {{13, 17}, "e_14"},
        {{14, 9}, "a_15"}, {{14, 13}, "c_15"}, {{14, 14}, "s_15"},
        {{15, 11}, "a_16"}, {{15, 15}, "s_16"}, {{15, 16}, "c_16"}, {{15, 18}, "d_16"},
        {{16, 12}, "e_17"}, {{16, 15}, "a_17"}, {{16, 16}, "s_17"}, {{16, 17}, "c_17"}, {{16, 19}, "d_17"},
        {{17, 13}, "a_18"}, {{17, 16}, "c_18"}, {{17, 17}, "s_18"},
        {{18, 15}, "c_19"}, {{18, 18}, "s_19"}, {{18, 19}, "a_19"}, {{18, 20}, "d_19"},
        {{19, 16}, "a_20"}, {{19, 18}, "c_20"}, {{19, 19}, "s_20"},
        {{20, 18}, "a_21"}, {{20, 20}, "s_21"},
    };
    const auto it = names.find({row, col});
    return it == names.end() ? nullptr : it->second;
}

std::string n5_layout(const Matrix& b)
{
    const StateSpace space(5);
    std::ostringstream out;
    for (int r = 0; r < b.rows(); ++r) {
        const State s = space.state(r);
        out << "row " << (r + 1) << " (" << s.x << "," << s.y << "): [";
        for (int c = 0; c < b.cols(); ++c) {
            if (c > 0) {
                out << ", ";
            }
            const char* name = n5_entry_name(r, c);
            out << (name ? name : "0");
        }
        out << "]\n";
        for (int c = 0; c < b.cols(); ++c) {
            if (const char* name = n5_entry_name(r, c)) {
                out << "  " << name << " = " << to_string(b.at(r, c)) << "\n";
            }
        }
    }
    return out.str();
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact spectral toolkit for the three-toss dice chain and its "
                 "two-variable eigenpolynomials"};
    app.require_subcommand(1);

    // ---- params ----
    auto* params_cmd = app.add_subcommand(
        "params", "Derived quantities t,u,v,w, weight parameters, compatible chain parameters");
    std::vector<std::string> params_p;
    std::vector<std::string> params_alpha;
    std::string params_alpha1;
    CommonOptions params_opts;
    params_cmd->add_option("--p", params_p, "Four rationals p1 p2 p3 p4")
        ->expected(4)->required();
    auto* params_alpha_opt =
        params_cmd->add_option("--alpha", params_alpha, "alpha1 alpha2")->expected(2);
    params_cmd->add_option("--alpha1", params_alpha1, "alpha1 only; alpha2 derived")
        ->excludes(params_alpha_opt);
    add_common(params_cmd, params_opts);

    // ---- kernel ----
    auto* kernel_cmd = app.add_subcommand("kernel", "Exact one-step transition matrix");
    int kernel_n = 0;
    std::vector<std::string> kernel_alpha, kernel_beta;
    bool kernel_algebraic = false;
    CommonOptions kernel_opts;
    kernel_cmd->add_option("--N", kernel_n, "Number of dice")->required();
    kernel_cmd->add_option("--alpha", kernel_alpha, "alpha1 alpha2")->expected(2)->required();
    kernel_cmd->add_option("--beta", kernel_beta, "beta1 beta2")->expected(2)->required();
    kernel_cmd->add_flag("--algebraic", kernel_algebraic,
                         "Accept parameters outside the probabilistic regime");
    add_common(kernel_cmd, kernel_opts);

    // ---- polys ----
    auto* polys_cmd = app.add_subcommand("polys", "Polynomial value matrix on the simplex");
    int polys_n = 0;
    std::vector<std::string> polys_p;
    CommonOptions polys_opts;
    polys_cmd->add_option("--N", polys_n, "Simplex size")->required();
    polys_cmd->add_option("--p", polys_p, "Four rationals p1 p2 p3 p4")->expected(4)->required();
    add_common(polys_cmd, polys_opts);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Exact identity verification");
    verify_cmd->require_subcommand(1);

    auto* eigen_cmd = verify_cmd->add_subcommand("eigen", "K v = lambda v for every frequency state");
    int eigen_n = 0;
    std::vector<std::string> eigen_p, eigen_alpha;
    std::string eigen_alpha1;
    CommonOptions eigen_opts;
    eigen_cmd->add_option("--N", eigen_n, "Simplex size")->required();
    eigen_cmd->add_option("--p", eigen_p, "Four rationals")->expected(4)->required();
    auto* eigen_alpha_opt = eigen_cmd->add_option("--alpha", eigen_alpha, "alpha1 alpha2")->expected(2);
    eigen_cmd->add_option("--alpha1", eigen_alpha1, "alpha1 only; alpha2 derived from the link")
        ->excludes(eigen_alpha_opt);
    add_common(eigen_cmd, eigen_opts);

    auto* orth_cmd = verify_cmd->add_subcommand("orth", "Gram matrix against the trinomial weight");
    int orth_n = 0;
    std::vector<std::string> orth_p;
    CommonOptions orth_opts;
    orth_cmd->add_option("--N", orth_n, "Simplex size")->required();
    orth_cmd->add_option("--p", orth_p, "Four rationals")->expected(4)->required();
    add_common(orth_cmd, orth_opts);

    auto* stat_cmd = verify_cmd->add_subcommand("stationary",
                                                "Does the trinomial weight satisfy pi K = pi?");
    int stat_n = 0;
    std::vector<std::string> stat_p, stat_alpha;
    std::string stat_alpha1;
    CommonOptions stat_opts;
    stat_cmd->add_option("--N", stat_n, "Simplex size")->required();
    stat_cmd->add_option("--p", stat_p, "Four rationals")->expected(4)->required();
    auto* stat_alpha_opt = stat_cmd->add_option("--alpha", stat_alpha, "alpha1 alpha2")->expected(2);
    stat_cmd->add_option("--alpha1", stat_alpha1, "alpha1 only; alpha2 derived from the link")
        ->excludes(stat_alpha_opt);
    add_common(stat_cmd, stat_opts);

    // ---- bispectral ----
    auto* bis_cmd = app.add_subcommand("bispectral", "Frequency-space difference operators");
    bis_cmd->require_subcommand(1);

    auto* solve_cmd = bis_cmd->add_subcommand("solve",
                                              "B = P D P^-1 for multiplication by (p1+p2)x-(p3+p4)y");
    int solve_n = 0;
    std::vector<std::string> solve_p;
    bool solve_layout = false;
    CommonOptions solve_opts;
    solve_cmd->add_option("--N", solve_n, "Simplex size")->required();
    solve_cmd->add_option("--p", solve_p, "Four rationals")->expected(4)->required();
    solve_cmd->add_flag("--paper-layout", solve_layout,
                        "Print the N=5 rows in the named-entry layout");
    add_common(solve_cmd, solve_opts);

    auto* repb_cmd = bis_cmd->add_subcommand("reproduce",
                                             "Compare the computed N=5 operator with the closed-form entry table");
    std::vector<std::string> repb_p;
    CommonOptions repb_opts;
    repb_cmd->add_option("--p", repb_p, "Four rationals")->expected(4)->required();
    add_common(repb_cmd, repb_opts);

    auto* seven_cmd = bis_cmd->add_subcommand("seven",
                                              "Operators for multiplication by x and by y");
    int seven_n = 0;
    std::vector<std::string> seven_p;
    CommonOptions seven_opts;
    seven_cmd->add_option("--N", seven_n, "Simplex size")->required();
    seven_cmd->add_option("--p", seven_p, "Four rationals")->expected(4)->required();
    add_common(seven_cmd, seven_opts);

    // ---- commutant ----
    auto* comm_cmd = app.add_subcommand("commutant", "Local matrices commuting with the kernel");
    comm_cmd->require_subcommand(1);

    auto* disc_cmd = comm_cmd->add_subcommand("discover",
                                              "Basis of {M with pattern : M K = K M}");
    int disc_n = 0;
    std::vector<std::string> disc_alpha, disc_beta;
    std::string disc_pattern = "local";
    bool disc_algebraic = false;
    CommonOptions disc_opts;
    disc_cmd->add_option("--N", disc_n, "Simplex size")->required();
    disc_cmd->add_option("--alpha", disc_alpha, "alpha1 alpha2")->expected(2)->required();
    disc_cmd->add_option("--beta", disc_beta, "beta1 beta2")->expected(2)->required();
    disc_cmd->add_option("--pattern", disc_pattern, "Sparsity pattern of the unknown")
        ->check(CLI::IsMember({"local", "diagonal", "full"}))
        ->capture_default_str();
    disc_cmd->add_flag("--algebraic", disc_algebraic,
                       "Accept parameters outside the probabilistic regime");
    std::vector<std::string> disc_anchors;
    disc_cmd->add_option("--anchors", disc_anchors,
                         "Gauge-fix a representative: row col value row col value")
        ->expected(6);
    add_common(disc_cmd, disc_opts);

    auto* repc_cmd = comm_cmd->add_subcommand("reproduce",
                                              "Compare the gauge-fixed N=3 commutant with the closed-form table");
    std::vector<std::string> repc_alpha, repc_beta;
    CommonOptions repc_opts;
    repc_cmd->add_option("--alpha", repc_alpha, "alpha1 alpha2")->expected(2)->required();
    repc_cmd->add_option("--beta", repc_beta, "beta1 beta2")->expected(2)->required();
    add_common(repc_cmd, repc_opts);

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo run of the three-toss chain");
    int sim_n = 0;
    std::vector<std::string> sim_alpha, sim_beta;
    std::uint64_t sim_steps = 0;
    std::uint64_t sim_seed = 1;
    std::vector<int> sim_start{0, 0};
    bool sim_chi = false;
    std::uint64_t sim_min_visits = 1000;
    double sim_significance = 0.001;
    std::string sim_counts_csv;
    CommonOptions sim_opts;
    sim_cmd->add_option("--N", sim_n, "Number of dice")->required();
    sim_cmd->add_option("--alpha", sim_alpha, "alpha1 alpha2")->expected(2)->required();
    sim_cmd->add_option("--beta", sim_beta, "beta1 beta2")->expected(2)->required();
    sim_cmd->add_option("--steps", sim_steps, "Number of chain steps")->required();
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--start", sim_start, "Initial state x y")->expected(2);
    sim_cmd->add_flag("--chi-square", sim_chi, "Per-row chi-square against the exact kernel");
    sim_cmd->add_option("--min-visits", sim_min_visits, "Minimum visits for a row to be tested")
        ->capture_default_str();
    sim_cmd->add_option("--significance", sim_significance, "Chi-square significance level")
        ->capture_default_str();
    sim_cmd->add_option("--counts-csv", sim_counts_csv, "Write transition counts CSV here");
    add_common(sim_cmd, sim_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the diagnostic naming the offending flag
        return kExitUsage;
    }

    // ---- dispatch ----
    if (*params_cmd) {
        const ParamSet p = parse_params(params_p);
        json j{{"kind", "derived_params"},
               {"mapped", to_json(derive_mapped(p))},
               {"weight", to_json(derive_weight(p))},
               {"generic", is_generic(p)}};
        if (!params_alpha.empty() || !params_alpha1.empty()) {
            auto [a1, a2] = resolve_alphas(p, params_alpha, params_alpha1);
            auto [b1, b2] = compatible_beta(p, a1, a2);
            j["compatible"] = json{{"alpha1", to_string(a1)}, {"alpha2", to_string(a2)},
                                   {"beta1", to_string(b1)}, {"beta2", to_string(b2)},
                                   {"alpha_linked", a2 == compatible_alpha2(p, a1)}};
        }
        emit_json(j, params_opts);
        return kExitPass;
    }

    if (*kernel_cmd) {
        const ChainParams cp{kernel_n,
                             parse_rational(kernel_alpha[0]), parse_rational(kernel_alpha[1]),
                             parse_rational(kernel_beta[0]), parse_rational(kernel_beta[1])};
        const KernelMatrix kernel = build_kernel(cp, kernel_algebraic);
        const StateSpace space(cp.N);
        json j = matrix_to_json(kernel.K, space, space);
        j["kind"] = "kernel";
        j["chain_params"] = to_json(cp);
        emit_matrix(kernel.K, j, kernel_opts);
        return kExitPass;
    }

    if (*polys_cmd) {
        const ParamSet p = parse_params(polys_p);
        const PolyValueMatrix poly = build_poly_matrix(polys_n, p);
        const StateSpace space(polys_n);
        json j = matrix_to_json(poly.values, space, space);
        j["kind"] = "poly_values";
        emit_matrix(poly.values, j, polys_opts);
        return kExitPass;
    }

    if (*eigen_cmd) {
        const ParamSet p = parse_params(eigen_p);
        if (eigen_alpha.empty() && eigen_alpha1.empty()) {
            throw CLI::RequiredError("--alpha or --alpha1");
        }
        auto [a1, a2] = resolve_alphas(p, eigen_alpha, eigen_alpha1);
        const EigenReport report = verify_eigen(eigen_n, p, a1, a2);
        emit_json(to_json(report), eigen_opts);
        return report.pass ? kExitPass : kExitVerificationFailure;
    }

    if (*orth_cmd) {
        const ParamSet p = parse_params(orth_p);
        const GramReport report = verify_orthogonality(orth_n, p);
        emit_json(to_json(report, StateSpace(orth_n)), orth_opts);
        return report.offdiagonal_zero ? kExitPass : kExitVerificationFailure;
    }

    if (*stat_cmd) {
        const ParamSet p = parse_params(stat_p);
        if (stat_alpha.empty() && stat_alpha1.empty()) {
            throw CLI::RequiredError("--alpha or --alpha1");
        }
        auto [a1, a2] = resolve_alphas(p, stat_alpha, stat_alpha1);
        const StationarityReport report = verify_stationarity(stat_n, p, a1, a2);
        emit_json(to_json(report, StateSpace(stat_n)), stat_opts);
        // The run records a definitive finding either way; it does not fail.
        return kExitPass;
    }

    if (*solve_cmd) {
        const ParamSet p = parse_params(solve_p);
        const PolyValueMatrix poly = build_poly_matrix(solve_n, p);
        const StateSpace space(solve_n);
        const Matrix d = multiplication_diagonal(space, p.p1 + p.p2, -(p.p3 + p.p4));
        const BispectralOperator op = conjugate_operator(poly, d);
        if (solve_layout) {
            if (solve_n != 5) {
                throw CLI::ValidationError("--paper-layout",
                                           "named-entry layout is defined for N=5 only");
            }
            write_output(n5_layout(op.B), solve_opts.output);
            return kExitPass;
        }
        json j = matrix_to_json(op.B, space, space);
        j["kind"] = "frequency_operator";
        j["stencil"] = to_json(op.stencil);
        emit_matrix(op.B, j, solve_opts);
        return kExitPass;
    }

    if (*repb_cmd) {
        const OperatorComparison cmp = compare_operator_n5(parse_params(repb_p));
        emit_json(to_json(cmp), repb_opts);
        return cmp.match ? kExitPass : kExitVerificationFailure;
    }

    if (*seven_cmd) {
        const ParamSet p = parse_params(seven_p);
        const PolyValueMatrix poly = build_poly_matrix(seven_n, p);
        const SevenPointOperators ops = seven_point_operators(poly);
        emit_json(to_json(ops, StateSpace(seven_n)), seven_opts);
        return kExitPass;
    }

    if (*disc_cmd) {
        const ChainParams cp{disc_n,
                             parse_rational(disc_alpha[0]), parse_rational(disc_alpha[1]),
                             parse_rational(disc_beta[0]), parse_rational(disc_beta[1])};
        const KernelMatrix kernel = build_kernel(cp, disc_algebraic);
        const StateSpace space(cp.N);
        const CommutantBasis basis = discover_commutant(kernel, named_pattern(disc_pattern, space));
        json j = to_json(basis);
        if (!disc_anchors.empty()) {
            const GaugeAnchor first{parse_index(disc_anchors[0]), parse_index(disc_anchors[1]),
                                    parse_rational(disc_anchors[2])};
            const GaugeAnchor second{parse_index(disc_anchors[3]), parse_index(disc_anchors[4]),
                                     parse_rational(disc_anchors[5])};
            bool fixed = false;
            for (const Matrix& candidate : basis.basis) {
                try {
                    j["normalized"] = matrix_to_json(normalize_gauge(candidate, first, second));
                    fixed = true;
                    break;
                } catch (const GaugeUnsolvable&) {
                }
            }
            if (!fixed) {
                throw GaugeUnsolvable("no basis element meets the requested anchors");
            }
        }
        emit_json(j, disc_opts);
        return kExitPass;
    }

    if (*repc_cmd) {
        const CommutantComparison cmp = compare_commutant_n3(
            parse_rational(repc_alpha[0]), parse_rational(repc_alpha[1]),
            parse_rational(repc_beta[0]), parse_rational(repc_beta[1]));
        emit_json(to_json(cmp), repc_opts);
        return cmp.match ? kExitPass : kExitVerificationFailure;
    }

    if (*sim_cmd) {
        const ChainParams cp{sim_n,
                             parse_rational(sim_alpha[0]), parse_rational(sim_alpha[1]),
                             parse_rational(sim_beta[0]), parse_rational(sim_beta[1])};
        const ChainState s0{sim_start[0], sim_start[1]};
        const TransitionCounts tc = run_chain(s0, sim_steps, cp, sim_seed);
        json j = summary_json(tc, cp, sim_seed, s0);

        bool pass = true;
        if (sim_chi) {
            const KernelMatrix kernel = build_kernel(cp);
            const ChiSquareReport report =
                chi_square_vs_kernel(tc, kernel, sim_min_visits, sim_significance);
            j["chi_square"] = to_json(report);
            pass = report.all_pass;
        }
        if (!sim_counts_csv.empty()) {
            write_output(counts_to_csv(tc), sim_counts_csv);
        }
        if (sim_opts.format == "csv" && sim_counts_csv.empty()) {
            write_output(counts_to_csv(tc), sim_opts.output);
        } else {
            emit_json(j, sim_opts);
        }
        return pass ? kExitPass : kExitVerificationFailure;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateParams& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InvalidSize& e) {
        std::cerr << "invalid size: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfSimplex& e) {
        std::cerr << "state outside the simplex: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

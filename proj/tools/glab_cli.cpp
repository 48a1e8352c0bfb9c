// glab: command-line front door for the Hermite projection game laboratory.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "glab/glab.hpp"
#include "glab/serialization.hpp"

namespace {

using namespace glab;
using nlohmann::json;

int emit_reports(const std::vector<VerificationReport>& reports, bool as_json) {
    if (as_json) {
        std::cout << json(reports).dump(2) << "\n";
    } else {
        print_table(std::cout, reports);
    }
    return all_passed(reports) ? 0 : 1;
}

std::vector<VerificationReport> constants_reports() {
    const DrConstants& k = dr_constants();
    std::vector<VerificationReport> rows;
    rows.push_back(make_check("c_star", k.c_star, 0.25573, 5e-5, Comparison::two_sided,
                              "lem:unique-c"));
    rows.push_back(make_check("lambda_star", k.lambda_star, 0.19748, 5e-5,
                              Comparison::two_sided, "lem:unique-c"));
    rows.push_back(
        make_check("c_plus", k.c_plus, 2.0582, 1e-3, Comparison::two_sided, "fig:f"));
    rows.push_back(
        make_check("val_dr", k.val_dr, 0.4786, 1e-4, Comparison::two_sided, "thm:new-lb"));
    rows.push_back(
        make_check("k_dr", k.k_dr, 1.6769, 1e-4, Comparison::two_sided, "thm:new-lb"));
    rows.push_back(make_check("h_gap_at_c_star", h_gap(k.c_star), 0.0, 1e-9,
                              Comparison::two_sided, "lem:unique-c"));

    const StepFunction1D u = strip_complement_sign(k.c_star);
    const double m3u = moment(u, 3);
    rows.push_back(make_check("pi3_u_norm_sq", m3u * m3u / 6.0, 0.0868, 2e-4,
                              Comparison::two_sided, "eq:u-lb"));

    const double strip_mass = 2.0 * gauss_cdf(k.c_star) - 1.0;
    rows.push_back(make_check("strip_mass", strip_mass, 0.20184, 5e-5, Comparison::two_sided,
                              "lem:he3-lower-bound"));
    rows.push_back(make_check("strip_mass_sq", strip_mass * strip_mass, 0.040745, 0.0,
                              Comparison::one_sided_le, "eq:h-ub"));

    StepFunction1D mid_seed({-k.c_star, -0.1, 0.0, 0.1, k.c_star}, {0, -1, 1, -1, 1, 0});
    const double b_mid = solve_balanced_breakpoint(mid_seed, 3, true);
    rows.push_back(make_check("fig1_mid_breakpoint", b_mid, 0.18009, 2e-4,
                              Comparison::two_sided, "fig:squarewave"));

    const double b1 = 0.12708;
    StepFunction1D right_seed({-k.c_star, -0.2, -b1, 0.0, b1, 0.2, k.c_star},
                              {0, -1, 1, -1, 1, -1, 1, 0});
    const double b_outer = solve_balanced_breakpoint(right_seed, 1, true);
    rows.push_back(make_check("fig1_outer_breakpoint", b_outer, 0.22101, 2e-4,
                              Comparison::two_sided, "fig:squarewave"));

    rows.push_back(make_check("f_at_zero", f_objective(0.0, k.lambda_star), 0.4391, 1e-4,
                              Comparison::two_sided, "lem:calculus-stability"));
    rows.push_back(make_check("f_at_half", f_objective(0.5, k.lambda_star), 0.4496, 1e-4,
                              Comparison::two_sided, "lem:calculus-stability"));
    return rows;
}

std::vector<VerificationReport> lemma_reports(std::uint64_t seed, int pairs, int sets,
                                              int triples) {
    const DrConstants& k = dr_constants();
    std::vector<VerificationReport> rows;

    // degree-3 gap over random balanced strip pairs
    {
        RngStream rng = RngStream::substream(seed, 1);
        double min_gap = std::numeric_limits<double>::infinity();
        double max_h3 = 0.0;
        for (int i = 0; i < pairs; ++i) {
            const StepFunction1D h = random_balanced_pattern(rng, 8, k.c_star);
            const double m3 = moment(h, 3);
            max_h3 = std::max(max_h3, m3 * m3 / 6.0);
            const auto [f, g] = build_strip_pair(h, k.c_star);
            min_gap = std::min(min_gap, pi3_gap(f, g, k.c_star));
        }
        rows.push_back(make_check("pi3_gap_min", min_gap, 0.046, 0.0, Comparison::one_sided_ge,
                                  "lem:he3-lower-bound"));
        rows.push_back(make_check("pi3_h_norm_max", max_h3, 0.040745, 0.0,
                                  Comparison::one_sided_le, "eq:h-ub"));
    }

    // bathtub stability over random interval unions
    {
        RngStream rng = RngStream::substream(seed, 2);
        double worst_ratio = 0.0;
        for (int i = 0; i < sets; ++i) {
            const int m = rng.uniform_int(1, 6);
            std::vector<IntervalUnion::Interval> ivs;
            for (int j = 0; j < m; ++j) {
                const double a = rng.uniform(-3.5, 3.5);
                ivs.push_back({a, a + rng.uniform(0.01, 1.5)});
            }
            const BathtubCheck check = bathtub_check(IntervalUnion(std::move(ivs)));
            if (check.eps > 1e-15)
                worst_ratio = std::max(worst_ratio, check.sym_diff / std::sqrt(check.eps));
            else if (check.sym_diff > 1e-7)
                worst_ratio = std::numeric_limits<double>::infinity();
        }
        rows.push_back(make_check("bathtub_worst_ratio", worst_ratio, 4.0, 0.0,
                                  Comparison::one_sided_le, "lem:bathtub-stability"));
    }

    // calculus stability on the eta grid
    {
        const auto scan = calculus_stability_scan({1e-5, 1e-4, 1e-3, 9e-3});
        double worst = 0.0;
        for (const auto& row : scan) worst = std::max(worst, row.worst_dist / row.bound);
        rows.push_back(make_check("calculus_stability_worst_ratio", worst, 1.0, 0.0,
                                  Comparison::one_sided_le, "lem:calculus-stability"));
    }

    // value stability over random triples
    {
        RngStream rng = RngStream::substream(seed, 3);
        const GameCoefficients game = dr_game();
        double worst_excess = -std::numeric_limits<double>::infinity();
        const auto random_sign = [&rng]() {
            const int m = rng.uniform_int(1, 5);
            std::vector<double> bp(static_cast<std::size_t>(m));
            for (auto& b : bp) b = rng.uniform(-2.5, 2.5);
            return SignFunction1D(rng.sign(), bp);
        };
        for (int i = 0; i < triples; ++i) {
            const auto [lhs, rhs] = value_stability_gap(game, random_sign(), random_sign(),
                                                        random_sign());
            worst_excess = std::max(worst_excess, lhs - rhs);
        }
        rows.push_back(make_check("value_stability_worst_excess", worst_excess, 0.0, 1e-12,
                                  Comparison::one_sided_le, "lem:value-stability"));
    }

    // near-optimizer audit: jittered strip pairs stay within 6 eta^{1/4}
    {
        RngStream rng = RngStream::substream(seed, 4);
        double worst_ratio = 0.0;
        for (int i = 0; i < 50; ++i) {
            const StepFunction1D h = random_balanced_pattern(rng, 4, k.c_star);
            const auto [f, g] = build_strip_pair(h, k.c_star);
            auto jitter = [&](const SignFunction1D& s) {
                std::vector<double> bp = s.breakpoints();
                for (auto& b : bp) b += rng.uniform(-0.02, 0.02);
                return SignFunction1D(s.leading_sign(), bp);
            };
            const SignFunction1D fj = jitter(f);
            const SignFunction1D gj = jitter(g);
            const double eta = std::max(k.val_dr - val_1d(dr_game(), fj, gj), 0.0) + 1e-15;
            const StabilityAudit audit = stability_audit(fj, gj, eta);
            if (audit.bound > 0.0)
                worst_ratio = std::max(
                    worst_ratio, std::max(audit.dist_f, audit.dist_g) / audit.bound);
        }
        rows.push_back(make_check("dr_robust_worst_ratio", worst_ratio, 1.0, 0.0,
                                  Comparison::one_sided_le, "lem:dr-robust"));
    }
    return rows;
}

int run_landscape(double c_min, double c_max, int steps, const std::string& out_path) {
    const auto rows = landscape(c_min, c_max, steps);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "landscape: cannot open " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    char line[128];
    *os << "C,F,Fprime\n";
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%.6g,%.6g,%.6g\n", row.c, row.f, row.f_prime);
        *os << line;
    }
    return 0;
}

int run_optimize(double eps, int restarts, int breakpoints, std::uint64_t seed,
                 const std::string& out_path, const std::string& trace_path, bool as_json) {
    SearchConfig cfg;
    cfg.restarts = restarts;
    cfg.max_breakpoints_per_function = breakpoints;
    cfg.seed = seed;
    const SearchResult result = optimize(perturbed_game(eps), cfg);
    json doc = search_result_json(result, cfg);
    doc["eps"] = eps;
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "optimize: cannot open " << out_path << "\n";
            return 2;
        }
        file << doc.dump(2) << "\n";
    }
    if (!trace_path.empty()) {
        std::ofstream file(trace_path);
        if (!file) {
            std::cerr << "optimize: cannot open " << trace_path << "\n";
            return 2;
        }
        char line[96];
        file << "restart,iteration,val\n";
        for (const auto& tp : result.trace) {
            std::snprintf(line, sizeof(line), "%d,%d,%.17g\n", tp.restart, tp.iteration, tp.val);
            file << line;
        }
    }
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << "best_val = " << std::setprecision(12) << result.best_val
                  << (result.converged ? " (converged)" : " (sweep cap reached)") << "\n";
    return 0;
}

int run_discretize(int m, int cap, double eps, std::uint64_t seed, const std::string& out_path) {
    const DiscreteGame dg = build(perturbed_game(eps), m, cap);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "discretize: cannot open " << out_path << "\n";
            return 2;
        }
        char num[32];
        file << m << "\n";
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                std::snprintf(num, sizeof(num), "%.17g", dg.at(i, j));
                file << num << (j + 1 == m ? "" : " ");
            }
            file << "\n";
        }
    }
    json doc{{"m", m}, {"cap", cap}, {"eps", eps}};
    if (m <= 24) {
        const BruteResult brute = brute_val(dg);
        const double bca = bca_sdp(dg, 8, 200, seed, &brute.argmax_f, nullptr);
        doc["brute_val"] = brute.value;
        doc["bca_sdp"] = bca;
        doc["krivine_ceiling"] = 1.7823 * brute.value;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"glab: numerical laboratory for Hermite projection games"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of tables");

    auto* cmd_constants = app.add_subcommand("constants", "verify the derived constants");

    std::uint64_t seed = 0;
    int pairs = 1000, sets = 500, triples = 200;
    auto* cmd_lemmas = app.add_subcommand("verify-lemmas", "run the lemma property sweeps");
    cmd_lemmas->add_option("--seed", seed, "sweep seed")->envname("GLAB_SEED");
    cmd_lemmas->add_option("--pairs", pairs, "random strip pairs for the degree-3 sweep");
    cmd_lemmas->add_option("--sets", sets, "random interval unions for the bathtub sweep");
    cmd_lemmas->add_option("--triples", triples, "random triples for value stability");

    double c_min = 0.0, c_max = 4.0;
    int steps = 401;
    std::string out_path;
    auto* cmd_landscape = app.add_subcommand("landscape", "export the objective landscape CSV");
    cmd_landscape->add_option("--min", c_min, "left endpoint");
    cmd_landscape->add_option("--max", c_max, "right endpoint");
    cmd_landscape->add_option("--steps", steps, "grid size (>= 2)");
    cmd_landscape->add_option("--out", out_path, "output file (default: stdout)");

    double eps = 0.0;
    int restarts = 40, breakpoints = 6;
    std::uint64_t opt_seed = 0;
    std::string trace_path;
    auto* cmd_optimize = app.add_subcommand("optimize", "search for high-value sign pairs");
    cmd_optimize->add_option("--eps", eps, "perturbation strength");
    cmd_optimize->add_option("--restarts", restarts, "number of restarts");
    cmd_optimize->add_option("--breakpoints", breakpoints, "max breakpoints per function");
    cmd_optimize->add_option("--seed", opt_seed, "search seed")->envname("GLAB_SEED");
    cmd_optimize->add_option("--out", out_path, "result JSON file");
    cmd_optimize->add_option("--trace-out", trace_path, "trace CSV file");

    int m = 20, cap = 12;
    double d_eps = 0.0;
    std::uint64_t d_seed = 0;
    std::string d_out;
    auto* cmd_discretize = app.add_subcommand("discretize", "build and solve a finite model");
    cmd_discretize->add_option("--m", m, "quadrature size (4..64)");
    cmd_discretize->add_option("--cap", cap, "degree cap (< m)");
    cmd_discretize->add_option("--eps", d_eps, "perturbation strength");
    cmd_discretize->add_option("--seed", d_seed, "ascent seed")->envname("GLAB_SEED");
    cmd_discretize->add_option("--out", d_out, "matrix output file");

    int w_n = 400, w_k = 3;
    long w_samples = 100000;
    double w_eps = 0.0;
    std::uint64_t w_seed = 0;
    auto* cmd_witness = app.add_subcommand("witness", "Monte Carlo witness statistics");
    cmd_witness->add_option("--n", w_n, "dimension");
    cmd_witness->add_option("--k", w_k, "witness degree (1 or 3)");
    cmd_witness->add_option("--samples", w_samples, "sample count");
    cmd_witness->add_option("--eps", w_eps, "perturbation strength");
    cmd_witness->add_option("--seed", w_seed, "sampling seed")->envname("GLAB_SEED");

    int r_n = 5, r_k = 3;
    long r_samples = 200000;
    std::uint64_t r_seed = 0;
    auto* cmd_rotation =
        app.add_subcommand("rotation", "Monte Carlo rotation-invariance check");
    cmd_rotation->add_option("--n", r_n, "dimension (2..16)");
    cmd_rotation->add_option("--k", r_k, "degree (1 or 3)");
    cmd_rotation->add_option("--samples", r_samples, "sample count");
    cmd_rotation->add_option("--seed", r_seed, "sampling seed")->envname("GLAB_SEED");

    double bc_eps = 4e-11;
    auto* cmd_chain = app.add_subcommand("bound-chain", "evaluate the lower-bound chain");
    cmd_chain->add_option("--eps", bc_eps, "perturbation strength (positive gap regime)");

    // let --json appear after the subcommand as well
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_constants->parsed()) return emit_reports(constants_reports(), as_json);
        if (cmd_lemmas->parsed())
            return emit_reports(lemma_reports(seed, pairs, sets, triples), as_json);
        if (cmd_landscape->parsed()) return run_landscape(c_min, c_max, steps, out_path);
        if (cmd_optimize->parsed())
            return run_optimize(eps, restarts, breakpoints, opt_seed, out_path, trace_path,
                                as_json);
        if (cmd_discretize->parsed()) return run_discretize(m, cap, d_eps, d_seed, d_out);
        if (cmd_witness->parsed()) {
            const WitnessEstimate est =
                witness_mc(w_n, w_k, perturbed_game(w_eps), w_samples, w_seed);
            std::cout << nlohmann::json(est).dump(2) << "\n";
            return 0;
        }
        if (cmd_rotation->parsed()) {
            const RotationCheck check = rotation_invariance_mc(r_n, r_k, r_samples, r_seed);
            std::cout << nlohmann::json(check).dump(2) << "\n";
            return check.agrees() ? 0 : 1;
        }
        if (cmd_chain->parsed()) {
            const BoundChainReport report = bound_chain(bc_eps);
            std::cout << nlohmann::json(report).dump(2) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// Command-line front end: generate, solve, estimate and experiment on
// systems of quadratic boolean polynomials.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mqsolve/mqsolve.hpp"

using nlohmann::json;
using namespace mqsolve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitScaleCap = 3;
constexpr int kExitInternal = 4;

std::string solution_string(std::uint64_t point, unsigned n) {
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i)
        if ((point >> i) & 1) s[i] = '1';
    return s;
}

QuadraticSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return parse(in);
}

std::string outcome_name(BranchOutcome o) {
    switch (o) {
    case BranchOutcome::pruned_with_certificate: return "pruned";
    case BranchOutcome::searched: return "searched";
    default: return "inconclusive";
    }
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

json report_json(const BranchReport& rep, SolveMethod method, std::uint64_t seed) {
    json branches = json::array();
    std::uint64_t pruned = 0, searched = 0, inconclusive = 0;
    for (const auto& br : rep.branches) {
        switch (br.outcome) {
        case BranchOutcome::pruned_with_certificate: ++pruned; break;
        case BranchOutcome::searched: ++searched; break;
        default: ++inconclusive; break;
        }
        json b{{"tail", br.tail},
               {"outcome", outcome_name(br.outcome)},
               {"solutions", br.solutions_found},
               {"rows", br.matrix_rows},
               {"cols", br.matrix_cols},
               {"nnz", br.matrix_nnz}};
        if (method == SolveMethod::dense_deterministic) {
            b["rank"] = br.rank;
        } else {
            b["black_box_applies"] = br.black_box_applies;
            b["attempts"] = br.attempts;
        }
        branches.push_back(std::move(b));
    }
    json summary{{"n", rep.n},
                 {"m", rep.m},
                 {"k", rep.k},
                 {"delta", rep.delta},
                 {"d0", rep.d0},
                 {"method", method == SolveMethod::dense_deterministic ? "dense" : "lasvegas"},
                 {"seed", seed},
                 {"pruned", pruned},
                 {"searched", searched},
                 {"inconclusive", inconclusive}};
    if (!rep.branches.empty()) {
        summary["r_mac"] = rep.branches.front().matrix_rows;
        summary["c_mac"] = rep.branches.front().matrix_cols;
    }
    return json{{"summary", std::move(summary)}, {"branches", std::move(branches)}};
}

json estimate_json(const CostEstimate& est) {
    return json{{"n", est.n},
                {"m", est.m},
                {"k", est.k},
                {"alpha", est.alpha},
                {"gamma", est.gamma},
                {"theta", est.theta},
                {"method", cost_method_name(est.method)},
                {"d0", est.d0},
                {"exponent_per_n", est.exponent_per_n},
                {"c_mac", est.c_mac.str()},
                {"r_mac", est.r_mac.str()},
                {"s_mac", est.s_mac.str()},
                {"total_bitops_log2", est.total_bitops_log2}};
}

int run(int argc, char** argv) {
    CLI::App app{"solver and estimators for quadratic boolean systems"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a random system in .anf format");
    unsigned gen_n = 0, gen_m = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "variables")->required()->check(CLI::Range(1u, 4096u));
    gen->add_option("--m", gen_m, "equations")->required()->check(CLI::Range(1u, 8192u));
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");

    // --- solve / sat (shared flags) ---
    struct SolveArgs {
        std::string in;
        std::optional<unsigned> k;
        unsigned delta = 0;
        std::string method = "dense";
        std::optional<unsigned> d0;
        std::uint64_t seed = 1;
        unsigned workers = 1;
        std::string report;
        bool brute = false;
    };
    SolveArgs sa, ta;
    auto add_solve_flags = [](CLI::App* cmd, SolveArgs& args, bool with_brute) {
        cmd->add_option("--in", args.in, ".anf input file")->required();
        cmd->add_option("--k", args.k, "specialized variables (default from the cost model)");
        cmd->add_option("--delta", args.delta, "extra specialized variables");
        cmd->add_option("--method", args.method, "dense | lasvegas")
            ->check(CLI::IsMember({"dense", "lasvegas"}));
        cmd->add_option("--d0", args.d0, "override the Macaulay degree (>= 2)");
        cmd->add_option("--seed", args.seed, "randomness for the lasvegas method");
        cmd->add_option("--workers", args.workers, "branch parallelism")->check(CLI::Range(1u, 256u));
        cmd->add_option("--report", args.report, "write a JSON branch report to this file");
        if (with_brute) cmd->add_flag("--brute", args.brute, "plain exhaustive search instead of the solver");
    };
    auto* solve = app.add_subcommand("solve", "find all solutions of a system");
    add_solve_flags(solve, sa, true);
    auto* sat = app.add_subcommand("sat", "find one solution or report UNSAT");
    add_solve_flags(sat, ta, true);

    // --- estimate ---
    auto* est = app.add_subcommand("estimate", "cost model for given parameters");
    unsigned est_n = 0, est_m = 0;
    double est_theta = 0.0, est_gamma = 0.0;
    bool est_lv = false;
    est->add_option("--n", est_n, "variables")->required()->check(CLI::Range(2u, 8192u));
    est->add_option("--m", est_m, "equations")->required();
    auto* theta_opt = est->add_option("--theta", est_theta, "linear algebra exponent: 3, 2.376 or 2");
    est->add_flag("--lasvegas", est_lv, "use the sparse Las Vegas cost model");
    auto* gamma_opt = est->add_option("--gamma", est_gamma, "fix gamma = 1 - k/n");
    bool est_optimize = false;
    est->add_flag("--optimize", est_optimize, "minimize the concrete cost over every k (default: asymptotic gamma)");

    // --- advise-quad ---
    auto* adv = app.add_subcommand("advise-quad", "minimal n for a security level");
    double adv_bits = 0.0;
    unsigned adv_ratio = 1;
    adv->add_option("--security-bits", adv_bits, "target security 2^T")->required()->check(CLI::Range(64.0, 4096.0));
    adv->add_option("--ratio", adv_ratio, "m = ratio * n")->required()->check(CLI::Range(1u, 4u));

    // --- experiment ---
    auto* exp = app.add_subcommand("experiment", "filtering-quality statistics on random systems");
    unsigned exp_n = 0, exp_m = 0, exp_delta = 0, exp_trials = 100;
    std::optional<unsigned> exp_k;
    double exp_gamma = 0.0;
    std::uint64_t exp_seed = 1;
    std::string exp_csv, exp_json, exp_method = "dense";
    exp->add_option("--n", exp_n, "variables")->required()->check(CLI::Range(2u, 24u));
    exp->add_option("--m", exp_m, "equations")->required();
    auto* exp_gamma_opt = exp->add_option("--gamma", exp_gamma, "gamma = 1 - k/n");
    auto* exp_k_opt = exp->add_option("--k", exp_k, "specialized variables");
    exp->add_option("--delta", exp_delta, "extra specialized variables");
    exp->add_option("--trials", exp_trials, "number of random systems")->check(CLI::Range(1u, 100000u));
    exp->add_option("--seed", exp_seed, "rng seed");
    exp->add_option("--method", exp_method, "dense | lasvegas")->check(CLI::IsMember({"dense", "lasvegas"}));
    exp->add_option("--csv", exp_csv, "write per-trial counts to this file");
    exp->add_option("--json", exp_json, "write the JSON summary to this file too");

    // --- certdeg ---
    auto* cd = app.add_subcommand("certdeg", "smallest degree with an inconsistency certificate");
    std::string cd_in;
    unsigned cd_dmax = 6;
    cd->add_option("--in", cd_in, ".anf input file")->required();
    cd->add_option("--dmax", cd_dmax, "highest degree to try")->check(CLI::Range(2u, 14u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (gen->parsed()) {
        std::string text = serialize(random_system(gen_n, gen_m, gen_seed));
        if (gen_out.empty()) {
            std::cout << text;
        } else {
            write_text(gen_out, text);
        }
        return kExitOk;
    }

    if (solve->parsed() || sat->parsed()) {
        SolveArgs& args = solve->parsed() ? sa : ta;
        QuadraticSystem s = load_system(args.in);
        if (args.brute) {
            SolutionSet sols = exhaustive_search(s);
            if (solve->parsed()) {
                for (std::uint64_t p : sols.points) std::cout << solution_string(p, s.n) << "\n";
            } else if (sols.points.empty()) {
                std::cout << "UNSAT\n";
            } else {
                std::cout << solution_string(sols.points.front(), s.n) << "\n";
            }
            return kExitOk;
        }
        SolveConfig cfg;
        cfg.k = args.k;
        cfg.delta = args.delta;
        cfg.method = args.method == "lasvegas" ? SolveMethod::sparse_lasvegas : SolveMethod::dense_deterministic;
        cfg.d0_override = args.d0;
        cfg.seed = args.seed;
        cfg.workers = args.workers;
        if (solve->parsed()) {
            auto [sols, report] = boolean_solve(s, cfg);
            for (std::uint64_t p : sols.points) std::cout << solution_string(p, s.n) << "\n";
            if (!args.report.empty()) write_text(args.report, report_json(report, cfg.method, cfg.seed).dump(2) + "\n");
        } else {
            auto sol = boolean_solve_sat(s, cfg);
            if (sol) {
                std::cout << solution_string(sol->as_mask(), s.n) << "\n";
            } else {
                std::cout << "UNSAT\n";
            }
        }
        return kExitOk;
    }

    if (est->parsed()) {
        if (est_m < est_n) throw std::invalid_argument("estimate: m >= n required");
        CostMethod method = CostMethod::las_vegas;
        if (theta_opt->count() > 0) {
            if (est_lv) throw std::invalid_argument("estimate: pass either --theta or --lasvegas");
            if (est_theta == 3.0) {
                method = CostMethod::det3;
            } else if (est_theta == 2.376) {
                method = CostMethod::det2376;
            } else if (est_theta == 2.0) {
                method = CostMethod::las_vegas;
            } else {
                throw std::invalid_argument("estimate: theta must be 3, 2.376 or 2");
            }
        } else if (!est_lv) {
            throw std::invalid_argument("estimate: pass --theta or --lasvegas");
        }
        CostEstimate estimate;
        if (gamma_opt->count() > 0) {
            if (est_optimize) throw std::invalid_argument("estimate: pass either --gamma or --optimize");
            if (!(est_gamma > 0.0) || est_gamma > 1.0) throw std::invalid_argument("estimate: gamma in (0,1]");
            auto k = static_cast<unsigned>(std::lround(est_n * (1.0 - est_gamma)));
            if (k >= est_n) k = est_n - 1;
            estimate = concrete_cost(est_n, est_m, k, method);
        } else if (est_optimize) {
            estimate = best_cost_over_k(est_n, est_m, method);
        } else {
            double gamma = optimal_gamma(static_cast<double>(est_m) / est_n, cost_theta(method));
            auto k = static_cast<unsigned>(std::ceil(est_n * (1.0 - gamma) - 1e-9));
            if (k >= est_n) k = est_n - 1;
            estimate = concrete_cost(est_n, est_m, k, method);
        }
        json out = estimate_json(estimate);
        out["fast_exhaustive_bitops_log2"] = fast_exhaustive_bitops_log2(est_n);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    if (adv->parsed()) {
        unsigned minimal = quad_min_n(adv_bits, adv_ratio);
        json out{{"security_bits", adv_bits},
                 {"ratio", adv_ratio},
                 {"method", cost_method_name(CostMethod::las_vegas)},
                 {"minimal_n", minimal},
                 {"asymptotic_rule_of_thumb", static_cast<unsigned>(std::ceil(adv_bits / 0.7911))}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    if (exp->parsed()) {
        if (exp_m < exp_n) throw std::invalid_argument("experiment: m >= n required");
        unsigned k;
        if (exp_k_opt->count() > 0) {
            k = *exp_k;
        } else if (exp_gamma_opt->count() > 0) {
            if (!(exp_gamma > 0.0) || exp_gamma > 1.0) throw std::invalid_argument("experiment: gamma in (0,1]");
            k = static_cast<unsigned>(std::ceil(exp_n * (1.0 - exp_gamma) - 1e-9));
        } else {
            throw std::invalid_argument("experiment: pass --k or --gamma");
        }
        SolveMethod method =
            exp_method == "lasvegas" ? SolveMethod::sparse_lasvegas : SolveMethod::dense_deterministic;
        FilterStats st = filtering_experiment(exp_n, exp_m, k, exp_delta, exp_trials, exp_seed, method);
        if (!exp_csv.empty()) {
            std::ostringstream os;
            write_filter_csv(os, st);
            write_text(exp_csv, os.str());
        }
        json out{{"n", st.n},
                 {"m", st.m},
                 {"k", st.k},
                 {"delta", st.delta},
                 {"trials", st.trials},
                 {"tails_per_trial", st.tails_per_trial},
                 {"avg_unpruned", st.avg_unpruned},
                 {"max_unpruned", st.max_unpruned},
                 {"pruned_fraction", st.pruned_fraction},
                 {"threshold", st.threshold},
                 {"strong_sr_fraction", st.strong_sr_fraction}};
        std::string text = out.dump(2) + "\n";
        std::cout << text;
        if (!exp_json.empty()) write_text(exp_json, text);
        return kExitOk;
    }

    if (cd->parsed()) {
        QuadraticSystem s = load_system(cd_in);
        auto deg = certificate_degree(s, cd_dmax);
        if (deg) {
            std::cout << *deg << "\n";
        } else {
            std::cout << "none\n";
        }
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ScaleCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScaleCap;
    } catch (const AnfParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

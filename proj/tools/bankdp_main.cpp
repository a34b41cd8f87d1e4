// bankdp: deterministic bank profit-maximization toolkit.
//
// Subcommands: validate, gen, solve, simulate, compare, report, values.
// Exit codes: 0 success, 1 validation failure or infeasible simulation,
// 2 usage error, 3 capacity/bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bankdp/bankdp.hpp"

namespace {

using namespace bankdp;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path);
    out << content;
}

Scenario load_scenario(const std::string& path) {
    Scenario sc = parse_scenario(read_file(path));
    auto report = validate_scenario(sc);
    if (!report.empty()) {
        for (const Violation& v : report)
            std::cerr << path << ": " << v.path << ": " << v.message << "\n";
        throw Error("invalid scenario: " + path);
    }
    return sc;
}

std::string money_str(Money m, int exponent) {
    return std::to_string(m.minor()) + " (" + m.to_decimal(exponent) + ")";
}

std::uint64_t node_bound_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("BANKDP_MAX_NODES"))
        return std::strtoull(env, nullptr, 10);
    return fallback;
}

struct SolveArgs {
    std::string scenario_path;
    std::string method = "dp";
    std::string out;
    bool no_memo = false;
    std::uint64_t max_nodes = SolveOptions{}.max_nodes;
};

OptimalPlan run_solver(const Scenario& sc, const SolveArgs& args) {
    if (args.method == "oracle") return brute_force_solve(sc);
    SolveOptions opts;
    opts.use_memo = !args.no_memo;
    opts.max_nodes = node_bound_from_env(args.max_nodes);
    return solve(sc, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic multi-period bank profit maximization"};
    app.require_subcommand(1);

    // validate
    std::string validate_path;
    auto* cmd_validate = app.add_subcommand("validate", "check a scenario file");
    cmd_validate->add_option("scenario", validate_path)->required();

    // gen
    GeneratorConfig gen_cfg;
    gen_cfg.rate_params = {5.0, 3.0, Money::from_minor(100000), 4.0, Money::from_minor(100000)};
    std::int64_t gen_pmin = 1000, gen_pmax = 20000, gen_b1 = 100000, gen_s = 100000,
                 gen_capital = 50000;
    std::string gen_out;
    auto* cmd_gen = app.add_subcommand("gen", "generate a seeded scenario");
    cmd_gen->add_option("--periods", gen_cfg.periods);
    cmd_gen->add_option("--loans", gen_cfg.loans_per_period);
    cmd_gen->add_option("--deposits", gen_cfg.deposits_per_period);
    cmd_gen->add_option("--seed", gen_cfg.seed);
    cmd_gen->add_option("--principal-min", gen_pmin);
    cmd_gen->add_option("--principal-max", gen_pmax);
    cmd_gen->add_option("--term-min", gen_cfg.term_min);
    cmd_gen->add_option("--term-max", gen_cfg.term_max);
    cmd_gen->add_option("--a0", gen_cfg.rate_params.a0);
    cmd_gen->add_option("--c0", gen_cfg.rate_params.c0);
    cmd_gen->add_option("--b1", gen_b1);
    cmd_gen->add_option("--b2", gen_cfg.rate_params.b2);
    cmd_gen->add_option("--s", gen_s);
    cmd_gen->add_option("--capital", gen_capital);
    cmd_gen->add_option("--out", gen_out);

    // solve
    SolveArgs solve_args;
    auto* cmd_solve = app.add_subcommand("solve", "compute the optimal plan");
    cmd_solve->add_option("scenario", solve_args.scenario_path)->required();
    cmd_solve->add_option("--method", solve_args.method)
        ->check(CLI::IsMember({"dp", "oracle"}));
    cmd_solve->add_option("--out", solve_args.out);
    cmd_solve->add_flag("--no-memo", solve_args.no_memo);
    cmd_solve->add_option("--max-nodes", solve_args.max_nodes);

    // simulate
    std::string sim_scenario, sim_plan;
    auto* cmd_sim = app.add_subcommand("simulate", "replay a plan's policy");
    cmd_sim->add_option("scenario", sim_scenario)->required();
    cmd_sim->add_option("--plan", sim_plan)->required();

    // compare
    std::string cmp_scenario;
    auto* cmd_cmp = app.add_subcommand("compare", "run dp and oracle, compare plans");
    cmd_cmp->add_option("scenario", cmp_scenario)->required();

    // report
    std::string rep_plan, rep_format = "csv", rep_out;
    auto* cmd_rep = app.add_subcommand("report", "emit a plan as csv or json");
    cmd_rep->add_option("plan", rep_plan)->required();
    cmd_rep->add_option("--format", rep_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_rep->add_option("--out", rep_out);

    // values
    std::string val_scenario, val_capitals;
    auto* cmd_val = app.add_subcommand("values", "value function over a capital grid");
    cmd_val->add_option("--scenario", val_scenario)->required();
    cmd_val->add_option("--capitals", val_capitals, "comma-separated minor-unit amounts")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_validate) {
            Scenario sc = parse_scenario(read_file(validate_path));
            auto report = validate_scenario(sc);
            if (report.empty()) {
                std::cout << "valid\n";
                return 0;
            }
            for (const Violation& v : report)
                std::cout << v.path << ": " << v.message << "\n";
            return 1;
        }

        if (*cmd_gen) {
            gen_cfg.principal_min = Money::from_minor(gen_pmin);
            gen_cfg.principal_max = Money::from_minor(gen_pmax);
            gen_cfg.rate_params.b1 = Money::from_minor(gen_b1);
            gen_cfg.rate_params.s = Money::from_minor(gen_s);
            gen_cfg.initial_capital = Money::from_minor(gen_capital);
            write_output(gen_out, write_scenario(generate_scenario(gen_cfg)));
            return 0;
        }

        if (*cmd_solve) {
            Scenario sc = load_scenario(solve_args.scenario_path);
            OptimalPlan plan = run_solver(sc, solve_args);
            write_output(solve_args.out, write_plan(plan));
            std::cerr << "value_minor=" << money_str(plan.value, sc.currency_exponent)
                      << "\n";
            return 0;
        }

        if (*cmd_sim) {
            Scenario sc = load_scenario(sim_scenario);
            PlanDoc doc = parse_plan(read_file(sim_plan));
            Policy policy = policy_from_accepted(sc, doc.policy);
            Trajectory traj = simulate_policy(sc, policy, build_rate_table(sc));
            if (!traj.feasible) {
                std::cerr << "infeasible at period " << traj.violation->period << " ("
                          << constraint_name(traj.violation->constraint) << ")\n";
                return 1;
            }
            std::cout << write_report_csv(traj.records);
            std::cerr << "final_profit_minor="
                      << money_str(traj.final_profit(), sc.currency_exponent) << "\n";
            return 0;
        }

        if (*cmd_cmp) {
            Scenario sc = load_scenario(cmp_scenario);
            RateTable table = build_rate_table(sc);
            SolveOptions opts;
            opts.max_nodes = node_bound_from_env(opts.max_nodes);
            PlanComparison cmp = compare_plans(solve(sc, table, opts),
                                               brute_force_solve(sc, table));
            std::cout << cmp.to_string() << "\n";
            return cmp.equal() ? 0 : 1;
        }

        if (*cmd_rep) {
            PlanDoc doc = parse_plan(read_file(rep_plan));
            if (rep_format == "csv") {
                write_output(rep_out, write_report_csv(doc.trajectory));
            } else {
                // re-serialize the parsed document for stable field order
                OptimalPlan plan;
                plan.value = doc.value;
                plan.stats = doc.stats;
                plan.trajectory.records = doc.trajectory;
                plan.trajectory.feasible = true;
                for (const auto& [period, ids] : doc.policy) {
                    Decision d;
                    d.period = period;
                    for (const std::string& id : ids) d.bits.push_back({id, true});
                    plan.policy.decisions.push_back(std::move(d));
                }
                write_output(rep_out, write_plan(plan));
            }
            return 0;
        }

        if (*cmd_val) {
            Scenario sc = load_scenario(val_scenario);
            std::vector<Money> capitals;
            std::stringstream ss(val_capitals);
            std::string tok;
            while (std::getline(ss, tok, ','))
                capitals.push_back(Money::from_minor(std::stoll(tok)));
            SolveOptions opts;
            opts.max_nodes = node_bound_from_env(opts.max_nodes);
            std::cout << "capital_minor,value_minor\n";
            for (const auto& [w0, v] : value_function(sc, capitals, opts))
                std::cout << w0.minor() << "," << v.minor() << "\n";
            return 0;
        }
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

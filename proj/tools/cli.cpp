#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "detineq/error.hpp"
#include "detineq/inequality.hpp"
#include "detineq/instance_io.hpp"
#include "detineq/instances.hpp"
#include "detineq/majorization.hpp"
#include "detineq/precoder.hpp"
#include "detineq/text_format.hpp"

namespace detineq::cli {

namespace {

// Thrown for I/O failures so they share the input-error exit path.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t dim = 4;
    std::string input_path;
    std::string output_path;
    std::optional<double> tol;
    std::string kind = "theorem1";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw InputError("error reading '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw InputError("error writing '" + path + "'");
}

// Emits to --out when given, otherwise to the report stream.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty())
        out << text;
    else
        write_file(cfg.output_path, text);
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

double relative_excess(double lhs, double rhs) {
    const double excess = lhs - rhs;
    if (excess <= 0.0) return 0.0;
    return excess / std::max(std::abs(rhs), 1e-300);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const double tol = cfg.tol.value_or(kBoundRelTol);
    std::vector<Theorem1Instance> instances;
    if (!cfg.input_path.empty()) {
        const std::string text = read_file(cfg.input_path);
        instances.push_back(parse_theorem1_instance(text));
    } else {
        instances.reserve(cfg.trials);
        for (std::size_t i = 0; i < cfg.trials; ++i) {
            SplitMix64 rng(derive_seed(cfg.seed, i));
            instances.push_back(random_theorem1_instance(cfg.dim, rng));
        }
    }

    std::size_t failed = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        const auto report = verify_theorem1(inst.a, inst.b, DiagonalScaling(inst.d), tol);
        if (!report.holds) ++failed;
        worst = std::max(worst, relative_excess(report.lhs, report.rhs));
        out << "instance=" << i << ' ' << format_report(report) << '\n';
    }
    out << "checked=" << instances.size() << " failed=" << failed
        << " max_rel_slack_violation=" << format_real(worst) << '\n';
    return failed == 0 ? kOk : kViolation;
}

PrecoderProblem load_problem(const RunConfig& cfg) {
    if (!cfg.input_path.empty()) {
        const std::string text = read_file(cfg.input_path);
        return parse_precoder_problem(text);
    }
    SplitMix64 rng(derive_seed(cfg.seed, 0));
    return random_precoder_problem(cfg.dim, cfg.dim, rng);
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const double tol = cfg.tol.value_or(1e-8);
    const PrecoderProblem prob = load_problem(cfg);
    const PrecoderSolution sol = solve_precoder(prob);
    const PowerReport power = check_power(sol.c, prob.rx, prob.power);

    out << "objective=" << format_real(sol.objective) << " bound=" << format_real(sol.bound)
        << " power_used=" << format_real(power.used) << '\n';
    emit(cfg, format_precoder_solution(sol), out);

    const bool attained = std::abs(sol.objective - sol.bound) <= tol * std::abs(sol.bound);
    return attained && power.feasible ? kOk : kViolation;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const double slack = cfg.tol.value_or(kOracleSlack);
    const PrecoderProblem prob = load_problem(cfg);
    const PrecoderSolution sol = solve_precoder(prob);
    const OracleReport report = run_dominance_oracle(prob, sol, cfg.trials, cfg.trials, cfg.seed, slack);
    out << "closed_form=" << format_real(report.closed_form)
        << " best_random_precoder=" << format_real(report.best_random_precoder)
        << " best_unitary_pair=" << format_real(report.best_unitary_pair) << " trials=" << report.trials
        << " dominates=" << bool_text(report.dominates) << '\n';
    return report.dominates ? kOk : kViolation;
}

ChainInstance seeded_chain_instance(const RunConfig& cfg) {
    SplitMix64 rng(derive_seed(cfg.seed, 0));
    const auto pair = random_majorized_pair(cfg.dim, rng);
    ChainInstance inst;
    inst.a.assign(pair.a.values().begin(), pair.a.values().end());
    inst.b.assign(pair.b.values().begin(), pair.b.values().end());
    inst.c = sorted_uniform(cfg.dim, 0.0, 10.0, rng);
    return inst;
}

ChainInstance load_chain(const RunConfig& cfg) {
    if (cfg.input_path.empty()) return seeded_chain_instance(cfg);
    const std::string text = read_file(cfg.input_path);
    return parse_chain_instance(text);
}

int cmd_chain(const RunConfig& cfg, std::ostream& out) {
    const ChainInstance inst = load_chain(cfg);
    const OrderedVector a(inst.a);
    const OrderedVector b(inst.b);
    const OrderedVector c(inst.c);
    const MajorizationChain chain = build_chain(a, b, c);
    const ChainAudit audit = audit_chain(chain);

    out << "a=" << format_reals(a.values(), ",") << '\n';
    out << "b=" << format_reals(b.values(), ",") << '\n';
    out << "c=" << format_reals(c.values(), ",") << '\n';
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
        const auto& step = chain.steps[k];
        out << "step=" << k + 1 << " head=" << step.index_one + 1 << " pivot=" << step.index_l1 + 1
            << " case=" << to_string(step.case_tag) << " before=" << format_reals(step.before, ",")
            << " after=" << format_reals(step.after, ",") << '\n';
    }
    out << "f_values=" << format_reals(chain.f_values, ",") << '\n';
    out << "steps=" << chain.steps.size() << " closed_by_dominance=" << bool_text(chain.closed_by_dominance)
        << " monotone=" << bool_text(audit.monotone) << " endpoints=" << bool_text(audit.endpoints)
        << " within_step_bound=" << bool_text(audit.within_step_bound)
        << " products_preserved=" << bool_text(audit.products_preserved) << '\n';
    return audit.ok() ? kOk : kViolation;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    SplitMix64 rng(derive_seed(cfg.seed, 0));
    std::string text;
    if (cfg.kind == "theorem1") {
        text = format_theorem1_instance(random_theorem1_instance(cfg.dim, rng));
    } else if (cfg.kind == "precoder") {
        text = format_precoder_problem(random_precoder_problem(cfg.dim, cfg.dim, rng));
    } else {
        text = format_chain_instance(seeded_chain_instance(cfg));
    }
    emit(cfg, text, out);
    return kOk;
}

void add_common_flags(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--seed", cfg.seed, "PRNG seed");
    sub.add_option("--trials", cfg.trials, "number of random instances or samples")->check(CLI::PositiveNumber);
    sub.add_option("--dim", cfg.dim, "matrix or vector dimension")->check(CLI::PositiveNumber);
    sub.add_option("--in", cfg.input_path, "input file");
    sub.add_option("--out", cfg.output_path, "output file");
    sub.add_option("--tol", cfg.tol, "relative tolerance override")->check(CLI::PositiveNumber);
}

} // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Parse:
        return kInputError;
    case ErrorKind::NotMajorized:
        return kViolation;
    case ErrorKind::NoConvergence:
    case ErrorKind::NonHermitianResult:
        return kNumerical;
    default:
        return kPrecondition;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Determinant inequality toolkit", "detineq"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "check the determinant bound on one file or a seeded sweep");
    auto* solve = app.add_subcommand("solve", "closed-form precoder for a problem file");
    auto* oracle = app.add_subcommand("oracle", "Monte-Carlo comparison against the closed form");
    auto* chain = app.add_subcommand("chain", "print the pairwise-transformation chain from b down to a");
    auto* gen = app.add_subcommand("gen", "write a random instance");
    for (auto* sub : {verify, solve, oracle, chain, gen}) add_common_flags(*sub, cfg);
    gen->add_option("kind", cfg.kind, "theorem1, precoder or chain")
        ->check(CLI::IsMember({"theorem1", "precoder", "chain"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (solve->parsed()) return cmd_solve(cfg, out);
        if (oracle->parsed()) return cmd_oracle(cfg, out);
        if (chain->parsed()) return cmd_chain(cfg, out);
        return cmd_gen(cfg, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace detineq::cli

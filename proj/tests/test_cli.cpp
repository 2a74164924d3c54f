#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "detineq/error.hpp"
#include "detineq/inequality.hpp"
#include "detineq/instance_io.hpp"
#include "detineq/instances.hpp"
#include "detineq/linalg.hpp"

using namespace detineq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("detineq_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kScalarProblem = "precoder 1 1 3\n# G\n1 1\n1 0\n# H\n1 1\n1 0\n# Rv\n1 1\n1 0\n# Rx\n1 1\n1 0\n";

} // namespace

TEST_SUITE("instance io") {
    TEST_CASE("generated files round trip byte for byte") {
        SplitMix64 rng(1);
        const auto t1 = format_theorem1_instance(random_theorem1_instance(3, rng));
        CHECK(format_theorem1_instance(parse_theorem1_instance(t1)) == t1);
        const auto pr = format_precoder_problem(random_precoder_problem(2, 3, rng));
        CHECK(format_precoder_problem(parse_precoder_problem(pr)) == pr);
        const auto pair = random_majorized_pair(4, rng);
        ChainInstance ci{{pair.a.values().begin(), pair.a.values().end()},
                         {pair.b.values().begin(), pair.b.values().end()},
                         sorted_uniform(4, 0.0, 10.0, rng)};
        const auto ct = format_chain_instance(ci);
        CHECK(format_chain_instance(parse_chain_instance(ct)) == ct);
    }

    TEST_CASE("schema violations are parse errors with line numbers") {
        auto message = [](auto&& fn) -> std::string {
            try {
                fn();
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::Parse);
                return e.what();
            }
            FAIL("expected a parse error");
            return {};
        };
        const std::string wrong_b = "2 2\n1 0 0 0\n0 0 1 0\n3 3\n1 0 0 0 0 0\n0 0 1 0 0 0\n0 0 0 0 1 0\n1 2\n1 0 1 0\n";
        CHECK(message([&] { parse_theorem1_instance(wrong_b); }).find("line 4") != std::string::npos);
        CHECK(message([] { parse_precoder_problem("solver 1 1 3\n"); }).find("line 1") != std::string::npos);
        CHECK(message([] { parse_chain_instance("1 2\n2 0 1 0\n1 1\n2 0\n1 2\n1 0 0 0\n"); })
                  .find("line 3") != std::string::npos);
    }

    TEST_CASE("solution file carries the allocation") {
        const auto prob = parse_precoder_problem(kScalarProblem);
        const auto sol = solve_precoder(prob);
        const auto file = parse_precoder_solution(format_precoder_solution(sol));
        CHECK(file.c == sol.c);
        CHECK(std::stod(file.fields.at("p_k")) == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(std::stod(file.fields.at("objective")) == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(parse_key_values("a=1 b=x")["b"] == "x");
    }
}

TEST_SUITE("cli") {
    TEST_CASE("verify sweep") {
        const auto r = run_cli({"verify", "--seed", "1", "--trials", "100", "--dim", "4"});
        CHECK(r.code == cli::kOk);
        CHECK(r.out.find("checked=100 failed=0 ") != std::string::npos);
        std::size_t holds = 0;
        for (std::size_t pos = 0; (pos = r.out.find("holds=true", pos)) != std::string::npos; ++pos) ++holds;
        CHECK(holds == 100);
    }

    TEST_CASE("verify equality witness file") {
        TempDir dir;
        const auto [a, b] = equality_witness(Spectrum({4.0, 2.0, 1.0}), Spectrum({3.0, 2.0, 0.5}),
                                             DiagonalScaling({2.0, 1.0, 1.0}));
        const auto path = dir.write("w.txt", format_theorem1_instance({a, b, {2.0, 1.0, 1.0}}));
        const auto r = run_cli({"verify", "--in", path});
        CHECK(r.code == cli::kOk);
        const auto line = r.out.substr(0, r.out.find('\n'));
        const auto fields = parse_key_values(line);
        const double lhs = std::stod(fields.at("lhs"));
        const double rhs = std::stod(fields.at("rhs"));
        CHECK(std::abs(rhs - lhs) <= 1e-9 * rhs);
    }

    TEST_CASE("solve scalar problem") {
        TempDir dir;
        const auto in = dir.write("p.txt", kScalarProblem);
        const auto out = dir.file("s.txt");
        const auto r = run_cli({"solve", "--in", in, "--out", out});
        CHECK(r.code == cli::kOk);
        const auto fields = parse_key_values(r.out.substr(0, r.out.find('\n')));
        CHECK(std::stod(fields.at("objective")) == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(std::stod(fields.at("bound")) == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(std::stod(fields.at("power_used")) == doctest::Approx(3.0).epsilon(1e-14));
        const auto sol = parse_precoder_solution(slurp(out));
        CHECK(std::stod(sol.fields.at("p_k")) == doctest::Approx(3.0).epsilon(1e-14));
    }

    TEST_CASE("solve dead channel") {
        TempDir dir;
        const auto in = dir.write("p.txt", "precoder 1 1 3\n1 1\n2 0\n1 1\n0 0\n1 1\n1 0\n1 1\n1 0\n");
        const auto r = run_cli({"solve", "--in", in});
        CHECK(r.code == cli::kOk);
        const auto fields = parse_key_values(r.out.substr(0, r.out.find('\n')));
        CHECK(std::stod(fields.at("objective")) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(std::stod(fields.at("power_used")) == 0.0);
    }

    TEST_CASE("oracle") {
        TempDir dir;
        const auto gen = run_cli({"gen", "precoder", "--dim", "2", "--seed", "4"});
        const auto in = dir.write("p.txt", gen.out);
        CHECK(run_cli({"oracle", "--in", in, "--trials", "1"}).code == cli::kOk);
        const auto r = run_cli({"oracle", "--in", in, "--trials", "10000"});
        CHECK(r.code == cli::kOk);
        CHECK(r.out.find("dominates=true") != std::string::npos);
    }

    TEST_CASE("chain") {
        TempDir dir;
        const auto same = dir.write("same.txt", "1 2\n2 0 1 0\n1 2\n2 0 1 0\n1 2\n1 0 0 0\n");
        const auto r = run_cli({"chain", "--in", same});
        CHECK(r.code == cli::kOk);
        CHECK(r.out.find("steps=0 ") != std::string::npos);

        const auto hand = dir.write("hand.txt", "1 2\n2 0 2 0\n1 2\n4 0 1 0\n1 2\n1 0 0 0\n");
        const auto h = run_cli({"chain", "--in", hand});
        CHECK(h.code == cli::kOk);
        CHECK(h.out.find("f_values=8,6\n") != std::string::npos);
        CHECK(h.out.find("case=headFixed") != std::string::npos);

        const auto seeded = run_cli({"chain", "--seed", "3", "--dim", "8"});
        CHECK(seeded.code == cli::kOk);
        const auto tail = seeded.out.substr(seeded.out.find("steps="));
        CHECK(std::stoul(parse_key_values(tail).at("steps")) <= 28);
        CHECK(tail.find("monotone=true") != std::string::npos);
    }

    TEST_CASE("gen is deterministic and round trips") {
        for (const char* kind : {"theorem1", "precoder", "chain"}) {
            const auto first = run_cli({"gen", kind, "--seed", "9", "--dim", "3"});
            const auto second = run_cli({"gen", kind, "--seed", "9", "--dim", "3"});
            CHECK(first.code == cli::kOk);
            CHECK(first.out == second.out);
            CHECK_FALSE(first.out == run_cli({"gen", kind, "--seed", "10", "--dim", "3"}).out);
        }
        const auto t = run_cli({"gen", "--seed", "2", "--dim", "4"}).out;
        const auto inst = parse_theorem1_instance(t);
        CHECK(format_theorem1_instance(inst) == t);
        CHECK(is_psd(inst.a));
        CHECK(is_psd(inst.b));
        const auto p = run_cli({"gen", "precoder", "--seed", "2", "--dim", "3"}).out;
        CHECK_NOTHROW(parse_precoder_problem(p).validate());
    }

    TEST_CASE("every command is repeatable") {
        TempDir dir;
        const auto problem = dir.write("p.txt", run_cli({"gen", "precoder", "--seed", "5", "--dim", "3"}).out);
        const std::vector<std::vector<std::string>> commands{
            {"gen", "theorem1", "--seed", "5", "--dim", "5"},
            {"verify", "--seed", "5", "--trials", "20", "--dim", "5"},
            {"solve", "--in", problem},
            {"oracle", "--in", problem, "--trials", "200", "--seed", "5"},
            {"chain", "--seed", "5", "--dim", "6"},
        };
        for (const auto& args : commands) {
            const auto a = run_cli(args);
            const auto b = run_cli(args);
            CHECK(a.code == cli::kOk);
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("exit code matrix") {
        TempDir dir;
        const auto malformed = dir.write("bad.txt", "2 2\n1 0 0 0\n0 0 zz 0\n");
        const auto not_psd = dir.write("npsd.txt", "1 1\n-1 0\n1 1\n1 0\n1 1\n1 0\n");
        const auto unsorted_d = dir.write("d.txt", "2 2\n1 0 0 0\n0 0 1 0\n2 2\n1 0 0 0\n0 0 1 0\n1 2\n1 0 2 0\n");
        const auto not_pd = dir.write("npd.txt", "precoder 1 1 3\n1 1\n0 0\n1 1\n1 0\n1 1\n1 0\n1 1\n1 0\n");
        const auto bad_power = dir.write("pw.txt", "precoder 1 1 -3\n1 1\n1 0\n1 1\n1 0\n1 1\n1 0\n1 1\n1 0\n");
        const auto not_major = dir.write("nm.txt", "1 2\n4 0 1 0\n1 2\n2 0 2 0\n1 2\n1 0 0 0\n");
        const auto unsorted_chain = dir.write("uc.txt", "1 2\n1 0 4 0\n1 2\n4 0 1 0\n1 2\n1 0 0 0\n");
        const auto missing = dir.file("missing.txt");

        struct Row {
            std::vector<std::string> args;
            int code;
        };
        const std::vector<Row> rows{
            {{"verify", "--trials", "3"}, cli::kOk},
            {{"verify", "--in", malformed}, cli::kInputError},
            {{"verify", "--in", missing}, cli::kInputError},
            {{"verify", "--in", not_psd}, cli::kPrecondition},
            {{"verify", "--in", unsorted_d}, cli::kPrecondition},
            {{"verify", "--bogus"}, cli::kInputError},
            {{"verify", "--trials", "0"}, cli::kInputError},
            {{"verify", "--dim", "-2"}, cli::kInputError},
            {{"verify", "--seed", "abc"}, cli::kInputError},
            {{}, cli::kInputError},
            {{"frobnicate"}, cli::kInputError},
            {{"gen", "matrix"}, cli::kInputError},
            {{"solve", "--in", malformed}, cli::kInputError},
            {{"solve", "--in", not_pd}, cli::kPrecondition},
            {{"solve", "--in", bad_power}, cli::kPrecondition},
            {{"oracle", "--in", not_pd}, cli::kPrecondition},
            {{"chain", "--in", not_major}, cli::kViolation},
            {{"chain", "--in", unsorted_chain}, cli::kPrecondition},
            {{"chain", "--in", malformed}, cli::kInputError},
            {{"gen", "--out", dir.file("no/such/dir/x.txt")}, cli::kInputError},
            {{"--help"}, cli::kOk},
        };
        for (const auto& row : rows) {
            std::string joined;
            for (const auto& a : row.args) joined += a + " ";
            CAPTURE(joined);
            const auto r = run_cli(row.args);
            CHECK(r.code == row.code);
            if (row.code != cli::kOk) CHECK_FALSE(r.err.empty());
        }

        const auto parse_failure = run_cli({"verify", "--in", malformed});
        CHECK(parse_failure.err.find("line 3") != std::string::npos);
    }

    TEST_CASE("error kinds map onto disjoint exit codes") {
        CHECK(cli::exit_code_for(ErrorKind::Parse) == cli::kInputError);
        CHECK(cli::exit_code_for(ErrorKind::NotMajorized) == cli::kViolation);
        CHECK(cli::exit_code_for(ErrorKind::NoConvergence) == cli::kNumerical);
        CHECK(cli::exit_code_for(ErrorKind::NonHermitianResult) == cli::kNumerical);
        for (ErrorKind k : {ErrorKind::InvalidArgument, ErrorKind::DimensionMismatch, ErrorKind::LengthMismatch,
                            ErrorKind::NotHermitian, ErrorKind::NotPsd, ErrorKind::NotPd, ErrorKind::NotDescending,
                            ErrorKind::NoPivot})
            CHECK(cli::exit_code_for(k) == cli::kPrecondition);
    }
}

#include "detineq/instance_io.hpp"

#include <cctype>

#include "detineq/error.hpp"
#include "detineq/text_format.hpp"

namespace detineq {

namespace {

void require_dims(std::size_t line, const ComplexMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + name + " must be " +
                                          std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

ComplexMatrix read_block(TokenReader& reader, const char* name, std::size_t rows, std::size_t cols) {
    const std::size_t line = reader.line();
    ComplexMatrix m = reader.next_matrix(name);
    require_dims(line, m, rows, cols, name);
    return m;
}

} // namespace

std::string format_theorem1_instance(const Theorem1Instance& inst) {
    return format_block("A", inst.a) + format_block("B", inst.b) + format_block("d", row_vector(inst.d));
}

Theorem1Instance parse_theorem1_instance(std::string_view text) {
    TokenReader reader(text);
    Theorem1Instance inst;
    const std::size_t line_a = reader.line();
    inst.a = reader.next_matrix("A");
    const std::size_t n = inst.a.rows();
    require_dims(line_a, inst.a, n, n, "A");
    inst.b = read_block(reader, "B", n, n);
    const std::size_t line_d = reader.line();
    inst.d = reader.next_real_vector("d");
    if (inst.d.size() != n)
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_d) + ": d must have " + std::to_string(n) +
                                          " entries");
    reader.expect_end();
    return inst;
}

std::string format_precoder_problem(const PrecoderProblem& prob) {
    return "precoder " + std::to_string(prob.p()) + " " + std::to_string(prob.m()) + " " + format_real(prob.power) +
           "\n" + format_block("G", prob.g) + format_block("H", prob.h) + format_block("Rv", prob.rv) +
           format_block("Rx", prob.rx);
}

PrecoderProblem parse_precoder_problem(std::string_view text) {
    TokenReader reader(text);
    if (reader.next_word("header 'precoder'") != "precoder") reader.fail("expected header 'precoder p m P'");
    const std::size_t p = reader.next_dim("p");
    const std::size_t m = reader.next_dim("m");
    PrecoderProblem prob;
    prob.power = reader.next_real("P");
    prob.g = read_block(reader, "G", p, p);
    prob.h = read_block(reader, "H", m, p);
    prob.rv = read_block(reader, "Rv", m, m);
    prob.rx = read_block(reader, "Rx", p, p);
    reader.expect_end();
    return prob;
}

std::string format_precoder_solution(const PrecoderSolution& sol) {
    std::string out = format_block("C", sol.c);
    out += "objective=" + format_real(sol.objective) + "\n";
    out += "bound=" + format_real(sol.bound) + "\n";
    out += "mu=" + format_real(sol.waterfill.mu) + "\n";
    out += "p_k=" + format_reals(sol.waterfill.allocations, ",") + "\n";
    return out;
}

SolutionFile parse_precoder_solution(std::string_view text) {
    TokenReader reader(text);
    SolutionFile file;
    file.c = reader.next_matrix("C");
    while (!reader.at_end()) {
        const std::size_t line = reader.line();
        const std::string_view token = reader.next_word("key=value");
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected key=value, got '" +
                                              std::string(token) + "'");
        file.fields[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
    }
    return file;
}

std::string format_chain_instance(const ChainInstance& inst) {
    return format_block("a", row_vector(inst.a)) + format_block("b", row_vector(inst.b)) +
           format_block("c", row_vector(inst.c));
}

ChainInstance parse_chain_instance(std::string_view text) {
    TokenReader reader(text);
    ChainInstance inst;
    inst.a = reader.next_real_vector("a");
    const std::size_t line_b = reader.line();
    inst.b = reader.next_real_vector("b");
    const std::size_t line_c = reader.line();
    inst.c = reader.next_real_vector("c");
    if (inst.b.size() != inst.a.size())
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_b) + ": b must match the length of a");
    if (inst.c.size() != inst.a.size())
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_c) + ": c must match the length of a");
    reader.expect_end();
    return inst;
}

std::map<std::string, std::string> parse_key_values(std::string_view line) {
    std::map<std::string, std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (start == i) break;
        const std::string_view token = line.substr(start, i - start);
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(ErrorKind::Parse, "expected key=value, got '" + std::string(token) + "'");
        out[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
    }
    return out;
}

} // namespace detineq

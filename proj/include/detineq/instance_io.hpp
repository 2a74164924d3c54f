#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "detineq/inequality.hpp"
#include "detineq/precoder.hpp"

namespace detineq {

// File schemas on top of the matrix text format. Every formatter is the exact
// inverse of its parser: format(parse(format(x))) == format(x) byte for byte.

/// Blocks A, B, d (d as a single-row block).
std::string format_theorem1_instance(const Theorem1Instance& inst);
Theorem1Instance parse_theorem1_instance(std::string_view text);

/// Header line `precoder p m P`, then blocks G, H, Rv, Rx.
std::string format_precoder_problem(const PrecoderProblem& prob);
PrecoderProblem parse_precoder_problem(std::string_view text);

/// Block C, then `objective=`, `bound=`, `mu=` and `p_k=` (comma-separated) lines.
std::string format_precoder_solution(const PrecoderSolution& sol);

struct SolutionFile {
    ComplexMatrix c;
    std::map<std::string, std::string> fields;
};
SolutionFile parse_precoder_solution(std::string_view text);

struct ChainInstance {
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
};

/// Single-row blocks a, b, c.
std::string format_chain_instance(const ChainInstance& inst);
ChainInstance parse_chain_instance(std::string_view text);

/// Splits "k1=v1 k2=v2 ..." on whitespace. Tokens without '=' throw Error(Parse).
std::map<std::string, std::string> parse_key_values(std::string_view line);

} // namespace detineq

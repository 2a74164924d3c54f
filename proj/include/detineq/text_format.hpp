#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "detineq/matrix.hpp"

namespace detineq {

// Matrix text format:
//
//   # optional comment lines
//   rows cols
//   re im re im ...        (rows × cols pairs, row-major, any whitespace)
//
// Several blocks may be concatenated in one file. Numbers are written with 17
// significant digits so that parse → format is the identity.

/// "%.17g"
std::string format_real(double value);
std::string format_reals(std::span<const double> values, std::string_view separator = " ");

/// One block, no label. Each matrix row goes on its own line.
std::string format_matrix(const ComplexMatrix& m);
/// "# label" line followed by the block.
std::string format_block(std::string_view label, const ComplexMatrix& m);
/// Real vector as a 1 × N block with zero imaginary parts.
ComplexMatrix row_vector(std::span<const double> values);

/// Sequential reader over whitespace-separated tokens; '#' lines are skipped.
/// All failures throw Error(Parse) naming the 1-based line number.
class TokenReader {
public:
    explicit TokenReader(std::string_view text);

    bool at_end() const noexcept { return pos_ == tokens_.size(); }
    /// Line of the next token (or of the last line when exhausted).
    std::size_t line() const noexcept;

    std::string_view next_word(std::string_view what);
    double next_real(std::string_view what);
    std::size_t next_dim(std::string_view what);

    ComplexMatrix next_matrix(std::string_view what);
    /// A 1 × N block whose imaginary parts are all zero.
    std::vector<double> next_real_vector(std::string_view what);

    void expect_end();

    [[noreturn]] void fail(std::string_view message) const;

private:
    struct Token {
        std::string_view text;
        std::size_t line;
    };
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 1;
};

} // namespace detineq

#include "detineq/text_format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "detineq/error.hpp"

namespace detineq {

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_reals(std::span<const double> values, std::string_view separator) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += separator;
        out += format_real(values[k]);
    }
    return out;
}

std::string format_matrix(const ComplexMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += "  ";
            out += format_real(m(i, j).real());
            out += ' ';
            out += format_real(m(i, j).imag());
        }
        out += '\n';
    }
    return out;
}

std::string format_block(std::string_view label, const ComplexMatrix& m) {
    return "# " + std::string(label) + "\n" + format_matrix(m);
}

ComplexMatrix row_vector(std::span<const double> values) {
    ComplexMatrix m(1, values.size());
    for (std::size_t k = 0; k < values.size(); ++k) m(0, k) = values[k];
    return m;
}

TokenReader::TokenReader(std::string_view text) {
    std::size_t line = 1;
    std::size_t i = 0;
    bool line_start = true;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
            line_start = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '#' && line_start) {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        line_start = false;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        tokens_.push_back({text.substr(start, i - start), line});
    }
    last_line_ = line;
}

std::size_t TokenReader::line() const noexcept { return at_end() ? last_line_ : tokens_[pos_].line; }

void TokenReader::fail(std::string_view message) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line()) + ": " + std::string(message));
}

std::string_view TokenReader::next_word(std::string_view what) {
    if (at_end()) fail("unexpected end of input, expected " + std::string(what));
    return tokens_[pos_++].text;
}

double TokenReader::next_real(std::string_view what) {
    if (at_end()) fail("unexpected end of input, expected " + std::string(what));
    const std::string token(tokens_[pos_].text);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value))
        fail("invalid number '" + token + "' for " + std::string(what));
    ++pos_;
    return value;
}

std::size_t TokenReader::next_dim(std::string_view what) {
    if (at_end()) fail("unexpected end of input, expected " + std::string(what));
    const std::string_view token = tokens_[pos_].text;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
        fail("invalid dimension '" + std::string(token) + "' for " + std::string(what));
    ++pos_;
    return value;
}

ComplexMatrix TokenReader::next_matrix(std::string_view what) {
    const std::string name(what);
    const std::size_t rows = next_dim(name + " rows");
    const std::size_t cols = next_dim(name + " cols");
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        const double re = next_real(name + " entry");
        const double im = next_real(name + " entry");
        entries.emplace_back(re, im);
    }
    return {rows, cols, std::move(entries)};
}

std::vector<double> TokenReader::next_real_vector(std::string_view what) {
    const std::size_t first_line = line();
    const ComplexMatrix m = next_matrix(what);
    if (m.rows() != 1)
        throw Error(ErrorKind::Parse, "line " + std::to_string(first_line) + ": " + std::string(what) +
                                          " must be a single-row block");
    std::vector<double> values;
    for (const auto& z : m.entries()) {
        if (z.imag() != 0.0)
            throw Error(ErrorKind::Parse, "line " + std::to_string(first_line) + ": " + std::string(what) +
                                              " must have zero imaginary parts");
        values.push_back(z.real());
    }
    return values;
}

void TokenReader::expect_end() {
    if (!at_end()) fail("trailing content '" + std::string(tokens_[pos_].text) + "'");
}

} // namespace detineq

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace detineq {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    LengthMismatch,
    NotHermitian,
    NotPsd,
    NotPd,
    NoConvergence,
    NotDescending,
    NotMajorized,
    NoPivot,
    NonHermitianResult,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace detineq

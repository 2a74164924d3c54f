#include "detineq/error.hpp"

namespace detineq {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::NotPd: return "NotPd";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotDescending: return "NotDescending";
    case ErrorKind::NotMajorized: return "NotMajorized";
    case ErrorKind::NoPivot: return "NoPivot";
    case ErrorKind::NonHermitianResult: return "NonHermitianResult";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace detineq

#include "nchilbert/errors.hpp"

namespace nchilbert {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::orbit_limit_exceeded: return "orbit-limit-exceeded";
    case ErrorKind::degree_budget_exhausted: return "degree-budget-exhausted";
    case ErrorKind::invalid_mode: return "invalid-mode-combination";
    case ErrorKind::empty_reduced_orbit: return "empty-reduced-orbit";
    case ErrorKind::order_invalid: return "order-invalid";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::denominator_vanishes: return "denominator-vanishes-at-origin";
    case ErrorKind::not_symmetric: return "not-symmetric";
    case ErrorKind::non_integer_coefficient: return "non-integer-coefficient";
    case ErrorKind::partition_too_long: return "partition-too-long";
    case ErrorKind::enumeration_budget: return "enumeration-budget-exceeded";
    }
    return "unknown";
}

} // namespace nchilbert

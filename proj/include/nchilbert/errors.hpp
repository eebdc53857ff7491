#ifndef NCHILBERT_ERRORS_HPP
#define NCHILBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nchilbert {

enum class ErrorKind {
    invalid_argument,
    parse_error,
    orbit_limit_exceeded,
    degree_budget_exhausted,
    invalid_mode,
    empty_reduced_orbit,
    order_invalid,
    division_by_zero,
    denominator_vanishes,
    not_symmetric,
    non_integer_coefficient,
    partition_too_long,
    enumeration_budget,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace nchilbert

#endif

#ifndef NCHILBERT_SCHUR_HPP
#define NCHILBERT_SCHUR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nchilbert/polyring.hpp"

namespace nchilbert {

/// Integer partition: weakly decreasing positive parts. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    /// Throws invalid_argument unless `parts` is weakly decreasing; trailing zeros are dropped.
    explicit Partition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::uint64_t weight() const noexcept;

    /// Ordered by weight, then lexicographically.
    std::strong_ordering operator<=>(const Partition& rhs) const noexcept;
    bool operator==(const Partition&) const = default;

private:
    std::vector<std::uint32_t> parts_;
};

std::string to_string(const Partition& p);

struct SchurDecomposition {
    std::map<Partition, mpz_class> multiplicities;
    bool residual_zero = true;
};

/// s_lambda(t1..tn): sum over semistandard tableaux of shape lambda with
/// entries in 1..n. Results are memoized; safe to call concurrently.
MPoly schur_polynomial(const Partition& lambda, std::size_t n);

/// Invariance under all adjacent transpositions t_i <-> t_{i+1}.
bool is_symmetric(const MPoly& f);

/// Peels graded-lex leading terms: the leading exponent of a symmetric
/// residual is a partition lambda and its coefficient the multiplicity of s_lambda.
SchurDecomposition decompose(const MPoly& f);

/// sum m_lambda s_lambda in n variables.
MPoly recombine(const SchurDecomposition& d, std::size_t n);

} // namespace nchilbert

#endif

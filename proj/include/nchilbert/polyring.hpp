#ifndef NCHILBERT_POLYRING_HPP
#define NCHILBERT_POLYRING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nchilbert {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e) noexcept;

/// Graded-lex order: total degree first, then lexicographic with t1 > t2 > ...
struct GlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

/// Sparse polynomial in t1..tn with exact rational coefficients.
/// Terms iterate in ascending graded-lex order; no zero coefficient is stored.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational, GlexLess>;

    explicit MPoly(std::size_t nvars = 1) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t i);
    static MPoly monomial(std::size_t nvars, Exponents e, const Rational& c = 1);
    /// t^e for a multidegree vector e.
    static MPoly power_product(std::span<const std::uint32_t> e);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const { return coefficient(Exponents(nvars_, 0)); }
    std::uint64_t total_degree() const noexcept;
    std::uint32_t degree_in(std::size_t v) const noexcept;

    /// Graded-lex greatest / least term. Precondition: nonzero.
    const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }
    const TermMap::value_type& trailing_term() const { return *terms_.begin(); }

    void add_term(const Exponents& e, const Rational& c);

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const Rational& c);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }

    bool operator==(const MPoly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

    /// Terms of total degree exactly d.
    MPoly homogeneous_part(std::uint64_t d) const;
    /// Terms of total degree at most d.
    MPoly truncated(std::uint64_t d) const;

    Rational evaluate(std::span<const Rational> point) const;

private:
    void check_compatible(const MPoly& rhs) const;

    std::size_t nvars_;
    TermMap terms_;
};

/// Quotient a / b if b divides a exactly, none otherwise. Throws on b = 0.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

/// Scale to coprime integer coefficients with positive leading coefficient.
MPoly primitive_normalized(const MPoly& p);

/// Greatest common divisor, primitive over the integers with positive leading
/// coefficient (gcd(0, 0) = 0). Recursive primitive remainder sequences.
MPoly gcd(const MPoly& a, const MPoly& b);

/// ti -> t for all i.
MPoly specialize_graded(const MPoly& p);

/// Render in descending graded-lex order, e.g. `t1*t2 + 3*t3^2 - 1`.
std::string to_string(const MPoly& p, std::span<const std::string> names);
/// Default names: `t` for one variable, `t1..tn` otherwise.
std::string to_string(const MPoly& p);
std::vector<std::string> default_series_names(std::size_t nvars);

inline constexpr std::size_t default_gcd_threshold = 5'000;

/// Rational function num/den.
///
/// Normalized on construction: monomial common factors and integer content are
/// removed, and the common polynomial gcd is divided out when there is one
/// variable or the combined term count is below the gcd threshold. The least graded-lex term of the
/// denominator has a positive coefficient.
class RatFun {
public:
    explicit RatFun(std::size_t nvars = 1) : num_(nvars), den_(MPoly::constant(nvars, 1)) {}
    RatFun(MPoly num);
    RatFun(MPoly num, MPoly den, std::size_t gcd_threshold = default_gcd_threshold);

    const MPoly& num() const noexcept { return num_; }
    const MPoly& den() const noexcept { return den_; }
    std::size_t nvars() const noexcept { return num_.nvars(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// The polynomial num/den. Precondition: is_polynomial().
    MPoly as_polynomial() const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

    /// Structural equality of the normalized pair.
    bool operator==(const RatFun& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

private:
    MPoly num_;
    MPoly den_;
};

/// num1·den2 == num2·den1; independent of how far the pairs were reduced.
bool cross_equal(const RatFun& a, const RatFun& b);

RatFun specialize_graded(const RatFun& f);

/// The polynomial P of total degree <= d with den·P = num modulo degree d+1.
/// Throws denominator_vanishes if den(0) = 0.
MPoly taylor_truncate(const RatFun& f, std::uint64_t d);

std::string to_string(const RatFun& f, std::span<const std::string> names);
std::string to_string(const RatFun& f);

} // namespace nchilbert

#endif

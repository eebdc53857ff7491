#include "nchilbert/polyring.hpp"

#include <algorithm>
#include <numeric>

#include "nchilbert/errors.hpp"

namespace nchilbert {

std::uint64_t total_degree(const Exponents& e) noexcept {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GlexLess::operator()(const Exponents& a, const Exponents& b) const noexcept {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, std::move(e));
}

MPoly MPoly::monomial(std::size_t nvars, Exponents e, const Rational& c) {
    if (e.size() != nvars) throw Error(ErrorKind::invalid_argument, "exponent length mismatch");
    MPoly p(nvars);
    p.add_term(e, c);
    return p;
}

MPoly MPoly::power_product(std::span<const std::uint32_t> e) {
    return monomial(e.size(), Exponents(e.begin(), e.end()));
}

bool MPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t MPoly::total_degree() const noexcept {
    return terms_.empty() ? 0 : nchilbert::total_degree(terms_.rbegin()->first);
}

std::uint32_t MPoly::degree_in(std::size_t v) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::invalid_argument, "exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_compatible(const MPoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw Error(ErrorKind::invalid_argument, "polynomials over different variable counts");
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    Exponents e(a.nvars_);
    Rational c;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            mpq_mul(c.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            out.add_term(e, c);
        }
    }
    return out;
}

MPoly MPoly::homogeneous_part(std::uint64_t d) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (nchilbert::total_degree(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

MPoly MPoly::truncated(std::uint64_t d) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (nchilbert::total_degree(e) > d) break;
        out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::invalid_argument, "evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::division_by_zero, "division by the zero polynomial");
    if (a.nvars() != b.nvars()) throw Error(ErrorKind::invalid_argument, "polynomials over different variable counts");
    const std::size_t n = a.nvars();
    MPoly q(n), r = a;
    const auto& [eb, cb] = b.leading_term();
    Exponents e(n);
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        for (std::size_t i = 0; i < n; ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            e[i] = er[i] - eb[i];
        }
        MPoly m = MPoly::monomial(n, e, cr / cb);
        q += m;
        r -= m * b;
    }
    return q;
}

namespace {

mpz_class content_scale(const MPoly& p, mpz_class& common_den) {
    // returns gcd of numerators after scaling by common_den = lcm of denominators
    common_den = 1;
    for (const auto& [e, c] : p.terms()) common_den = lcm(common_den, mpz_class(c.get_den()));
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) g = gcd(g, mpz_class(c.get_num() * (common_den / c.get_den())));
    return g;
}

MPoly drop_variable_power(const MPoly& p, std::size_t v, std::uint32_t k) {
    MPoly out(p.nvars());
    for (const auto& [exps, c] : p.terms()) {
        Exponents e = exps;
        e[v] -= k;
        out.add_term(e, c);
    }
    return out;
}

/// Coefficients of p viewed as a polynomial in variable v.
std::map<std::uint32_t, MPoly> coefficients_in(const MPoly& p, std::size_t v) {
    std::map<std::uint32_t, MPoly> out;
    for (const auto& [exps, c] : p.terms()) {
        Exponents e = exps;
        const std::uint32_t k = e[v];
        e[v] = 0;
        out.try_emplace(k, p.nvars()).first->second.add_term(e, c);
    }
    return out;
}

MPoly leading_coefficient_in(const MPoly& p, std::size_t v, std::uint32_t d) {
    MPoly out(p.nvars());
    for (const auto& [exps, c] : p.terms()) {
        if (exps[v] != d) continue;
        Exponents e = exps;
        e[v] = 0;
        out.add_term(e, c);
    }
    return out;
}

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error(ErrorKind::invalid_argument, "internal error: expected exact polynomial division");
    return *q;
}

MPoly content_in(const MPoly& p, std::size_t v) {
    MPoly g(p.nvars());
    for (const auto& [k, c] : coefficients_in(p, v)) {
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MPoly primitive_part_in(const MPoly& p, std::size_t v) {
    if (p.is_zero()) return p;
    return primitive_normalized(exact_quotient(p, content_in(p, v)));
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t v) {
    const std::uint32_t db = b.degree_in(v);
    const MPoly lb = leading_coefficient_in(b, v, db);
    MPoly r = a;
    while (!r.is_zero()) {
        const std::uint32_t dr = r.degree_in(v);
        if (dr < db) break;
        const MPoly lr = leading_coefficient_in(r, v, dr);
        Exponents shift(r.nvars(), 0);
        shift[v] = dr - db;
        r = lb * r - lr * MPoly::monomial(r.nvars(), shift) * b;
    }
    return r;
}

} // namespace

MPoly primitive_normalized(const MPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den;
    const mpz_class g = content_scale(p, den);
    Rational scale(den, g);
    scale.canonicalize();
    if (p.leading_term().second < 0) scale = -scale;
    return p * scale;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars()) throw Error(ErrorKind::invalid_argument, "polynomials over different variable counts");
    const std::size_t n = a.nvars();
    if (a.is_zero()) return primitive_normalized(b);
    if (b.is_zero()) return primitive_normalized(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(n, 1);
    if (b.term_count() <= a.term_count() && divide_exact(a, b)) return primitive_normalized(b);
    if (a.term_count() <= b.term_count() && divide_exact(b, a)) return primitive_normalized(a);

    // Common monomial factor first; the rest is done variable by variable.
    std::size_t v = n;
    for (std::size_t i = 0; i < n && v == n; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) v = i;

    const std::uint32_t da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0) return gcd(a, content_in(b, v));
    if (db == 0) return gcd(content_in(a, v), b);

    const MPoly content = gcd(content_in(a, v), content_in(b, v));
    MPoly p = primitive_part_in(a, v), q = primitive_part_in(b, v);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (!q.is_zero() && q.degree_in(v) > 0) {
        MPoly r = pseudo_remainder(p, q, v);
        p = std::move(q);
        q = primitive_part_in(r, v);
    }
    MPoly g = q.is_zero() ? primitive_part_in(p, v) : MPoly::constant(n, 1);
    return primitive_normalized(content * g);
}

MPoly specialize_graded(const MPoly& p) {
    MPoly out(1);
    for (const auto& [e, c] : p.terms()) out.add_term({static_cast<std::uint32_t>(total_degree(e))}, c);
    return out;
}

std::vector<std::string> default_series_names(std::size_t nvars) {
    if (nvars == 1) return {"t"};
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nvars; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

std::string to_string(const MPoly& p, std::span<const std::string> names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

std::string to_string(const MPoly& p) {
    const auto names = default_series_names(p.nvars());
    return to_string(p, names);
}

RatFun::RatFun(MPoly num) : RatFun(num, MPoly::constant(num.nvars(), 1)) {}

RatFun::RatFun(MPoly num, MPoly den, std::size_t gcd_threshold) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw Error(ErrorKind::invalid_argument, "numerator/denominator mismatch");
    const std::size_t n = num_.nvars();
    if (den_.is_zero()) throw Error(ErrorKind::division_by_zero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(n, 1);
        return;
    }
    // monomial common factor
    for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t k = UINT32_MAX;
        for (const auto& [e, c] : num_.terms()) k = std::min(k, e[v]);
        for (const auto& [e, c] : den_.terms()) k = std::min(k, e[v]);
        if (k > 0) {
            num_ = drop_variable_power(num_, v, k);
            den_ = drop_variable_power(den_, v, k);
        }
    }
    // Univariate pairs are always fully reduced.
    const bool reduce = n == 1 || num_.term_count() + den_.term_count() < gcd_threshold;
    if (reduce && !den_.is_constant() && !num_.is_constant()) {
        const MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    // integer content over both parts
    mpz_class lcm_den = 1;
    for (const MPoly* p : {&num_, &den_})
        for (const auto& [e, c] : p->terms()) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
    mpz_class g = 0;
    for (const MPoly* p : {&num_, &den_})
        for (const auto& [e, c] : p->terms()) g = gcd(g, mpz_class(c.get_num() * (lcm_den / c.get_den())));
    Rational scale(lcm_den, g);
    scale.canonicalize();
    if (den_.trailing_term().second < 0) scale = -scale;
    num_ *= scale;
    den_ *= scale;
}

MPoly RatFun::as_polynomial() const {
    if (!is_polynomial()) throw Error(ErrorKind::invalid_argument, "rational function is not a polynomial");
    return num_ * (Rational(1) / den_.constant_term());
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error(ErrorKind::division_by_zero, "division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool cross_equal(const RatFun& a, const RatFun& b) {
    if (a.nvars() != b.nvars()) return false;
    return a.num() * b.den() == b.num() * a.den();
}

RatFun specialize_graded(const RatFun& f) {
    MPoly den = specialize_graded(f.den());
    if (den.is_zero()) throw Error(ErrorKind::division_by_zero, "denominator vanishes under graded specialization");
    return RatFun(specialize_graded(f.num()), std::move(den));
}

MPoly taylor_truncate(const RatFun& f, std::uint64_t d) {
    const std::size_t n = f.nvars();
    const Rational den0 = f.den().constant_term();
    if (den0 == 0) throw Error(ErrorKind::denominator_vanishes, "denominator vanishes at the origin");
    const Rational inv = 1 / den0;
    const std::uint64_t den_deg = f.den().total_degree();
    std::vector<MPoly> den_parts;
    for (std::uint64_t j = 0; j <= std::min(den_deg, d); ++j) den_parts.push_back(f.den().homogeneous_part(j));

    std::vector<MPoly> parts;
    MPoly out(n);
    for (std::uint64_t k = 0; k <= d; ++k) {
        MPoly part = f.num().homogeneous_part(k);
        for (std::uint64_t j = 1; j <= std::min(k, den_deg); ++j)
            if (!den_parts[j].is_zero()) part -= den_parts[j] * parts[k - j];
        part *= inv;
        out += part;
        parts.push_back(std::move(part));
    }
    return out;
}

std::string to_string(const RatFun& f, std::span<const std::string> names) {
    if (f.is_polynomial()) return to_string(f.as_polynomial(), names);
    return "(" + to_string(f.num(), names) + ") / (" + to_string(f.den(), names) + ")";
}

std::string to_string(const RatFun& f) {
    const auto names = default_series_names(f.nvars());
    return to_string(f, names);
}

} // namespace nchilbert

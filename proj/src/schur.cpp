#include "nchilbert/schur.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "nchilbert/errors.hpp"

namespace nchilbert {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) throw Error(ErrorKind::invalid_argument, "partition parts must be weakly decreasing");
}

std::uint64_t Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::strong_ordering Partition::operator<=>(const Partition& rhs) const noexcept {
    if (auto c = weight() <=> rhs.weight(); c != 0) return c;
    return parts_ <=> rhs.parts_;
}

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

namespace {

// (parts, variables used, ambient variable count)
using MemoKey = std::tuple<std::vector<std::uint32_t>, std::size_t, std::size_t>;

struct SchurMemo {
    std::shared_mutex mutex;
    std::map<MemoKey, MPoly> table;
};

SchurMemo& memo() {
    static SchurMemo instance;
    return instance;
}

MPoly schur_in_first(const std::vector<std::uint32_t>& lambda, std::size_t m, std::size_t n);

// Enumerates mu with lambda/mu a horizontal strip: lambda[i+1] <= mu[i] <= lambda[i].
void add_strips(const std::vector<std::uint32_t>& lambda, std::size_t m, std::size_t n, std::size_t i,
                std::vector<std::uint32_t>& mu, std::uint64_t removed, MPoly& acc) {
    if (i == lambda.size()) {
        std::vector<std::uint32_t> shape = mu;
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        if (shape.size() > m - 1) return;
        MPoly rest = schur_in_first(shape, m - 1, n);
        if (rest.is_zero()) return;
        Exponents e(n, 0);
        e[m - 1] = static_cast<std::uint32_t>(removed);
        acc += rest * MPoly::monomial(n, std::move(e));
        return;
    }
    const std::uint32_t lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (std::uint32_t v = lo; v <= lambda[i]; ++v) {
        mu[i] = v;
        add_strips(lambda, m, n, i + 1, mu, removed + (lambda[i] - v), acc);
    }
}

// Schur polynomial in the first m of n variables: the cells holding m form a
// horizontal strip, the remaining tableau uses entries 1..m-1.
MPoly schur_in_first(const std::vector<std::uint32_t>& lambda, std::size_t m, std::size_t n) {
    if (lambda.empty()) return MPoly::constant(n, 1);
    if (lambda.size() > m) return MPoly(n);
    MemoKey key{lambda, m, n};
    {
        std::shared_lock lock(memo().mutex);
        if (auto it = memo().table.find(key); it != memo().table.end()) return it->second;
    }
    MPoly acc(n);
    std::vector<std::uint32_t> mu(lambda.size(), 0);
    add_strips(lambda, m, n, 0, mu, 0, acc);
    std::unique_lock lock(memo().mutex);
    memo().table.try_emplace(std::move(key), acc);
    return acc;
}

} // namespace

MPoly schur_polynomial(const Partition& lambda, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "Schur polynomials need at least one variable");
    if (lambda.length() > n)
        throw Error(ErrorKind::partition_too_long,
                    "partition " + to_string(lambda) + " has more than " + std::to_string(n) + " parts");
    return schur_in_first(lambda.parts(), n, n);
}

bool is_symmetric(const MPoly& f) {
    for (std::size_t i = 0; i + 1 < f.nvars(); ++i) {
        for (const auto& [e, c] : f.terms()) {
            Exponents swapped = e;
            std::swap(swapped[i], swapped[i + 1]);
            if (f.coefficient(swapped) != c) return false;
        }
    }
    return true;
}

SchurDecomposition decompose(const MPoly& f) {
    for (const auto& [e, c] : f.terms())
        if (c.get_den() != 1)
            throw Error(ErrorKind::non_integer_coefficient, "Schur decomposition needs integer coefficients");
    if (!is_symmetric(f)) throw Error(ErrorKind::not_symmetric, "polynomial is not symmetric");

    const std::size_t n = f.nvars();
    SchurDecomposition out;
    MPoly residual = f;
    while (!residual.is_zero()) {
        const auto [e, c] = residual.leading_term();
        if (!std::is_sorted(e.rbegin(), e.rend()))
            throw Error(ErrorKind::not_symmetric, "leading exponent is not a partition");
        Partition lambda(std::vector<std::uint32_t>(e.begin(), e.end()));
        const mpz_class mult = c.get_num();
        residual -= schur_polynomial(lambda, n) * Rational(mult);
        out.multiplicities[lambda] += mult;
    }
    out.residual_zero = true;
    return out;
}

MPoly recombine(const SchurDecomposition& d, std::size_t n) {
    MPoly sum(n);
    for (const auto& [lambda, mult] : d.multiplicities) sum += schur_polynomial(lambda, n) * Rational(mult);
    return sum;
}

} // namespace nchilbert

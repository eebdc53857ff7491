#ifndef NCHILBERT_IDEALS_HPP
#define NCHILBERT_IDEALS_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "nchilbert/words.hpp"

namespace nchilbert {

/// Factor-minimal set T of two-sided generators, shared by every ideal of an orbit.
///
/// Besides the generators it keeps a hash index for factor tests and, for each
/// letter x, the tails {v : x·v ∈ T} that a single-letter colon contributes.
class TwoSidedBase {
public:
    /// Factor-minimalizes `gens`. An empty word among them is kept as the only generator.
    static std::shared_ptr<const TwoSidedBase> make(std::vector<Word> gens, std::size_t n);

    std::size_t alphabet_size() const noexcept { return tails_.size(); }
    const std::vector<Word>& generators() const noexcept { return gens_; }
    const std::vector<Word>& tails(Letter x) const { return tails_.at(x); }
    bool empty() const noexcept { return gens_.empty(); }

    /// True iff some generator is a factor of w.
    bool divides(const Word& w) const;

private:
    TwoSidedBase() = default;

    std::vector<Word> gens_;
    std::unordered_set<Word, WordHash> index_;
    std::vector<std::size_t> lengths_;
    std::vector<std::vector<Word>> tails_;
};

/// Monomial right ideal T·F-two-sided + P·F + B^{e+1}, stored canonically.
///
/// Canonical form of P: no element has a factor in T, no element has a proper
/// prefix in P, no element exceeds degree e when truncated, sorted canonically.
/// The unit ideal is P = {1} with empty T and no truncation. With a fixed T
/// two canonical ideals are equal iff their (P, e) agree.
class MonomialIdeal {
public:
    /// Canonicalizing constructor.
    static MonomialIdeal make(std::shared_ptr<const TwoSidedBase> base, std::vector<Word> right,
                              std::optional<unsigned> truncation = std::nullopt,
                              std::optional<int> known_up_to = std::nullopt);

    static MonomialIdeal two_sided(std::vector<Word> gens, std::size_t n);
    static MonomialIdeal right(std::vector<Word> gens, std::size_t n);
    static MonomialIdeal zero(std::size_t n);
    static MonomialIdeal unit(std::size_t n);

    /// I + B^{e+1}.
    MonomialIdeal truncated(unsigned e) const;
    /// Marks generators as complete only up to total degree `bound`.
    MonomialIdeal with_knowledge_bound(int bound) const;

    bool is_unit() const noexcept { return right_.size() == 1 && right_.front().empty(); }
    bool is_zero() const noexcept { return right_.empty() && base_->empty() && !truncation_; }

    std::size_t alphabet_size() const noexcept { return base_->alphabet_size(); }
    const std::shared_ptr<const TwoSidedBase>& base() const noexcept { return base_; }
    const std::vector<Word>& two_sided_base() const noexcept { return base_->generators(); }
    const std::vector<Word>& right_part() const noexcept { return right_; }
    std::optional<unsigned> truncation_level() const noexcept { return truncation_; }
    std::optional<int> known_up_to() const noexcept { return known_up_to_; }

private:
    MonomialIdeal() = default;
    // P already free of T-factors; only degree, prefix and unit rules are applied.
    static MonomialIdeal from_clean(std::shared_ptr<const TwoSidedBase> base, std::vector<Word> right,
                                    std::optional<unsigned> truncation, std::optional<int> known_up_to);

    friend MonomialIdeal colon_var(const MonomialIdeal&, Letter);

    std::shared_ptr<const TwoSidedBase> base_;
    std::vector<Word> right_;
    std::optional<unsigned> truncation_;
    std::optional<int> known_up_to_;
};

bool contains(const MonomialIdeal& ideal, const Word& w);

/// (J :_R x).
MonomialIdeal colon_var(const MonomialIdeal& ideal, Letter x);

/// (J :_R w), applying colon_var letter by letter from the left.
MonomialIdeal colon_word(const MonomialIdeal& ideal, const Word& w);

/// Encoding of (P, e); equal keys iff equal ideals for a shared T.
std::string canonical_key(const MonomialIdeal& ideal);

/// Equality used in degree-bound mode: right parts are compared only up to the
/// smaller knowledge bound. Throws degree_budget_exhausted when that bound is < 1.
/// Falls back to key equality when neither side carries a bound.
bool bounded_equal(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace nchilbert

#endif

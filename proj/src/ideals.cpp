#include "nchilbert/ideals.hpp"

#include <algorithm>

#include "nchilbert/errors.hpp"

namespace nchilbert {

std::shared_ptr<const TwoSidedBase> TwoSidedBase::make(std::vector<Word> gens, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "alphabet must be nonempty");
    for (const Word& g : gens)
        for (Letter l : g)
            if (l >= n) throw Error(ErrorKind::invalid_argument, "generator letter out of range");

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::shared_ptr<TwoSidedBase> base(new TwoSidedBase());
    base->tails_.resize(n);
    // Sorted by degree, so any factor of g that is kept is already indexed.
    for (Word& g : gens) {
        if (base->divides(g)) continue;
        base->index_.insert(g);
        if (std::find(base->lengths_.begin(), base->lengths_.end(), g.degree()) == base->lengths_.end())
            base->lengths_.push_back(g.degree());
        base->gens_.push_back(std::move(g));
    }
    std::sort(base->lengths_.begin(), base->lengths_.end());
    for (const Word& g : base->gens_)
        if (!g.empty()) base->tails_[g.front()].push_back(g.suffix_from(1));
    for (auto& t : base->tails_) std::sort(t.begin(), t.end());
    return base;
}

bool TwoSidedBase::divides(const Word& w) const {
    for (std::size_t len : lengths_) {
        if (len > w.degree()) break;
        if (len == 0) return true;
        for (std::size_t pos = 0; pos + len <= w.degree(); ++pos)
            if (index_.contains(w.sub(pos, len))) return true;
    }
    return false;
}

namespace {

std::shared_ptr<const TwoSidedBase> empty_base(std::size_t n) { return TwoSidedBase::make({}, n); }

} // namespace

MonomialIdeal MonomialIdeal::from_clean(std::shared_ptr<const TwoSidedBase> base, std::vector<Word> right,
                                        std::optional<unsigned> truncation, std::optional<int> known_up_to) {
    MonomialIdeal out;
    const std::size_t n = base->alphabet_size();
    bool unit = std::any_of(right.begin(), right.end(), [](const Word& w) { return w.empty(); });
    if (!unit && !base->generators().empty() && base->generators().front().empty()) unit = true;
    if (unit) {
        out.base_ = empty_base(n);
        out.right_ = {Word{}};
        return out;
    }
    if (truncation)
        std::erase_if(right, [&](const Word& w) { return w.degree() > *truncation; });
    std::sort(right.begin(), right.end());
    right.erase(std::unique(right.begin(), right.end()), right.end());

    std::unordered_set<Word, WordHash> kept;
    std::vector<Word> minimal;
    minimal.reserve(right.size());
    for (Word& w : right) {
        bool covered = false;
        for (std::size_t len = 1; len < w.degree() && !covered; ++len)
            covered = kept.contains(w.prefix(len));
        if (covered) continue;
        kept.insert(w);
        minimal.push_back(std::move(w));
    }
    out.base_ = std::move(base);
    out.right_ = std::move(minimal);
    out.truncation_ = truncation;
    out.known_up_to_ = known_up_to;
    return out;
}

MonomialIdeal MonomialIdeal::make(std::shared_ptr<const TwoSidedBase> base, std::vector<Word> right,
                                  std::optional<unsigned> truncation, std::optional<int> known_up_to) {
    if (!base) throw Error(ErrorKind::invalid_argument, "missing two-sided base");
    for (const Word& p : right)
        for (Letter l : p)
            if (l >= base->alphabet_size()) throw Error(ErrorKind::invalid_argument, "generator letter out of range");
    std::erase_if(right, [&](const Word& w) { return !w.empty() && base->divides(w); });
    return from_clean(std::move(base), std::move(right), truncation, known_up_to);
}

MonomialIdeal MonomialIdeal::two_sided(std::vector<Word> gens, std::size_t n) {
    return make(TwoSidedBase::make(std::move(gens), n), {});
}

MonomialIdeal MonomialIdeal::right(std::vector<Word> gens, std::size_t n) {
    return make(empty_base(n), std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::size_t n) { return make(empty_base(n), {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return make(empty_base(n), {Word{}}); }

MonomialIdeal MonomialIdeal::truncated(unsigned e) const {
    if (is_unit()) return *this;
    return from_clean(base_, right_, truncation_ ? std::min(*truncation_, e) : e, known_up_to_);
}

MonomialIdeal MonomialIdeal::with_knowledge_bound(int bound) const {
    if (bound < 0) throw Error(ErrorKind::degree_budget_exhausted, "negative knowledge bound");
    if (is_unit()) return *this;
    MonomialIdeal out = *this;
    out.known_up_to_ = bound;
    return out;
}

bool contains(const MonomialIdeal& ideal, const Word& w) {
    if (ideal.is_unit()) return true;
    if (auto e = ideal.truncation_level(); e && w.degree() > *e) return true;
    for (const Word& p : ideal.right_part()) {
        if (p.degree() > w.degree()) break;
        if (is_prefix(p, w)) return true;
    }
    return ideal.base()->divides(w);
}

MonomialIdeal colon_var(const MonomialIdeal& ideal, Letter x) {
    const std::size_t n = ideal.alphabet_size();
    if (x >= n) throw Error(ErrorKind::invalid_argument, "colon letter out of range");
    if (ideal.is_unit()) return ideal;

    std::optional<int> known = ideal.known_up_to_;
    if (known) {
        if (*known == 0)
            throw Error(ErrorKind::degree_budget_exhausted, "degree budget exhausted while forming a colon ideal");
        --*known;
    }
    // (I^{(e)} : x) is the unit ideal once e = 0.
    if (ideal.truncation_ && *ideal.truncation_ == 0) return MonomialIdeal::unit(n);

    // Tails of T and of P never carry a T-factor (T is factor-minimal, P is
    // canonical), so only the prefix and degree rules need to run again.
    std::vector<Word> right;
    for (const Word& p : ideal.right_) {
        if (p.front() != x) continue;
        right.push_back(p.suffix_from(1));
        if (p.degree() == 1) return MonomialIdeal::unit(n);
    }
    const auto& tails = ideal.base_->tails(x);
    right.insert(right.end(), tails.begin(), tails.end());

    std::optional<unsigned> e = ideal.truncation_;
    if (e) --*e;
    return MonomialIdeal::from_clean(ideal.base_, std::move(right), e, known);
}

MonomialIdeal colon_word(const MonomialIdeal& ideal, const Word& w) {
    MonomialIdeal out = ideal;
    for (Letter x : w) out = colon_var(out, x);
    return out;
}

namespace {

void put_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

} // namespace

std::string canonical_key(const MonomialIdeal& ideal) {
    std::string key;
    std::size_t bytes = 9;
    for (const Word& p : ideal.right_part()) bytes += 2 + 2 * p.degree();
    key.reserve(bytes);
    auto e = ideal.truncation_level();
    key.push_back(e ? 1 : 0);
    put_u32(key, e ? *e : 0);
    put_u32(key, static_cast<std::uint32_t>(ideal.right_part().size()));
    for (const Word& p : ideal.right_part()) {
        key.push_back(static_cast<char>(p.degree() & 0xff));
        key.push_back(static_cast<char>(p.degree() >> 8));
        for (Letter l : p) {
            key.push_back(static_cast<char>(l & 0xff));
            key.push_back(static_cast<char>(l >> 8));
        }
    }
    return key;
}

bool bounded_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.is_unit() || b.is_unit()) return a.is_unit() && b.is_unit();
    if (a.truncation_level() != b.truncation_level()) return false;
    auto ka = a.known_up_to(), kb = b.known_up_to();
    if (!ka && !kb) return a.right_part() == b.right_part();
    const int bound = std::min(ka.value_or(*kb), kb.value_or(*ka));
    if (bound < 1)
        throw Error(ErrorKind::degree_budget_exhausted,
                    "degree budget exhausted: ideals can only be compared below degree 1");
    auto restricted = [bound](const std::vector<Word>& p) {
        std::vector<Word> out;
        for (const Word& w : p)
            if (static_cast<int>(w.degree()) <= bound) out.push_back(w);
        return out;
    };
    return restricted(a.right_part()) == restricted(b.right_part());
}

} // namespace nchilbert

#ifndef NCHILBERT_WORDS_HPP
#define NCHILBERT_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nchilbert {

/// Variable index. Internally zero-based: letter i denotes the (i+1)-th variable.
using Letter = std::uint16_t;

/// Ordered set of distinct variable names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    /// Alphabet x1..xn, used by tests and random generators.
    static Alphabet indexed(std::size_t n, std::string_view stem = "x");

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Letter i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Index of a variable name, or -1.
    int find(std::string_view name) const noexcept;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
};

/// Finite word over the alphabet; the empty word is the monoid identity.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }
    std::span<const Letter> letters() const noexcept { return letters_; }

    /// Subword letters[pos, pos+len).
    Word sub(std::size_t pos, std::size_t len) const;
    Word suffix_from(std::size_t pos) const { return sub(pos, degree() - pos); }
    Word prefix(std::size_t len) const { return sub(0, len); }

    Word& operator+=(const Word& rhs);
    Word& push_back(Letter l) {
        letters_.push_back(l);
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    bool operator==(const Word&) const = default;

    /// Canonical order: total degree first, then lexicographic on indices.
    friend bool operator<(const Word& a, const Word& b) noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.letters_ < b.letters_;
    }

    std::size_t hash() const noexcept;

private:
    std::vector<Letter> letters_;
};

/// Exponent vector of a word: counts[i] = occurrences of letter i.
struct MultiDegree {
    std::vector<std::uint32_t> counts;

    MultiDegree() = default;
    explicit MultiDegree(std::size_t n) : counts(n, 0) {}
    explicit MultiDegree(std::vector<std::uint32_t> c) : counts(std::move(c)) {}

    std::size_t size() const noexcept { return counts.size(); }
    std::uint64_t total() const noexcept;

    bool operator==(const MultiDegree&) const = default;
    auto operator<=>(const MultiDegree&) const = default;
};

MultiDegree multidegree(const Word& w, const Alphabet& alphabet);
MultiDegree multidegree(const Word& w, std::size_t n);

/// True iff w = u·v for some v.
bool is_prefix(const Word& u, const Word& w) noexcept;

/// True iff w = a·u·b for some a, b.
bool is_factor(const Word& u, const Word& w) noexcept;

/// All v with u·wj = w·v for some word u and deg(v) < deg(wj), sorted canonically.
///
/// These are the complements in wj of the suffixes of w that are prefixes of wj;
/// the empty word appears exactly when wj is a suffix of w.
std::vector<Word> overlap_suffixes(const Word& w, const Word& wj);

/// Render as `x*y*x` (or `1` for the empty word).
std::string to_string(const Word& w, const Alphabet& alphabet);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

} // namespace nchilbert

template <>
struct std::hash<nchilbert::Word> {
    std::size_t operator()(const nchilbert::Word& w) const noexcept { return w.hash(); }
};

#endif

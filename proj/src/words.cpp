#include "nchilbert/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nchilbert/errors.hpp"

namespace nchilbert {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error(ErrorKind::invalid_argument, "alphabet must contain at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error(ErrorKind::invalid_argument, "empty variable name");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw Error(ErrorKind::invalid_argument, "duplicate variable name '" + names_[i] + "'");
    }
}

Alphabet Alphabet::indexed(std::size_t n, std::string_view stem) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(stem) + std::to_string(i));
    return Alphabet(std::move(names));
}

int Alphabet::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word& Word::operator+=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

std::size_t Word::hash() const noexcept {
    // FNV-1a over the letter sequence
    std::uint64_t h = 1469598103934665603ull;
    for (Letter l : letters_) {
        h ^= static_cast<std::uint64_t>(l) + 1;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ letters_.size());
}

std::uint64_t MultiDegree::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

MultiDegree multidegree(const Word& w, std::size_t n) {
    MultiDegree d(n);
    for (Letter l : w) {
        if (l >= n) throw Error(ErrorKind::invalid_argument, "letter index out of range");
        ++d.counts[l];
    }
    return d;
}

MultiDegree multidegree(const Word& w, const Alphabet& alphabet) { return multidegree(w, alphabet.size()); }

bool is_prefix(const Word& u, const Word& w) noexcept {
    return u.degree() <= w.degree() && std::equal(u.begin(), u.end(), w.begin());
}

bool is_factor(const Word& u, const Word& w) noexcept {
    if (u.empty()) return true;
    if (u.degree() > w.degree()) return false;
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

std::vector<Word> overlap_suffixes(const Word& w, const Word& wj) {
    // u is a proper prefix of w of length k; the remaining suffix w[k..] must
    // be a prefix of wj and v is what is left of wj.
    std::vector<Word> out;
    const std::size_t a = w.degree(), b = wj.degree();
    for (std::size_t k = 0; k < a; ++k) {
        const std::size_t s = a - k;
        if (s > b) continue;
        if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(k), w.end(), wj.begin()))
            out.push_back(wj.suffix_from(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.degree(); ++i) {
        if (i) s += '*';
        s += alphabet.name(w[i]);
    }
    return s;
}

} // namespace nchilbert

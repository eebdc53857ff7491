#ifndef NCHILBERT_TEST_SUPPORT_HPP
#define NCHILBERT_TEST_SUPPORT_HPP

// Helpers shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nchilbert/cli.hpp"
#include "nchilbert/series.hpp"
#include "nchilbert/words.hpp"

namespace nchilbert::testing {

/// Word from single-character letters: "xzy" over alphabet "xyz".
inline Word w(std::string_view letters, std::string_view alphabet = "xyz") {
    std::vector<Letter> out;
    for (char c : letters) {
        const auto pos = alphabet.find(c);
        if (pos == std::string_view::npos) throw std::invalid_argument("bad letter in test word");
        out.push_back(static_cast<Letter>(pos));
    }
    return Word(std::move(out));
}

inline std::vector<Word> words(std::initializer_list<std::string_view> list, std::string_view alphabet = "xyz") {
    std::vector<Word> out;
    for (auto s : list) out.push_back(w(s, alphabet));
    return out;
}

/// All words over n letters with degree in [lo, hi], shortest first.
inline std::vector<Word> all_words(std::size_t n, std::size_t lo, std::size_t hi) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t d = 0; d <= hi; ++d) {
        if (d >= lo) out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const Word& u : layer)
            for (Letter x = 0; x < n; ++x) next.push_back(Word(u).push_back(x));
        layer = std::move(next);
    }
    return out;
}

inline std::string fixture_path(std::string_view name) {
    return std::string(NCHILBERT_FIXTURE_DIR) + "/" + std::string(name);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline cli::InputFile load_fixture(std::string_view name) { return cli::parse_input(read_file(fixture_path(name))); }

inline ComputationRequest request_from(const cli::InputFile& in, Mode mode, bool multigraded) {
    ComputationRequest req;
    req.alphabet = in.alphabet;
    req.generators = in.generators;
    req.kind = in.kind;
    req.mode = mode;
    req.multigraded = multigraded;
    return req;
}

inline bool starts_with(const Word& v, const Word& g) {
    return g.degree() <= v.degree() && std::equal(g.begin(), g.end(), v.begin());
}

inline bool occurs_in(const Word& v, const Word& g) {
    for (std::size_t pos = 0; pos + g.degree() <= v.degree(); ++pos)
        if (std::equal(g.begin(), g.end(), v.begin() + static_cast<std::ptrdiff_t>(pos))) return true;
    return false;
}

/// Random generator list: `count` words of degree 1..max_degree (duplicates allowed).
inline std::vector<Word> random_generators(std::mt19937_64& rng, std::size_t n, std::size_t count,
                                           std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(1, max_degree);
    std::uniform_int_distribution<unsigned> letter(0, static_cast<unsigned>(n - 1));
    std::vector<Word> out;
    for (std::size_t k = 0; k < count; ++k) {
        Word g;
        const std::size_t d = deg(rng);
        for (std::size_t j = 0; j < d; ++j) g.push_back(static_cast<Letter>(letter(rng)));
        out.push_back(std::move(g));
    }
    return out;
}

/// Random prefix-free set: draw words and keep those comparable to nothing kept so far.
inline std::vector<Word> random_prefix_free(std::mt19937_64& rng, std::size_t n, std::size_t max_count,
                                            std::size_t max_degree) {
    std::vector<Word> kept;
    for (const Word& g : random_generators(rng, n, max_count, max_degree)) {
        bool clash = false;
        for (const Word& k : kept) clash = clash || starts_with(g, k) || starts_with(k, g);
        if (!clash) kept.push_back(g);
    }
    return kept;
}

/// Membership straight from the definition, for an ideal
/// T·F-two-sided + P·F + B^{e+1}.
inline bool member_by_definition(const std::vector<Word>& two_sided, const std::vector<Word>& right,
                                 std::optional<unsigned> e, const Word& v) {
    if (e && v.degree() > *e) return true;
    for (const Word& g : right)
        if (starts_with(v, g)) return true;
    for (const Word& g : two_sided)
        if (occurs_in(v, g)) return true;
    return false;
}

} // namespace nchilbert::testing

#endif

#ifndef NCHILBERT_SERIES_HPP
#define NCHILBERT_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "nchilbert/ideals.hpp"
#include "nchilbert/orbit.hpp"
#include "nchilbert/polyring.hpp"
#include "nchilbert/schur.hpp"
#include "nchilbert/words.hpp"

namespace nchilbert {

enum class IdealKind { two_sided, right };

struct ExactMode {
    bool operator==(const ExactMode&) const = default;
};
/// Series of F / (I + B^{degree+1}).
struct TruncateMode {
    unsigned degree = 0;
    bool operator==(const TruncateMode&) const = default;
};
/// Generators are known only up to `bound`; the result is a guess.
struct DegreeBoundMode {
    unsigned bound = 0;
    bool operator==(const DegreeBoundMode&) const = default;
};
using Mode = std::variant<ExactMode, TruncateMode, DegreeBoundMode>;

struct ComputationRequest {
    Alphabet alphabet;
    std::vector<Word> generators;
    IdealKind kind = IdealKind::two_sided;
    Mode mode = ExactMode{};
    bool multigraded = false;
    bool affine = false;
    bool schur = false;
    std::size_t max_orbit = default_max_orbit;
};

struct ComputationResult {
    /// Univariate in t when graded, otherwise in t1..tn.
    RatFun series;
    std::size_t orbit_size = 0;
    std::size_t max_word_length = 0;
    bool heuristic = false;
    /// Degree-bound mode: smallest degree up to which two ideals were compared.
    std::optional<int> comparison_degree;
    /// The reduced orbit was acyclic and the back-substitution path was used.
    bool finite_dimensional = false;
    std::optional<SchurDecomposition> schur;
};

/// Throws invalid_mode when the request's options are inconsistent.
void validate(const ComputationRequest& req);

/// The input ideal with truncation level or knowledge bound applied.
MonomialIdeal build_ideal(const ComputationRequest& req);

ComputationResult hilbert_series(const ComputationRequest& req);

using OracleTable = std::map<MultiDegree, std::uint64_t>;

inline constexpr std::uint64_t default_enumeration_cap = 100'000'000;

/// Counts the words of degree <= d outside the ideal, per multidegree, by
/// exhaustive enumeration straight from the generator list. `req` must be in
/// truncate mode (d is its degree).
OracleTable normal_words_oracle(const ComputationRequest& req, std::uint64_t cap = default_enumeration_cap);

/// Oracle table as a polynomial: sum count * t^degree (specialized to t if `graded`).
MPoly oracle_polynomial(const OracleTable& table, std::size_t n, bool graded);

} // namespace nchilbert

#endif

#ifndef NCHILBERT_ORBIT_HPP
#define NCHILBERT_ORBIT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nchilbert/ideals.hpp"

namespace nchilbert {

inline constexpr std::size_t default_max_orbit = 10'000;

/// The orbit of an ideal under the colon operators, i.e. the automaton whose
/// states are the ideals and whose transitions are the single-letter colons.
///
/// Index 0 is the input ideal; indices follow breadth-first discovery order.
struct Orbit {
    std::size_t alphabet_size = 0;
    std::vector<MonomialIdeal> elements;
    /// transitions[k][i] = index of (elements[k] :_R x_i).
    std::vector<std::vector<std::size_t>> transitions;
    /// 0 for the unit ideal, 1 otherwise.
    std::vector<int> constants;
    std::optional<std::size_t> unit_index;
    /// Length of a shortest word reaching each element.
    std::vector<std::size_t> depth;
    std::size_t max_defining_word_length = 0;
    /// Degree-bound mode: smallest degree bound any equality test relied on.
    std::optional<int> min_comparison_degree;

    std::size_t size() const noexcept { return elements.size(); }
};

Orbit compute_orbit(const MonomialIdeal& ideal, std::size_t max_orbit = default_max_orbit);

/// 0/1 matrix given by its nonzero positions (row, column).
struct AdjacencyComponent {
    std::size_t size = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ones;

    int at(std::size_t row, std::size_t col) const;
    std::vector<int> row_sums() const;
};

/// A^{(i)} for every letter i.
std::vector<AdjacencyComponent> adjacency_components(const Orbit& orbit);

/// The orbit without its unit ideal. Transitions into the unit ideal are absorbed.
struct ReducedOrbit {
    std::size_t alphabet_size = 0;
    /// original[k] = index in the full orbit of reduced state k.
    std::vector<std::size_t> original;
    /// remap[j] = reduced index of full-orbit state j, none for the unit ideal.
    std::vector<std::optional<std::size_t>> remap;
    std::vector<std::vector<std::optional<std::size_t>>> transitions;

    std::size_t size() const noexcept { return original.size(); }
};

/// Throws empty_reduced_orbit when the orbit's ideal is the unit ideal.
ReducedOrbit reduced_orbit(const Orbit& orbit);

/// Topological order of the reduced transition graph (sources first, as
/// full-orbit indices), or none when it has a cycle. An order exists iff the
/// reduced adjacency matrix is nilpotent iff the quotient is finite-dimensional.
std::optional<std::vector<std::size_t>> nilpotency_order(const ReducedOrbit& reduced);

} // namespace nchilbert

#endif

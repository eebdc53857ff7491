#include "nchilbert/orbit.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "nchilbert/errors.hpp"

namespace nchilbert {

namespace {

/// Lookup of already discovered orbit elements. Exact ideals are hashed by
/// canonical key; ideals with a knowledge bound need the pairwise bounded test.
class ElementIndex {
public:
    explicit ElementIndex(const Orbit& orbit) : orbit_(orbit) {}

    std::optional<std::size_t> find(const MonomialIdeal& ideal, std::optional<int>& min_bound) const {
        if (!ideal.known_up_to()) {
            if (auto it = exact_.find(canonical_key(ideal)); it != exact_.end()) return it->second;
            return scan(ideal, bounded_, min_bound);
        }
        return scan(ideal, all_, min_bound);
    }

    void insert(const MonomialIdeal& ideal, std::size_t k) {
        all_.push_back(k);
        if (ideal.known_up_to())
            bounded_.push_back(k);
        else
            exact_.emplace(canonical_key(ideal), k);
    }

private:
    std::optional<std::size_t> scan(const MonomialIdeal& ideal, const std::vector<std::size_t>& candidates,
                                     std::optional<int>& min_bound) const {
        for (std::size_t k : candidates) {
            const MonomialIdeal& other = orbit_.elements[k];
            if (!ideal.is_unit() && !other.is_unit()) {
                auto ka = ideal.known_up_to(), kb = other.known_up_to();
                const int bound = std::min(ka.value_or(kb.value_or(0)), kb.value_or(ka.value_or(0)));
                min_bound = min_bound ? std::min(*min_bound, bound) : bound;
            }
            if (bounded_equal(ideal, other)) return k;
        }
        return std::nullopt;
    }

    const Orbit& orbit_;
    std::unordered_map<std::string, std::size_t> exact_;
    std::vector<std::size_t> bounded_;
    std::vector<std::size_t> all_;
};

} // namespace

Orbit compute_orbit(const MonomialIdeal& ideal, std::size_t max_orbit) {
    if (max_orbit == 0) throw Error(ErrorKind::invalid_argument, "max_orbit must be at least 1");
    Orbit orbit;
    orbit.alphabet_size = ideal.alphabet_size();
    const std::size_t n = orbit.alphabet_size;

    ElementIndex index(orbit);
    auto add = [&](MonomialIdeal j, std::size_t depth) {
        if (orbit.size() >= max_orbit)
            throw Error(ErrorKind::orbit_limit_exceeded,
                        "orbit exceeds " + std::to_string(max_orbit) +
                            " ideals (the ideal may not be regular; raise --max-orbit to continue)");
        const std::size_t k = orbit.size();
        if (j.is_unit()) orbit.unit_index = k;
        orbit.constants.push_back(j.is_unit() ? 0 : 1);
        orbit.depth.push_back(depth);
        orbit.max_defining_word_length = std::max(orbit.max_defining_word_length, depth);
        orbit.transitions.emplace_back(n, 0);
        index.insert(j, k);
        orbit.elements.push_back(std::move(j));
        return k;
    };

    add(ideal, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < n; ++x) {
            MonomialIdeal next = colon_var(orbit.elements[k], x);
            std::size_t target;
            if (auto found = index.find(next, orbit.min_comparison_degree)) {
                target = *found;
            } else {
                target = add(std::move(next), orbit.depth[k] + 1);
                queue.push_back(target);
            }
            orbit.transitions[k][x] = target;
        }
    }
    return orbit;
}

int AdjacencyComponent::at(std::size_t row, std::size_t col) const {
    for (auto [r, c] : ones)
        if (r == row && c == col) return 1;
    return 0;
}

std::vector<int> AdjacencyComponent::row_sums() const {
    std::vector<int> sums(size, 0);
    for (auto [r, c] : ones) ++sums[r];
    return sums;
}

std::vector<AdjacencyComponent> adjacency_components(const Orbit& orbit) {
    std::vector<AdjacencyComponent> out(orbit.alphabet_size);
    for (std::size_t i = 0; i < orbit.alphabet_size; ++i) {
        out[i].size = orbit.size();
        for (std::size_t k = 0; k < orbit.size(); ++k) out[i].ones.emplace_back(k, orbit.transitions[k][i]);
    }
    return out;
}

ReducedOrbit reduced_orbit(const Orbit& orbit) {
    if (orbit.unit_index && *orbit.unit_index == 0)
        throw Error(ErrorKind::empty_reduced_orbit, "the ideal is the unit ideal; its quotient is zero");
    ReducedOrbit reduced;
    reduced.alphabet_size = orbit.alphabet_size;
    reduced.remap.resize(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        if (orbit.unit_index == k) continue;
        reduced.remap[k] = reduced.original.size();
        reduced.original.push_back(k);
    }
    for (std::size_t k : reduced.original) {
        auto& row = reduced.transitions.emplace_back(orbit.alphabet_size);
        for (std::size_t i = 0; i < orbit.alphabet_size; ++i) row[i] = reduced.remap[orbit.transitions[k][i]];
    }
    return reduced;
}

std::optional<std::vector<std::size_t>> nilpotency_order(const ReducedOrbit& reduced) {
    // Iterative DFS; a gray-to-gray edge is a cycle.
    enum class Mark : unsigned char { white, gray, black };
    const std::size_t r = reduced.size();
    std::vector<Mark> mark(r, Mark::white);
    std::vector<std::size_t> postorder;
    postorder.reserve(r);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < r; ++root) {
        if (mark[root] != Mark::white) continue;
        stack.emplace_back(root, 0);
        mark[root] = Mark::gray;
        while (!stack.empty()) {
            auto& [k, next] = stack.back();
            if (next == reduced.alphabet_size) {
                mark[k] = Mark::black;
                postorder.push_back(k);
                stack.pop_back();
                continue;
            }
            auto target = reduced.transitions[k][next++];
            if (!target) continue;
            if (mark[*target] == Mark::gray) return std::nullopt;
            if (mark[*target] == Mark::white) {
                mark[*target] = Mark::gray;
                stack.emplace_back(*target, 0);
            }
        }
    }
    std::vector<std::size_t> order;
    order.reserve(r);
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) order.push_back(reduced.original[*it]);
    return order;
}

} // namespace nchilbert

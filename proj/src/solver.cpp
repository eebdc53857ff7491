#include "nchilbert/solver.hpp"

#include <map>

#include "nchilbert/errors.hpp"

namespace nchilbert {

namespace {

std::size_t series_vars(const Orbit& orbit, bool multigraded) { return multigraded ? orbit.alphabet_size : 1; }

MPoly weight(std::size_t nvars, std::size_t letter, bool multigraded) {
    return MPoly::variable(nvars, multigraded ? letter : 0);
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_constant()) return a * (Rational(1) / b.constant_term());
    auto q = divide_exact(a, b);
    if (!q) throw Error(ErrorKind::invalid_argument, "internal error: inexact fraction-free division");
    return std::move(*q);
}

bool is_input_heuristic(const Orbit& orbit) {
    return !orbit.elements.empty() && orbit.elements.front().known_up_to().has_value();
}

} // namespace

SeriesSolution solve_rational(const Orbit& orbit, bool multigraded) {
    const std::size_t nv = series_vars(orbit, multigraded);
    SeriesSolution out;
    out.multigraded = multigraded;
    out.heuristic = is_input_heuristic(orbit);
    out.entries.assign(orbit.size(), RatFun(nv));

    // Index the non-unit states; the unit state contributes H = 0.
    std::vector<std::size_t> states;
    std::vector<std::ptrdiff_t> local(orbit.size(), -1);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        if (orbit.unit_index == k) continue;
        local[k] = static_cast<std::ptrdiff_t>(states.size());
        states.push_back(k);
    }
    const std::size_t m = states.size();

    using Row = std::map<std::size_t, MPoly>;
    std::vector<Row> rows(m);
    std::vector<MPoly> rhs(m, MPoly::constant(nv, 1));
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t k = states[r];
        rows[r].emplace(r, MPoly::constant(nv, 1));
        for (std::size_t i = 0; i < orbit.alphabet_size; ++i) {
            const std::ptrdiff_t l = local[orbit.transitions[k][i]];
            if (l < 0) continue;
            auto [it, inserted] = rows[r].try_emplace(static_cast<std::size_t>(l), nv);
            it->second -= weight(nv, i, multigraded);
            if (it->second.is_zero()) rows[r].erase(it);
        }
    }

    std::vector<bool> used(m, false);
    std::vector<std::size_t> pivot_row(m);
    MPoly previous = MPoly::constant(nv, 1);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t best = m;
        for (std::size_t r = 0; r < m; ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            if (best == m || it->second.term_count() < rows[best].at(col).term_count()) best = r;
        }
        if (best == m) throw Error(ErrorKind::invalid_argument, "internal error: singular orbit system");
        used[best] = true;
        pivot_row[col] = best;
        const MPoly pivot = rows[best].at(col);
        const bool rescale = !(pivot == previous);

        for (std::size_t r = 0; r < m; ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) {
                if (!rescale) continue;
                for (auto& [j, v] : rows[r]) v = exact_div(pivot * v, previous);
                rhs[r] = exact_div(pivot * rhs[r], previous);
                continue;
            }
            const MPoly factor = std::move(it->second);
            rows[r].erase(it);
            Row updated;
            for (auto& [j, v] : rows[r]) updated.emplace(j, pivot * v);
            for (const auto& [j, v] : rows[best]) {
                if (j <= col) continue;
                auto [u, inserted] = updated.try_emplace(j, nv);
                u->second -= factor * v;
            }
            Row cleaned;
            for (auto& [j, v] : updated) {
                if (v.is_zero()) continue;
                cleaned.emplace(j, exact_div(v, previous));
            }
            rows[r] = std::move(cleaned);
            rhs[r] = exact_div(pivot * rhs[r] - factor * rhs[best], previous);
        }
        previous = pivot;
    }

    // y = det * H, with det the last pivot.
    const MPoly& det = previous;
    std::vector<MPoly> y(m, MPoly(nv));
    for (std::size_t col = m; col-- > 0;) {
        const Row& row = rows[pivot_row[col]];
        MPoly s = det * rhs[pivot_row[col]];
        for (const auto& [j, v] : row)
            if (j > col) s -= v * y[j];
        y[col] = exact_div(s, row.at(col));
    }
    bool polynomial = true;
    for (std::size_t r = 0; r < m; ++r) {
        out.entries[states[r]] = RatFun(std::move(y[r]), det);
        polynomial = polynomial && out.entries[states[r]].is_polynomial();
    }
    out.polynomial = polynomial;
    return out;
}

SeriesSolution solve_polynomial(const Orbit& orbit, std::span<const std::size_t> order, bool multigraded) {
    const std::size_t nv = series_vars(orbit, multigraded);
    const std::size_t expected = orbit.size() - (orbit.unit_index ? 1 : 0);
    if (order.size() != expected) throw Error(ErrorKind::order_invalid, "order does not list every non-unit state");
    std::vector<std::ptrdiff_t> position(orbit.size(), -1);
    for (std::size_t p = 0; p < order.size(); ++p) {
        const std::size_t k = order[p];
        if (k >= orbit.size() || orbit.unit_index == k || position[k] >= 0)
            throw Error(ErrorKind::order_invalid, "order is not a permutation of the non-unit states");
        position[k] = static_cast<std::ptrdiff_t>(p);
    }
    for (std::size_t k : order)
        for (std::size_t l : orbit.transitions[k])
            if (orbit.unit_index != l && position[l] <= position[k])
                throw Error(ErrorKind::order_invalid, "order is not topological for the orbit transitions");

    std::vector<MPoly> series(orbit.size(), MPoly(nv));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t k = *it;
        MPoly h = MPoly::constant(nv, orbit.constants[k]);
        for (std::size_t i = 0; i < orbit.alphabet_size; ++i) {
            const std::size_t l = orbit.transitions[k][i];
            if (orbit.unit_index == l) continue;
            h += weight(nv, i, multigraded) * series[l];
        }
        series[k] = std::move(h);
    }
    SeriesSolution out;
    out.multigraded = multigraded;
    out.polynomial = true;
    out.heuristic = is_input_heuristic(orbit);
    out.entries.reserve(orbit.size());
    for (auto& p : series) out.entries.emplace_back(std::move(p));
    return out;
}

bool residual_vanishes(const Orbit& orbit, const SeriesSolution& solution) {
    if (solution.entries.size() != orbit.size()) return false;
    const std::size_t nv = series_vars(orbit, solution.multigraded);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        RatFun lhs = solution.entries[k] - RatFun(MPoly::constant(nv, orbit.constants[k]));
        for (std::size_t i = 0; i < orbit.alphabet_size; ++i)
            lhs = lhs - RatFun(weight(nv, i, solution.multigraded)) * solution.entries[orbit.transitions[k][i]];
        if (!lhs.is_zero()) return false;
    }
    return true;
}

RatFun hs_finitely_presented(std::span<const MultiDegree> shifts, std::span<const MultiDegree> relations,
                             std::size_t n) {
    MPoly num(n);
    for (const auto& d : shifts) {
        if (d.size() != n) throw Error(ErrorKind::invalid_argument, "shift has wrong length");
        num += MPoly::power_product(d.counts);
    }
    for (const auto& d : relations) {
        if (d.size() != n) throw Error(ErrorKind::invalid_argument, "relation degree has wrong length");
        num -= MPoly::power_product(d.counts);
    }
    MPoly den = MPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) den -= MPoly::variable(n, i);
    return RatFun(std::move(num), std::move(den));
}

RatFun direct_sum(std::span<const ShiftedSeries> parts) {
    if (parts.empty()) throw Error(ErrorKind::invalid_argument, "direct sum of no parts");
    const std::size_t n = parts.front().series.nvars();
    RatFun sum(n);
    for (const auto& part : parts) {
        if (part.series.nvars() != n || part.shift.size() != n)
            throw Error(ErrorKind::invalid_argument, "direct sum parts over different variable counts");
        sum = sum + RatFun(MPoly::power_product(part.shift.counts)) * part.series;
    }
    return sum;
}

} // namespace nchilbert

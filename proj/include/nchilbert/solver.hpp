#ifndef NCHILBERT_SOLVER_HPP
#define NCHILBERT_SOLVER_HPP

#include <span>
#include <vector>

#include "nchilbert/orbit.hpp"
#include "nchilbert/polyring.hpp"
#include "nchilbert/words.hpp"

namespace nchilbert {

/// Hilbert series of every cyclic module F/I_k of an orbit; entry 0 is the
/// series of the input. Univariate (t) unless multigraded.
struct SeriesSolution {
    std::vector<RatFun> entries;
    bool multigraded = false;
    bool polynomial = false;
    bool heuristic = false;
};

/// Solves (E - sum_i t_i A^{(i)}) H = C exactly by fraction-free elimination
/// over the polynomial ring. The unit ideal's entry is fixed to 0 up front
/// (its row reads (1 - sum t_i) H = 0); the remaining system is eliminated
/// column by column, choosing in each column the active entry with fewest
/// terms (ties to the lowest row).
SeriesSolution solve_rational(const Orbit& orbit, bool multigraded);

/// Back-substitution H_k = c_k + sum_i t_i H_{l(k,i)} along a topological order
/// of the reduced orbit (as returned by nilpotency_order). Throws order_invalid
/// if `order` is not a topological order of the non-unit states.
SeriesSolution solve_polynomial(const Orbit& orbit, std::span<const std::size_t> order, bool multigraded);

/// True iff (E - M) H - C vanishes identically for the given solution.
bool residual_vanishes(const Orbit& orbit, const SeriesSolution& solution);

/// (sum_i t^{shift_i} - sum_j t^{relation_j}) / (1 - (t1 + ... + tn)).
RatFun hs_finitely_presented(std::span<const MultiDegree> shifts, std::span<const MultiDegree> relations,
                             std::size_t n);

struct ShiftedSeries {
    MultiDegree shift;
    RatFun series;
};

/// sum_i t^{shift_i} HS_i.
RatFun direct_sum(std::span<const ShiftedSeries> parts);

} // namespace nchilbert

#endif

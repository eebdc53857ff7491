#include "nchilbert/series.hpp"

#include <algorithm>
#include <unordered_set>

#include "nchilbert/errors.hpp"
#include "nchilbert/solver.hpp"

namespace nchilbert {

void validate(const ComputationRequest& req) {
    if (req.alphabet.size() == 0) throw Error(ErrorKind::invalid_argument, "empty alphabet");
    if (req.affine && req.multigraded)
        throw Error(ErrorKind::invalid_mode, "affine series are univariate; --affine excludes --multigraded");
    if (req.schur && !req.multigraded)
        throw Error(ErrorKind::invalid_mode, "Schur decomposition needs the multigraded series");
    if (const auto* bound = std::get_if<DegreeBoundMode>(&req.mode)) {
        for (const Word& g : req.generators)
            if (g.degree() > bound->bound)
                throw Error(ErrorKind::invalid_mode, "degree bound " + std::to_string(bound->bound) +
                                                         " is below the generator degree " +
                                                         std::to_string(g.degree()));
    }
    for (const Word& g : req.generators)
        for (Letter l : g)
            if (l >= req.alphabet.size()) throw Error(ErrorKind::invalid_argument, "generator letter out of range");
}

MonomialIdeal build_ideal(const ComputationRequest& req) {
    const std::size_t n = req.alphabet.size();
    MonomialIdeal ideal = req.kind == IdealKind::two_sided ? MonomialIdeal::two_sided(req.generators, n)
                                                          : MonomialIdeal::right(req.generators, n);
    if (const auto* t = std::get_if<TruncateMode>(&req.mode)) ideal = ideal.truncated(t->degree);
    if (const auto* b = std::get_if<DegreeBoundMode>(&req.mode))
        ideal = ideal.with_knowledge_bound(static_cast<int>(b->bound));
    return ideal;
}

ComputationResult hilbert_series(const ComputationRequest& req) {
    validate(req);
    const std::size_t n = req.alphabet.size();
    const MonomialIdeal ideal = build_ideal(req);
    const Orbit orbit = compute_orbit(ideal, req.max_orbit);

    ComputationResult out;
    out.orbit_size = orbit.size();
    out.max_word_length = orbit.max_defining_word_length;
    out.heuristic = std::holds_alternative<DegreeBoundMode>(req.mode);
    out.comparison_degree = orbit.min_comparison_degree;

    const std::size_t nv = req.multigraded ? n : 1;
    if (ideal.is_unit()) {
        out.series = RatFun(nv);
        out.finite_dimensional = true;
    } else {
        const ReducedOrbit reduced = reduced_orbit(orbit);
        const auto order = nilpotency_order(reduced);
        out.finite_dimensional = order.has_value();
        const SeriesSolution solution = order ? solve_polynomial(orbit, *order, req.multigraded)
                                              : solve_rational(orbit, req.multigraded);
        out.series = solution.entries.front();
    }
    if (req.affine) {
        MPoly one_minus_t = MPoly::constant(1, 1) - MPoly::variable(1, 0);
        out.series = out.series * RatFun(MPoly::constant(1, 1), std::move(one_minus_t));
    }
    if (req.schur) {
        if (!out.series.is_polynomial())
            throw Error(ErrorKind::invalid_mode,
                        "Schur decomposition needs a polynomial series (use --truncate or a finite-dimensional input)");
        out.schur = decompose(out.series.as_polynomial());
    }
    return out;
}

OracleTable normal_words_oracle(const ComputationRequest& req, std::uint64_t cap) {
    const auto* trunc = std::get_if<TruncateMode>(&req.mode);
    if (!trunc) throw Error(ErrorKind::invalid_mode, "the normal-word oracle needs a truncation degree");
    const std::size_t n = req.alphabet.size();
    const unsigned d = trunc->degree;
    {
        std::uint64_t words = 1;
        for (unsigned k = 0; k < d; ++k) {
            if (words > cap / n + 1) throw Error(ErrorKind::enumeration_budget, "enumeration exceeds the word cap");
            words *= n;
        }
        if (words > cap) throw Error(ErrorKind::enumeration_budget, "enumeration exceeds the word cap");
    }

    // Membership straight from the definition: some generator is a factor
    // (two-sided) or a prefix (right) of the word.
    const std::unordered_set<Word, WordHash> gens(req.generators.begin(), req.generators.end());
    std::vector<std::size_t> lengths;
    for (const Word& g : gens) lengths.push_back(g.degree());
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    const bool two_sided = req.kind == IdealKind::two_sided;
    auto in_ideal = [&](const Word& w) {
        for (std::size_t len : lengths) {
            if (len > w.degree()) break;
            const std::size_t last_start = two_sided ? w.degree() - len : 0;
            for (std::size_t pos = 0; pos <= last_start; ++pos)
                if (gens.contains(w.sub(pos, len))) return true;
        }
        return false;
    };

    OracleTable table;
    if (in_ideal(Word{})) return table;
    // Normal words are closed under taking prefixes, so a depth-first walk
    // that stops at ideal members visits all of them.
    std::vector<Word> stack{Word{}};
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        ++table[multidegree(w, n)];
        if (w.degree() == d) continue;
        for (Letter x = 0; x < n; ++x) {
            Word child = w;
            child.push_back(x);
            if (!in_ideal(child)) stack.push_back(std::move(child));
        }
    }
    return table;
}

MPoly oracle_polynomial(const OracleTable& table, std::size_t n, bool graded) {
    MPoly p(graded ? 1 : n);
    for (const auto& [deg, count] : table) {
        if (graded)
            p.add_term({static_cast<std::uint32_t>(deg.total())}, Rational(static_cast<unsigned long>(count)));
        else
            p.add_term(deg.counts, Rational(static_cast<unsigned long>(count)));
    }
    return p;
}

} // namespace nchilbert

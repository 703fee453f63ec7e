#include "cspace/realroots.hpp"

#include <algorithm>

#include "cspace/zerodim.hpp"

namespace cspace {

std::string RationalPoint::str(const RingPtr& ring) const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(coords[i]);
    }
    s += ")";
    (void)ring;
    return s;
}

ZeroDimSolution solve_zero_dim(const Ideal& I, std::uint64_t seed, Budget budget) {
    ZeroDimSolution out;
    out.seed = seed;
    QuotientBasis qb = quotient_basis(I, budget);  // throws when not zero-dimensional
    out.complex_count = vector_space_dimension(qb);
    if (out.complex_count == 0) return out;  // unit ideal: no solutions

    for (const auto& comp : zero_dim_decompose(I, seed, budget)) {
        out.real_count += comp.real_point_count;
        if (comp.point_count == 1) {
            auto pt = rational_point_of_maximal(comp.radical, budget);
            if (!pt) throw std::logic_error("single-point component without rational point");
            // exactness check: every generator vanishes
            for (const auto& g : I.gens)
                if (!is_zero(g.eval(*pt)))
                    throw std::logic_error("extracted point does not satisfy the ideal");
            out.rational_points.push_back(RationalPoint{std::move(*pt)});
        } else if (comp.real_point_count > 0) {
            out.irrational_reals = true;  // real points of degree > 1 orbits
        }
    }
    std::sort(out.rational_points.begin(), out.rational_points.end(),
              [](const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; });
    return out;
}

RealDimProbeResult real_dim_probe(const Ideal& I, std::uint64_t seed, int slices, Budget budget) {
    RealDimProbeResult res;
    res.seed = seed;
    res.slices = slices;
    res.complex_dim = dimension(I, budget);
    if (res.complex_dim <= 0)
        throw std::invalid_argument("real_dim_probe expects a positive-dimensional ideal");

    SplitMix64 rng(seed ^ 0x9dbe5ca1ULL);
    const std::size_t n = I.ring->size();
    int verdicts = 0;
    try {
        for (int s = 0; s < slices; ++s) {
            // cut down to dimension zero with complex_dim random hyperplanes;
            // redraw (bounded) when a slice is degenerate
            for (int attempt = 0; attempt < 6; ++attempt) {
                Ideal J = I;
                for (int c = 0; c < res.complex_dim; ++c) {
                    Polynomial plane = Polynomial::constant(I.ring, Rat(-rng.next_long(1, 9)));
                    for (std::size_t v = 0; v < n; ++v)
                        plane = plane + Polynomial::variable(I.ring, static_cast<int>(v))
                                            .scaled(Rat(rng.next_long(-9, 9)));
                    J = ideal_sum(J, Ideal(I.ring, {plane}));
                }
                if (is_unit_ideal(J, budget)) continue;       // slice missed the variety
                if (dimension(J, budget) != 0) continue;      // degenerate slice
                ZeroDimSolution sol = solve_zero_dim(J, seed, budget);
                if (sol.complex_count == 0) continue;
                ++verdicts;
                if (sol.real_count > 0) {
                    res.real_points_isolated = Isolated::No;
                    return res;
                }
                break;
            }
        }
    } catch (const budget_error&) {
        res.real_points_isolated = Isolated::Unknown;
        return res;
    }
    res.real_points_isolated = verdicts > 0 ? Isolated::Yes : Isolated::Unknown;
    return res;
}

}  // namespace cspace

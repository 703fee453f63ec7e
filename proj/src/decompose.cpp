#include "cspace/decompose.hpp"

#include <algorithm>
#include <map>

#include "cspace/multigcd.hpp"
#include "cspace/singular.hpp"
#include "cspace/univar.hpp"
#include "cspace/zerodim.hpp"

namespace cspace {

namespace {

Ideal unit_ideal(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, Rat(1))});
}

std::string ideal_key(const Ideal& I, Budget budget) {
    std::string s;
    for (const auto& g : canonical_generators(I, budget)) s += g.str() + ";";
    return s;
}

// leading coefficient of g in Q[U] w.r.t. the dependent block of a block order
Polynomial dep_leading_coeff(const Polynomial& g, const std::vector<bool>& is_dep,
                             const MonomialOrder& ord) {
    // dep-part of the leading monomial
    Monomial lead = g.leading_term(ord).mono;
    Monomial dep_part(lead.size());
    for (std::size_t i = 0; i < lead.size(); ++i)
        if (is_dep[i]) dep_part.set(i, lead[i]);
    std::map<Monomial, Rat> acc;
    for (const auto& t : g.terms()) {
        Monomial dp(t.mono.size()), rest(t.mono.size());
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (is_dep[i])
                dp.set(i, t.mono[i]);
            else
                rest.set(i, t.mono[i]);
        }
        if (dp == dep_part) acc[rest] = t.coef;
    }
    return Polynomial::from_terms(g.ring(), std::move(acc));
}

// Radical of an ideal that is zero-dimensional over K = Q(U) and saturated
// w.r.t. all denominators: add squarefree (over K) eliminants of each
// dependent variable, then contract by saturating at the leading
// coefficients.
Ideal radical_via_function_field(const Ideal& I, const std::vector<int>& indep, Budget budget) {
    const std::size_t n = I.ring->size();
    std::vector<bool> is_indep(n, false);
    for (int v : indep) is_indep[static_cast<std::size_t>(v)] = true;

    std::vector<Polynomial> extra;
    for (std::size_t y = 0; y < n; ++y) {
        if (is_indep[y]) continue;
        // eliminate all other dependent variables
        std::vector<int> front;
        for (std::size_t v = 0; v < n; ++v)
            if (!is_indep[v] && v != y) front.push_back(static_cast<int>(v));
        Ideal elim = eliminate(I, front, budget);
        // gcd over Q(U)[y] of the generators  ->  minimal polynomial (up to units)
        Polynomial m = Polynomial::zero(elim.ring);
        int yv = elim.ring->index_of(I.ring->vars[y]);
        for (const auto& g : elim.gens) {
            m = poly_gcd(m, g);
            if (!m.is_zero() && m.degree_in(yv) == 0) break;
        }
        if (m.is_zero() || m.degree_in(yv) == 0)
            throw decompose_error("function-field eliminant missing for variable " +
                                  I.ring->vars[y]);
        Polynomial s = mv_squarefree_in(m, yv);
        if (s.degree_in(yv) < m.degree_in(yv)) extra.push_back(s.map_to(I.ring));
    }
    Ideal J1 = I;
    for (auto& e : extra) J1 = ideal_sum(J1, Ideal(I.ring, {e}));

    // contraction: saturate at the product of dependent leading coefficients
    std::vector<int> deps;
    for (std::size_t v = 0; v < n; ++v)
        if (!is_indep[v]) deps.push_back(static_cast<int>(v));
    MonomialOrder block = MonomialOrder::block(deps, n);
    GroebnerBasis gb = buchberger(J1, block, budget);
    std::vector<bool> is_dep(n, false);
    for (int v : deps) is_dep[static_cast<std::size_t>(v)] = true;
    Polynomial h1 = Polynomial::constant(I.ring, Rat(1));
    for (const auto& g : gb.elems) {
        Polynomial lc = dep_leading_coeff(g, is_dep, block);
        if (lc.is_constant()) continue;
        Polynomial q = poly_gcd(h1, lc);
        h1 = exact_divide(h1 * lc, q);  // lcm
    }
    if (h1.is_constant()) return Ideal(I.ring, canonical_generators(J1, budget));
    return saturate(J1, h1, budget);
}

Ideal radical_rec(const Ideal& I, Budget budget, int depth) {
    if (depth > 50) throw decompose_error("radical recursion too deep");
    if (I.is_zero_ideal()) return I;
    if (is_unit_ideal(I, budget)) return unit_ideal(I.ring);

    std::vector<int> indep = max_independent_set(I, budget);
    if (indep.empty()) {
        Ideal r = zero_dim_radical(I, budget);
        return Ideal(I.ring, canonical_generators(r, budget));
    }

    // h: product of dependent-block leading coefficients of a block basis
    const std::size_t n = I.ring->size();
    std::vector<bool> is_indep(n, false);
    for (int v : indep) is_indep[static_cast<std::size_t>(v)] = true;
    std::vector<int> deps;
    for (std::size_t v = 0; v < n; ++v)
        if (!is_indep[v]) deps.push_back(static_cast<int>(v));
    MonomialOrder block = MonomialOrder::block(deps, n);
    GroebnerBasis gb = buchberger(I, block, budget);
    std::vector<bool> is_dep(n, false);
    for (int v : deps) is_dep[static_cast<std::size_t>(v)] = true;
    Polynomial h = Polynomial::constant(I.ring, Rat(1));
    for (const auto& g : gb.elems) {
        Polynomial lc = dep_leading_coeff(g, is_dep, block);
        if (lc.is_constant()) continue;
        Polynomial q = poly_gcd(h, lc);
        h = exact_divide(h * lc, q);  // lcm of the leading coefficients
    }

    Ideal sat = h.is_constant() ? I : saturate(I, h, budget);
    bool faithful = h.is_constant() || ideal_equal(sat, I, budget);
    Ideal r1 = radical_via_function_field(sat, indep, budget);
    if (faithful) return Ideal(I.ring, canonical_generators(r1, budget));

    // components killed by inverting h live in V(h): recurse on I + <h>
    Ideal r2 = radical_rec(ideal_sum(I, Ideal(I.ring, {h})), budget, depth + 1);
    Ideal meet = ideal_intersect(r1, r2, budget);
    return Ideal(I.ring, canonical_generators(meet, budget));
}

}  // namespace

Ideal radical(const Ideal& I, Budget budget) { return radical_rec(I, budget, 0); }

bool is_radical(const Ideal& I, Budget budget) {
    if (is_unit_ideal(I, budget))
        throw std::invalid_argument("is_radical: ideal must be proper");
    return ideal_equal(I, radical(I, budget), budget);
}

namespace {

// All nontrivial split candidates harvested from an ideal's generators and
// Groebner basis elements.
std::vector<Polynomial> splitter_candidates(const Ideal& I, Budget budget) {
    std::vector<Polynomial> cands;
    auto add_from = [&cands](const Polynomial& p) {
        for (auto& f : candidate_factors(p)) {
            bool dup = false;
            for (const auto& c : cands)
                if (c == f) {
                    dup = true;
                    break;
                }
            if (!dup) cands.push_back(std::move(f));
        }
    };
    for (const auto& g : I.gens) add_from(g);
    for (const auto& g : canonical_generators(I, budget)) add_from(g);
    return cands;
}

// minors-based singular ideal used for splitting (size n - dim)
std::vector<Polynomial> singular_splitters(const Ideal& I, int dim, Budget budget) {
    const int n = static_cast<int>(I.ring->size());
    const int k = n - dim;
    if (k <= 0) return {};
    Ideal slim = slim_generators(I, budget);
    Ideal minors = jacobian_minors_ideal(slim, k, budget);
    Ideal sing = ideal_sum(slim, minors);
    if (is_unit_ideal(sing, budget)) return {};
    return canonical_generators(sing, budget);
}

}  // namespace

Decomposition primary_decomposition(const Ideal& I, std::uint64_t seed, Budget budget) {
    if (is_unit_ideal(I, budget))
        throw std::invalid_argument("primary_decomposition: ideal must be proper");

    Decomposition result;
    result.input = I;
    result.seed = seed;

    std::vector<Ideal> work{I};
    std::vector<std::string> seen;
    std::vector<PrimaryComponent> comps;

    while (!work.empty()) {
        Ideal J = std::move(work.back());
        work.pop_back();
        if (is_unit_ideal(J, budget)) continue;
        std::string key = ideal_key(J, budget);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);

        int dim = dimension(J, budget);
        if (dim == 0) {
            for (auto& zd : zero_dim_decompose(J, seed, budget)) {
                PrimaryComponent c;
                c.primary = std::move(zd.primary);
                c.associated_prime = std::move(zd.radical);
                c.dim = 0;
                c.is_prime = zd.is_prime;
                c.prime_certified = true;
                comps.push_back(std::move(c));
            }
            continue;
        }

        // find a splitter f with J : f^inf notin {J, <1>}
        std::optional<Polynomial> splitter;
        std::optional<Ideal> sat;
        auto try_candidates = [&](const std::vector<Polynomial>& cands) {
            for (const auto& f : cands) {
                if (f.is_constant()) continue;
                Ideal s = saturate(J, f, budget);
                if (is_unit_ideal(s, budget)) continue;  // f vanishes on V(J)
                if (ideal_equal(s, J, budget)) continue;  // f is a nonzerodivisor
                splitter = f;
                sat = std::move(s);
                return true;
            }
            return false;
        };
        if (!try_candidates(splitter_candidates(J, budget)))
            try_candidates(singular_splitters(J, dim, budget));

        if (splitter) {
            int m = saturation_exponent(J, *splitter, *sat, budget);
            work.push_back(std::move(*sat));
            work.push_back(ideal_sum(J, Ideal(J.ring, {splitter->pow(static_cast<unsigned>(m))})));
            continue;
        }

        // no splitter: J is reported as one component
        PrimaryComponent c;
        c.primary = Ideal(J.ring, canonical_generators(J, budget));
        Ideal rad = radical(J, budget);
        c.associated_prime = Ideal(J.ring, canonical_generators(rad, budget));
        c.dim = dim;
        c.is_prime = ideal_equal(c.primary, c.associated_prime, budget);
        // principal with an irreducible-certified generator would also
        // qualify; positive-dimensional components are otherwise honest
        // "not certified"
        c.prime_certified = false;
        if (c.primary.gens.size() == 1) {
            const Polynomial& g = c.primary.gens[0];
            int used = -1;
            bool univar = true;
            for (std::size_t v = 0; v < J.ring->size() && univar; ++v) {
                if (!g.uses_var(static_cast<int>(v))) continue;
                if (used >= 0)
                    univar = false;
                else
                    used = static_cast<int>(v);
            }
            if (univar && used >= 0 && u_is_irreducible(upoly_from(g, used)))
                c.prime_certified = true;
            if (g.total_degree() == 1) c.prime_certified = true;  // linear form
        }
        comps.push_back(std::move(c));
    }

    if (comps.empty()) throw decompose_error("decomposition produced no components");

    // merge components sharing an associated prime (intersection stays primary)
    std::vector<PrimaryComponent> merged;
    for (auto& c : comps) {
        bool fused = false;
        for (auto& m : merged) {
            if (m.dim == c.dim && ideal_equal(m.associated_prime, c.associated_prime, budget)) {
                Ideal meet = ideal_intersect(m.primary, c.primary, budget);
                m.primary = Ideal(meet.ring, canonical_generators(meet, budget));
                m.is_prime = ideal_equal(m.primary, m.associated_prime, budget);
                fused = true;
                break;
            }
        }
        if (!fused) merged.push_back(std::move(c));
    }

    // irredundancy: drop any component whose removal keeps the intersection
    auto intersect_all = [&](const std::vector<PrimaryComponent>& cs,
                             std::size_t skip) -> std::optional<Ideal> {
        std::optional<Ideal> acc;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i == skip) continue;
            acc = acc ? ideal_intersect(*acc, cs[i].primary, budget) : cs[i].primary;
        }
        return acc;
    };
    bool changed = true;
    while (changed && merged.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < merged.size(); ++i) {
            auto without = intersect_all(merged, i);
            if (without && ideal_equal(*without, I, budget)) {
                merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    // validation: intersection of all components must reproduce the input
    auto all = intersect_all(merged, merged.size());
    if (!all || !ideal_equal(*all, I, budget))
        throw decompose_error("decomposition validation failed: intersection != input");

    std::sort(merged.begin(), merged.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        std::string ka, kb;
        for (const auto& g : a.primary.gens) ka += g.str() + ";";
        for (const auto& g : b.primary.gens) kb += g.str() + ";";
        return ka < kb;
    });
    result.components = std::move(merged);
    return result;
}

std::vector<std::pair<std::size_t, std::size_t>> component_inclusions(const Decomposition& d,
                                                                      Budget budget) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        for (std::size_t j = 0; j < d.components.size(); ++j) {
            if (i == j) continue;
            if (ideal_contains(d.components[i].associated_prime,
                               d.components[j].associated_prime, budget))
                pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

}  // namespace cspace

#include "cspace/zerodim.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace cspace {

namespace {

// standard monomials of a zero-dimensional staircase, sorted structurally
std::vector<Monomial> staircase(const GroebnerBasis& gb, const RingPtr& ring) {
    const std::size_t n = ring->size();
    std::vector<Monomial> lms;
    for (const auto& e : gb.elems) lms.push_back(e.leading_term(gb.order).mono);

    // bound per variable: minimal pure power x_i^d in <lms>
    std::vector<int> bound(n, -1);
    for (const auto& m : lms) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0) {
                if (var >= 0) {
                    pure = false;
                    break;
                }
                var = static_cast<int>(i);
            }
        }
        if (pure && var >= 0) {
            int d = m[static_cast<std::size_t>(var)];
            auto& b = bound[static_cast<std::size_t>(var)];
            if (b < 0 || d < b) b = d;
        }
        if (pure && var < 0) return {};  // 1 in ideal: empty quotient
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw not_zero_dimensional("ideal is not zero-dimensional (variable " + ring->vars[i] +
                                       " unbounded)");

    std::vector<Monomial> result;
    Monomial cur(n);
    auto divisible_by_some_lm = [&lms](const Monomial& m) {
        for (const auto& l : lms)
            if (mono_divides(l, m)) return true;
        return false;
    };
    auto rec = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            if (!divisible_by_some_lm(cur)) result.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[var]; ++e) {
            cur.set(var, e);
            self(self, var + 1);
        }
        cur.set(var, 0);
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

QuotientBasis quotient_basis(const Ideal& I, Budget budget) {
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(), budget);
    if (gb.contains_one()) return QuotientBasis{std::move(gb), {}};
    if (gb.elems.empty())
        throw not_zero_dimensional("zero ideal is not zero-dimensional in a nonempty ring");
    QuotientBasis qb;
    qb.monos = staircase(gb, I.ring);
    qb.gb = std::move(gb);
    return qb;
}

UPoly minpoly_element(const QuotientBasis& qb, const Polynomial& f, Budget budget) {
    const RingPtr& ring = qb.gb.ring;
    const std::size_t dim = qb.monos.size();
    if (dim == 0) return UPoly({Rat(1)});  // unit ideal: minpoly of anything is 1

    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i) index.emplace(qb.monos[i], i);

    auto to_vec = [&](const Polynomial& p) {
        std::vector<Rat> v(dim, Rat(0));
        for (const auto& t : p.terms()) {
            auto it = index.find(t.mono);
            if (it == index.end()) throw std::logic_error("normal form outside staircase");
            v[it->second] = t.coef;
        }
        return v;
    };

    // rows: normal forms of f^k in the staircase basis; find first dependence
    std::vector<std::vector<Rat>> rows;      // echelonized
    std::vector<std::vector<Rat>> combos;    // matching combination coefficients
    std::vector<long> pivots;
    Polynomial power = Polynomial::constant(ring, Rat(1));
    for (std::size_t k = 0;; ++k) {
        budget.charge();
        std::vector<Rat> vec = to_vec(power);
        std::vector<Rat> combo(k + 1, Rat(0));
        combo[k] = Rat(1);
        // eliminate against existing rows
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto p = static_cast<std::size_t>(pivots[r]);
            if (is_zero(vec[p])) continue;
            Rat factor = vec[p];
            for (std::size_t c = 0; c < dim; ++c) vec[c] -= factor * rows[r][c];
            for (std::size_t c = 0; c < combos[r].size() && c <= k; ++c)
                combo[c] -= factor * combos[r][c];
        }
        long piv = -1;
        for (std::size_t c = 0; c < dim; ++c)
            if (!is_zero(vec[c])) {
                piv = static_cast<long>(c);
                break;
            }
        if (piv < 0) {
            // combo gives the minimal polynomial coefficients
            return UPoly(std::move(combo));
        }
        Rat lead = vec[static_cast<std::size_t>(piv)];
        for (auto& x : vec) x /= lead;
        for (auto& x : combo) x /= lead;
        rows.push_back(std::move(vec));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
        if (k > dim) throw std::logic_error("minpoly search exceeded quotient dimension");
        power = normal_form(power * f, qb.gb, budget);
    }
}

Ideal zero_dim_radical(const Ideal& I, Budget budget) {
    QuotientBasis qb = quotient_basis(I, budget);
    if (qb.monos.empty()) return I;  // unit ideal
    std::vector<Polynomial> gens = I.gens;
    for (std::size_t v = 0; v < I.ring->size(); ++v) {
        UPoly m = minpoly_element(qb, Polynomial::variable(I.ring, static_cast<int>(v)), budget);
        UPoly s = u_squarefree_part(m);
        if (s.degree() < m.degree())
            gens.push_back(upoly_to(I.ring, static_cast<int>(v), s));
    }
    if (gens.size() == I.gens.size()) return I;  // already had squarefree minpolys
    return Ideal(I.ring, std::move(gens));
}

namespace {

Polynomial upoly_of_element(const RingPtr& ring, const Polynomial& elem, const UPoly& u) {
    // u(elem) as a ring polynomial
    Polynomial acc = Polynomial::zero(ring);
    Polynomial power = Polynomial::constant(ring, Rat(1));
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (!is_zero(u.c[i])) acc = acc + power.scaled(u.c[i]);
        power = power * elem;
    }
    return acc;
}

}  // namespace

std::vector<ZeroDimComponent> zero_dim_decompose(const Ideal& I, std::uint64_t seed,
                                                 Budget budget) {
    std::vector<ZeroDimComponent> out;
    std::vector<Ideal> work{I};
    while (!work.empty()) {
        Ideal J = std::move(work.back());
        work.pop_back();
        QuotientBasis qb = quotient_basis(J, budget);
        if (qb.monos.empty()) continue;  // unit piece

        // 1) split on factorable variable minimal polynomials (CRT: the
        //    prime-power parts of an eliminant give comaximal pieces)
        bool split = false;
        for (std::size_t v = 0; v < J.ring->size() && !split; ++v) {
            Polynomial xv = Polynomial::variable(J.ring, static_cast<int>(v));
            UPoly m = minpoly_element(qb, xv, budget);
            auto fac = u_factor(m);
            if (fac.factors.size() >= 2) {
                for (const auto& [q, e] : fac.factors) {
                    Polynomial piece =
                        upoly_of_element(J.ring, xv, q).pow(static_cast<unsigned>(e));
                    work.push_back(ideal_sum(J, Ideal(J.ring, {piece})));
                }
                split = true;
            }
        }
        if (split) continue;

        // 2) radical + primitive element: certifies primality of the support
        //    or yields a further split
        Ideal R = zero_dim_radical(J, budget);
        QuotientBasis qr = quotient_basis(R, budget);
        const int deg = vector_space_dimension(qr);
        SplitMix64 rng(seed ^ 0x5eedf00dULL);
        std::optional<UPoly> prim_minpoly;
        Polynomial prim_elem = Polynomial::zero(J.ring);
        for (int attempt = 0; attempt < 24 && !prim_minpoly; ++attempt) {
            Polynomial ell = Polynomial::zero(J.ring);
            for (std::size_t v = 0; v < J.ring->size(); ++v)
                ell = ell + Polynomial::variable(J.ring, static_cast<int>(v))
                                .scaled(Rat(rng.next_long(-9, 9)));
            UPoly m = minpoly_element(qr, ell, budget);
            if (m.degree() == deg) {
                prim_minpoly = m;
                prim_elem = ell;
            }
        }
        if (!prim_minpoly)
            throw budget_error("no primitive element found for zero-dimensional component");
        auto fac = u_factor(*prim_minpoly);
        if (fac.factors.size() >= 2) {
            // split J along the prime-power parts of its own minimal
            // polynomial of the primitive element (CRT: pieces are comaximal)
            UPoly mj = minpoly_element(quotient_basis(J, budget), prim_elem, budget);
            for (const auto& [q, e] : u_factor(mj).factors) {
                Polynomial piece =
                    upoly_of_element(J.ring, prim_elem, q).pow(static_cast<unsigned>(e));
                work.push_back(ideal_sum(J, Ideal(J.ring, {piece})));
            }
            continue;
        }

        // single irreducible factor: R is maximal, J is primary (certified)
        ZeroDimComponent comp;
        comp.radical = Ideal(R.ring, canonical_generators(R, budget));
        comp.primary = Ideal(J.ring, canonical_generators(J, budget));
        comp.is_prime = ideal_equal(comp.primary, comp.radical, budget);
        comp.point_count = deg;
        comp.real_point_count =
            fac.factors.empty() ? 0 : u_count_real_roots(fac.factors[0].first);
        out.push_back(std::move(comp));
    }
    // deterministic order
    std::sort(out.begin(), out.end(), [](const ZeroDimComponent& a, const ZeroDimComponent& b) {
        auto key = [](const ZeroDimComponent& c) {
            std::string s;
            for (const auto& g : c.primary.gens) s += g.str() + ";";
            return s;
        };
        return key(a) < key(b);
    });
    return out;
}

std::optional<std::vector<Rat>> rational_point_of_maximal(const Ideal& maximal, Budget budget) {
    QuotientBasis qb = quotient_basis(maximal, budget);
    if (qb.monos.empty()) return std::nullopt;
    if (vector_space_dimension(qb) != 1) return std::nullopt;
    std::vector<Rat> coords;
    coords.reserve(maximal.ring->size());
    for (std::size_t v = 0; v < maximal.ring->size(); ++v) {
        UPoly m = minpoly_element(qb, Polynomial::variable(maximal.ring, static_cast<int>(v)),
                                  budget);
        if (m.degree() != 1) return std::nullopt;
        coords.push_back(-m.c[0] / m.c[1]);
    }
    return coords;
}

}  // namespace cspace

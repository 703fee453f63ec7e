#include "cspace/multigcd.hpp"

#include "cspace/groebner.hpp"

#include <algorithm>
#include <map>

#include "cspace/univar.hpp"

namespace cspace {

namespace {

int top_used_var(const Polynomial& p) {
    int top = -1;
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] > 0) top = std::max(top, static_cast<int>(i));
    return top;
}

// coefficients of p as a polynomial in var (index = exponent)
std::vector<Polynomial> coeffs_in(const Polynomial& p, int var) {
    const auto v = static_cast<std::size_t>(var);
    std::vector<std::map<Monomial, Rat>> acc;
    for (const auto& t : p.terms()) {
        const auto e = static_cast<std::size_t>(t.mono[v]);
        if (acc.size() <= e) acc.resize(e + 1);
        Monomial m = t.mono;
        m.set(v, 0);
        acc[e][std::move(m)] = t.coef;
    }
    std::vector<Polynomial> out;
    out.reserve(acc.size());
    for (auto& a : acc) out.push_back(Polynomial::from_terms(p.ring(), std::move(a)));
    return out;
}

Polynomial from_coeffs(const RingPtr& ring, int var, const std::vector<Polynomial>& coeffs) {
    Polynomial x = Polynomial::variable(ring, var);
    Polynomial sum = Polynomial::zero(ring);
    Polynomial power = Polynomial::constant(ring, Rat(1));
    for (const auto& c : coeffs) {
        if (!c.is_zero()) sum = sum + c * power;
        power = power * x;
    }
    return sum;
}

Polynomial normalized(const Polynomial& p) { return p.primitive_part(); }

int single_used_var(const Polynomial& p) {
    // -1: constant; -2: more than one variable; else the unique variable
    int var = -1;
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] > 0) {
                if (var == -1)
                    var = static_cast<int>(i);
                else if (var != static_cast<int>(i))
                    return -2;
            }
    return var;
}

}  // namespace

std::pair<Polynomial, Polynomial> pseudo_divmod(const Polynomial& a, const Polynomial& b,
                                                int var) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
    const int db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    const Polynomial& lcb = bc.back();
    Polynomial q = Polynomial::zero(a.ring());
    Polynomial r = a;
    int e = a.degree_in(var) - db + 1;
    if (e < 0) e = 0;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        auto rc = coeffs_in(r, var);
        Polynomial t = rc.back();  // lc_var(r)
        Monomial shift(a.ring()->size());
        shift.set(static_cast<std::size_t>(var), r.degree_in(var) - db);
        Polynomial tmono = Polynomial::monomial(a.ring(), shift, Rat(1)) * t;
        q = q * lcb + tmono;
        r = r * lcb - tmono * b;
        --e;
    }
    for (int i = 0; i < e; ++i) {
        q = q * lcb;
        r = r * lcb;
    }
    return {q, r};
}

Polynomial mv_content_in(const Polynomial& p, int var) {
    if (p.is_zero()) return p;
    Polynomial g = Polynomial::zero(p.ring());
    for (const auto& c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Polynomial mv_primitive_in(const Polynomial& p, int var) {
    if (p.is_zero()) return p;
    Polynomial c = mv_content_in(p, var);
    if (c.is_constant()) return normalized(p);
    return normalized(exact_divide(p, c));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.ring(), Rat(1));

    const int va = top_used_var(a), vb = top_used_var(b);
    const int v = std::max(va, vb);
    if (va != vb) {
        // the one not using v contributes only through the other's content
        const Polynomial& user = (va == v) ? a : b;
        const Polynomial& other = (va == v) ? b : a;
        return poly_gcd(mv_content_in(user, v), other);
    }

    Polynomial ca = mv_content_in(a, v);
    Polynomial cb = mv_content_in(b, v);
    Polynomial cg = poly_gcd(ca, cb);

    Polynomial A = mv_primitive_in(a, v);
    Polynomial B = mv_primitive_in(b, v);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    Polynomial G;
    while (true) {
        if (B.is_zero()) {
            G = A;
            break;
        }
        if (B.degree_in(v) == 0) {
            G = Polynomial::constant(a.ring(), Rat(1));
            break;
        }
        Polynomial r = pseudo_divmod(A, B, v).second;
        A = B;
        B = r.is_zero() ? r : mv_primitive_in(r, v);
    }
    return normalized(cg * G);
}

Polynomial mv_squarefree_in(const Polynomial& p, int var) {
    Polynomial prim = mv_primitive_in(p, var);
    if (prim.degree_in(var) <= 1) return prim;
    Polynomial g = poly_gcd(prim, prim.derivative(var));
    if (g.is_constant()) return prim;
    // exact over the fraction field: use pseudo-division then re-primitivize
    auto [q, r] = pseudo_divmod(prim, g, var);
    if (!r.is_zero()) throw std::logic_error("squarefree part: gcd does not divide");
    return mv_primitive_in(q, var);
}

std::vector<Polynomial> candidate_factors(const Polynomial& p) {
    std::vector<Polynomial> out;
    if (p.is_zero() || p.is_constant()) return out;
    const RingPtr& ring = p.ring();
    auto push_unique = [&out](const Polynomial& f) {
        if (f.is_constant()) return;
        Polynomial n = f.primitive_part();
        for (const auto& g : out)
            if (g == n) return;
        out.push_back(std::move(n));
    };

    // monomial part: variables dividing every term
    Monomial common = p.terms().front().mono;
    for (const auto& t : p.terms()) common = mono_gcd(common, t.mono);
    bool has_mono = !common.is_one();
    if (has_mono) {
        for (std::size_t i = 0; i < common.size(); ++i)
            if (common[i] > 0) push_unique(Polynomial::variable(ring, static_cast<int>(i)));
    }
    Polynomial core = p;
    if (has_mono)
        core = exact_divide(p, Polynomial::monomial(ring, common, Rat(1)));
    if (core.is_constant()) return out;
    if (has_mono) push_unique(core);

    // univariate: complete factorization
    const int uv = single_used_var(core);
    if (uv >= 0) {
        auto fac = u_factor(upoly_from(core, uv));
        if (fac.factors.size() > 1 || (fac.factors.size() == 1 && fac.factors[0].second > 1) ||
            has_mono) {
            for (const auto& [f, mult] : fac.factors) push_unique(upoly_to(ring, uv, f));
        } else if (!has_mono) {
            // irreducible univariate core of a multi-factor input was already pushed
        }
        return out;
    }

    // per-variable content split
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (!core.uses_var(static_cast<int>(i))) continue;
        Polynomial c = mv_content_in(core, static_cast<int>(i));
        if (!c.is_constant()) {
            push_unique(c);
            push_unique(exact_divide(core, c));
        }
    }

    // two-term difference of squares: c1*m1 - c2*m2 with everything square
    if (core.nterms() == 2) {
        const Term& t1 = core.terms()[0];
        const Term& t2 = core.terms()[1];
        if (sgn(t1.coef) != sgn(t2.coef)) {
            const Term& pos = sgn(t1.coef) > 0 ? t1 : t2;
            const Term& neg = sgn(t1.coef) > 0 ? t2 : t1;
            auto all_even = [](const Monomial& m) {
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (m[i] % 2 != 0) return false;
                return true;
            };
            Rat cpos = pos.coef, cneg = -neg.coef;
            auto is_square = [](const Rat& r, Rat& root) {
                if (sgn(r) < 0) return false;
                Int n = r.get_num(), d = r.get_den();
                if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
                    Int sn, sd;
                    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
                    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
                    root = Rat(sn, sd);
                    root.canonicalize();
                    return true;
                }
                return false;
            };
            Rat rpos, rneg;
            if (all_even(pos.mono) && all_even(neg.mono) && is_square(cpos, rpos) &&
                is_square(cneg, rneg)) {
                Monomial h1 = pos.mono, h2 = neg.mono;
                for (std::size_t i = 0; i < h1.size(); ++i) h1.set(i, h1[i] / 2);
                for (std::size_t i = 0; i < h2.size(); ++i) h2.set(i, h2[i] / 2);
                Polynomial s1 = Polynomial::monomial(ring, h1, rpos);
                Polynomial s2 = Polynomial::monomial(ring, h2, rneg);
                push_unique(s1 - s2);
                push_unique(s1 + s2);
            }
        }
    }
    return out;
}

}  // namespace cspace

#include "cspace/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>

namespace cspace {

namespace {

// ---- engine representation: term vectors sorted descending in the active
// order, monic rational arithmetic (Becker-Weispfenning style).

struct QTerm {
    Monomial mono;
    Rat coef;
};
using QVecP = std::vector<QTerm>;

QVecP to_qvec(const Polynomial& p, const MonomialOrder& ord) {
    QVecP v;
    v.reserve(p.nterms());
    for (const auto& t : p.terms()) v.push_back(QTerm{t.mono, t.coef});
    std::sort(v.begin(), v.end(),
              [&ord](const QTerm& a, const QTerm& b) { return ord.greater(a.mono, b.mono); });
    return v;
}

Polynomial from_qvec(const RingPtr& ring, const QVecP& v) {
    std::map<Monomial, Rat> acc;
    for (const auto& t : v) acc.emplace(t.mono, t.coef);
    return Polynomial::from_terms(ring, std::move(acc));
}

QVecP q_monic(QVecP v) {
    if (!v.empty() && v[0].coef != 1) {
        Rat lc = v[0].coef;
        for (auto& t : v) t.coef /= lc;
    }
    return v;
}

bool q_equal(const QVecP& a, const QVecP& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].mono != b[i].mono || a[i].coef != b[i].coef) return false;
    return true;
}

// cur - c * x^m * g; cur[from] cancels against c * x^m * lt(g) by construction.
QVecP q_combine(const QVecP& cur, std::size_t from, const QVecP& g, const Rat& c,
                const Monomial& m, const MonomialOrder& ord) {
    QVecP out;
    out.reserve(cur.size() + g.size());
    for (std::size_t i = 0; i < from; ++i) out.push_back(cur[i]);
    std::size_t i = from + 1;
    std::size_t j = 1;
    while (i < cur.size() && j < g.size()) {
        Monomial gm = mono_mul(g[j].mono, m);
        if (cur[i].mono == gm) {
            Rat x = cur[i].coef - c * g[j].coef;
            if (sgn(x) != 0) out.push_back(QTerm{cur[i].mono, std::move(x)});
            ++i, ++j;
        } else if (ord.greater(cur[i].mono, gm)) {
            out.push_back(cur[i]);
            ++i;
        } else {
            out.push_back(QTerm{std::move(gm), -(c * g[j].coef)});
            ++j;
        }
    }
    while (i < cur.size()) out.push_back(cur[i++]);
    while (j < g.size()) {
        out.push_back(QTerm{mono_mul(g[j].mono, m), -(c * g[j].coef)});
        ++j;
    }
    return out;
}

// Full normal form; divisors tried in list order (callers pass reducers in
// ascending leading-monomial order, which is the efficient choice).
QVecP q_normal_form_ptr(QVecP cur, const std::vector<const QVecP*>& basis,
                        const MonomialOrder& ord, Budget& budget) {
    std::size_t start = 0;
    while (start < cur.size()) {
        const Monomial& lead = cur[start].mono;
        std::size_t who = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!basis[k]->empty() && mono_divides((*basis[k])[0].mono, lead)) {
                who = k;
                break;
            }
        }
        if (who == basis.size()) {
            ++start;
            continue;
        }
        budget.charge();
        const QVecP& g = *basis[who];
        Monomial m = mono_div(lead, g[0].mono);
        Rat c = cur[start].coef / g[0].coef;
        cur = q_combine(cur, start, g, c, m, ord);
    }
    return cur;
}

QVecP q_normal_form(QVecP cur, const std::vector<QVecP>& basis, const MonomialOrder& ord,
                    Budget& budget) {
    std::vector<const QVecP*> ptrs;
    ptrs.reserve(basis.size());
    for (const auto& b : basis) ptrs.push_back(&b);
    return q_normal_form_ptr(std::move(cur), ptrs, ord, budget);
}

QVecP q_spoly(const QVecP& a, const QVecP& b, const MonomialOrder& ord) {
    Monomial l = mono_lcm(a[0].mono, b[0].mono);
    Monomial ma = mono_div(l, a[0].mono);
    Monomial mb = mono_div(l, b[0].mono);
    QVecP lhs;
    lhs.reserve(a.size());
    for (const auto& t : a) lhs.push_back(QTerm{mono_mul(t.mono, ma), t.coef / a[0].coef});
    return q_combine(lhs, 0, b, Rat(1) / b[0].coef, mb, ord);
}

// Buchberger main loop following Becker-Weispfenning (GROEBNERNEWS2, p. 232):
// normal pair selection, the [BW] update (criteria plus removal of superseded
// basis elements), monic arithmetic.
std::vector<QVecP> buchberger_bw(std::vector<QVecP> input, const MonomialOrder& ord,
                                 Budget& budget) {
    static const bool trace = std::getenv("CSPACE_TRACE") != nullptr;

    // pre-reduce the input list until stable ([BW] page 203)
    std::vector<QVecP> f1;
    for (auto& v : input)
        if (!v.empty()) f1.push_back(q_monic(std::move(v)));
    while (true) {
        std::vector<QVecP> f = f1;
        f1.clear();
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<QVecP> earlier(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
            QVecP r = q_normal_form(f[i], earlier, ord, budget);
            if (!r.empty()) f1.push_back(q_monic(std::move(r)));
        }
        if (f1.size() == f.size()) {
            bool same = true;
            for (std::size_t i = 0; i < f.size() && same; ++i) same = q_equal(f[i], f1[i]);
            if (same) break;
        }
    }
    if (f1.empty()) return {};

    std::vector<QVecP> store = std::move(f1);  // all polynomials ever created
    std::vector<std::size_t> G;                // active basis (indices into store)
    std::vector<std::pair<std::size_t, std::size_t>> CP;

    auto lm = [&store](std::size_t i) -> const Monomial& { return store[i][0].mono; };

    auto update = [&](std::size_t ih) {
        const Monomial& mh = lm(ih);
        std::vector<std::size_t> C = G;
        std::vector<std::pair<std::size_t, bool>> D;  // (ig, coprime?)
        while (!C.empty()) {
            std::size_t ig = C.back();
            C.pop_back();
            Monomial lcm_hg = mono_lcm(mh, lm(ig));
            bool coprime = mono_coprime(mh, lm(ig));
            auto lcm_divides = [&](std::size_t ip) {
                return mono_divides(mono_lcm(mh, lm(ip)), lcm_hg);
            };
            bool dominated = false;
            for (std::size_t ip : C)
                if (lcm_divides(ip)) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                for (auto& [ip, cp] : D)
                    if (lcm_divides(ip)) {
                        dominated = true;
                        break;
                    }
            if (coprime || !dominated) D.emplace_back(ig, coprime);
        }

        std::vector<std::pair<std::size_t, std::size_t>> keep;
        keep.reserve(CP.size() + D.size());
        for (auto& [g1, g2] : CP) {
            Monomial l12 = mono_lcm(lm(g1), lm(g2));
            if (!mono_divides(mh, l12) || mono_lcm(lm(g1), mh) == l12 ||
                mono_lcm(lm(g2), mh) == l12)
                keep.emplace_back(g1, g2);
        }
        for (auto& [ig, coprime] : D)
            if (!coprime) keep.emplace_back(ih, ig);
        CP = std::move(keep);

        std::vector<std::size_t> G_new;
        G_new.reserve(G.size() + 1);
        for (std::size_t ig : G)
            if (!mono_divides(mh, lm(ig))) G_new.push_back(ig);
        G_new.push_back(ih);
        G = std::move(G_new);
    };

    // seed the basis in ascending leading-monomial order
    std::vector<std::size_t> F(store.size());
    for (std::size_t i = 0; i < store.size(); ++i) F[i] = i;
    std::sort(F.begin(), F.end(),
              [&](std::size_t a, std::size_t b) { return ord.greater(lm(b), lm(a)); });
    for (std::size_t ih : F) update(ih);

    auto reducers = [&]() {
        std::vector<std::size_t> idx = G;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return ord.greater(lm(b), lm(a)); });
        std::vector<const QVecP*> out;
        out.reserve(idx.size());
        for (std::size_t i : idx) out.push_back(&store[i]);
        return out;
    };

    long processed = 0;
    while (!CP.empty()) {
        // normal selection: minimal lcm in the order; index tie-break
        std::size_t best = 0;
        Monomial best_lcm = mono_lcm(lm(CP[0].first), lm(CP[0].second));
        for (std::size_t k = 1; k < CP.size(); ++k) {
            Monomial l = mono_lcm(lm(CP[k].first), lm(CP[k].second));
            if (ord.greater(best_lcm, l)) {
                best = k;
                best_lcm = std::move(l);
            }
        }
        auto [i1, i2] = CP[best];
        CP.erase(CP.begin() + static_cast<std::ptrdiff_t>(best));
        budget.charge();
        QVecP s = q_spoly(store[i1], store[i2], ord);
        QVecP h = q_normal_form_ptr(std::move(s), reducers(), ord, budget);
        ++processed;
        if (trace && processed % 100 == 0)
            fprintf(stderr, "[gb] pairs %ld, queue %zu, active %zu, store %zu, budget %lld\n",
                    processed, CP.size(), G.size(), store.size(),
                    static_cast<long long>(budget.used()));
        if (h.empty()) continue;
        h = q_monic(std::move(h));
        std::size_t ih = store.size();
        for (std::size_t i = 0; i < store.size(); ++i)
            if (q_equal(store[i], h)) {
                ih = i;
                break;
            }
        if (ih == store.size()) store.push_back(std::move(h));
        update(ih);
    }

    // final interreduction of the active basis
    std::vector<QVecP> active;
    active.reserve(G.size());
    for (std::size_t ig : G) active.push_back(store[ig]);
    std::sort(active.begin(), active.end(),
              [&](const QVecP& a, const QVecP& b) { return ord.greater(b[0].mono, a[0].mono); });
    std::vector<QVecP> result;
    for (std::size_t i = 0; i < active.size(); ++i) {
        std::vector<QVecP> others;
        others.reserve(active.size() - 1);
        for (std::size_t j = 0; j < active.size(); ++j)
            if (j != i) others.push_back(active[j]);
        QVecP r = q_normal_form(active[i], others, ord, budget);
        if (!r.empty()) result.push_back(q_monic(std::move(r)));
    }
    std::sort(result.begin(), result.end(),
              [&](const QVecP& a, const QVecP& b) { return ord.greater(b[0].mono, a[0].mono); });
    return result;
}

std::vector<int> front_vars_of(const RingPtr& ring, const std::vector<int>& front) {
    std::vector<int> f = front;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
        if (v < 0 || static_cast<std::size_t>(v) >= ring->size())
            throw std::out_of_range("front variable out of range");
    return f;
}

std::vector<QVecP> gb_qvecs(const GroebnerBasis& gb) {
    std::vector<QVecP> basis;
    basis.reserve(gb.elems.size());
    for (const auto& g : gb.elems) basis.push_back(to_qvec(g, gb.order));
    return basis;
}

}  // namespace

Ideal::Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
    gens.reserve(g.size());
    for (auto& p : g) {
        if (!same_ring(p.ring(), ring)) throw ring_error("ideal generator over wrong ring");
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
}

Ideal make_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    return Ideal(ring, gens);
}

bool GroebnerBasis::contains_one() const {
    for (const auto& e : elems)
        if (e.is_constant() && !e.is_zero()) return true;
    return false;
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord, Budget budget) {
    std::vector<QVecP> input;
    input.reserve(I.gens.size());
    for (const auto& g : I.gens) input.push_back(to_qvec(g, ord));
    std::vector<QVecP> basis = buchberger_bw(std::move(input), ord, budget);
    GroebnerBasis gb;
    gb.ring = I.ring;
    gb.order = ord;
    gb.reduced = true;
    gb.elems.reserve(basis.size());
    for (const auto& v : basis) gb.elems.push_back(from_qvec(I.ring, v));
    return gb;
}

std::pair<Polynomial, std::vector<Polynomial>> reduce(const Polynomial& f,
                                                      const std::vector<Polynomial>& G,
                                                      const MonomialOrder& ord, Budget budget) {
    if (G.empty()) throw std::invalid_argument("reduce: empty divisor list");
    std::vector<QVecP> basis;
    basis.reserve(G.size());
    for (const auto& g : G) {
        if (!same_ring(g.ring(), f.ring())) throw ring_error("reduce: ring mismatch");
        if (g.is_zero()) throw std::invalid_argument("reduce: zero divisor polynomial");
        basis.push_back(to_qvec(g, ord));
    }
    QVecP cur = to_qvec(f, ord);
    std::vector<std::map<Monomial, Rat>> quot(G.size());
    std::size_t start = 0;
    while (start < cur.size()) {
        const Monomial& lead = cur[start].mono;
        std::size_t who = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (mono_divides(basis[k][0].mono, lead)) {
                who = k;
                break;
            }
        }
        if (who == basis.size()) {
            ++start;
            continue;
        }
        budget.charge();
        Monomial m = mono_div(lead, basis[who][0].mono);
        Rat c = cur[start].coef / basis[who][0].coef;
        quot[who][m] += c;
        cur = q_combine(cur, start, basis[who], c, m, ord);
    }
    std::map<Monomial, Rat> racc;
    for (auto& t : cur) racc.emplace(t.mono, t.coef);
    std::vector<Polynomial> quotients;
    quotients.reserve(G.size());
    for (auto& q : quot) quotients.push_back(Polynomial::from_terms(f.ring(), std::move(q)));
    return {Polynomial::from_terms(f.ring(), std::move(racc)), std::move(quotients)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget budget) {
    if (!same_ring(f.ring(), gb.ring)) throw ring_error("normal_form: ring mismatch");
    if (gb.elems.empty() || f.is_zero()) return f;
    std::vector<QVecP> basis = gb_qvecs(gb);
    QVecP r = q_normal_form(to_qvec(f, gb.order), basis, gb.order, budget);
    return from_qvec(f.ring(), r);
}

bool ideal_membership(const Polynomial& f, const Ideal& I, Budget budget) {
    if (!same_ring(f.ring(), I.ring)) throw ring_error("membership: ring mismatch");
    if (f.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(), budget);
    return normal_form(f, gb, budget).is_zero();
}

bool radical_membership(const Polynomial& f, const Ideal& I, Budget budget) {
    if (!same_ring(f.ring(), I.ring)) throw ring_error("radical membership: ring mismatch");
    if (f.is_zero()) return true;
    RingPtr ext = extend_ring(I.ring, {"y$"});
    const int y = static_cast<int>(ext->size()) - 1;
    std::vector<Polynomial> gens;
    gens.reserve(I.gens.size() + 1);
    for (const auto& g : I.gens) gens.push_back(g.map_to(ext));
    Polynomial one = Polynomial::constant(ext, Rat(1));
    gens.push_back(one - Polynomial::variable(ext, y) * f.map_to(ext));
    GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), MonomialOrder::degrevlex(), budget);
    return gb.contains_one();
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.is_zero()) return f;
    auto [r, q] = reduce(f, {g}, MonomialOrder::degrevlex(), Budget(1'000'000'000));
    if (!r.is_zero()) throw std::domain_error("exact_divide: not divisible");
    return q[0];
}

Ideal eliminate(const Ideal& I, const std::vector<int>& front_vars, Budget budget) {
    std::vector<int> front = front_vars_of(I.ring, front_vars);
    if (front.empty()) return I;
    MonomialOrder ord = MonomialOrder::block(front, I.ring->size());
    GroebnerBasis gb = buchberger(I, ord, budget);

    std::vector<bool> is_front(I.ring->size(), false);
    for (int v : front) is_front[static_cast<std::size_t>(v)] = true;
    std::vector<std::string> back_names;
    for (std::size_t i = 0; i < I.ring->size(); ++i)
        if (!is_front[i]) back_names.push_back(I.ring->vars[i]);
    RingPtr back = make_ring(back_names);

    std::vector<Polynomial> kept;
    for (const auto& e : gb.elems) {
        bool clean = true;
        for (int v : front)
            if (e.uses_var(v)) {
                clean = false;
                break;
            }
        if (clean) kept.push_back(e.map_to(back));
    }
    return Ideal(back, std::move(kept));
}

Ideal saturate(const Ideal& I, const Polynomial& f, Budget budget) {
    if (!same_ring(f.ring(), I.ring)) throw ring_error("saturate: ring mismatch");
    if (f.is_zero()) throw std::invalid_argument("saturate at zero polynomial");
    if (f.is_constant()) return Ideal(I.ring, I.gens);
    RingPtr ext = extend_ring(I.ring, {"u"});
    const int u = static_cast<int>(ext->size()) - 1;
    std::vector<Polynomial> gens;
    gens.reserve(I.gens.size() + 1);
    for (const auto& g : I.gens) gens.push_back(g.map_to(ext));
    gens.push_back(f.map_to(ext) * Polynomial::variable(ext, u) -
                   Polynomial::constant(ext, Rat(1)));
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), {u}, budget);
    std::vector<Polynomial> back;
    back.reserve(elim.gens.size());
    for (const auto& g : elim.gens) back.push_back(g.map_to(I.ring));
    return Ideal(I.ring, std::move(back));
}

int saturation_exponent(const Ideal& I, const Polynomial& f, const Ideal& saturation,
                        Budget budget) {
    Ideal fi(I.ring, {f});
    Ideal cur = I;
    for (int m = 0; m < 64; ++m) {
        if (ideal_equal(cur, saturation, budget)) return m;
        cur = ideal_quotient(cur, fi, budget);
    }
    throw budget_error("saturation exponent did not stabilize");
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    if (!same_ring(A.ring, B.ring)) throw ring_error("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = A.gens;
    gens.insert(gens.end(), B.gens.begin(), B.gens.end());
    return Ideal(A.ring, std::move(gens));
}

Ideal ideal_intersect(const Ideal& A, const Ideal& B, Budget budget) {
    if (!same_ring(A.ring, B.ring)) throw ring_error("ideal_intersect: ring mismatch");
    if (A.is_zero_ideal() || B.is_zero_ideal()) return Ideal(A.ring, {});
    RingPtr ext = extend_ring(A.ring, {"w$"});
    const int w = static_cast<int>(ext->size()) - 1;
    Polynomial wp = Polynomial::variable(ext, w);
    Polynomial omw = Polynomial::constant(ext, Rat(1)) - wp;
    std::vector<Polynomial> gens;
    gens.reserve(A.gens.size() + B.gens.size());
    for (const auto& g : A.gens) gens.push_back(wp * g.map_to(ext));
    for (const auto& g : B.gens) gens.push_back(omw * g.map_to(ext));
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), {w}, budget);
    std::vector<Polynomial> back;
    back.reserve(elim.gens.size());
    for (const auto& g : elim.gens) back.push_back(g.map_to(A.ring));
    return Ideal(A.ring, std::move(back));
}

Ideal ideal_quotient(const Ideal& A, const Ideal& B, Budget budget) {
    if (!same_ring(A.ring, B.ring)) throw ring_error("ideal_quotient: ring mismatch");
    if (B.is_zero_ideal()) return Ideal(A.ring, {Polynomial::constant(A.ring, Rat(1))});
    std::optional<Ideal> acc;
    for (const auto& b : B.gens) {
        Ideal meet = ideal_intersect(A, Ideal(A.ring, {b}), budget);
        std::vector<Polynomial> quo;
        quo.reserve(meet.gens.size());
        for (const auto& g : meet.gens) quo.push_back(exact_divide(g, b));
        Ideal part(A.ring, std::move(quo));
        acc = acc ? ideal_intersect(*acc, part, budget) : part;
    }
    return *acc;
}

bool ideal_equal(const Ideal& A, const Ideal& B, Budget budget) {
    if (!same_ring(A.ring, B.ring)) throw ring_error("ideal_equal: ring mismatch");
    GroebnerBasis ga = buchberger(A, MonomialOrder::degrevlex(), budget);
    GroebnerBasis gb = buchberger(B, MonomialOrder::degrevlex(), budget);
    if (ga.elems.size() != gb.elems.size()) return false;
    for (std::size_t i = 0; i < ga.elems.size(); ++i)
        if (ga.elems[i] != gb.elems[i]) return false;
    return true;
}

bool ideal_contains(const Ideal& A, const Ideal& B, Budget budget) {
    if (!same_ring(A.ring, B.ring)) throw ring_error("ideal_contains: ring mismatch");
    if (B.is_zero_ideal()) return true;
    GroebnerBasis ga = buchberger(A, MonomialOrder::degrevlex(), budget);
    for (const auto& g : B.gens)
        if (!normal_form(g, ga, budget).is_zero()) return false;
    return true;
}

bool is_unit_ideal(const Ideal& I, Budget budget) {
    for (const auto& g : I.gens)
        if (g.is_constant() && !g.is_zero()) return true;
    return buchberger(I, MonomialOrder::degrevlex(), budget).contains_one();
}

std::vector<int> max_independent_set(const Ideal& I, Budget budget) {
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(), budget);
    if (gb.contains_one()) return {};
    std::vector<Monomial> lms;
    lms.reserve(gb.elems.size());
    for (const auto& e : gb.elems) lms.push_back(e.leading_term(gb.order).mono);

    const std::size_t n = I.ring->size();
    std::vector<int> best, cur;
    // include small indices first so ties resolve lexicographically
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (cur.size() + (n - next) <= best.size()) return;  // cannot beat best
        if (next == n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<bool> inset(n, false);
        for (int v : cur) inset[static_cast<std::size_t>(v)] = true;
        inset[next] = true;
        bool ok = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m[i] > 0 && !inset[i]) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) {
            cur.push_back(static_cast<int>(next));
            self(self, next + 1);
            cur.pop_back();
        }
        self(self, next + 1);
    };
    rec(rec, 0);
    return best;
}

int dimension(const Ideal& I, Budget budget) {
    if (is_unit_ideal(I, budget)) return -1;
    return static_cast<int>(max_independent_set(I, budget).size());
}

std::vector<Polynomial> canonical_generators(const Ideal& I, Budget budget) {
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(), budget);
    std::vector<Polynomial> out;
    out.reserve(gb.elems.size());
    for (const auto& e : gb.elems) {
        Polynomial p = e.primitive_part();
        if (sgn(p.leading_term(gb.order).coef) < 0) p = -p;
        out.push_back(std::move(p));
    }
    return out;
}

Ideal slim_generators(const Ideal& I, Budget budget) {
    std::vector<Polynomial> gens = I.gens;
    // try to drop densest generators first
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.nterms() != b.nterms()) return a.nterms() > b.nterms();
        return b < a;
    });
    bool changed = true;
    while (changed && gens.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> rest;
            rest.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            if (ideal_membership(gens[i], Ideal(I.ring, rest), budget)) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    std::sort(gens.begin(), gens.end(),
              [](const Polynomial& a, const Polynomial& b) { return a < b; });
    return Ideal(I.ring, std::move(gens));
}

}  // namespace cspace

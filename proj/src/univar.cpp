#include "cspace/univar.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace cspace {

UPoly u_add(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return UPoly(std::move(c));
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return UPoly(std::move(c));
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return UPoly(std::move(c));
}

UPoly u_scale(const UPoly& a, const Rat& s) {
    if (is_zero(s)) return UPoly();
    std::vector<Rat> c = a.c;
    for (auto& x : c) x *= s;
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("univariate division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rat> rem = a.c;
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + b.degree())] / b.lc();
        quo[static_cast<std::size_t>(k)] = q;
        if (is_zero(q)) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * b.c[static_cast<std::size_t>(i)];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly u_derivative(const UPoly& a) {
    if (a.c.size() <= 1) return UPoly();
    std::vector<Rat> c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * static_cast<long>(i);
    return UPoly(std::move(c));
}

Rat u_eval(const UPoly& a, const Rat& x) {
    Rat v(0);
    for (std::size_t i = a.c.size(); i-- > 0;) v = v * x + a.c[i];
    return v;
}

UPoly u_monic(const UPoly& a) {
    if (a.is_zero() || is_one(a.lc())) return a;
    return u_scale(a, Rat(1) / a.lc());
}

UPoly u_gcd(const UPoly& a, const UPoly& b) {
    UPoly f = a, g = b;
    while (!g.is_zero()) {
        UPoly r = u_divmod(f, g).second;
        f = std::move(g);
        g = u_monic(std::move(r));  // keep coefficients small
    }
    return u_monic(f);
}

UPoly u_primitive(const UPoly& a) {
    if (a.is_zero()) return a;
    Int num_gcd(0), den_lcm(1);
    for (const auto& x : a.c) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(a.lc()) < 0) c = -c;
    return u_scale(a, Rat(1) / c);
}

UPoly u_squarefree_part(const UPoly& a) {
    if (a.degree() <= 0) return u_monic(a);
    UPoly g = u_gcd(a, u_derivative(a));
    return u_monic(u_divmod(a, g).first);
}

std::vector<std::pair<UPoly, int>> u_squarefree_decomposition(const UPoly& a) {
    std::vector<std::pair<UPoly, int>> out;
    if (a.degree() <= 0) return out;
    UPoly f = u_monic(a);
    UPoly g = u_gcd(f, u_derivative(f));
    UPoly w = u_divmod(f, g).first;  // squarefree part
    int i = 1;
    while (w.degree() > 0) {
        UPoly y = u_gcd(w, g);
        UPoly z = u_divmod(w, y).first;  // factors with multiplicity exactly i
        if (z.degree() > 0) out.emplace_back(u_monic(z), i);
        w = std::move(y);
        g = u_divmod(g, w).first;
        ++i;
    }
    return out;
}

// ---- Sturm ---------------------------------------------------------------

namespace {

// positive rescale only: sign pattern must be preserved
UPoly pos_rescale(const UPoly& a) {
    if (a.is_zero()) return a;
    UPoly p = u_primitive(a);  // positive leading coefficient
    if (sgn(a.lc()) < 0) p = u_scale(p, Rat(-1));
    return p;
}

std::vector<UPoly> sturm_chain(const UPoly& f) {
    std::vector<UPoly> chain;
    UPoly f0 = u_squarefree_part(f);
    if (f0.degree() <= 0) return chain;
    chain.push_back(f0);
    chain.push_back(u_derivative(f0));
    while (chain.back().degree() > 0) {
        UPoly r = u_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(pos_rescale(u_scale(r, Rat(-1))));
    }
    return chain;
}

int sign_at(const UPoly& f, const Rat& x) { return sgn(u_eval(f, x)); }

int sign_at_inf(const UPoly& f, bool positive) {
    if (f.is_zero()) return 0;
    int s = sgn(f.lc());
    if (!positive && (f.degree() % 2 == 1)) s = -s;
    return s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int u_count_real_roots(const UPoly& a) {
    if (a.is_zero()) throw std::domain_error("root count of zero polynomial");
    auto chain = sturm_chain(a);
    if (chain.empty()) return 0;
    std::vector<int> lo, hi;
    for (const auto& p : chain) {
        lo.push_back(sign_at_inf(p, false));
        hi.push_back(sign_at_inf(p, true));
    }
    return variations(lo) - variations(hi);
}

int u_count_real_roots_in(const UPoly& a, const Rat& lo, const Rat& hi) {
    if (a.is_zero()) throw std::domain_error("root count of zero polynomial");
    auto chain = sturm_chain(a);
    if (chain.empty()) return 0;
    std::vector<int> at_lo, at_hi;
    for (const auto& p : chain) {
        at_lo.push_back(sign_at(p, lo));
        at_hi.push_back(sign_at(p, hi));
    }
    return variations(at_lo) - variations(at_hi);
}

// ---- factorization over Q --------------------------------------------------

namespace {

using IVec = std::vector<Int>;  // integer coefficients, c[i] x^i

void istrip(IVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

IVec to_int(const UPoly& p) {
    UPoly prim = u_primitive(p);
    IVec v(prim.c.size());
    for (std::size_t i = 0; i < prim.c.size(); ++i) v[i] = prim.c[i].get_num();
    return v;
}

UPoly from_int(const IVec& v) {
    std::vector<Rat> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return UPoly(std::move(c));
}

// --- arithmetic mod a word-size prime

using MVec = std::vector<unsigned long>;

unsigned long mod_inv(unsigned long a, unsigned long p) {
    long t = 0, nt = 1;
    long r = static_cast<long>(p), nr = static_cast<long>(a % p);
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return static_cast<unsigned long>(t < 0 ? t + static_cast<long>(p) : t);
}

void mstrip(MVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

MVec mmul(const MVec& a, const MVec& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    MVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    mstrip(c);
    return c;
}

std::pair<MVec, MVec> mdivmod(const MVec& a, const MVec& b, unsigned long p) {
    MVec rem = a;
    mstrip(rem);
    MVec bb = b;
    mstrip(bb);
    if (bb.empty()) throw std::domain_error("mod-p division by zero");
    if (rem.size() < bb.size()) return {MVec{}, rem};
    MVec quo(rem.size() - bb.size() + 1, 0);
    unsigned long binv = mod_inv(bb.back(), p);
    for (std::size_t k = quo.size(); k-- > 0;) {
        if (rem.size() < bb.size() + k) continue;
        unsigned long q = (rem[bb.size() - 1 + k] * binv) % p;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t i = 0; i < bb.size(); ++i) {
            unsigned long sub = (q * bb[i]) % p;
            rem[k + i] = (rem[k + i] + p - sub) % p;
        }
        mstrip(rem);
    }
    mstrip(quo);
    return {quo, rem};
}

MVec mgcd(MVec a, MVec b, unsigned long p) {
    mstrip(a);
    mstrip(b);
    while (!b.empty()) {
        MVec r = mdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        unsigned long inv = mod_inv(a.back(), p);
        for (auto& x : a) x = (x * inv) % p;
    }
    return a;
}

MVec msub(const MVec& a, const MVec& b, unsigned long p) {
    MVec c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
    mstrip(c);
    return c;
}

MVec mderiv(const MVec& a, unsigned long p) {
    if (a.size() <= 1) return {};
    MVec d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = (a[i] * (i % p)) % p;
    mstrip(d);
    return d;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<MVec> berlekamp(const MVec& g, unsigned long p) {
    const std::size_t n = g.size() - 1;
    if (n <= 1) return {g};
    // x^p mod g
    MVec xp{1};
    {
        MVec base{0, 1};
        unsigned long e = p;
        while (e > 0) {
            if (e & 1UL) xp = mdivmod(mmul(xp, base, p), g, p).second;
            e >>= 1UL;
            if (e) base = mdivmod(mmul(base, base, p), g, p).second;
        }
    }
    // rows[i] = x^(i*p) mod g
    std::vector<MVec> rows(n);
    MVec cur{1};
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = cur;
        rows[i].resize(n, 0);
        cur = mdivmod(mmul(cur, xp, p), g, p).second;
    }
    // Solve (Q^T - I) v = 0 where Q[i][j] = rows[i][j].
    std::vector<MVec> A(n, MVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned long x = rows[i][j] % p;
            if (i == j) x = (x + p - 1) % p;
            A[j][i] = x;
        }
    std::vector<long> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(A[piv], A[rank]);
        unsigned long inv = mod_inv(A[rank][col], p);
        for (auto& x : A[rank]) x = (x * inv) % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            unsigned long f = A[r][col];
            for (std::size_t j = 0; j < n; ++j) A[r][j] = (A[r][j] + p - (f * A[rank][j]) % p) % p;
        }
        pivot_col.push_back(static_cast<long>(col));
        ++rank;
    }
    std::vector<MVec> basis;
    std::vector<bool> is_pivot(n, false);
    for (long pc : pivot_col) is_pivot[static_cast<std::size_t>(pc)] = true;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        MVec v(n, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            unsigned long val = A[r][free_col];
            if (val) v[static_cast<std::size_t>(pivot_col[r])] = (p - val) % p;
        }
        mstrip(v);
        basis.push_back(std::move(v));
    }
    if (basis.size() <= 1) return {g};

    std::vector<MVec> factors{g};
    for (const auto& v : basis) {
        if (v.size() <= 1) continue;  // constant vector
        if (factors.size() == basis.size()) break;
        std::vector<MVec> next;
        for (const auto& f : factors) {
            if (f.size() - 1 <= 1) {
                next.push_back(f);
                continue;
            }
            MVec rem_f = f;
            MVec vmod = mdivmod(v, rem_f, p).second;
            std::vector<MVec> pieces;
            for (unsigned long s = 0; s < p && rem_f.size() > 2; ++s) {
                MVec d = mgcd(rem_f, msub(vmod, MVec{s}, p), p);
                if (d.size() > 1 && d.size() < rem_f.size()) {
                    pieces.push_back(d);
                    rem_f = mdivmod(rem_f, d, p).first;
                }
            }
            if (rem_f.size() > 1) pieces.push_back(rem_f);
            next.insert(next.end(), pieces.begin(), pieces.end());
        }
        factors = std::move(next);
    }
    return factors;
}

Int sym_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

IVec imul(const IVec& a, const IVec& b) {
    if (a.empty() || b.empty()) return {};
    IVec c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    istrip(c);
    return c;
}

IVec iadd(const IVec& a, const IVec& b) {
    IVec c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    istrip(c);
    return c;
}

IVec isub(const IVec& a, const IVec& b) {
    IVec c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    istrip(c);
    return c;
}

IVec imod(const IVec& a, const Int& m) {
    IVec c = a;
    for (auto& x : c) x = sym_mod(x, m);
    istrip(c);
    return c;
}

// division with remainder mod m, divisor monic (lc exactly 1)
std::pair<IVec, IVec> idivmod_monic(const IVec& a, const IVec& b, const Int& m) {
    IVec rem = a;
    istrip(rem);
    if (rem.size() < b.size()) return {IVec{}, rem};
    IVec quo(rem.size() - b.size() + 1, Int(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        if (rem.size() < b.size() + k) continue;
        Int q = sym_mod(rem[b.size() - 1 + k], m);
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[k + i] = sym_mod(rem[k + i] - q * b[i], m);
        istrip(rem);
    }
    istrip(quo);
    return {quo, rem};
}

// Hensel step (von zur Gathen & Gerhard, Alg. 15.10): f == g*h (mod m),
// s*g + t*h == 1 (mod m), h monic; lifts everything to mod m^2.
struct HenselPair {
    IVec g, h, s, t;
};

void hensel_step(HenselPair& hp, const IVec& f, const Int& m) {
    const Int m2 = m * m;
    IVec e = imod(isub(f, imul(hp.g, hp.h)), m2);
    auto [q, r] = idivmod_monic(imod(imul(hp.s, e), m2), hp.h, m2);
    IVec gstar = imod(iadd(iadd(hp.g, imul(hp.t, e)), imul(q, hp.g)), m2);
    IVec hstar = imod(iadd(hp.h, r), m2);
    IVec b = imod(isub(iadd(imul(hp.s, gstar), imul(hp.t, hstar)), IVec{Int(1)}), m2);
    auto [c, d] = idivmod_monic(imod(imul(hp.s, b), m2), hstar, m2);
    IVec sstar = imod(isub(hp.s, d), m2);
    IVec tstar = imod(isub(isub(hp.t, imul(hp.t, b)), imul(c, gstar)), m2);
    hp.g = std::move(gstar);
    hp.h = std::move(hstar);
    hp.s = std::move(sstar);
    hp.t = std::move(tstar);
}

IVec mvec_to_ivec(const MVec& v, unsigned long p) {
    IVec out(v.size());
    Int ip(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = sym_mod(Int(v[i]), ip);
    return out;
}

MVec ivec_to_mvec(const IVec& v, unsigned long p) {
    MVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int r = v[i] % Int(p);
        if (r < 0) r += Int(p);
        out[i] = r.get_ui();
    }
    mstrip(out);
    return out;
}

std::pair<MVec, MVec> mbezout(const MVec& g, const MVec& h, unsigned long p) {
    MVec r0 = g, r1 = h;
    MVec s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = mdivmod(r0, r1, p);
        MVec s2 = msub(s0, mmul(q, s1, p), p);
        MVec t2 = msub(t0, mmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("bezout: inputs not coprime");
    unsigned long inv = mod_inv(r0[0], p);
    for (auto& x : s0) x = (x * inv) % p;
    for (auto& x : t0) x = (x * inv) % p;
    return {s0, t0};
}

Int inorm_inf(const IVec& v) {
    Int m(0);
    for (const auto& x : v) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

// Factorization of a primitive squarefree integer polynomial, degree >= 1.
std::vector<IVec> factor_squarefree_int(const IVec& f0) {
    IVec f = f0;
    istrip(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    static const unsigned long primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                           37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                           79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                                           131, 137, 139, 149, 151, 157, 163, 167, 173, 179};
    unsigned long p = 0;
    std::vector<MVec> modular;
    for (unsigned long cand : primes) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), cand)) continue;
        MVec fm = ivec_to_mvec(f, cand);
        if (fm.size() != f.size()) continue;
        if (mgcd(fm, mderiv(fm, cand), cand).size() != 1) continue;  // not squarefree mod cand
        unsigned long lcinv = mod_inv(fm.back(), cand);
        for (auto& x : fm) x = (x * lcinv) % cand;
        modular = berlekamp(fm, cand);
        p = cand;
        break;
    }
    if (p == 0) throw std::logic_error("no suitable factorization prime found");
    if (modular.size() == 1) return {f};

    // deterministic order of modular factors
    std::sort(modular.begin(), modular.end());

    // lift modulus past 2 * (coefficient bound for factors of f)
    Int bound = inorm_inf(f) * abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 2));
    Int modulus(p);
    while (modulus <= bound * 2) modulus = modulus * modulus;

    // lift the monic image of f
    Int lc = f.back();
    Int lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::logic_error("leading coefficient not invertible mod lift modulus");
    IVec fmonic(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fmonic[i] = sym_mod(f[i] * lcinv, modulus);

    std::vector<IVec> lifted;
    auto lift_rec = [&](auto&& self, const IVec& target, std::vector<MVec> leaves) -> void {
        if (leaves.size() == 1) {
            lifted.push_back(imod(target, modulus));
            return;
        }
        const std::size_t half = leaves.size() / 2;
        std::vector<MVec> left(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(half));
        std::vector<MVec> right(leaves.begin() + static_cast<std::ptrdiff_t>(half), leaves.end());
        MVec gl{1}, gr{1};
        for (const auto& l : left) gl = mmul(gl, l, p);
        for (const auto& r : right) gr = mmul(gr, r, p);
        auto [s, t] = mbezout(gl, gr, p);
        HenselPair hp{mvec_to_ivec(gl, p), mvec_to_ivec(gr, p), mvec_to_ivec(s, p),
                      mvec_to_ivec(t, p)};
        Int q(p);
        while (q < modulus) {
            hensel_step(hp, target, q);
            q = q * q;
        }
        self(self, hp.g, std::move(left));
        self(self, hp.h, std::move(right));
    };
    lift_rec(lift_rec, fmonic, modular);

    // Zassenhaus subset recombination
    std::vector<IVec> result;
    std::vector<IVec> pool = std::move(lifted);
    IVec remaining = f;

    auto try_mask = [&](std::uint64_t mask) -> bool {
        IVec cand{remaining.back()};
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (1ULL << i)) cand = imod(imul(cand, pool[i]), modulus);
        Int content(0);
        for (const auto& x : cand) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content == 0) return false;
        IVec prim(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) prim[i] = cand[i] / content;
        if (prim.size() <= 1) return false;
        auto [quo, rem] = u_divmod(from_int(remaining), from_int(prim));
        if (!rem.is_zero()) return false;
        result.push_back(prim);
        remaining = to_int(u_primitive(quo));
        std::vector<IVec> next_pool;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!(mask & (1ULL << i))) next_pool.push_back(pool[i]);
        pool = std::move(next_pool);
        return true;
    };

    bool progress = true;
    while (!pool.empty() && progress && static_cast<int>(remaining.size()) - 1 > 0) {
        progress = false;
        const std::size_t r = pool.size();
        for (std::size_t card = 1; card <= r && !progress; ++card) {
            for (std::uint64_t mask = 1; mask < (1ULL << r) && !progress; ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != card) continue;
                if (try_mask(mask)) progress = true;
            }
        }
    }
    if (static_cast<int>(remaining.size()) - 1 > 0) result.push_back(remaining);
    return result;
}

}  // namespace

std::vector<Rat> u_rational_roots(const UPoly& a) {
    std::vector<Rat> roots;
    auto fac = u_factor(a);
    for (const auto& [f, mult] : fac.factors) {
        if (f.degree() == 1) roots.push_back(-f.c[0] / f.c[1]);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UFactorization u_factor(const UPoly& a) {
    if (a.is_zero()) throw std::domain_error("factor of zero polynomial");
    UFactorization out;
    out.constant = a.lc();
    if (a.degree() <= 0) {
        out.constant = a.c.empty() ? Rat(0) : a.c[0];
        return out;
    }

    auto sqf = u_squarefree_decomposition(a);
    for (const auto& [part, mult] : sqf) {
        IVec f = to_int(part);
        for (const auto& irr : factor_squarefree_int(f))
            out.factors.emplace_back(u_primitive(from_int(irr)), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        for (std::size_t i = x.first.c.size(); i-- > 0;) {
            if (x.first.c[i] != y.first.c[i]) return x.first.c[i] < y.first.c[i];
        }
        return x.second < y.second;
    });
    Rat lead(1);
    for (const auto& [f, m] : out.factors) lead *= rat_pow(f.lc(), static_cast<unsigned long>(m));
    out.constant = a.lc() / lead;
    return out;
}

bool u_is_irreducible(const UPoly& a) {
    if (a.degree() <= 0) return false;
    if (a.degree() == 1) return true;
    auto fac = u_factor(a);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

UPoly upoly_from(const Polynomial& p, int var) {
    std::vector<Rat> c;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] > 0 && static_cast<int>(i) != var)
                throw std::invalid_argument("polynomial is not univariate in the requested variable");
        auto e = static_cast<std::size_t>(t.mono[static_cast<std::size_t>(var)]);
        if (c.size() <= e) c.resize(e + 1, Rat(0));
        c[e] = t.coef;
    }
    return UPoly(std::move(c));
}

Polynomial upoly_to(const RingPtr& ring, int var, const UPoly& u) {
    std::map<Monomial, Rat> acc;
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (is_zero(u.c[i])) continue;
        Monomial m(ring->size());
        m.set(static_cast<std::size_t>(var), static_cast<std::int32_t>(i));
        acc[std::move(m)] = u.c[i];
    }
    return Polynomial::from_terms(ring, std::move(acc));
}

}  // namespace cspace

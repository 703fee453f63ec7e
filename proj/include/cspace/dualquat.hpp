// Dual quaternions over an arbitrary commutative coefficient ring (Rat for
// geometry, Polynomial for symbolic closure products). Basis order:
// (1, i, j, k, eps, eps*i, eps*j, eps*k) with i^2=j^2=k^2=ijk=-1, eps^2=0,
// eps central. Values are immutable-by-convention and freely shareable.
#pragma once

#include <array>

#include "cspace/poly.hpp"

namespace cspace {

template <class R>
struct DualQuat {
    std::array<R, 8> c;

    const R& operator[](std::size_t i) const { return c[i]; }
    R& operator[](std::size_t i) { return c[i]; }
};

using DQ = DualQuat<Rat>;
using DQPoly = DualQuat<Polynomial>;

template <class R>
DualQuat<R> dq_add(const DualQuat<R>& a, const DualQuat<R>& b) {
    DualQuat<R> r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class R>
DualQuat<R> dq_sub(const DualQuat<R>& a, const DualQuat<R>& b) {
    DualQuat<R> r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class R>
DualQuat<R> dq_scale(const DualQuat<R>& a, const R& s) {
    DualQuat<R> r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] * s;
    return r;
}

namespace detail {

// quaternion product written into out[o0..o3]
template <class R>
void qmul(const R& w1, const R& x1, const R& y1, const R& z1, const R& w2, const R& x2,
          const R& y2, const R& z2, R& ow, R& ox, R& oy, R& oz) {
    ow = w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2;
    ox = w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2;
    oy = w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2;
    oz = w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2;
}

}  // namespace detail

// (p + eps q)(r + eps s) = p r + eps (p s + q r)
template <class R>
DualQuat<R> dq_mul(const DualQuat<R>& a, const DualQuat<R>& b) {
    DualQuat<R> r;
    detail::qmul(a.c[0], a.c[1], a.c[2], a.c[3], b.c[0], b.c[1], b.c[2], b.c[3], r.c[0], r.c[1],
                 r.c[2], r.c[3]);
    R ps0, ps1, ps2, ps3;
    detail::qmul(a.c[0], a.c[1], a.c[2], a.c[3], b.c[4], b.c[5], b.c[6], b.c[7], ps0, ps1, ps2,
                 ps3);
    R qr0, qr1, qr2, qr3;
    detail::qmul(a.c[4], a.c[5], a.c[6], a.c[7], b.c[0], b.c[1], b.c[2], b.c[3], qr0, qr1, qr2,
                 qr3);
    r.c[4] = ps0 + qr0;
    r.c[5] = ps1 + qr1;
    r.c[6] = ps2 + qr2;
    r.c[7] = ps3 + qr3;
    return r;
}

// conjugate: vectorial part (i, j, k, eps*i, eps*j, eps*k) negated
template <class R>
DualQuat<R> dq_conjugate(const DualQuat<R>& a) {
    DualQuat<R> r = a;
    r.c[1] = -a.c[1];
    r.c[2] = -a.c[2];
    r.c[3] = -a.c[3];
    r.c[5] = -a.c[5];
    r.c[6] = -a.c[6];
    r.c[7] = -a.c[7];
    return r;
}

// The eps-scalar component of h * conj(h); h lies on the Study quadric iff
// this vanishes (all other non-real components of h*conj(h) vanish
// identically).
template <class R>
R study_condition(const DualQuat<R>& h) {
    return dq_mul(h, dq_conjugate(h)).c[4];
}

// --- rational-coefficient helpers ------------------------------------------

inline DQ dq_zero() {
    return DQ{{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}};
}

inline DQ dq_one() {
    DQ r = dq_zero();
    r.c[0] = Rat(1);
    return r;
}

inline bool dq_is_zero(const DQ& a) {
    for (const auto& x : a.c)
        if (!is_zero(x)) return false;
    return true;
}

inline bool dq_equal(const DQ& a, const DQ& b) { return a.c == b.c; }

// h represents a rotation axis: h*conj(h) and h+conj(h) strictly real and the
// primal vectorial part nonzero. With `require_normalized`, additionally
// h^2 == -1 (unit direction, axis moment orthogonal to it).
inline bool is_rotation_axis(const DQ& h, bool require_normalized = false) {
    DQ prod = dq_mul(h, dq_conjugate(h));
    for (std::size_t i = 1; i < 8; ++i)
        if (!is_zero(prod.c[i])) return false;
    DQ sum = dq_add(h, dq_conjugate(h));
    for (std::size_t i = 1; i < 8; ++i)
        if (!is_zero(sum.c[i])) return false;
    if (is_zero(h.c[1]) && is_zero(h.c[2]) && is_zero(h.c[3])) return false;
    if (require_normalized) {
        DQ sq = dq_mul(h, h);
        DQ minus_one = dq_scale(dq_one(), Rat(-1));
        if (!dq_equal(sq, minus_one)) return false;
    }
    return true;
}

// Lift a rational dual quaternion into polynomial coefficients.
inline DQPoly dq_lift(const DQ& a, const RingPtr& ring) {
    DQPoly r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = Polynomial::constant(ring, a.c[i]);
    return r;
}

std::string dq_str(const DQ& a);

}  // namespace cspace

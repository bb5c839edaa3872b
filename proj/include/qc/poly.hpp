#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qc/rational.hpp"

namespace qc {

// Dense univariate polynomial over a coefficient ring C, coefficients stored
// lowest degree first.  Invariant: the trailing stored coefficient is nonzero
// (the zero polynomial stores nothing, degree() == -1).
//
// C is Int, Rat, or DensePoly<Int> (which makes the bivariate case: a
// polynomial in the outer variable whose coefficients are polynomials in the
// inner one).
template <class C>
struct DensePoly {
    std::vector<C> c;

    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }

    static DensePoly zero() { return DensePoly{}; }
    static DensePoly constant(C v) {
        DensePoly p;
        if (!is_zero(v)) p.c.push_back(std::move(v));
        return p;
    }
    static DensePoly monomial(C v, int k) {
        DensePoly p;
        if (!is_zero(v)) {
            p.c.assign(static_cast<size_t>(k), C{});
            p.c.push_back(std::move(v));
        }
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero_poly() const { return c.empty(); }

    const C& lc() const {
        assert(!c.empty());
        return c.back();
    }
    C at(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return C{};
        return c[static_cast<size_t>(i)];
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool operator==(const DensePoly& o) const { return c == o.c; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
            if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
        }
        r.trim();
        return r;
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.zero_poly() || b.zero_poly()) return DensePoly{};
        DensePoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, C{});
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend DensePoly operator*(const DensePoly& a, const C& s) {
        if (is_zero(s)) return DensePoly{};
        DensePoly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    // multiply by x^k
    DensePoly shifted(int k) const {
        if (zero_poly()) return *this;
        DensePoly r;
        r.c.assign(static_cast<size_t>(k), C{});
        r.c.insert(r.c.end(), c.begin(), c.end());
        return r;
    }

    DensePoly derivative() const {
        DensePoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * C(static_cast<int>(i)));
        r.trim();
        return r;
    }

    // Horner; X must be constructible from C (e.g. Rat from Int).
    template <class X>
    X eval(const X& x) const {
        X acc{};
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + X(c[i]);
        return acc;
    }
};

using IntPoly = DensePoly<Int>;
using RatPoly = DensePoly<Rat>;
using BiPoly = DensePoly<IntPoly>;  // outer variable v, inner variable u

template <class C>
bool is_zero(const DensePoly<C>& p) {
    return p.zero_poly();
}

// ---- integer-coefficient helpers -------------------------------------------

// gcd of all coefficients, >= 0; content of the zero polynomial is 0.
Int content(const IntPoly& p);
// p divided by content(p); sign of the leading coefficient preserved.
IntPoly primitive_keep_sign(const IntPoly& p);
// p divided by +-content(p) so the leading coefficient is positive.
IntPoly primitive_positive(const IntPoly& p);
// (content, primitive part with positive leading coefficient)
std::pair<Int, IntPoly> content_primitive(const IntPoly& p);

IntPoly exact_div(const IntPoly& p, const Int& d);

// exact polynomial division (throws if not exact)
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// integer points: p(x) exactly
Int eval_int(const IntPoly& p, const Int& x);
// sign of p at a rational point, integer arithmetic only
int sign_at(const IntPoly& p, const Rat& x);

// ---- rational-coefficient helpers -------------------------------------------

// quotient/remainder over the field of rationals; divisor must be nonzero
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

RatPoly to_rat_poly(const IntPoly& p);
// smallest positive d with d*p integral; returns (d*p, d)
std::pair<IntPoly, Int> clear_denominators(const RatPoly& p);

// ---- gcd / squarefree (primitive PRS over Z) ---------------------------------

// primitive gcd with positive leading coefficient; gcd(p, 0) = primitive(p)
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// p / gcd(p, p'), primitive with positive leading coefficient
IntPoly squarefree_part(const IntPoly& p);

// ---- pseudo-division (generic over the coefficient ring) ---------------------

// lc(b)^(deg a - deg b + 1) * a  mod  b; requires deg a >= deg b, b nonzero.
template <class C>
DensePoly<C> pseudo_rem(DensePoly<C> a, const DensePoly<C>& b) {
    assert(!b.zero_poly());
    int e = a.degree() - b.degree() + 1;
    const C d = b.lc();
    while (!a.zero_poly() && a.degree() >= b.degree()) {
        int sh = a.degree() - b.degree();
        DensePoly<C> t = (b * a.lc()).shifted(sh);
        a = a * d - t;
        --e;
    }
    while (e-- > 0) a = a * d;
    return a;
}

// ---- resultant ----------------------------------------------------------------

namespace detail {
inline Int ring_one(const Int*) { return Int(1); }
inline IntPoly ring_one(const IntPoly*) { return IntPoly::constant(Int(1)); }
inline Int ring_pow(const Int& b, int e) { return pow_int(b, static_cast<unsigned>(e)); }
inline IntPoly ring_pow(const IntPoly& b, int e) {
    IntPoly r = IntPoly::constant(Int(1));
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}
inline Int ring_exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!is_zero(r)) throw std::logic_error("ring_exact_div: not exact");
    return q;
}
inline IntPoly ring_exact_div(const IntPoly& a, const IntPoly& b) { return exact_div(a, b); }
}  // namespace detail

// Resultant of a and b via the subresultant pseudo-remainder sequence
// (fraction-free; all divisions exact in the coefficient ring).
template <class C>
C resultant(DensePoly<C> a, DensePoly<C> b) {
    using detail::ring_exact_div;
    using detail::ring_one;
    using detail::ring_pow;
    if (a.zero_poly() || b.zero_poly())
        throw std::invalid_argument("resultant: zero input polynomial");
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        C r = ring_pow(b.lc(), a.degree());
        return s < 0 ? C{} - r : r;
    }
    C g = ring_one(static_cast<const C*>(nullptr));
    C h = g;
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        DensePoly<C> r = pseudo_rem(a, b);
        a = b;
        C divisor = g * ring_pow(h, delta);
        b = DensePoly<C>{};
        if (!r.zero_poly()) {
            std::vector<C> q;
            q.reserve(r.c.size());
            for (auto& coef : r.c) q.push_back(ring_exact_div(coef, divisor));
            b = DensePoly<C>(std::move(q));
        }
        if (b.zero_poly()) return C{};  // positive-degree common factor
        g = a.lc();
        if (delta > 0) h = ring_exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
        if (b.degree() == 0) break;
    }
    int da = a.degree();
    C res = ring_exact_div(ring_pow(b.lc(), da), ring_pow(h, da - 1));
    return s < 0 ? C{} - res : res;
}

// Resultant with respect to v of two bivariate polynomials; both inputs must
// have positive degree in v.  The result vanishes at u0 exactly when f and g
// share a root v there (or both leading v-coefficients vanish at u0).
IntPoly resultant_v(const BiPoly& f, const BiPoly& g);

// ---- bivariate helpers ---------------------------------------------------------

Rat eval2(const BiPoly& f, const Rat& u, const Rat& v);
int degree_u(const BiPoly& f);

// JSON-friendly serialization: decimal strings, lowest degree first.
std::vector<std::string> coeff_strings(const IntPoly& p);
std::vector<std::string> coeff_strings(const RatPoly& p);
IntPoly int_poly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace qc

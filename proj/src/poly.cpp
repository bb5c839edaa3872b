#include "qc/poly.hpp"

namespace qc {

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& x : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_keep_sign(const IntPoly& p) {
    if (p.zero_poly()) return p;
    return exact_div(p, content(p));
}

IntPoly primitive_positive(const IntPoly& p) {
    if (p.zero_poly()) return p;
    Int c = content(p);
    if (sgn(p.lc()) < 0) c = -c;
    return exact_div(p, c);
}

std::pair<Int, IntPoly> content_primitive(const IntPoly& p) {
    if (p.zero_poly()) return {Int(0), IntPoly{}};
    Int c = content(p);
    if (sgn(p.lc()) < 0) c = -c;
    return {c, exact_div(p, c)};
}

IntPoly exact_div(const IntPoly& p, const Int& d) {
    if (is_zero(d)) throw std::invalid_argument("exact_div: zero divisor");
    IntPoly r = p;
    for (auto& x : r.c) x = detail::ring_exact_div(x, d);
    return r;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.zero_poly()) throw std::invalid_argument("exact_div: zero divisor polynomial");
    if (a.zero_poly()) return a;
    if (a.degree() < b.degree()) throw std::logic_error("exact_div: not divisible (degree)");
    // classical long division; when a = q*b exactly, every leading step divides
    IntPoly rem = a;
    std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    while (!rem.zero_poly() && rem.degree() >= b.degree()) {
        int sh = rem.degree() - b.degree();
        Int qc = detail::ring_exact_div(rem.lc(), b.lc());
        q[static_cast<size_t>(sh)] = qc;
        rem = rem - (b * qc).shifted(sh);
    }
    if (!rem.zero_poly()) throw std::logic_error("exact_div: not divisible (remainder)");
    return IntPoly(std::move(q));
}

Int eval_int(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
    return acc;
}

int sign_at(const IntPoly& p, const Rat& x) {
    if (p.zero_poly()) return 0;
    const Int& a = x.get_num();
    const Int& b = x.get_den();  // > 0
    // sign of p(a/b) equals sign of sum c_i a^i b^(d-i)
    Int acc = p.c.back();
    Int bp = 1;
    for (size_t i = p.c.size() - 1; i-- > 0;) {
        bp *= b;
        acc = acc * a + p.c[i] * bp;
    }
    return sgn(acc);
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.zero_poly()) throw std::invalid_argument("divrem: zero divisor polynomial");
    RatPoly rem = a;
    RatPoly quot;
    if (rem.degree() >= b.degree())
        quot.c.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rat());
    while (!rem.zero_poly() && rem.degree() >= b.degree()) {
        int sh = rem.degree() - b.degree();
        Rat qc = rem.lc() / b.lc();
        quot.c[static_cast<size_t>(sh)] = qc;
        rem = rem - (b * qc).shifted(sh);
    }
    quot.trim();
    return {quot, rem};
}

RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c) r.c.emplace_back(x);
    return r;
}

std::pair<IntPoly, Int> clear_denominators(const RatPoly& p) {
    Int d = 1;
    for (const auto& x : p.c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    IntPoly out;
    out.c.reserve(p.c.size());
    for (const auto& x : p.c) out.c.push_back(Int(x.get_num() * (d / x.get_den())));
    out.trim();
    return {out, d};
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.zero_poly()) return primitive_positive(b);
    if (b.zero_poly()) return primitive_positive(a);
    IntPoly p = primitive_positive(a);
    IntPoly q = primitive_positive(b);
    if (p.degree() < q.degree()) std::swap(p, q);
    // primitive PRS: pseudo-remainders reduced to primitive part each step
    while (true) {
        if (q.degree() == 0) return IntPoly::constant(Int(1));
        IntPoly r = pseudo_rem(p, q);
        if (r.zero_poly()) return primitive_positive(q);
        p = q;
        q = primitive_positive(r);
    }
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.zero_poly()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(Int(1));
    IntPoly g = gcd(p, p.derivative());
    return primitive_positive(exact_div(primitive_positive(p), g));
}

IntPoly resultant_v(const BiPoly& f, const BiPoly& g) {
    if (f.zero_poly() || g.zero_poly())
        throw std::invalid_argument("resultant_v: zero input polynomial");
    if (f.degree() < 1 || g.degree() < 1)
        throw std::invalid_argument("resultant_v: inputs must have positive degree in v");
    return resultant(f, g);
}

Rat eval2(const BiPoly& f, const Rat& u, const Rat& v) {
    Rat acc;
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * v + f.c[i].eval(u);
    return acc;
}

int degree_u(const BiPoly& f) {
    int d = -1;
    for (const auto& coef : f.c) d = std::max(d, coef.degree());
    return d;
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const auto& x : p.c) out.push_back(x.get_str());
    return out;
}

std::vector<std::string> coeff_strings(const RatPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const auto& x : p.c) out.push_back(rat_to_string(x));
    return out;
}

IntPoly int_poly_from_strings(const std::vector<std::string>& coeffs) {
    IntPoly p;
    p.c.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        Int x;
        if (x.set_str(s, 10) != 0)
            throw std::invalid_argument("bad integer coefficient: " + s);
        p.c.push_back(x);
    }
    p.trim();
    return p;
}

}  // namespace qc

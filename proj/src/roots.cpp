#include "qc/roots.hpp"

#include <stdexcept>

namespace qc {

namespace {

// sign of p at +inf (from the leading coefficient) or -inf
int sign_at_inf(const IntPoly& p, bool positive_end) {
    if (p.zero_poly()) return 0;
    int s = sgn(p.lc());
    if (!positive_end && (p.degree() & 1)) s = -s;
    return s;
}

// divide out (x - r) while p(r) == 0; r rational, division exact over Z
IntPoly strip_root(IntPoly p, const Rat& r) {
    IntPoly lin;
    lin.c = {Int(-r.get_num()), Int(r.get_den())};  // den*x - num, primitive
    while (!p.zero_poly() && p.degree() >= 1 && sign_at(p, r) == 0) p = exact_div(p, lin);
    return p;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
    if (p.zero_poly()) throw std::invalid_argument("SturmChain: zero polynomial");
    IntPoly p0 = primitive_keep_sign(p);
    seq_.push_back(p0);
    if (p0.degree() >= 1) {
        IntPoly p1 = primitive_keep_sign(p0.derivative());
        seq_.push_back(p1);
        // p_{k+1} = -rem(p_{k-1}, p_k) up to positive scalars; pseudo-remainders
        // with the sign of the implicit multiplier lc^(delta+1) compensated
        while (seq_.back().degree() > 0) {
            const IntPoly& a = seq_[seq_.size() - 2];
            const IntPoly& b = seq_.back();
            int delta = a.degree() - b.degree();
            IntPoly r = pseudo_rem(a, b);
            if (r.zero_poly()) break;
            if (sgn(b.lc()) < 0 && ((delta + 1) & 1)) r = -r;
            seq_.push_back(-primitive_keep_sign(r));
        }
    }
    // chain tail is +-gcd(p, p') up to content; squarefree part = p0 / gcd
    if (seq_.size() >= 2 && seq_.back().degree() > 0) {
        IntPoly g = primitive_positive(seq_.back());
        sqf_ = primitive_positive(exact_div(p0, g));
    } else {
        sqf_ = primitive_positive(p0);
    }
}

int SturmChain::variations(const Endpoint& at, bool lower_end) const {
    int var = 0, prev = 0;
    for (const auto& q : seq_) {
        int s = at ? sign_at(q, *at) : sign_at_inf(q, !lower_end);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_open(const Endpoint& lo, const Endpoint& hi) const {
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("count_open: empty interval");
    return variations(lo, true) - variations(hi, false);
}

int sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.zero_poly()) throw std::invalid_argument("sturm_count: zero polynomial");
    IntPoly q = p;
    if (lo) q = strip_root(std::move(q), *lo);
    if (hi) q = strip_root(std::move(q), *hi);
    if (q.degree() <= 0) return 0;
    return SturmChain(q).count_open(lo, hi);
}

namespace {

// smallest power-of-two bound B >= start such that all k roots of the chain's
// polynomial within (anchor, +inf) lie in (anchor, B); mirrored for below
Rat expand_upper(const SturmChain& chain, const Endpoint& lo, int want) {
    Rat b = lo ? (*lo < 0 ? Rat(1) : *lo + 1) : Rat(1);
    while (chain.count_open(lo, b) < want || chain.is_root(b)) b = b * 2 + 1;
    return b;
}

Rat expand_lower(const SturmChain& chain, const Endpoint& hi, int want) {
    Rat a = hi ? (*hi > 0 ? Rat(-1) : *hi - 1) : Rat(-1);
    while (chain.count_open(a, hi) < want || chain.is_root(a)) a = a * 2 - 1;
    return a;
}

void isolate_rec(const SturmChain& chain, const Rat& lo, const Rat& hi, int count,
                 std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(RootInterval{lo, hi});
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (chain.is_root(mid)) {
        // mid is itself a root: carve an isolating neighbourhood around it
        Rat d = (hi - lo) / 4;
        while (chain.count_open(mid - d, mid + d) > 1 || chain.is_root(mid - d) ||
               chain.is_root(mid + d))
            d = d / 2;
        int below = chain.count_open(lo, mid - d);
        int above = chain.count_open(mid + d, hi);
        isolate_rec(chain, lo, mid - d, below, out);
        out.push_back(RootInterval{mid - d, mid + d});
        isolate_rec(chain, mid + d, hi, above, out);
        return;
    }
    int below = chain.count_open(lo, mid);
    isolate_rec(chain, lo, mid, below, out);
    isolate_rec(chain, mid, hi, count - below, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.zero_poly()) throw std::invalid_argument("isolate_roots: zero polynomial");
    IntPoly q = p;
    if (lo) q = strip_root(std::move(q), *lo);
    if (hi) q = strip_root(std::move(q), *hi);
    std::vector<RootInterval> out;
    if (q.degree() <= 0) return out;
    SturmChain chain(q);
    int k = chain.count_open(lo, hi);
    if (k == 0) return out;
    Rat a = lo ? *lo : expand_lower(chain, hi, k);
    Rat b = hi ? *hi : expand_upper(chain, lo.has_value() ? lo : Endpoint(a), k);
    isolate_rec(chain, a, b, k, out);
    return out;
}

RootInterval refine(const RootInterval& r, const IntPoly& p, const Rat& target_width) {
    if (sgn(target_width) <= 0) throw std::invalid_argument("refine: width must be positive");
    // roots sitting exactly on the interval ends are not the isolated root
    IntPoly stripped = strip_root(strip_root(p, r.lo), r.hi);
    IntPoly sqf = squarefree_part(stripped);
    Rat lo = r.lo, hi = r.hi;
    int slo = sign_at(sqf, lo);
    if (slo == 0 || sign_at(sqf, hi) == 0 || slo == sign_at(sqf, hi))
        throw std::invalid_argument("refine: interval does not straddle a simple root");
    while (hi - lo > target_width) {
        Rat mid = (lo + hi) / 2;
        int sm = sign_at(sqf, mid);
        if (sm == 0) {
            // the root is exactly mid; shrink symmetrically around it
            Rat d = std::min(Rat(target_width / 2), Rat(std::min(Rat(mid - lo), Rat(hi - mid)) / 2));
            return RootInterval{mid - d, mid + d};
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return RootInterval{lo, hi};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

namespace {

RatInterval interval_eval_upoly(const IntPoly& p, const RatInterval& x) {
    RatInterval acc(Rat(0), Rat(0));
    for (size_t i = p.c.size(); i-- > 0;) {
        Rat coef(p.c[i]);
        acc = acc * x + RatInterval(coef, coef);
    }
    return acc;
}

}  // namespace

RatInterval interval_eval(const BiPoly& f, const RatInterval& u_box, const RatInterval& v_box) {
    RatInterval acc(Rat(0), Rat(0));
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * v_box + interval_eval_upoly(f.c[i], u_box);
    return acc;
}

}  // namespace qc

#pragma once

#include <optional>
#include <vector>

#include "qc/poly.hpp"

namespace qc {

// Open interval endpoint; nullopt = the infinite end.
using Endpoint = std::optional<Rat>;

// Isolating interval for one simple real root of an associated squarefree
// polynomial: lo < hi, p(lo) and p(hi) nonzero with opposite signs, and the
// Sturm count over (lo, hi) is 1.
struct RootInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo < x && x < hi; }
};

// Signed-remainder chain of (p, p').  Sign variations count distinct real
// roots without a separate squarefree reduction; the squarefree part is
// recovered from the chain tail for sign tests on isolating intervals.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& p);

    const IntPoly& squarefree() const { return sqf_; }

    // distinct real roots in the open interval; endpoints must not be roots
    int count_open(const Endpoint& lo, const Endpoint& hi) const;

    bool is_root(const Rat& x) const { return sign_at(sqf_, x) == 0; }

  private:
    int variations(const Endpoint& at, bool lower_end) const;
    std::vector<IntPoly> seq_;
    IntPoly sqf_;
};

// Exact number of distinct real roots of p in the open interval.  Roots lying
// exactly on a finite endpoint are divided out before counting, so they are
// never included.  Throws on the zero polynomial.
int sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

// Pairwise-disjoint isolating intervals, one per distinct real root of p in
// the open interval, in increasing order.
std::vector<RootInterval> isolate_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

// Shrink an isolating interval to width <= target by exact sign bisection.
RootInterval refine(const RootInterval& r, const IntPoly& p, const Rat& target_width);

// ---- exact rational interval arithmetic ----------------------------------------

struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit RatInterval(const RootInterval& r) : lo(r.lo), hi(r.hi) {}

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
};

// Certified enclosure of f over u_box x v_box (Horner in both variables).
// If the enclosure excludes 0, f has no zero on the box.
RatInterval interval_eval(const BiPoly& f, const RatInterval& u_box, const RatInterval& v_box);

}  // namespace qc

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qc/poly.hpp"

using namespace qc;
using testutil::XorShift;

namespace {

IntPoly ipoly(std::vector<long> coeffs) {
    IntPoly p;
    for (long c : coeffs) p.c.emplace_back(c);
    p.trim();
    return p;
}

RatPoly rpoly(std::vector<Rat> coeffs) { return RatPoly(std::move(coeffs)); }

IntPoly random_ipoly(XorShift& rng, int max_deg, int coeff_range) {
    IntPoly p;
    int deg = rng.range(0, max_deg);
    for (int i = 0; i <= deg; ++i) p.c.emplace_back(rng.range(-coeff_range, coeff_range));
    p.trim();
    return p;
}

BiPoly random_bipoly(XorShift& rng, int vdeg, int udeg, int coeff_range) {
    BiPoly f;
    for (int i = 0; i <= vdeg; ++i) f.c.push_back(random_ipoly(rng, udeg, coeff_range));
    f.trim();
    return f;
}

// Bareiss fraction-free determinant over Z[u]; the oracle route for resultants
IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m) {
    size_t n = m.size();
    if (n == 0) return IntPoly::constant(Int(1));
    int sign = 1;
    IntPoly prev = IntPoly::constant(Int(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].zero_poly()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].zero_poly()) ++swap_row;
            if (swap_row == n) return IntPoly{};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = IntPoly{};
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

IntPoly sylvester_resultant(const BiPoly& f, const BiPoly& g) {
    int df = f.degree(), dg = g.degree();
    size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n, IntPoly{}));
    for (int row = 0; row < dg; ++row)
        for (int k = 0; k <= df; ++k) m[row][row + k] = f.at(df - k);
    for (int row = 0; row < df; ++row)
        for (int k = 0; k <= dg; ++k) m[dg + row][row + k] = g.at(dg - k);
    return bareiss_det(std::move(m));
}

}  // namespace

TEST_CASE("basic arithmetic and evaluation") {
    IntPoly p = ipoly({-2, 0, 1});  // u^2 - 2
    CHECK(p.eval(Rat(1)) == Rat(-1));
    CHECK(p.eval(Rat(0)) == Rat(-2));
    CHECK(eval_int(p, Int(3)) == 7);
    CHECK(p.degree() == 2);

    IntPoly q = ipoly({1, 1});  // u + 1
    CHECK((p + q) == ipoly({-1, 1, 1}));
    CHECK((p - q) == ipoly({-3, -1, 1}));
    CHECK((p * q) == ipoly({-2, -2, 1, 1}));
    CHECK(p.derivative() == ipoly({0, 2}));
    CHECK((-p) == ipoly({2, 0, -1}));
}

TEST_CASE("content and primitive part") {
    IntPoly p = ipoly({0, -3, -6});  // -6u^2 - 3u
    auto [c, prim] = content_primitive(p);
    CHECK(c == -3);
    CHECK(prim == ipoly({0, 1, 2}));
    CHECK(sgn(prim.lc()) > 0);
    CHECK(content(ipoly({})) == 0);
    CHECK(primitive_positive(ipoly({4, -8})) == ipoly({-1, 2}));
}

TEST_CASE("divrem over the rationals") {
    RatPoly a = rpoly({Rat(-1), Rat(0), Rat(0), Rat(1)});  // x^3 - 1
    RatPoly b = rpoly({Rat(-1), Rat(1)});                  // x - 1
    auto [q, r] = divrem(a, b);
    CHECK(q == rpoly({Rat(1), Rat(1), Rat(1)}));
    CHECK(r.zero_poly());
    CHECK_THROWS_AS(divrem(a, RatPoly{}), std::invalid_argument);

    XorShift rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        RatPoly x = to_rat_poly(random_ipoly(rng, 6, 9));
        RatPoly y = to_rat_poly(random_ipoly(rng, 4, 9));
        if (y.zero_poly()) continue;
        auto [qq, rr] = divrem(x, y);
        CHECK(qq * y + rr == x);
        CHECK(rr.degree() < y.degree());
    }
}

TEST_CASE("gcd and squarefree part") {
    CHECK(gcd(ipoly({-1, 0, 1}), ipoly({-1, 1})) == ipoly({-1, 1}));  // u^2-1, u-1
    // u^2(u-1): squarefree part u(u-1) up to sign/content
    IntPoly p = ipoly({0, 0, -1, 1});
    CHECK(squarefree_part(p) == ipoly({0, -1, 1}));
    CHECK(squarefree_part(ipoly({5})) == ipoly({1}));
    CHECK_THROWS_AS(squarefree_part(IntPoly{}), std::invalid_argument);

    XorShift rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly a = random_ipoly(rng, 4, 5);
        IntPoly b = random_ipoly(rng, 4, 5);
        if (a.zero_poly() || b.zero_poly()) continue;
        IntPoly g = gcd(a, b);
        // the primitive gcd divides both primitive parts exactly
        CHECK_NOTHROW(exact_div(primitive_positive(a), g));
        CHECK_NOTHROW(exact_div(primitive_positive(b), g));
        // a planted common factor shows up in the gcd degree
        IntPoly f = ipoly({1, 1});
        CHECK(gcd(a * f, b * f).degree() >= 1);
    }
}

TEST_CASE("resultant: textbook cases") {
    // res_v(u - v, v^2 - 2) = u^2 - 2 exactly
    BiPoly f;  // u - v
    f.c = {ipoly({0, 1}), ipoly({-1})};
    BiPoly g;  // v^2 - 2
    g.c = {ipoly({-2}), ipoly({}), ipoly({1})};
    CHECK(resultant_v(f, g) == ipoly({-2, 0, 1}));

    // common root everywhere -> identically zero
    BiPoly v;
    v.c = {ipoly({}), ipoly({1})};
    CHECK(resultant_v(v, v).zero_poly());

    CHECK_THROWS_AS(resultant_v(f, BiPoly{}), std::invalid_argument);
    BiPoly const_poly;
    const_poly.c = {ipoly({3})};
    CHECK_THROWS_AS(resultant_v(f, const_poly), std::invalid_argument);
}

TEST_CASE("resultant: planted common factors and crossings") {
    XorShift rng(4242);
    // f and g share the factor (v - r(u)): resultant vanishes identically
    for (int iter = 0; iter < 10; ++iter) {
        IntPoly r = random_ipoly(rng, 2, 4);
        BiPoly root_factor;
        root_factor.c = {-r, ipoly({1})};  // v - r(u)
        BiPoly ft = random_bipoly(rng, 2, 2, 4);
        BiPoly gt = random_bipoly(rng, 2, 2, 4);
        if (ft.zero_poly() || gt.zero_poly()) continue;
        IntPoly res = resultant_v(root_factor * ft, root_factor * gt);
        CHECK(res.zero_poly());
    }
    // f has root v=u, g has root v=2-u: they meet exactly at u=1
    BiPoly fu, gu;
    fu.c = {ipoly({0, -1}), ipoly({1})};  // v - u
    gu.c = {ipoly({-2, 1}), ipoly({1})};  // v - (2 - u)
    IntPoly res = resultant_v(fu, gu);
    CHECK_FALSE(res.zero_poly());
    CHECK(eval_int(res, Int(1)) == 0);
    CHECK(eval_int(res, Int(5)) != 0);
}

TEST_CASE("resultant agrees with the Bareiss-Sylvester oracle") {
    XorShift rng(31337);
    int done = 0;
    while (done < 40) {
        BiPoly f = random_bipoly(rng, rng.range(1, 3), rng.range(0, 2), 5);
        BiPoly g = random_bipoly(rng, rng.range(1, 3), rng.range(0, 2), 5);
        if (f.degree() < 1 || g.degree() < 1) continue;
        IntPoly mine = resultant_v(f, g);
        IntPoly oracle = sylvester_resultant(f, g);
        CHECK(mine == oracle);
        ++done;
    }
}

TEST_CASE("coefficient strings round-trip") {
    XorShift rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        IntPoly p = random_ipoly(rng, 8, 1000000);
        CHECK(int_poly_from_strings(coeff_strings(p)) == p);
    }
    IntPoly big;
    big.c = {Int("123456789012345678901234567890"), Int("-98765432109876543210")};
    CHECK(int_poly_from_strings(coeff_strings(big)) == big);
}

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("0.25") == Rat(1, 4));
    CHECK(rat_from_string("-0.5") == Rat(-1, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_from_string(" 2/6 ") == Rat(1, 3));
    CHECK(rat_to_string(Rat(1, 3)) == "1/3");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("determinism: identical inputs give identical outputs") {
    XorShift rng(11);
    BiPoly f = random_bipoly(rng, 3, 2, 6);
    BiPoly g = random_bipoly(rng, 2, 2, 6);
    if (f.degree() >= 1 && g.degree() >= 1) {
        IntPoly a = resultant_v(f, g);
        IntPoly b = resultant_v(f, g);
        CHECK(a == b);
    }
}

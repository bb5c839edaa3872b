#include "qc/lambda.hpp"

namespace qc {

namespace {

// power table base^0..base^max
std::vector<Rat> powers(const Rat& base, int max) {
    std::vector<Rat> p(static_cast<size_t>(max) + 1);
    p[0] = 1;
    for (int i = 1; i <= max; ++i) p[static_cast<size_t>(i)] = p[static_cast<size_t>(i - 1)] * base;
    return p;
}

std::vector<Rat> level_sums_checked(const SmallGraph& f, const WitnessTriple& w) {
    if (f.n > kPatternVertexCap)
        throw std::invalid_argument("lambda: vertex count exceeds cap of " +
                                    std::to_string(kPatternVertexCap));
    return level_sums(subset_profile(f), w);
}

}  // namespace

std::vector<Rat> level_sums(const SubsetProfile& prof, const WitnessTriple& w) {
    int e = 0;
    if (!prof.levels.empty())
        for (const auto& [t, mult] : prof.levels[0]) e = t.e_comp;  // single triple (0, e(F), 0)
    auto pu = powers(w.u, e), pv = powers(w.v, e), ps = powers(w.s, e);
    std::vector<Rat> sums(prof.levels.size());
    for (size_t k = 0; k < prof.levels.size(); ++k) {
        Rat total;
        for (const auto& [t, mult] : prof.levels[k])
            total += pu[static_cast<size_t>(t.e_in)] * pv[static_cast<size_t>(t.e_comp)] *
                     ps[static_cast<size_t>(t.e_cross)] * Rat(static_cast<long>(mult));
        sums[k] = total;
    }
    return sums;
}

RatPoly lambda_q(const SmallGraph& f, const WitnessTriple& w) {
    auto sums = level_sums_checked(f, w);
    int m = f.n;
    // one_minus[j] = (1-q)^j
    std::vector<RatPoly> one_minus(static_cast<size_t>(m) + 1);
    one_minus[0] = RatPoly::constant(Rat(1));
    RatPoly lin(std::vector<Rat>{Rat(1), Rat(-1)});
    for (int j = 1; j <= m; ++j) one_minus[static_cast<size_t>(j)] = one_minus[static_cast<size_t>(j - 1)] * lin;
    RatPoly out;
    for (int k = 0; k <= m; ++k)
        out = out + one_minus[static_cast<size_t>(m - k)].shifted(k) * sums[static_cast<size_t>(k)];
    return out;
}

RatPoly lambda_x(const SmallGraph& f, const WitnessTriple& w) {
    auto sums = level_sums_checked(f, w);
    int m = f.n;
    std::vector<RatPoly> xm1(static_cast<size_t>(m) + 1);
    xm1[0] = RatPoly::constant(Rat(1));
    RatPoly lin(std::vector<Rat>{Rat(-1), Rat(1)});
    for (int j = 1; j <= m; ++j) xm1[static_cast<size_t>(j)] = xm1[static_cast<size_t>(j - 1)] * lin;
    RatPoly out;
    for (int k = 0; k <= m; ++k) out = out + xm1[static_cast<size_t>(k)] * sums[static_cast<size_t>(k)];
    return out;
}

std::optional<AffinePair> degree_le1_check(const SmallGraph& f, const WitnessTriple& w) {
    RatPoly lam = lambda_q(f, w);
    if (lam.zero_poly() || lam.degree() > 1) return std::nullopt;
    Rat a = lam.at(0);
    Rat b = f.n > 0 ? Rat(lam.at(1) / f.n) : Rat(0);
    return AffinePair{a, b};
}

std::optional<AffinePair> check_alg_system(const SmallGraph& f, const WitnessTriple& w) {
    auto sums = level_sums_checked(f, w);
    int m = f.n;
    Rat a = sums[0];
    Rat b = m > 0 ? Rat((sums[static_cast<size_t>(m)] - a) / m) : Rat(0);
    if (is_zero(a) && is_zero(b)) {
        // (a, b) = (0, 0) never certifies anything
        bool all_zero = true;
        for (const auto& t : sums)
            if (!is_zero(t)) all_zero = false;
        if (all_zero) return std::nullopt;
    }
    for (int k = 0; k <= m; ++k)
        if (sums[static_cast<size_t>(k)] != Rat(binomial(m, k)) * (a + b * k)) return std::nullopt;
    return AffinePair{a, b};
}

std::pair<BiPoly, BiPoly> degree_seq_equations(const SmallGraph& f) {
    long long e = f.edge_count();
    if (e < 1) throw std::invalid_argument("degree_seq_equations: e(F) = 0");
    for (int v = 0; v < f.n; ++v)
        if (f.degree(v) == 0)
            throw std::invalid_argument("degree_seq_equations: isolated vertex present");
    int m = f.n;
    int ei = static_cast<int>(e);

    IntPoly a_of_u;  // sum_i u^{e-d_i} - (m-1) u^e
    a_of_u.c.assign(static_cast<size_t>(ei) + 1, Int(0));
    for (int v = 0; v < m; ++v) a_of_u.c[static_cast<size_t>(ei - f.degree(v))] += 1;
    a_of_u.c[static_cast<size_t>(ei)] -= m - 1;
    a_of_u.trim();

    BiPoly f1;
    f1.c.assign(static_cast<size_t>(ei) + 1, IntPoly{});
    f1.c[0] = a_of_u;
    f1.c[static_cast<size_t>(ei)] = IntPoly::constant(Int(-1));
    f1.trim();

    BiPoly f2;
    f2.c.assign(static_cast<size_t>(ei) + 1, IntPoly{});
    for (int v = 0; v < m; ++v)
        f2.c[static_cast<size_t>(ei - f.degree(v))] = f2.c[static_cast<size_t>(ei - f.degree(v))] +
                                                      IntPoly::constant(Int(1));
    f2.c[0] = f2.c[0] - IntPoly::monomial(Int(1), ei);
    f2.c[static_cast<size_t>(ei)] = f2.c[static_cast<size_t>(ei)] - IntPoly::constant(Int(m - 1));
    f2.trim();

    return {f1, f2};
}

}  // namespace qc

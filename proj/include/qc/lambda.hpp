#pragma once

#include <optional>
#include <utility>

#include "qc/graph.hpp"
#include "qc/poly.hpp"

namespace qc {

// Block weights (u, v, s) of a 2-type step function: u on the high block,
// v on the low block, s across.  A valid Bad witness has entries in [0,1],
// not all equal.
struct WitnessTriple {
    Rat u, v, s;

    bool all_equal() const { return u == v && v == s; }
    bool in_unit_interval() const {
        return sgn(u) >= 0 && u <= 1 && sgn(v) >= 0 && v <= 1 && sgn(s) >= 0 && s <= 1;
    }
};

struct AffinePair {
    Rat a, b;
    bool operator==(const AffinePair&) const = default;
};

// Per-level sums T_k = sum over |A|=k of u^{e_in} v^{e_comp} s^{e_cross},
// k = 0..m, computed from the subset profile.
std::vector<Rat> level_sums(const SubsetProfile& prof, const WitnessTriple& w);

// The subset-profile polynomial in q:
//   sum_A u^{e_in(A)} v^{e_comp(A)} s^{e_cross(A)} q^|A| (1-q)^{m-|A|}
// At q=0 it equals v^e(F), at q=1 it equals u^e(F).
RatPoly lambda_q(const SmallGraph& f, const WitnessTriple& w);

// The companion polynomial in x: sum_A (...) (x-1)^|A|.
RatPoly lambda_x(const SmallGraph& f, const WitnessTriple& w);

// If lambda_q has degree <= 1 and is not identically zero, the pair (a, b)
// with lambda_q(q) = a + b*m*q; otherwise nullopt.
std::optional<AffinePair> degree_le1_check(const SmallGraph& f, const WitnessTriple& w);

// Solves a = v^e, b = (u^e - a)/m from the outermost level equations and
// accepts iff every level satisfies T_k = C(m,k) (a + b k) exactly.  Agrees
// with degree_le1_check on every input.
std::optional<AffinePair> check_alg_system(const SmallGraph& f, const WitnessTriple& w);

// The degree-sequence equations with s normalized to 1, as polynomials in v
// with integer-polynomial coefficients in u:
//   f1 = sum_i u^{e-d_i} - (m-1) u^e - v^e
//   f2 = sum_i v^{e-d_i} - u^e - (m-1) v^e
// Requires e(F) >= 1 and no isolated vertices.
std::pair<BiPoly, BiPoly> degree_seq_equations(const SmallGraph& f);

}  // namespace qc

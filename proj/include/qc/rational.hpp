#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qc {

// Exact arithmetic everywhere: Int is an arbitrary-precision integer,
// Rat a canonical rational (gcd(num,den)=1, den>0).  GMP keeps mpq_class
// canonical through arithmetic; only direct num/den surgery needs an
// explicit canonicalize(), which the helpers below take care of.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat make_rat(const Int& num, const Int& den) {
    if (is_zero(den)) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int binomial(int n, int k);
Int factorial(int n);

Int pow_int(const Int& base, unsigned exp);
Rat pow_rat(const Rat& base, unsigned exp);

// Parses "p/q", an integer, or a decimal string like "0.25" — never through
// binary floating point.
Rat rat_from_string(const std::string& text);

// "p/q" for non-integers, plain digits otherwise.
std::string rat_to_string(const Rat& r);

}  // namespace qc

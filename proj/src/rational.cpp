#include "qc/rational.hpp"

namespace qc {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

Int pow_int(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow_rat(const Rat& base, unsigned exp) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    // num/den were coprime, so their powers are too
    return r;
}

Rat rat_from_string(const std::string& text) {
    std::string s = text;
    // trim
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
    s = s.substr(b, e - b + 1);

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        return make_rat(num, den);
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad decimal literal: " + text);
        Int num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("bad decimal literal: " + text);
        Int den = pow_int(Int(10), static_cast<unsigned>(frac_len));
        return make_rat(num, den);
    }

    Int num;
    if (num.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + text);
    return Rat(num);
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qc

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace so4sym {

// Exact arbitrary-precision arithmetic, GMP-backed. mpq_rational keeps
// values canonical (lowest terms, positive denominator) automatically.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

/// Orders rationals by (numerator, denominator), not by value; used for
/// canonical-form tie breaking where only determinism matters.
inline int lex_cmp(const Rational& a, const Rational& b) {
    const BigInt an = rat_num(a), bn = rat_num(b);
    if (an != bn) return an < bn ? -1 : 1;
    const BigInt ad = rat_den(a), bd = rat_den(b);
    if (ad != bd) return ad < bd ? -1 : 1;
    return 0;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    BigInt n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(n, d);
}

}  // namespace so4sym

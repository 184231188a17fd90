#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace srk {

// All arithmetic in the computation path is exact: arbitrary-precision
// integers for counts and bound values, rationals for intermediate ratios.
// Floors are taken exactly, once, at the end of each bound formula.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, long exp) {
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// num/den as a rational; unlike the raw two-argument constructor this
// accepts a negative denominator
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// floor of a rational (denominator is canonically positive in cpp_rational)
inline Int floor_rat(const Rat& r) {
    Int num = rat_num(r), den = rat_den(r);
    Int q = num / den;          // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int num = rat_num(r), den = rat_den(r);
    Int q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

// exact integer division; throws if the division leaves a remainder
inline Int exact_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (q * den != num) throw std::logic_error("exact_div: inexact division");
    return q;
}

}  // namespace srk

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace gkmod {

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator) as long as construction goes through
// make_rational / parsing below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a", "-a", "a/b". Whitespace is not accepted.
Rational rational_from_string(const std::string& s);

std::string rational_to_string(const Rational& q);

// Directed conversions: to_double_up(q) >= q and to_double_down(q) <= q.
// mpq_get_d truncates toward zero (error < 1 ulp); two nextafter steps
// give margin in either direction.
inline double to_double_up(const Rational& q) {
    double d = q.get_d();
    return std::nextafter(std::nextafter(d, HUGE_VAL), HUGE_VAL);
}

inline double to_double_down(const Rational& q) {
    double d = q.get_d();
    return std::nextafter(std::nextafter(d, -HUGE_VAL), -HUGE_VAL);
}

// Rough operand size in limbs, used by the elimination pivot heuristic.
inline size_t rational_size_hint(const Rational& q) {
    return mpz_size(q.get_num().get_mpz_t()) + mpz_size(q.get_den().get_mpz_t());
}

}  // namespace gkmod

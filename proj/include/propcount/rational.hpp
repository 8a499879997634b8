#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace propcount {

// All arithmetic in this library is exact. GMP's canonical rationals
// (lowest terms, positive denominator) are the sole scalar type.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q" into a canonical rational.
Rat parse_rat(const std::string& text);

// "p" or "p/q", denominator omitted when 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int factorial(unsigned n);

// base^exp for integer exp; negative exp requires base != 0.
Rat rat_pow(const Rat& base, long exp);

Int int_pow(const Int& base, unsigned exp);

// binomial(top, n) = top (top-1) ... (top-n+1) / n! for rational top.
Rat falling_binomial(const Rat& top, unsigned n);

// binom(n, k) over the integers, 0 when k > n or n < 0.
Int binomial(const Int& n, unsigned k);

}  // namespace propcount

#pragma once

#include "propcount/multipoly.hpp"
#include "propcount/report.hpp"

namespace propcount {

// The product polynomial family
//   P_n(a, b, c) = c * prod_{i=1}^{n-1} (i a + (n-i) b + c),
// homogeneous of degree n and symmetric in a and b, and its coefficient
// of c, Q_n(a, b) = prod_{i=1}^{n-1} (i a + (n-i) b). Every enumerated
// statistic in the library matches one of its specializations.

// P_0 = 1 by the empty-product convention, so all generating functions
// start with constant term 1.
MultiPoly p_poly(int n);

MultiPoly q_poly(int n);

// P_n at an exact point, without expanding the symbolic polynomial.
Rat p_value(int n, const Rat& a, const Rat& b, const Rat& c);

Rat q_value(int n, const Rat& a, const Rat& b);

// c (n + c)^{n-1}; equals P_n(1, 1, c).
Rat cayley_count(int n, const Rat& c);

// Exact check of c/(kn+c) binom(kn+c, n) n! = P_n(k-1, k, c); kn+c must be nonzero.
Report check_kary_specialization(int n, int k, const Rat& c);

// Exact check of P_n(a,b,c)/n! = (b-a)^n * cb/(bb n + cb) * binom(bb n + cb, n)
// with bb = b/(b-a), cb = c/(b-a); requires a != b and bn + c != 0.
Report check_rescaling(int n, const Rat& a, const Rat& b, const Rat& c);

// P_n(1, 2, 2)/n! = C_{n+1}, the (n+1)-st Catalan number.
Report catalan_check(int n);

Int catalan_number(int m);

}  // namespace propcount

#include "propcount/closedform.hpp"

namespace propcount {

MultiPoly p_poly(int n) {
    if (n < 0) throw std::invalid_argument("p_poly: n must be >= 0");
    if (n > 64) throw std::invalid_argument("p_poly: symbolic expansion capped at n = 64");
    if (n == 0) return MultiPoly(1L);
    const MultiPoly a = MultiPoly::variable(Var::a);
    const MultiPoly b = MultiPoly::variable(Var::b);
    const MultiPoly c = MultiPoly::variable(Var::c);
    MultiPoly prod = c;
    for (int i = 1; i <= n - 1; ++i) prod *= Rat(i) * a + Rat(n - i) * b + c;
    return prod;
}

MultiPoly q_poly(int n) {
    if (n < 0) throw std::invalid_argument("q_poly: n must be >= 0");
    if (n == 0) return MultiPoly();
    return p_poly(n).coeff_of(Var::c, 1);
}

Rat p_value(int n, const Rat& a, const Rat& b, const Rat& c) {
    if (n < 0) throw std::invalid_argument("p_value: n must be >= 0");
    if (n == 0) return Rat(1);
    Rat prod = c;
    for (int i = 1; i <= n - 1; ++i) prod *= Rat(i) * a + Rat(n - i) * b + c;
    return prod;
}

Rat q_value(int n, const Rat& a, const Rat& b) {
    if (n <= 0) throw std::invalid_argument("q_value: n must be >= 1");
    Rat prod(1);
    for (int i = 1; i <= n - 1; ++i) prod *= Rat(i) * a + Rat(n - i) * b;
    return prod;
}

Rat cayley_count(int n, const Rat& c) {
    if (n < 1) throw std::invalid_argument("cayley_count: n must be >= 1");
    return c * rat_pow(Rat(n) + c, n - 1);
}

Report check_kary_specialization(int n, int k, const Rat& c) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Rat knc = Rat(k) * Rat(n) + c;
    if (knc == 0) throw std::domain_error("kn + c = 0: left side undefined");
    Report report;
    const Rat lhs = c / knc * falling_binomial(knc, static_cast<unsigned>(n)) *
                    Rat(factorial(static_cast<unsigned>(n)));
    const Rat rhs = p_value(n, Rat(k - 1), Rat(k), c);
    report.add("c/(kn+c)*binom(kn+c,n)*n! = P_n(k-1,k,c)", rat_str(lhs), rat_str(rhs));
    return report;
}

Report check_rescaling(int n, const Rat& a, const Rat& b, const Rat& c) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (a == b) throw std::domain_error("rescaling requires a != b");
    const Rat bb = b / (b - a);
    const Rat cb = c / (b - a);
    const Rat denom = bb * Rat(n) + cb;
    if (denom == 0) throw std::domain_error("bn + c = 0: right side undefined");
    Report report;
    const Rat lhs = p_value(n, a, b, c) / Rat(factorial(static_cast<unsigned>(n)));
    const Rat rhs =
        rat_pow(b - a, n) * (cb / denom) * falling_binomial(denom, static_cast<unsigned>(n));
    report.add("P_n(a,b,c)/n! = (b-a)^n * rescaled binomial", rat_str(lhs), rat_str(rhs));
    return report;
}

Int catalan_number(int m) {
    if (m < 0) throw std::invalid_argument("catalan_number: m must be >= 0");
    return binomial(Int(2 * m), static_cast<unsigned>(m)) / Int(m + 1);
}

Report catalan_check(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Report report;
    const Rat lhs = p_value(n, Rat(1), Rat(2), Rat(2)) / Rat(factorial(static_cast<unsigned>(n)));
    const Rat rhs = Rat(catalan_number(n + 1));
    report.add("P_n(1,2,2)/n! = C_{n+1}", rat_str(lhs), rat_str(rhs));
    return report;
}

}  // namespace propcount

#include "propcount/rational.hpp"

namespace propcount {

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw std::invalid_argument("bad rational literal: " + text);
    try {
        Rat q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0 && exp < 0) throw std::domain_error("zero base with negative exponent");
    Rat p;
    unsigned long e = exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), e);
    if (exp < 0) {
        Rat inv(p.get_den(), p.get_num());
        inv.canonicalize();
        return inv;
    }
    return p;  // already canonical: powers of coprime values stay coprime
}

Int int_pow(const Int& base, unsigned exp) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exp);
    return p;
}

Rat falling_binomial(const Rat& top, unsigned n) {
    Rat prod(1);
    for (unsigned i = 0; i < n; ++i) prod *= top - Rat(i);
    return prod / Rat(factorial(n));
}

Int binomial(const Int& n, unsigned k) {
    if (n < 0 || n < static_cast<long>(k)) return 0;
    Int b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

}  // namespace propcount

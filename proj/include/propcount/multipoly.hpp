#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "propcount/rational.hpp"

namespace propcount {

// The fixed variable list. Every polynomial in the library lives in
// Q[a, b, c, u, v, w, alpha]; most use only a few of the variables.
enum class Var : int { a = 0, b, c, u, v, w, alpha };

inline constexpr int kVarCount = 7;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

using ExpoVec = std::array<std::uint8_t, kVarCount>;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are keyed by exponent vector in descending lexicographic order,
// which fixes the canonical rendering ("a*c + b*c + c^2"). No zero
// coefficient is ever stored, so equality is equality of term maps.
class MultiPoly {
  public:
    using TermMap = std::map<ExpoVec, Rat, std::greater<ExpoVec>>;

    MultiPoly() = default;
    explicit MultiPoly(const Rat& constant);
    explicit MultiPoly(long constant) : MultiPoly(Rat(constant)) {}

    static MultiPoly variable(Var v, unsigned power = 1);
    static MultiPoly term(const Rat& coeff, const ExpoVec& expo);

    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;
    const TermMap& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }
    friend MultiPoly operator*(const Rat& s, const MultiPoly& p);

    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    MultiPoly pow(unsigned e) const;

    // Polynomial coefficient of var^power, with var eliminated from the result.
    MultiPoly coeff_of(Var var, unsigned power) const;

    // Exact value at a point; every variable occurring in the polynomial
    // must be bound or the evaluation throws, naming the variable.
    Rat eval(const std::map<Var, Rat>& point) const;

    // Substitutes polynomials for the given variables; others are untouched.
    MultiPoly subst(const std::map<Var, MultiPoly>& replacements) const;

    // Exchanges the exponents of two variables in every monomial.
    MultiPoly swap_vars(Var x, Var y) const;

    // Canonical rendering, e.g. "a*c + b*c + c^2"; the zero polynomial is "0".
    std::string str() const;

  private:
    void add_term(const ExpoVec& expo, const Rat& coeff);
    TermMap terms_;
};

inline MultiPoly operator*(const MultiPoly& p, const Rat& s) { return s * p; }

}  // namespace propcount

#pragma once

#include <string>
#include <vector>

#include "propcount/rational.hpp"
#include "propcount/report.hpp"

namespace propcount {

// Formal power series truncated at a fixed order, with exact rational
// coefficients. coeff(n) is the ordinary coefficient of x^n; all paper
// quantities are exponential coefficients, recovered via egf_coeff(n)
// = coeff(n) * n!. Binary operations require equal orders; use
// truncate() to align. Every operation is exact through the order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }
    TruncatedSeries(int order, std::vector<Rat> coeffs);

    static TruncatedSeries constant(int order, const Rat& value);
    static TruncatedSeries x(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    Rat egf_coeff(int n) const { return coeff(n) * Rat(factorial(static_cast<unsigned>(n))); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries truncate(int m) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const Rat& s, const TruncatedSeries& f);
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.coeffs_ == g.coeffs_;
    }

    // Multiplication by x at the same order; the top coefficient is truncated away.
    TruncatedSeries mul_x() const;

    // Termwise d/dx; result has order() - 1.
    TruncatedSeries derivative() const;

    // Antiderivative with zero constant term; result has order() + 1.
    TruncatedSeries integral() const;

    // 1/f; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    // [c0, c1, ...] with exact fraction entries.
    std::string str() const;

  private:
    void set(int n, Rat v) { coeffs_[static_cast<std::size_t>(n)] = std::move(v); }
    std::vector<Rat> coeffs_;

    friend TruncatedSeries series_exp(const TruncatedSeries&);
    friend TruncatedSeries solve_ode(const Rat&, const Rat&, const Rat&, int);
};

// exp(f); requires constant term 0.
TruncatedSeries series_exp(const TruncatedSeries& f);

// log(f); requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& f);

// f^r = exp(r log f) for rational r; requires constant term 1.
TruncatedSeries series_pow(const TruncatedSeries& f, const Rat& r);

enum class FixedPointKind { Forests, Kary, Ordered, KColor };

// The unique solution through the given order of one of the defining
// equations A = e^{xA}, D = 1 + x D^k, E = x/(1-E), F = 1/(1 - x F^k),
// found by iterating the equation from its constant term.
TruncatedSeries solve_fixedpoint(FixedPointKind kind, int order, int k = 1);

// The unique g with g(0) = 1 and g' = u g^{b+1} + a x g^b g', computed
// coefficient by coefficient; no division by parameter expressions occurs.
TruncatedSeries solve_ode(const Rat& a, const Rat& b, const Rat& u, int order);

// Checks the identities satisfied by H = solve_ode(a, b, 1):
//   H' = H^{a+1} + b x H^a H'          (always; a = b allowed)
//   H^{b-a} = 1 + (b-a) x H^b          (with_power_branch, requires a != b)
//   H^b (1 + a x H^a) = H^a (1 + b x H^b)   (same branch)
// Requesting the power branch with a = b is rejected.
Report verify_h_identities(const Rat& a, const Rat& b, int order, bool with_power_branch = true);

}  // namespace propcount

#include "propcount/series.hpp"

#include <sstream>

namespace propcount {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(f.order()) +
                                    " vs " + std::to_string(g.order()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order, std::vector<Rat> coeffs) : TruncatedSeries(order) {
    if (coeffs.size() != coeffs_.size())
        throw std::invalid_argument("coefficient count does not match order");
    coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rat& value) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Rat(1);
    return s;
}

TruncatedSeries TruncatedSeries::truncate(int m) const {
    if (m > order()) throw std::invalid_argument("cannot truncate to a higher order");
    TruncatedSeries s(m);
    for (int n = 0; n <= m; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    TruncatedSeries s(f);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] += g.coeffs_[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    TruncatedSeries s(f);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] -= g.coeffs_[i];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    TruncatedSeries s(f.order());
    for (int i = 0; i <= f.order(); ++i) {
        if (f.coeff(i) == 0) continue;
        for (int j = 0; i + j <= f.order(); ++j) {
            if (g.coeff(j) == 0) continue;
            s.coeffs_[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
        }
    }
    return s;
}

TruncatedSeries operator*(const Rat& s, const TruncatedSeries& f) {
    TruncatedSeries r(f);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

TruncatedSeries TruncatedSeries::mul_x() const {
    TruncatedSeries s(order());
    for (int n = order(); n >= 1; --n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n - 1);
    return s;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) throw std::invalid_argument("cannot differentiate an order-0 series");
    TruncatedSeries s(order() - 1);
    for (int n = 0; n < order(); ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = Rat(n + 1) * coeff(n + 1);
    return s;
}

TruncatedSeries TruncatedSeries::integral() const {
    TruncatedSeries s(order() + 1);
    for (int n = 0; n <= order(); ++n)
        s.coeffs_[static_cast<std::size_t>(n + 1)] = coeff(n) / Rat(n + 1);
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeff(0) == 0)
        throw std::domain_error("series inverse requires a nonzero constant term");
    TruncatedSeries s(order());
    const Rat inv0 = Rat(1) / coeff(0);
    s.coeffs_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Rat acc(0);
        for (int i = 1; i <= n; ++i) acc += coeff(i) * s.coeff(n - i);
        s.coeffs_[static_cast<std::size_t>(n)] = -inv0 * acc;
    }
    return s;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ", ";
        out << coeffs_[i].get_str();
    }
    out << ']';
    return out.str();
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (f.coeff(0) != 0)
        throw std::domain_error("series_exp requires constant term 0, got " +
                                rat_str(f.coeff(0)));
    // E' = f' E gives (n+1) E_{n+1} = sum_{i=0}^{n} (i+1) f_{i+1} E_{n-i}.
    TruncatedSeries e(f.order());
    e.coeffs_[0] = Rat(1);
    for (int n = 0; n < f.order(); ++n) {
        Rat acc(0);
        for (int i = 0; i <= n; ++i) acc += Rat(i + 1) * f.coeff(i + 1) * e.coeff(n - i);
        e.coeffs_[static_cast<std::size_t>(n + 1)] = acc / Rat(n + 1);
    }
    return e;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f.coeff(0) != 1)
        throw std::domain_error("series_log requires constant term 1, got " +
                                rat_str(f.coeff(0)));
    if (f.order() == 0) return TruncatedSeries(0);
    // log f = integral of f'/f.
    return (f.derivative() * f.inverse().truncate(f.order() - 1)).integral();
}

TruncatedSeries series_pow(const TruncatedSeries& f, const Rat& r) {
    if (f.coeff(0) != 1)
        throw std::domain_error("series_pow requires constant term 1, got " +
                                rat_str(f.coeff(0)));
    return series_exp(r * series_log(f));
}

TruncatedSeries solve_fixedpoint(FixedPointKind kind, int order, int k) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    if ((kind == FixedPointKind::Kary || kind == FixedPointKind::KColor) && k < 1)
        throw std::invalid_argument("k must be >= 1");

    auto apply = [&](const TruncatedSeries& s) {
        switch (kind) {
            case FixedPointKind::Forests:
                return series_exp(s.mul_x());
            case FixedPointKind::Kary: {
                TruncatedSeries p = TruncatedSeries::constant(order, Rat(1));
                for (int i = 0; i < k; ++i) p = p * s;
                return TruncatedSeries::constant(order, Rat(1)) + p.mul_x();
            }
            case FixedPointKind::Ordered:
                return (TruncatedSeries::constant(order, Rat(1)) - s).inverse().mul_x();
            case FixedPointKind::KColor: {
                TruncatedSeries p = TruncatedSeries::constant(order, Rat(1));
                for (int i = 0; i < k; ++i) p = p * s;
                return (TruncatedSeries::constant(order, Rat(1)) - p.mul_x()).inverse();
            }
        }
        throw std::logic_error("unreachable");
    };

    const Rat c0 = kind == FixedPointKind::Ordered ? Rat(0) : Rat(1);
    TruncatedSeries s = TruncatedSeries::constant(order, c0);
    // Each pass fixes one more coefficient, so order+1 passes reach the solution.
    for (int pass = 0; pass <= order; ++pass) s = apply(s);
    if (!(apply(s) == s))
        throw std::logic_error("fixed-point iteration did not converge: non-contracting equation");
    return s;
}

TruncatedSeries solve_ode(const Rat& a, const Rat& b, const Rat& u, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    TruncatedSeries g = TruncatedSeries::constant(order, Rat(1));
    // Coefficient n+1 of g comes from the order-n truncation of the right
    // side: (n+1) g_{n+1} = [x^n] (u g^{b+1}) + a [x^{n-1}] (g^b g').
    for (int n = 0; n < order; ++n) {
        const TruncatedSeries gn = g.truncate(n);
        Rat rhs = u * series_pow(gn, b + 1).coeff(n);
        if (n >= 1) {
            const TruncatedSeries prod =
                series_pow(gn, b).truncate(n - 1) * gn.derivative();
            rhs += a * prod.coeff(n - 1);
        }
        g.set(n + 1, rhs / Rat(n + 1));
    }
    return g;
}

Report verify_h_identities(const Rat& a, const Rat& b, int order, bool with_power_branch) {
    if (order < 1) throw std::invalid_argument("identity check needs order >= 1");
    if (with_power_branch && a == b)
        throw std::invalid_argument(
            "the power-branch identities are derived for b - a invertible; "
            "call with a != b or disable the branch");
    Report report;
    const TruncatedSeries h = solve_ode(a, b, Rat(1), order);
    const TruncatedSeries one = TruncatedSeries::constant(order, Rat(1));

    {
        // H' = H^{a+1} + b x H^a H', compared through order-1.
        const TruncatedSeries lhs = h.derivative();
        const TruncatedSeries hm = h.truncate(order - 1);
        const TruncatedSeries rhs =
            series_pow(hm, a + 1) + b * (series_pow(hm, a) * lhs).mul_x();
        report.add("H' = H^(a+1) + b*x*H^a*H'", lhs.str(), rhs.str());
    }
    if (with_power_branch) {
        const TruncatedSeries lhs1 = series_pow(h, b - a);
        const TruncatedSeries rhs1 = one + (b - a) * series_pow(h, b).mul_x();
        report.add("H^(b-a) = 1 + (b-a)*x*H^b", lhs1.str(), rhs1.str());

        const TruncatedSeries ha = series_pow(h, a);
        const TruncatedSeries hb = series_pow(h, b);
        const TruncatedSeries lhs2 = hb * (one + a * ha.mul_x());
        const TruncatedSeries rhs2 = ha * (one + b * hb.mul_x());
        report.add("H^b*(1 + a*x*H^a) = H^a*(1 + b*x*H^b)", lhs2.str(), rhs2.str());
    }
    return report;
}

}  // namespace propcount

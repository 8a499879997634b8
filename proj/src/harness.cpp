#include "propcount/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "propcount/closedform.hpp"
#include "propcount/colored.hpp"
#include "propcount/forest.hpp"
#include "propcount/gridpoints.hpp"
#include "propcount/kary.hpp"
#include "propcount/multipoly.hpp"
#include "propcount/parking.hpp"
#include "propcount/series.hpp"

namespace propcount::harness {

namespace {

using Params = std::map<std::string, std::string>;
using Clock = std::chrono::steady_clock;

class Recorder {
  public:
    Recorder(std::string suite, std::vector<VerificationRecord>& out)
        : suite_(std::move(suite)), out_(out) {}

    // Computes (lhs, rhs) under a timer and records the comparison.
    void timed(Params params,
               const std::function<std::pair<std::string, std::string>()>& compute) {
        const auto start = Clock::now();
        auto [lhs, rhs] = compute();
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        VerificationRecord rec;
        rec.suite = suite_;
        rec.params = std::move(params);
        rec.pass = lhs == rhs;
        rec.lhs = std::move(lhs);
        rec.rhs = std::move(rhs);
        rec.elapsed_ms = ms;
        out_.push_back(std::move(rec));
    }

    // Runs a report-producing operation and records each of its checks.
    void from_report(Params params, const std::function<Report()>& compute) {
        const auto start = Clock::now();
        const Report report = compute();
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        for (const auto& check : report.checks) {
            VerificationRecord rec;
            rec.suite = suite_;
            rec.params = params;
            rec.params["identity"] = check.name;
            rec.lhs = check.lhs;
            rec.rhs = check.rhs;
            rec.pass = check.pass;
            rec.elapsed_ms = ms / static_cast<double>(report.checks.size());
            out_.push_back(std::move(rec));
        }
    }

  private:
    std::string suite_;
    std::vector<VerificationRecord>& out_;
};

int clamp_n(const SuiteRanges& r, int fallback) { return r.n_max.value_or(fallback); }

std::vector<int> k_list(const SuiteRanges& r, std::vector<int> fallback) {
    if (r.k) return {*r.k};
    return fallback;
}

std::vector<int> c_list(const SuiteRanges& r, int fallback_max) {
    if (r.c) return {*r.c};
    std::vector<int> cs;
    for (int c = 1; c <= fallback_max; ++c) cs.push_back(c);
    return cs;
}

std::string coeff_list(const std::vector<Rat>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i].get_str();
    }
    out << ']';
    return out.str();
}

void suite_forests(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("forests", out);
    const int n_max = clamp_n(r, 7);
    for (int n = 1; n <= n_max; ++n)
        rec.timed({{"n", std::to_string(n)}}, [n] {
            return std::make_pair(forest_vertex_poly(n).str(), p_poly(n).str());
        });
}

void suite_trees(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("trees", out);
    const int n_max = clamp_n(r, 7);
    for (int n = 1; n <= n_max; ++n)
        rec.timed({{"n", std::to_string(n)}}, [n] {
            return std::make_pair(tree_vertex_poly(n).str(), q_poly(n).str());
        });
}

void suite_descents(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("descents", out);
    const int n_max = clamp_n(r, 7);
    for (int n = 1; n <= n_max; ++n)
        rec.timed({{"n", std::to_string(n)}}, [n] {
            return std::make_pair(forest_descent_poly(n).str(), p_poly(n).str());
        });
}

void suite_kary(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("kary", out);
    const int n_max = clamp_n(r, 5);
    const MultiPoly u = MultiPoly::variable(Var::u);
    const MultiPoly v = MultiPoly::variable(Var::v);
    const MultiPoly w = MultiPoly::variable(Var::w);
    for (int k : k_list(r, {2, 3})) {
        for (int n = 1; n <= n_max; ++n) {
            Params params{{"k", std::to_string(k)}, {"n", std::to_string(n)}};
            Params p1 = params;
            p1["identity"] = "sum u^proper = P_n(k,(k-1)u,u)";
            rec.timed(std::move(p1), [n, k, &u] {
                const MultiPoly rhs = p_poly(n).subst(
                    {{Var::a, MultiPoly(Rat(k))}, {Var::b, Rat(k - 1) * u}, {Var::c, u}});
                return std::make_pair(kary_prop_poly(n, k).str(), rhs.str());
            });
            if (k >= 2) {
                Params p2 = params;
                p2["identity"] = "sum v^(n-prop) u^(prop-comp) w^comp = P_n(kv,(k-1)u,w)";
                rec.timed(std::move(p2), [n, k, &u, &v, &w] {
                    const MultiPoly rhs = p_poly(n).subst(
                        {{Var::a, Rat(k) * v}, {Var::b, Rat(k - 1) * u}, {Var::c, w}});
                    return std::make_pair(kary_triple_poly(n, k).str(), rhs.str());
                });
            }
        }
    }
}

void suite_kary_decomp(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("kary-decomp", out);
    const int n_max = clamp_n(r, 5);
    for (int k : k_list(r, {2, 3})) {
        if (k < 2) throw std::invalid_argument("kary-decomp requires k >= 2");
        for (int n = 1; n <= n_max; ++n) {
            rec.timed({{"k", std::to_string(k)}, {"n", std::to_string(n)}}, [n, k] {
                long checked = 0, bad = 0;
                std::string first_bad;
                for_each_kary(n, k, [&](const KaryTree& t) {
                    ++checked;
                    const KaryStats st = kary_stats(t);
                    const auto parts = kary_decompose(t);
                    bool ok = static_cast<int>(parts.size()) == st.comp;
                    int prop_sum = 0;
                    int prev_min = 0;
                    for (const auto& part : parts) {
                        const KaryStats pst = kary_stats(part);
                        if (pst.comp != 1) ok = false;
                        prop_sum += pst.proper;
                        // Path order must visit components by increasing minimum,
                        // and proper status is preserved label by label.
                        int mn = 0;
                        for (std::size_t l = 1; l < pst.hook.size(); ++l) {
                            if (pst.hook[l] == 0) continue;
                            if (mn == 0) mn = static_cast<int>(l);
                            if (pst.is_proper[l] != st.is_proper[l]) ok = false;
                        }
                        if (mn <= prev_min) ok = false;
                        prev_min = mn;
                    }
                    if (prop_sum != st.proper) ok = false;
                    if (ok && !(kary_recompose(parts).literal() == t.literal())) ok = false;
                    if (!ok) {
                        ++bad;
                        if (first_bad.empty()) first_bad = t.literal();
                    }
                });
                const std::string summary = std::to_string(checked) + " trees, " +
                                            std::to_string(bad) + " failures" +
                                            (first_bad.empty() ? "" : " [" + first_bad + "]");
                return std::make_pair(summary,
                                      std::to_string(checked) + " trees, 0 failures");
            });
        }
    }
}

void suite_postnikov(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("postnikov", out);
    for (int k : k_list(r, {2, 3})) {
        const int symbolic_max = clamp_n(r, 6);
        for (int n = 1; n <= symbolic_max; ++n)
            rec.from_report({{"k", std::to_string(k)}, {"n", std::to_string(n)}},
                            [n, k] { return postnikov_check(n, k, Rat(1)); });
        if (k == 2) {
            // The binary hook identity stays cheap out to n = 8.
            const int deep_max = r.n_max ? std::min(*r.n_max, 8) : 8;
            for (int n = symbolic_max + 1; n <= deep_max; ++n)
                rec.from_report({{"k", "2"}, {"n", std::to_string(n)}},
                                [n] { return postnikov_check(n, 2, Rat(1)); });
        }
    }
}

void suite_ordered(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("ordered", out);
    const int n_max = clamp_n(r, 5);
    const MultiPoly u = MultiPoly::variable(Var::u);
    const MultiPoly v = MultiPoly::variable(Var::v);
    const MultiPoly w = MultiPoly::variable(Var::w);
    for (int k : k_list(r, {1, 2})) {
        for (int n = 1; n <= n_max; ++n) {
            Params params{{"k", std::to_string(k)}, {"n", std::to_string(n)}};
            Params p1 = params;
            p1["identity"] = "sum_F u^proper = P_n(k,(k+1)u,u)";
            rec.timed(std::move(p1), [n, k, &u] {
                const MultiPoly rhs = p_poly(n).subst(
                    {{Var::a, MultiPoly(Rat(k))}, {Var::b, Rat(k + 1) * u}, {Var::c, u}});
                return std::make_pair(colored_prop_poly(n, k).str(), rhs.str());
            });
            Params p2 = params;
            p2["identity"] = "sum_T u^proper = -P_n(k,(k+1)u,-u)";
            rec.timed(std::move(p2), [n, k, &u] {
                const MultiPoly rhs = -p_poly(n).subst(
                    {{Var::a, MultiPoly(Rat(k))}, {Var::b, Rat(k + 1) * u}, {Var::c, -u}});
                return std::make_pair(colored_tree_prop_poly(n, k).str(), rhs.str());
            });
            Params p3 = params;
            p3["identity"] = "sum_F u^(n-prop) v^(prop-comp) w^comp = P_n(ku,(k+1)v,w)";
            rec.timed(std::move(p3), [n, k, &u, &v, &w] {
                const MultiPoly rhs = p_poly(n).subst(
                    {{Var::a, Rat(k) * u}, {Var::b, Rat(k + 1) * v}, {Var::c, w}});
                return std::make_pair(colored_triple_poly(n, k).str(), rhs.str());
            });
            rec.from_report(params, [n, k] { return colored_hook_check(n, k); });
        }
    }
}

void suite_ksym(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("ksym", out);
    const int n_max = clamp_n(r, 5);
    for (int k : k_list(r, {1, 2}))
        for (int n = 1; n <= n_max; ++n)
            rec.from_report({{"k", std::to_string(k)}, {"n", std::to_string(n)}},
                            [n, k] { return ksym_check(n, k); });
}

void suite_parking(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("parking", out);
    const int n_max = clamp_n(r, 6);
    const MultiPoly u = MultiPoly::variable(Var::u);
    for (int c : c_list(r, 3)) {
        for (int n = 1; n <= n_max; ++n) {
            Params params{{"c", std::to_string(c)}, {"n", std::to_string(n)}};
            Params p1 = params;
            p1["identity"] = "sum u^lucky = P_n(1,u,cu)";
            rec.timed(std::move(p1), [n, c, &u] {
                const MultiPoly rhs = p_poly(n).subst(
                    {{Var::a, MultiPoly(1L)}, {Var::b, u}, {Var::c, Rat(c) * u}});
                return std::make_pair(lucky_poly(n, c).str(), rhs.str());
            });
            Params p2 = params;
            p2["identity"] = "count = c(n+c)^(n-1)";
            rec.timed(std::move(p2), [n, c] {
                return std::make_pair(parking_count(n, c).get_str(),
                                      rat_str(cayley_count(n, Rat(c))));
            });
        }
    }
}

void suite_prime(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("prime", out);
    const int n_max = clamp_n(r, 6);
    const MultiPoly u = MultiPoly::variable(Var::u);
    for (int n = 1; n <= n_max; ++n)
        rec.timed({{"n", std::to_string(n)}}, [n, &u] {
            const MultiPoly rhs =
                -p_poly(n).subst({{Var::a, MultiPoly(1L)}, {Var::b, u}, {Var::c, -u}});
            return std::make_pair(prime_lucky_poly(n).str(), rhs.str());
        });
}

void suite_series(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("series", out);
    const int order = r.order.value_or(25);

    rec.timed({{"kind", "forests"}, {"order", std::to_string(order)}}, [order] {
        const TruncatedSeries a = solve_fixedpoint(FixedPointKind::Forests, order);
        std::vector<Rat> lhs, rhs;
        for (int n = 0; n <= order; ++n) {
            lhs.push_back(a.egf_coeff(n));
            rhs.push_back(n == 0 ? Rat(1) : cayley_count(n, Rat(1)));
        }
        return std::make_pair(coeff_list(lhs), coeff_list(rhs));
    });
    for (const Rat& c : {make_rat(2), make_rat(1, 2), make_rat(-3)}) {
        rec.timed({{"kind", "forests^c"}, {"c", rat_str(c)}, {"order", std::to_string(order)}},
                  [order, &c] {
                      const TruncatedSeries a = solve_fixedpoint(FixedPointKind::Forests, order);
                      const TruncatedSeries ac = series_pow(a, c);
                      std::vector<Rat> lhs, rhs;
                      for (int n = 0; n <= order; ++n) {
                          lhs.push_back(ac.egf_coeff(n));
                          rhs.push_back(n == 0 ? Rat(1) : cayley_count(n, c));
                      }
                      return std::make_pair(coeff_list(lhs), coeff_list(rhs));
                  });
    }
    for (int k : {1, 2, 3}) {
        rec.timed({{"kind", "kary"}, {"k", std::to_string(k)}, {"order", std::to_string(order)}},
                  [order, k] {
                      const TruncatedSeries d = solve_fixedpoint(FixedPointKind::Kary, order, k);
                      std::vector<Rat> lhs, rhs;
                      for (int n = 0; n <= order; ++n) {
                          lhs.push_back(d.coeff(n));
                          rhs.push_back(Rat(binomial(Int(k * n + 1), static_cast<unsigned>(n))) /
                                        Rat(k * n + 1));
                      }
                      return std::make_pair(coeff_list(lhs), coeff_list(rhs));
                  });
        const Rat c = make_rat(-1, 2);
        rec.timed({{"kind", "kary^c"},
                   {"k", std::to_string(k)},
                   {"c", rat_str(c)},
                   {"order", std::to_string(order)}},
                  [order, k, &c] {
                      const TruncatedSeries d = solve_fixedpoint(FixedPointKind::Kary, order, k);
                      const TruncatedSeries dc = series_pow(d, c);
                      std::vector<Rat> lhs, rhs;
                      for (int n = 0; n <= order; ++n) {
                          const Rat knc = Rat(k) * Rat(n) + c;
                          lhs.push_back(dc.coeff(n));
                          rhs.push_back(n == 0 ? Rat(1)
                                               : c / knc * falling_binomial(
                                                               knc, static_cast<unsigned>(n)));
                      }
                      return std::make_pair(coeff_list(lhs), coeff_list(rhs));
                  });
    }
    rec.timed({{"kind", "ordered"}, {"order", std::to_string(order)}}, [order] {
        const TruncatedSeries e = solve_fixedpoint(FixedPointKind::Ordered, order);
        std::vector<Rat> lhs, rhs;
        for (int n = 0; n <= order; ++n) {
            lhs.push_back(e.coeff(n));
            rhs.push_back(n == 0 ? Rat(0) : Rat(catalan_number(n - 1)));
        }
        return std::make_pair(coeff_list(lhs), coeff_list(rhs));
    });
    for (int k : {1, 2}) {
        rec.timed({{"kind", "kcolor"}, {"k", std::to_string(k)}, {"order", std::to_string(order)}},
                  [order, k] {
                      // F = 1 + x F^{k+1}, so the coefficients are the
                      // (k+1)-ary shape counts.
                      const TruncatedSeries f =
                          solve_fixedpoint(FixedPointKind::KColor, order, k);
                      std::vector<Rat> lhs, rhs;
                      for (int n = 0; n <= order; ++n) {
                          lhs.push_back(f.coeff(n));
                          rhs.push_back(
                              Rat(binomial(Int((k + 1) * n + 1), static_cast<unsigned>(n))) /
                              Rat((k + 1) * n + 1));
                      }
                      return std::make_pair(coeff_list(lhs), coeff_list(rhs));
                  });
    }

    // The differential equation, against P_n(a, bu, cu) and u Q_n(a, bu)
    // at the deterministic parameter grid.
    const auto tuples = parameter_tuples(20, [](const std::array<Rat, 4>& t) {
        return t[0] != 0 && t[1] != 0 && t[2] != 0 && t[3] != 0;
    });
    int point_index = 0;
    for (const auto& [a, b, c, u] : tuples) {
        Params params{{"kind", "ode"},
                      {"point", std::to_string(point_index++)},
                      {"a", rat_str(a)},
                      {"b", rat_str(b)},
                      {"c", rat_str(c)},
                      {"u", rat_str(u)},
                      {"order", std::to_string(order)}};
        rec.timed(std::move(params), [order, a = a, b = b, c = c, u = u] {
            const TruncatedSeries g = solve_ode(a, b, u, order);
            const TruncatedSeries gc = series_pow(g, c);
            const TruncatedSeries logg = series_log(g);
            std::vector<Rat> lhs, rhs;
            for (int n = 0; n <= order; ++n) {
                lhs.push_back(gc.egf_coeff(n));
                rhs.push_back(p_value(n, a, b * u, c * u));
            }
            for (int n = 1; n <= order; ++n) {
                lhs.push_back(logg.egf_coeff(n));
                rhs.push_back(u * q_value(n, a, b * u));
            }
            return std::make_pair(coeff_list(lhs), coeff_list(rhs));
        });
    }
}

void suite_hform(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("hform", out);
    const int order = r.order.value_or(20);
    const auto tuples = parameter_tuples(
        10, [](const std::array<Rat, 4>& t) { return t[0] != t[1]; });
    int point_index = 0;
    for (const auto& t : tuples) {
        const Rat a = t[0], b = t[1];
        rec.from_report({{"point", std::to_string(point_index++)},
                         {"a", rat_str(a)},
                         {"b", rat_str(b)},
                         {"order", std::to_string(order)}},
                        [&a, &b, order] { return verify_h_identities(a, b, order); });
    }
    const Rat equal = make_rat(3, 2);
    rec.from_report({{"point", "a=b"},
                     {"a", rat_str(equal)},
                     {"b", rat_str(equal)},
                     {"order", std::to_string(order)}},
                    [&equal, order] {
                        return verify_h_identities(equal, equal, order, false);
                    });
}

void suite_closedform(const SuiteRanges& r, std::vector<VerificationRecord>& out) {
    Recorder rec("closedform", out);
    const int point_n_max = r.n_max ? std::min(*r.n_max, 10) : 10;
    const int symbolic_max = r.n_max ? std::min(*r.n_max, 12) : 12;

    const auto p3_tuples = parameter_tuples(20, [point_n_max](const std::array<Rat, 4>& t) {
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= point_n_max; ++n)
                if (Rat(k) * Rat(n) + t[2] == 0) return false;
        return t[2] != 0;
    });
    int point_index = 0;
    for (const auto& t : p3_tuples) {
        const Rat c = t[2];
        const int k = 1 + point_index % 3;
        Params params{{"point", std::to_string(point_index++)},
                      {"k", std::to_string(k)},
                      {"c", rat_str(c)}};
        rec.timed(std::move(params), [point_n_max, k, &c] {
            std::vector<Rat> lhs, rhs;
            for (int n = 1; n <= point_n_max; ++n) {
                const Report rep = check_kary_specialization(n, k, c);
                lhs.push_back(parse_rat(rep.checks.front().lhs));
                rhs.push_back(parse_rat(rep.checks.front().rhs));
            }
            return std::make_pair(coeff_list(lhs), coeff_list(rhs));
        });
    }

    const auto p4_tuples = parameter_tuples(20, [point_n_max](const std::array<Rat, 4>& t) {
        if (t[0] == t[1]) return false;
        for (int n = 1; n <= point_n_max; ++n)
            if (t[1] * Rat(n) + t[2] == 0) return false;
        return true;
    });
    point_index = 0;
    for (const auto& t : p4_tuples) {
        const Rat a = t[0], b = t[1], c = t[2];
        Params params{{"point", std::to_string(point_index++)},
                      {"a", rat_str(a)},
                      {"b", rat_str(b)},
                      {"c", rat_str(c)}};
        rec.timed(std::move(params), [point_n_max, &a, &b, &c] {
            std::vector<Rat> lhs, rhs;
            for (int n = 1; n <= point_n_max; ++n) {
                const Report rep = check_rescaling(n, a, b, c);
                lhs.push_back(parse_rat(rep.checks.front().lhs));
                rhs.push_back(parse_rat(rep.checks.front().rhs));
            }
            return std::make_pair(coeff_list(lhs), coeff_list(rhs));
        });
    }

    for (int n = 1; n <= symbolic_max; ++n) {
        rec.timed({{"identity", "P_n(a,b,c) = P_n(b,a,c)"}, {"n", std::to_string(n)}}, [n] {
            const MultiPoly p = p_poly(n);
            return std::make_pair(p.swap_vars(Var::a, Var::b).str(), p.str());
        });
        rec.timed({{"identity", "homogeneous of degree n"}, {"n", std::to_string(n)}}, [n] {
            // Symbolic homogeneity: every monomial has total degree n.
            const MultiPoly p = p_poly(n);
            int lo = -1, hi = -1;
            for (const auto& [e, coeff] : p.terms()) {
                int deg = 0;
                for (auto x : e) deg += x;
                if (lo < 0 || deg < lo) lo = deg;
                if (deg > hi) hi = deg;
            }
            const std::string want =
                "all monomials of degree " + std::to_string(n);
            const std::string got = lo == hi ? "all monomials of degree " + std::to_string(lo)
                                             : "degrees " + std::to_string(lo) + ".." +
                                                   std::to_string(hi);
            return std::make_pair(got, want);
        });
        rec.timed({{"identity", "P_n(1,1,c) = c(n+c)^(n-1)"}, {"n", std::to_string(n)}}, [n] {
            const MultiPoly c = MultiPoly::variable(Var::c);
            const MultiPoly lhs =
                p_poly(n).subst({{Var::a, MultiPoly(1L)}, {Var::b, MultiPoly(1L)}});
            const MultiPoly rhs =
                c * (MultiPoly(Rat(n)) + c).pow(static_cast<unsigned>(n - 1));
            return std::make_pair(lhs.str(), rhs.str());
        });
        rec.timed({{"identity", "P_n(1,0,c) = P_n(0,1,c) = c(c+1)...(c+n-1)"},
                   {"n", std::to_string(n)}},
                  [n] {
                      const MultiPoly c = MultiPoly::variable(Var::c);
                      MultiPoly rising = c;
                      for (int i = 1; i <= n - 1; ++i) rising *= c + MultiPoly(Rat(i));
                      const MultiPoly p10 =
                          p_poly(n).subst({{Var::a, MultiPoly(1L)}, {Var::b, MultiPoly(0L)}});
                      const MultiPoly p01 =
                          p_poly(n).subst({{Var::a, MultiPoly(0L)}, {Var::b, MultiPoly(1L)}});
                      return std::make_pair(p10.str() + " ; " + p01.str(),
                                            rising.str() + " ; " + rising.str());
                  });
        rec.from_report({{"identity", "catalan"}, {"n", std::to_string(n)}},
                        [n] { return catalan_check(n); });
    }

    // Homogeneity by evaluation: P_n(ta, tb, tc) = t^n P_n(a, b, c).
    const auto hom_tuples = parameter_tuples(6, [](const std::array<Rat, 4>& t) {
        return t[3] != 0 && t[3] != 1;
    });
    point_index = 0;
    for (const auto& t : hom_tuples) {
        const Rat a = t[0], b = t[1], c = t[2], scale = t[3];
        Params params{{"identity", "homogeneity"},
                      {"point", std::to_string(point_index++)},
                      {"t", rat_str(scale)}};
        rec.timed(std::move(params), [symbolic_max, &a, &b, &c, &scale] {
            std::vector<Rat> lhs, rhs;
            for (int n = 1; n <= symbolic_max; ++n) {
                lhs.push_back(p_value(n, scale * a, scale * b, scale * c));
                rhs.push_back(rat_pow(scale, n) * p_value(n, a, b, c));
            }
            return std::make_pair(coeff_list(lhs), coeff_list(rhs));
        });
    }
}

}  // namespace

std::string VerificationRecord::key() const {
    std::ostringstream out;
    out << suite;
    for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
    return out.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "forests", "trees",   "descents", "kary",  "kary-decomp", "postnikov", "ordered",
        "ksym",    "parking", "prime",    "series", "hform",       "closedform"};
    return names;
}

std::vector<VerificationRecord> run_suite(const std::string& name, const SuiteRanges& ranges) {
    if (ranges.n_max && *ranges.n_max < 1)
        throw std::invalid_argument("--n-max must be at least 1");
    if (ranges.order && *ranges.order < 1)
        throw std::invalid_argument("--order must be at least 1");
    std::vector<VerificationRecord> out;
    if (name == "all") {
        for (const auto& suite : suite_names()) {
            auto part = run_suite(suite, ranges);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    if (name == "forests")
        suite_forests(ranges, out);
    else if (name == "trees")
        suite_trees(ranges, out);
    else if (name == "descents")
        suite_descents(ranges, out);
    else if (name == "kary")
        suite_kary(ranges, out);
    else if (name == "kary-decomp")
        suite_kary_decomp(ranges, out);
    else if (name == "postnikov")
        suite_postnikov(ranges, out);
    else if (name == "ordered")
        suite_ordered(ranges, out);
    else if (name == "ksym")
        suite_ksym(ranges, out);
    else if (name == "parking")
        suite_parking(ranges, out);
    else if (name == "prime")
        suite_prime(ranges, out);
    else if (name == "series")
        suite_series(ranges, out);
    else if (name == "hform")
        suite_hform(ranges, out);
    else if (name == "closedform")
        suite_closedform(ranges, out);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return out;
}

bool all_pass(const std::vector<VerificationRecord>& records) {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

EmitFormat parse_format(const std::string& name) {
    if (name == "table") return EmitFormat::Table;
    if (name == "json") return EmitFormat::Json;
    if (name == "csv") return EmitFormat::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string truncate_cell(const std::string& s, std::size_t width) {
    if (s.size() <= width) return s;
    return s.substr(0, width - 3) + "...";
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

void emit(std::vector<VerificationRecord> records, EmitFormat format, std::ostream& out) {
    std::stable_sort(records.begin(), records.end(),
                     [](const VerificationRecord& x, const VerificationRecord& y) {
                         return x.key() < y.key();
                     });
    switch (format) {
        case EmitFormat::Table: {
            std::size_t key_width = 4;
            for (const auto& r : records) key_width = std::max(key_width, r.key().size());
            for (const auto& r : records) {
                std::string line = r.key();
                line.resize(key_width, ' ');
                out << line << "  " << (r.pass ? "PASS" : "FAIL") << "  "
                    << truncate_cell(r.lhs, 48);
                if (!r.pass) out << "  !=  " << truncate_cell(r.rhs, 48);
                out << '\n';
            }
            std::size_t failures = 0;
            for (const auto& r : records)
                if (!r.pass) ++failures;
            out << records.size() << " checks, " << failures << " failures\n";
            break;
        }
        case EmitFormat::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : records) {
                nlohmann::json obj;
                obj["suite"] = r.suite;
                obj["params"] = r.params;
                obj["lhs"] = r.lhs;
                obj["rhs"] = r.rhs;
                obj["pass"] = r.pass;
                obj["elapsed_ms"] = r.elapsed_ms;
                arr.push_back(std::move(obj));
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case EmitFormat::Csv: {
            out << "suite,params,lhs,rhs,pass,elapsed_ms\n";
            for (const auto& r : records) {
                std::string params;
                for (const auto& [k, v] : r.params) {
                    if (!params.empty()) params += ' ';
                    params += k + '=' + v;
                }
                out << csv_quote(r.suite) << ',' << csv_quote(params) << ','
                    << csv_quote(r.lhs) << ',' << csv_quote(r.rhs) << ','
                    << (r.pass ? "true" : "false") << ',' << r.elapsed_ms << '\n';
            }
            break;
        }
    }
}

}  // namespace propcount::harness

// Acceptance suite: every identity is checked exactly (tolerance zero,
// canonical forms compared as strings or exact values). One line per
// criterion; the process exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "propcount/closedform.hpp"
#include "propcount/forest.hpp"
#include "propcount/harness.hpp"
#include "propcount/kary.hpp"
#include "propcount/multipoly.hpp"
#include "propcount/parking.hpp"

using namespace propcount;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
double total_seconds = 0;

void criterion(int index, const std::string& title, const std::function<bool()>& body) {
    const auto start = Clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    total_seconds += secs;
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d (%6.1fs): %s%s%s\n", ok ? "PASS" : "FAIL", index, secs,
                title.c_str(), error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
}

bool suite_passes(const std::string& name, const harness::SuiteRanges& ranges = {}) {
    const auto records = harness::run_suite(name, ranges);
    bool ok = !records.empty();
    for (const auto& rec : records) {
        if (!rec.pass) {
            ok = false;
            std::printf("       failed: %s\n       lhs=%s\n       rhs=%s\n", rec.key().c_str(),
                        rec.lhs.c_str(), rec.rhs.c_str());
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "forests by improper/weakly-proper/minimal vertices = P_n, n <= 7", [] {
        const auto start = Clock::now();
        bool ok = true;
        for (int n = 1; n <= 7; ++n)
            if (!(forest_vertex_poly(n) == p_poly(n))) ok = false;
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs >= 60) {
            std::printf("       over the 60 s budget: %.1fs\n", secs);
            ok = false;
        }
        return ok;
    });

    criterion(2, "forests by descents/ascents/trees = P_n, n <= 7", [] {
        for (int n = 1; n <= 7; ++n)
            if (!(forest_descent_poly(n) == p_poly(n))) return false;
        return true;
    });

    criterion(3, "trees by improper/weakly-proper vertices = Q_n, n <= 7", [] {
        for (int n = 1; n <= 7; ++n)
            if (!(tree_vertex_poly(n) == q_poly(n))) return false;
        return true;
    });

    criterion(4, "hook identities: subset counts and labeling sums n <= 5, forest hook sum n <= 6",
              [] {
                  bool ok = true;
                  for (int n = 1; n <= 5; ++n) {
                      if (!proper_set_count_sweep(n).all_pass()) ok = false;
                      if (!labeling_hook_sweep(n).all_pass()) ok = false;
                  }
                  for (int n = 1; n <= 6; ++n)
                      if (!forest_hook_identity(n).all_pass()) ok = false;
                  return ok;
              });

    criterion(5, "k-ary statistics, decomposition round trip (k in {2,3}, n <= 5; k=1 n <= 6)",
              [] {
                  bool ok = suite_passes("kary") && suite_passes("kary-decomp");
                  const MultiPoly u = MultiPoly::variable(Var::u);
                  for (int n = 1; n <= 6; ++n) {
                      const MultiPoly rhs = p_poly(n).subst(
                          {{Var::a, MultiPoly(1L)}, {Var::b, MultiPoly(0L)}, {Var::c, u}});
                      if (!(kary_prop_poly(n, 1) == rhs)) ok = false;
                  }
                  return ok;
              });

    criterion(6, "binary hook identity n <= 8 (n=8 value 4782969); general form k in {2,3}, n <= 6",
              [] {
                  bool ok = suite_passes("postnikov");
                  const Report deep = postnikov_check(8, 2, Rat(1));
                  if (!deep.all_pass()) ok = false;
                  if (deep.checks.back().lhs != "4782969") ok = false;
                  return ok;
              });

    criterion(7, "colored ordered forests: proper/triple/hook identities and the cross-family "
                 "equality (k in {1,2}, n <= 5)",
              [] { return suite_passes("ordered") && suite_passes("ksym"); });

    criterion(8, "parking: lucky and prime-lucky polynomials, counts (n <= 6, c <= 3), "
                 "arrival-order invariance (n <= 5)",
              [] {
                  bool ok = suite_passes("parking") && suite_passes("prime");
                  for (int n = 1; n <= 5; ++n)
                      if (!order_invariance_sweep(n, 1).all_pass()) ok = false;
                  return ok;
              });

    criterion(9, "series engine: ODE and fixed-point coefficients to order 25 at 20 points",
              [] { return suite_passes("series"); });

    criterion(10, "H identities through order 20 at 10 points plus a = b",
              [] { return suite_passes("hform"); });

    criterion(11, "closed forms: binomial specialization and rescaling at 20 points (n <= 10), "
                  "symmetry/homogeneity/rising factorial (n <= 12)",
              [] { return suite_passes("closedform"); });

    std::printf("%s: %d criterion failure(s), total %.1fs%s\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures,
                total_seconds, total_seconds < 600 ? " (within the 600 s budget)"
                                                   : " (OVER the 600 s budget)");
    if (total_seconds >= 600) return 1;
    return failures == 0 ? 0 : 1;
}

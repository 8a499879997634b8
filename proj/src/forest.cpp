#include "propcount/forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "propcount/closedform.hpp"

namespace propcount {

namespace {

void check_vertex_range(int n, int v, int p) {
    if (p < 0 || p > n)
        throw std::invalid_argument("parent of " + std::to_string(v) + " out of range");
    if (p == v) throw std::invalid_argument("vertex " + std::to_string(v) + " is its own parent");
}

// Walks every vertex toward the sentinel, failing on any cycle.
bool acyclic(const std::vector<int>& parent, int n, std::vector<int>& mark, int stamp_base) {
    // mark[v] = stamp_base + 1 while v is on the current walk, stamp_base
    // once v is known to reach the sentinel.
    for (int v = 1; v <= n; ++v) {
        if (mark[v] >= stamp_base) continue;
        int u = v;
        while (u != 0 && mark[u] < stamp_base) {
            mark[u] = stamp_base + 1;
            u = parent[u];
        }
        if (u != 0 && mark[u] == stamp_base + 1) return false;  // closed a cycle
        int w = v;
        while (w != 0 && mark[w] == stamp_base + 1) {
            mark[w] = stamp_base;
            w = parent[w];
        }
    }
    return true;
}

std::vector<std::vector<int>> children_lists(const ParentForest& f) {
    std::vector<std::vector<int>> children(static_cast<std::size_t>(f.n) + 1);
    for (int v = 1; v <= f.n; ++v) children[static_cast<std::size_t>(f.parent[v])].push_back(v);
    return children;
}

// Vertices ordered so that every child appears before its parent.
std::vector<int> bottom_up_order(const ParentForest& f,
                                 const std::vector<std::vector<int>>& children) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(f.n));
    std::vector<int> stack = children[0];
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int ch : children[static_cast<std::size_t>(v)]) stack.push_back(ch);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<std::vector<int>> descendant_lists(const ParentForest& f) {
    auto children = children_lists(f);
    auto order = bottom_up_order(f, children);
    std::vector<std::vector<int>> desc(static_cast<std::size_t>(f.n) + 1);
    for (int v : order) {
        auto& d = desc[static_cast<std::size_t>(v)];
        d.push_back(v);
        for (int ch : children[static_cast<std::size_t>(v)]) {
            const auto& dc = desc[static_cast<std::size_t>(ch)];
            d.insert(d.end(), dc.begin(), dc.end());
        }
    }
    return desc;
}

MultiPoly hook_product_poly(const std::vector<int>& hook, int n) {
    // prod_v (1 + alpha / h(v)) as a polynomial in alpha.
    MultiPoly prod(1L);
    const MultiPoly alpha = MultiPoly::variable(Var::alpha);
    for (int v = 1; v <= n; ++v)
        prod *= MultiPoly(1L) + Rat(1, hook[static_cast<std::size_t>(v)]) * alpha;
    return prod;
}

std::string sweep_summary(long checked, long mismatches) {
    return std::to_string(checked) + " checked, " + std::to_string(mismatches) + " mismatched";
}

}  // namespace

ParentForest ParentForest::from_parents(int n, std::vector<int> parent_of) {
    if (n < 1) throw std::invalid_argument("forest needs n >= 1");
    if (static_cast<int>(parent_of.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " parent entries");
    ParentForest f;
    f.n = n;
    f.parent.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int p = parent_of[static_cast<std::size_t>(v) - 1];
        check_vertex_range(n, v, p);
        f.parent[static_cast<std::size_t>(v)] = p;
    }
    std::vector<int> mark(static_cast<std::size_t>(n) + 1, 0);
    if (!acyclic(f.parent, n, mark, 1)) throw std::invalid_argument("parent map has a cycle");
    return f;
}

int ParentForest::tree_count() const {
    int roots = 0;
    for (int v = 1; v <= n; ++v)
        if (parent[static_cast<std::size_t>(v)] == 0) ++roots;
    return roots;
}

std::string ParentForest::literal() const {
    std::ostringstream out;
    out << "n=" << n << "; parent=[";
    for (int v = 1; v <= n; ++v) {
        if (v > 1) out << ',';
        out << parent[static_cast<std::size_t>(v)];
    }
    out << ']';
    return out.str();
}

ParentForest parse_forest_literal(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto fail = [&]() -> ParentForest {
        throw std::invalid_argument("bad forest literal: " + text);
    };
    if (s.rfind("n=", 0) != 0) return fail();
    auto semi = s.find(';');
    if (semi == std::string::npos) return fail();
    int n = 0;
    try {
        n = std::stoi(s.substr(2, semi - 2));
    } catch (const std::exception&) {
        return fail();
    }
    std::string rest = s.substr(semi + 1);
    if (rest.rfind("parent=[", 0) != 0 || rest.back() != ']') return fail();
    std::string body = rest.substr(8, rest.size() - 9);
    std::vector<int> parents;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parents.push_back(std::stoi(item));
        } catch (const std::exception&) {
            return fail();
        }
    }
    return ParentForest::from_parents(n, std::move(parents));
}

ForestStats forest_stats(const ParentForest& f) {
    const int n = f.n;
    auto children = children_lists(f);
    auto order = bottom_up_order(f, children);

    ForestStats st;
    st.hook.assign(static_cast<std::size_t>(n) + 1, 0);
    st.is_proper.assign(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> subtree_min(static_cast<std::size_t>(n) + 1, 0);

    for (int v : order) {
        int size = 1;
        int mn = v;
        for (int ch : children[static_cast<std::size_t>(v)]) {
            size += st.hook[static_cast<std::size_t>(ch)];
            mn = std::min(mn, subtree_min[static_cast<std::size_t>(ch)]);
        }
        st.hook[static_cast<std::size_t>(v)] = size;
        subtree_min[static_cast<std::size_t>(v)] = mn;
        if (mn == v) {
            st.is_proper[static_cast<std::size_t>(v)] = true;
            ++st.proper;
        }
    }
    for (int v = 1; v <= n; ++v) {
        const int p = f.parent[static_cast<std::size_t>(v)];
        if (p == 0) continue;
        if (p < v)
            ++st.ascents;
        else
            ++st.descents;
    }
    // Each tree contains exactly one minimal vertex (its smallest label),
    // and minimal vertices are always proper.
    st.minimal = static_cast<int>(children[0].size());
    st.weakly_proper = st.proper - st.minimal;
    return st;
}

void for_each_forest(int n, const std::function<void(const ParentForest&)>& fn) {
    if (n < 1) throw std::invalid_argument("forest enumeration needs n >= 1");
    if (n > kForestEnumLimit)
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                                    std::to_string(kForestEnumLimit) +
                                    ": the (n+1)^n parent-map sweep would exceed the time budget");
    ParentForest f;
    f.n = n;
    f.parent.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> mark(static_cast<std::size_t>(n) + 1, -1);
    int stamp = 0;
    while (true) {
        stamp += 2;
        if (acyclic(f.parent, n, mark, stamp)) fn(f);
        // Odometer over parent vectors, digits 0..n.
        int v = 1;
        while (v <= n) {
            if (f.parent[static_cast<std::size_t>(v)] < n) {
                ++f.parent[static_cast<std::size_t>(v)];
                break;
            }
            f.parent[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v > n) break;
    }
}

Int forest_count(int n) {
    Int count = 0;
    for_each_forest(n, [&](const ParentForest&) { ++count; });
    return count;
}

MultiPoly forest_vertex_poly(int n) {
    MultiPoly sum;
    for_each_forest(n, [&](const ParentForest& f) {
        const ForestStats st = forest_stats(f);
        ExpoVec e{};
        e[static_cast<int>(Var::a)] = static_cast<std::uint8_t>(n - st.proper);
        e[static_cast<int>(Var::b)] = static_cast<std::uint8_t>(st.weakly_proper);
        e[static_cast<int>(Var::c)] = static_cast<std::uint8_t>(st.minimal);
        sum += MultiPoly::term(Rat(1), e);
    });
    return sum;
}

MultiPoly forest_descent_poly(int n) {
    MultiPoly sum;
    for_each_forest(n, [&](const ParentForest& f) {
        const ForestStats st = forest_stats(f);
        ExpoVec e{};
        e[static_cast<int>(Var::a)] = static_cast<std::uint8_t>(st.descents);
        e[static_cast<int>(Var::b)] = static_cast<std::uint8_t>(st.ascents);
        e[static_cast<int>(Var::c)] = static_cast<std::uint8_t>(st.minimal);
        sum += MultiPoly::term(Rat(1), e);
    });
    return sum;
}

MultiPoly tree_vertex_poly(int n) {
    MultiPoly sum;
    for_each_forest(n, [&](const ParentForest& f) {
        if (f.tree_count() != 1) return;
        const ForestStats st = forest_stats(f);
        ExpoVec e{};
        e[static_cast<int>(Var::a)] = static_cast<std::uint8_t>(n - st.proper);
        e[static_cast<int>(Var::b)] = static_cast<std::uint8_t>(st.proper - 1);
        sum += MultiPoly::term(Rat(1), e);
    });
    return sum;
}

long count_labelings_with_proper_set(const ParentForest& f, const std::vector<int>& s) {
    const int n = f.n;
    for (int v : s)
        if (v < 1 || v > n) throw std::invalid_argument("subset vertex out of range");
    const auto desc = descendant_lists(f);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    long count = 0;
    do {
        bool ok = true;
        for (int v : s) {
            const int lv = sigma[static_cast<std::size_t>(v) - 1];
            for (int w : desc[static_cast<std::size_t>(v)]) {
                if (sigma[static_cast<std::size_t>(w) - 1] < lv) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

Report proper_set_count_sweep(int n) {
    if (n > 5)
        throw std::invalid_argument("the all-subsets sweep is capped at n = 5 "
                                    "(2^n subsets times n! relabelings per forest)");
    Report report;
    long checked = 0, mismatches = 0;
    std::string first_bad;
    const Rat nfact(factorial(static_cast<unsigned>(n)));
    for_each_forest(n, [&](const ParentForest& f) {
        const auto desc = descendant_lists(f);
        const ForestStats st = forest_stats(f);
        // One pass over relabelings collecting, per subset, how many make
        // the whole subset proper.
        std::vector<long> count(1u << n, 0);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            unsigned proper_mask = 0;
            for (int v = 1; v <= n; ++v) {
                const int lv = sigma[static_cast<std::size_t>(v) - 1];
                bool proper = true;
                for (int w : desc[static_cast<std::size_t>(v)]) {
                    if (sigma[static_cast<std::size_t>(w) - 1] < lv) {
                        proper = false;
                        break;
                    }
                }
                if (proper) proper_mask |= 1u << (v - 1);
            }
            for (unsigned sub = 0; sub < (1u << n); ++sub)
                if ((sub & ~proper_mask) == 0) ++count[sub];
        } while (std::next_permutation(sigma.begin(), sigma.end()));

        for (unsigned sub = 0; sub < (1u << n); ++sub) {
            Rat expected = nfact;
            for (int v = 1; v <= n; ++v)
                if (sub & (1u << (v - 1))) expected /= Rat(st.hook[static_cast<std::size_t>(v)]);
            ++checked;
            if (expected != Rat(count[sub])) {
                ++mismatches;
                if (first_bad.empty())
                    first_bad = f.literal() + " S=" + std::to_string(sub);
            }
        }
    });
    report.add("labelings with S proper = n!/prod h(v), all forests and subsets" +
                   (first_bad.empty() ? "" : " [first mismatch: " + first_bad + "]"),
               sweep_summary(checked, mismatches), sweep_summary(checked, 0));
    return report;
}

Report labeling_hook_sweep(int n) {
    if (n > 5)
        throw std::invalid_argument("the per-shape labeling sweep is capped at n = 5");
    Report report;
    long checked = 0, mismatches = 0;
    std::string first_bad;
    const Rat nfact(factorial(static_cast<unsigned>(n)));
    const MultiPoly alpha = MultiPoly::variable(Var::alpha);
    const MultiPoly one_plus_alpha = MultiPoly(1L) + alpha;
    for_each_forest(n, [&](const ParentForest& f) {
        const auto desc = descendant_lists(f);
        const ForestStats st = forest_stats(f);
        std::vector<long> by_proper(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            int proper = 0;
            for (int v = 1; v <= n; ++v) {
                const int lv = sigma[static_cast<std::size_t>(v) - 1];
                bool ok = true;
                for (int w : desc[static_cast<std::size_t>(v)]) {
                    if (sigma[static_cast<std::size_t>(w) - 1] < lv) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++proper;
            }
            ++by_proper[static_cast<std::size_t>(proper)];
        } while (std::next_permutation(sigma.begin(), sigma.end()));

        MultiPoly lhs;
        for (int p = 0; p <= n; ++p)
            if (by_proper[static_cast<std::size_t>(p)] != 0)
                lhs += Rat(by_proper[static_cast<std::size_t>(p)]) *
                       one_plus_alpha.pow(static_cast<unsigned>(p));
        const MultiPoly rhs = Rat(nfact) * hook_product_poly(st.hook, n);
        ++checked;
        if (!(lhs == rhs)) {
            ++mismatches;
            if (first_bad.empty()) first_bad = f.literal();
        }
    });
    report.add("sum over relabelings of (1+alpha)^proper = n! prod (1+alpha/h)" +
                   (first_bad.empty() ? "" : " [first mismatch: " + first_bad + "]"),
               sweep_summary(checked, mismatches), sweep_summary(checked, 0));
    return report;
}

Report forest_hook_identity(int n) {
    Report report;
    MultiPoly lhs;
    Rat lhs_at_1(0);  // alpha = 1, c = 1
    for_each_forest(n, [&](const ParentForest& f) {
        const ForestStats st = forest_stats(f);
        ExpoVec tree_expo{};
        tree_expo[static_cast<int>(Var::c)] = static_cast<std::uint8_t>(st.minimal);
        lhs += MultiPoly::term(Rat(1), tree_expo) * hook_product_poly(st.hook, n);
        Rat prod(1);
        for (int v = 1; v <= n; ++v)
            prod *= Rat(st.hook[static_cast<std::size_t>(v)] + 1, st.hook[static_cast<std::size_t>(v)]);
        lhs_at_1 += prod;
    });
    const MultiPoly one_plus_alpha = MultiPoly(1L) + MultiPoly::variable(Var::alpha);
    const MultiPoly rhs = p_poly(n).subst({{Var::a, MultiPoly(1L)},
                                           {Var::b, one_plus_alpha},
                                           {Var::c, MultiPoly::variable(Var::c) * one_plus_alpha}});
    report.add("sum_F c^trees prod (1+alpha/h) = P_n(1, 1+alpha, c(1+alpha))", lhs.str(),
               rhs.str());
    const Rat catalan_lhs = lhs_at_1 / Rat(factorial(static_cast<unsigned>(n)));
    report.add("alpha=1, c=1 evaluation / n! = C_{n+1}", rat_str(catalan_lhs),
               rat_str(Rat(catalan_number(n + 1))));
    return report;
}

}  // namespace propcount

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "propcount/multipoly.hpp"
#include "propcount/report.hpp"

namespace propcount {

// Labeled rooted forest on [n], stored as a parent map with 0 as the
// root sentinel. parent[v] != v and iterating the map from any vertex
// reaches 0, so the structure is acyclic by construction.
struct ParentForest {
    int n = 0;
    std::vector<int> parent;  // index 0 unused; parent[v] in {0} + [n]

    static ParentForest from_parents(int n, std::vector<int> parent_of);

    int tree_count() const;
    // "n=3; parent=[0,1,2]" (parent[1], parent[2], parent[3]).
    std::string literal() const;
};

ParentForest parse_forest_literal(const std::string& text);

struct ForestStats {
    int proper = 0;
    int weakly_proper = 0;
    int minimal = 0;  // equals the tree count
    int ascents = 0;
    int descents = 0;
    std::vector<int> hook;        // hook[v] = descendants of v including v
    std::vector<bool> is_proper;  // per vertex
};

ForestStats forest_stats(const ParentForest& f);

// Full enumeration sweeps all (n+1)^n parent maps and keeps the acyclic
// ones; n is capped so the sweep stays within the time budget.
inline constexpr int kForestEnumLimit = 8;

void for_each_forest(int n, const std::function<void(const ParentForest&)>& fn);

Int forest_count(int n);

// sum over forests of a^{n-proper} b^{proper-trees} c^{trees}.
MultiPoly forest_vertex_poly(int n);

// sum over forests of a^{descents} b^{ascents} c^{trees}.
MultiPoly forest_descent_poly(int n);

// sum over one-tree forests of a^{n-proper} b^{proper-1}.
MultiPoly tree_vertex_poly(int n);

// Number of relabelings of f's shape under which every vertex of S is
// proper (S as vertex labels of f). Brute force over all n! bijections.
long count_labelings_with_proper_set(const ParentForest& f, const std::vector<int>& s);

// For every forest on [n] and every vertex subset S, the count above
// must equal n!/prod_{v in S} h(v).
Report proper_set_count_sweep(int n);

// For every forest on [n]: sum over all n! relabelings of
// (1+alpha)^{proper} equals n! prod_v (1 + alpha/h(v)), symbolically.
Report labeling_hook_sweep(int n);

// sum_F c^{trees} prod_v (1 + alpha/h(v)) = P_n(1, 1+alpha, c(1+alpha)),
// plus the alpha=1, c=1 evaluation against the Catalan number C_{n+1}.
Report forest_hook_identity(int n);

}  // namespace propcount

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "propcount/multipoly.hpp"
#include "propcount/report.hpp"

namespace propcount {

// Ordered tree with edge colors in 1..k; among the children of any
// vertex the colors are weakly increasing left to right.
struct ColoredNode {
    int label = 0;
    std::vector<std::pair<int, ColoredNode>> children;  // (edge color, subtree)
};

// Ordered sequence of colored trees on labels [n].
struct ColoredForest {
    int k = 1;
    std::vector<ColoredNode> trees;

    int size() const;
    // "2[1:(1),2:(3)];4" style: trees joined by ';', children as color:(tree).
    std::string literal() const;
};

ColoredForest parse_colored_literal(const std::string& text, int k);

struct ColoredStats {
    int proper = 0;
    int comp = 0;                 // left-right minima of the root label sequence
    std::vector<int> hook;        // hook[label]
    std::vector<bool> is_proper;  // per label
};

ColoredStats colored_stats(const ColoredForest& f);

// Cuts before each left-right minimum; every block starts with its
// smallest entry. Entries must be distinct.
std::vector<std::vector<int>> left_right_minima_blocks(const std::vector<int>& seq);

inline constexpr long kColoredEnumBudget = 150'000;

void for_each_colored_forest(int n, int k, const std::function<void(const ColoredForest&)>& fn);

Int colored_forest_count(int n, int k);

// Structural (label-free) forests, one per isomorphism class; ordered
// structures have no nontrivial automorphisms so these are exactly the
// unlabeled forests.
std::vector<ColoredForest> unlabeled_colored_forests(int n, int k);

// sum over forests of u^{proper}.
MultiPoly colored_prop_poly(int n, int k);

// sum over one-tree forests of u^{proper}.
MultiPoly colored_tree_prop_poly(int n, int k);

// sum over forests of u^{n-proper} v^{proper-comp} w^{comp}.
MultiPoly colored_triple_poly(int n, int k);

// Hook identities over unlabeled forests and trees:
//   n! sum_F prod (1+alpha/h) = P_n(k, (k+1)(1+alpha), 1+alpha)
//   n! sum_T prod (1+alpha/h) = -P_n(k, (k+1)(1+alpha), -(1+alpha))
Report colored_hook_check(int n, int k);

// Cross-family equality: the (k+1)-ary triple polynomial with u and v
// exchanged equals the k-colored triple polynomial.
Report ksym_check(int n, int k);

}  // namespace propcount

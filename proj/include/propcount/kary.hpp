#pragma once

#include <functional>
#include <string>
#include <vector>

#include "propcount/multipoly.hpp"
#include "propcount/report.hpp"

namespace propcount {

// Ordered tree in which every vertex has exactly k children or none.
// Only the degree-k (internal) vertices carry labels; leaves are blank
// and are ignored by every statistic.
struct KaryNode {
    int label = 0;  // 0 on leaves, 1..n on internal vertices
    std::vector<KaryNode> children;

    bool is_leaf() const { return children.empty(); }
};

struct KaryTree {
    int k = 2;
    KaryNode root;

    int internal_count() const;
    // "2(1(.,.),.)" with "." for leaves.
    std::string literal() const;
};

// Parses the nested-parentheses form; every internal node must have
// exactly k children and labels must be a permutation of [n].
KaryTree parse_kary_literal(const std::string& text, int k);

struct KaryStats {
    int proper = 0;
    // Labeled vertices on the decomposing path; 0 when k = 1 (the path
    // rule needs a second child) or when the tree is a single leaf.
    int comp = 0;
    std::vector<int> hook;        // hook[label] = internal descendants incl. self
    std::vector<bool> is_proper;  // per label
};

KaryStats kary_stats(const KaryTree& t);

// Unlabeled shapes with n internal vertices; count is 1/(kn+1) binom(kn+1, n).
std::vector<KaryNode> kary_shapes(int n, int k);

inline constexpr int kKaryLabeledLimit = 7;
inline constexpr int kKaryShapeLimit = 10;

void for_each_kary(int n, int k, const std::function<void(const KaryTree&)>& fn);

Int kary_count(int n, int k);

// Cuts the decomposing path (all edges but the last), replacing each lost
// child with a leaf. Components come back in path order, which is also
// increasing order of their smallest labels; each has comp = 1. k must
// be at least 2: the rule has no meaning for unary trees.
std::vector<KaryTree> kary_decompose(const KaryTree& t);

// Inverse of kary_decompose: parts may arrive in any order (they are
// re-sorted by smallest label); each must have comp = 1 and the label
// sets must be disjoint.
KaryTree kary_recompose(std::vector<KaryTree> parts);

// sum over labeled k-ary trees of v^{n-proper} u^{proper-comp} w^{comp}; k >= 2.
MultiPoly kary_triple_poly(int n, int k);

// sum over labeled k-ary trees of u^{proper}; k = 1 allowed.
MultiPoly kary_prop_poly(int n, int k);

// Hook identity over unlabeled shapes:
//   n! sum_T prod_v (1 + alpha/h(v)) = P_n(k, (k-1)(1+alpha), 1+alpha)
// checked symbolically in alpha and evaluated at the given alpha; for
// k = 2, alpha = 1 also asserts (n!/2^n) sum_T prod (1 + 1/h) = (n+1)^{n-1}.
Report postnikov_check(int n, int k, const Rat& alpha);

}  // namespace propcount

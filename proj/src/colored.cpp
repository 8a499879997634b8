#include "propcount/colored.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "propcount/closedform.hpp"
#include "propcount/kary.hpp"

namespace propcount {

namespace {

int node_size(const ColoredNode& node) {
    int total = 1;
    for (const auto& [color, child] : node.children) total += node_size(child);
    return total;
}

int node_min_label(const ColoredNode& node) {
    int mn = node.label;
    for (const auto& [color, child] : node.children) mn = std::min(mn, node_min_label(child));
    return mn;
}

int node_max_label(const ColoredNode& node) {
    int mx = node.label;
    for (const auto& [color, child] : node.children) mx = std::max(mx, node_max_label(child));
    return mx;
}

void node_stats(const ColoredNode& node, ColoredStats& st) {
    const int size = node_size(node);
    st.hook[static_cast<std::size_t>(node.label)] = size;
    if (node_min_label(node) == node.label) {
        st.is_proper[static_cast<std::size_t>(node.label)] = true;
        ++st.proper;
    }
    for (const auto& [color, child] : node.children) node_stats(child, st);
}

// Labeled enumeration over bitmask label sets, memoized per mask. Label
// i corresponds to bit i-1.
class Enumerator {
  public:
    Enumerator(int n, int k) : n_(n), k_(k) {}

    const std::vector<ColoredNode>& trees(unsigned mask) {
        auto it = tree_memo_.find(mask);
        if (it != tree_memo_.end()) return it->second;
        std::vector<ColoredNode> result;
        for (int r = 1; r <= n_; ++r) {
            if (!(mask & (1u << (r - 1)))) continue;
            const unsigned rest = mask & ~(1u << (r - 1));
            ColoredNode base;
            base.label = r;
            std::vector<ColoredNode> partial{base};
            // Distribute `rest` among the k colors in increasing order.
            distribute(rest, 1, partial, result);
        }
        return tree_memo_.emplace(mask, std::move(result)).first->second;
    }

    const std::vector<std::vector<ColoredNode>>& forests(unsigned mask) {
        auto it = forest_memo_.find(mask);
        if (it != forest_memo_.end()) return it->second;
        std::vector<std::vector<ColoredNode>> result;
        if (mask == 0) {
            result.emplace_back();
        } else {
            for (unsigned first = mask; first != 0; first = (first - 1) & mask) {
                for (const auto& t : trees(first)) {
                    for (const auto& rest : forests(mask & ~first)) {
                        std::vector<ColoredNode> f;
                        f.reserve(rest.size() + 1);
                        f.push_back(t);
                        f.insert(f.end(), rest.begin(), rest.end());
                        result.push_back(std::move(f));
                    }
                }
            }
        }
        return forest_memo_.emplace(mask, std::move(result)).first->second;
    }

  private:
    // Appends to `out` every completion of `partial` (a root with children
    // of colors < color already attached) using the vertices of mask for
    // colors color..k.
    void distribute(unsigned mask, int color, std::vector<ColoredNode>& partial,
                    std::vector<ColoredNode>& out) {
        if (color == k_) {
            for (const auto& f : forests(mask)) {
                for (const auto& p : partial) {
                    ColoredNode node = p;
                    for (const auto& t : f) node.children.emplace_back(color, t);
                    out.push_back(std::move(node));
                }
            }
            return;
        }
        for (unsigned block = mask;; block = (block - 1) & mask) {
            std::vector<ColoredNode> extended;
            for (const auto& f : forests(block)) {
                for (const auto& p : partial) {
                    ColoredNode node = p;
                    for (const auto& t : f) node.children.emplace_back(color, t);
                    extended.push_back(std::move(node));
                }
            }
            distribute(mask & ~block, color + 1, extended, out);
            if (block == 0) break;
        }
    }

    int n_, k_;
    std::map<unsigned, std::vector<ColoredNode>> tree_memo_;
    std::map<unsigned, std::vector<std::vector<ColoredNode>>> forest_memo_;
};

void check_colored_budget(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("colored enumeration needs n, k >= 1");
    const Rat count = p_value(n, Rat(k), Rat(k + 1), Rat(1));
    if (count > Rat(kColoredEnumBudget))
        throw std::invalid_argument("colored forest enumeration over budget at n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) + " (" +
                                    rat_str(count) + " structures)");
}

// Structural enumeration by size, labels all zero.
void structural_forests(int n, int k, std::map<int, std::vector<ColoredForest>>& forest_memo,
                        std::map<int, std::vector<ColoredNode>>& tree_memo);

void structural_distribute(int size, int color, int k, std::vector<ColoredNode>& partial,
                           std::vector<ColoredNode>& out,
                           std::map<int, std::vector<ColoredForest>>& forest_memo,
                           std::map<int, std::vector<ColoredNode>>& tree_memo) {
    if (color == k) {
        structural_forests(size, k, forest_memo, tree_memo);
        for (const auto& f : forest_memo[size]) {
            for (const auto& p : partial) {
                ColoredNode node = p;
                for (const auto& t : f.trees) node.children.emplace_back(color, t);
                out.push_back(std::move(node));
            }
        }
        return;
    }
    for (int block = 0; block <= size; ++block) {
        structural_forests(block, k, forest_memo, tree_memo);
        std::vector<ColoredNode> extended;
        for (const auto& f : forest_memo[block]) {
            for (const auto& p : partial) {
                ColoredNode node = p;
                for (const auto& t : f.trees) node.children.emplace_back(color, t);
                extended.push_back(std::move(node));
            }
        }
        structural_distribute(size - block, color + 1, k, extended, out, forest_memo, tree_memo);
    }
}

void structural_forests(int n, int k, std::map<int, std::vector<ColoredForest>>& forest_memo,
                        std::map<int, std::vector<ColoredNode>>& tree_memo) {
    if (forest_memo.count(n)) return;
    forest_memo.emplace(n, std::vector<ColoredForest>{});  // guard against reentry
    if (!tree_memo.count(n) && n >= 1) {
        std::vector<ColoredNode> trees;
        std::vector<ColoredNode> partial{ColoredNode{}};
        structural_distribute(n - 1, 1, k, partial, trees, forest_memo, tree_memo);
        tree_memo.emplace(n, std::move(trees));
    }
    std::vector<ColoredForest> result;
    if (n == 0) {
        result.push_back(ColoredForest{k, {}});
    } else {
        for (int first = 1; first <= n; ++first) {
            structural_forests(n - first, k, forest_memo, tree_memo);
            if (!tree_memo.count(first)) {
                std::vector<ColoredNode> trees;
                std::vector<ColoredNode> partial{ColoredNode{}};
                structural_distribute(first - 1, 1, k, partial, trees, forest_memo, tree_memo);
                tree_memo.emplace(first, std::move(trees));
            }
            for (const auto& t : tree_memo[first]) {
                for (const auto& rest : forest_memo[n - first]) {
                    ColoredForest f{k, {}};
                    f.trees.reserve(rest.trees.size() + 1);
                    f.trees.push_back(t);
                    f.trees.insert(f.trees.end(), rest.trees.begin(), rest.trees.end());
                    result.push_back(std::move(f));
                }
            }
        }
    }
    forest_memo[n] = std::move(result);
}

void write_node(const ColoredNode& node, std::ostream& out) {
    out << node.label;
    if (node.children.empty()) return;
    out << '[';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out << ',';
        out << node.children[i].first << ":(";
        write_node(node.children[i].second, out);
        out << ')';
    }
    out << ']';
}

ColoredNode parse_colored_node(const std::string& s, std::size_t& pos, int k) {
    std::size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected label in forest literal");
    ColoredNode node;
    node.label = std::stoi(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '[') {
        ++pos;
        int last_color = 0;
        while (true) {
            std::size_t cstart = pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == cstart || pos >= s.size() || s[pos] != ':')
                throw std::invalid_argument("expected color: in forest literal");
            const int color = std::stoi(s.substr(cstart, pos - cstart));
            if (color < 1 || color > k)
                throw std::invalid_argument("color " + std::to_string(color) +
                                            " outside 1.." + std::to_string(k));
            if (color < last_color)
                throw std::invalid_argument("child colors must be weakly increasing");
            last_color = color;
            ++pos;
            if (pos >= s.size() || s[pos] != '(')
                throw std::invalid_argument("expected ( in forest literal");
            ++pos;
            node.children.emplace_back(color, parse_colored_node(s, pos, k));
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("expected ) in forest literal");
            ++pos;
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (pos >= s.size() || s[pos] != ']')
            throw std::invalid_argument("expected ] in forest literal");
        ++pos;
    }
    return node;
}

void collect_labels(const ColoredNode& node, std::vector<int>& labels) {
    labels.push_back(node.label);
    for (const auto& [color, child] : node.children) collect_labels(child, labels);
}

}  // namespace

int ColoredForest::size() const {
    int total = 0;
    for (const auto& t : trees) total += node_size(t);
    return total;
}

std::string ColoredForest::literal() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i) out << ';';
        write_node(trees[i], out);
    }
    return out.str();
}

ColoredForest parse_colored_literal(const std::string& text, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty forest literal");
    ColoredForest f{k, {}};
    std::size_t pos = 0;
    while (true) {
        f.trees.push_back(parse_colored_node(s, pos, k));
        if (pos < s.size() && s[pos] == ';') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos != s.size()) throw std::invalid_argument("trailing characters in forest literal");
    std::vector<int> labels;
    for (const auto& t : f.trees) collect_labels(t, labels);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("labels must form a permutation of 1..n");
    return f;
}

ColoredStats colored_stats(const ColoredForest& f) {
    int top = 0;
    for (const auto& t : f.trees) top = std::max(top, node_max_label(t));
    ColoredStats st;
    st.hook.assign(static_cast<std::size_t>(top) + 1, 0);
    st.is_proper.assign(static_cast<std::size_t>(top) + 1, false);
    std::vector<int> roots;
    for (const auto& t : f.trees) {
        node_stats(t, st);
        roots.push_back(t.label);
    }
    st.comp = static_cast<int>(left_right_minima_blocks(roots).size());
    return st;
}

std::vector<std::vector<int>> left_right_minima_blocks(const std::vector<int>& seq) {
    {
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("sequence entries must be distinct");
    }
    std::vector<std::vector<int>> blocks;
    int running_min = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i == 0 || seq[i] < running_min) {
            blocks.emplace_back();
            running_min = seq[i];
        }
        blocks.back().push_back(seq[i]);
    }
    return blocks;
}

void for_each_colored_forest(int n, int k,
                             const std::function<void(const ColoredForest&)>& fn) {
    check_colored_budget(n, k);
    Enumerator en(n, k);
    const unsigned full = (1u << n) - 1;
    ColoredForest f{k, {}};
    for (const auto& trees : en.forests(full)) {
        f.trees = trees;
        fn(f);
    }
}

Int colored_forest_count(int n, int k) {
    Int count = 0;
    for_each_colored_forest(n, k, [&](const ColoredForest&) { ++count; });
    return count;
}

std::vector<ColoredForest> unlabeled_colored_forests(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("need n >= 0, k >= 1");
    if (n > 8) throw std::invalid_argument("structural enumeration capped at n = 8");
    std::map<int, std::vector<ColoredForest>> forest_memo;
    std::map<int, std::vector<ColoredNode>> tree_memo;
    structural_forests(n, k, forest_memo, tree_memo);
    return forest_memo[n];
}

MultiPoly colored_prop_poly(int n, int k) {
    MultiPoly sum;
    for_each_colored_forest(n, k, [&](const ColoredForest& f) {
        const ColoredStats st = colored_stats(f);
        sum += MultiPoly::variable(Var::u, static_cast<unsigned>(st.proper));
    });
    return sum;
}

MultiPoly colored_tree_prop_poly(int n, int k) {
    MultiPoly sum;
    for_each_colored_forest(n, k, [&](const ColoredForest& f) {
        if (f.trees.size() != 1) return;
        const ColoredStats st = colored_stats(f);
        sum += MultiPoly::variable(Var::u, static_cast<unsigned>(st.proper));
    });
    return sum;
}

MultiPoly colored_triple_poly(int n, int k) {
    MultiPoly sum;
    for_each_colored_forest(n, k, [&](const ColoredForest& f) {
        const ColoredStats st = colored_stats(f);
        if (st.comp < 1 || st.comp > st.proper || st.proper > n)
            throw std::logic_error("statistic invariant violated on " + f.literal());
        ExpoVec e{};
        e[static_cast<int>(Var::u)] = static_cast<std::uint8_t>(n - st.proper);
        e[static_cast<int>(Var::v)] = static_cast<std::uint8_t>(st.proper - st.comp);
        e[static_cast<int>(Var::w)] = static_cast<std::uint8_t>(st.comp);
        sum += MultiPoly::term(Rat(1), e);
    });
    return sum;
}

namespace {

MultiPoly structural_hook_product(const ColoredNode& node) {
    MultiPoly prod = MultiPoly(1L) +
                     Rat(1, node_size(node)) * MultiPoly::variable(Var::alpha);
    for (const auto& [color, child] : node.children) prod *= structural_hook_product(child);
    return prod;
}

}  // namespace

Report colored_hook_check(int n, int k) {
    Report report;
    const auto structures = unlabeled_colored_forests(n, k);
    MultiPoly forest_sum, tree_sum;
    for (const auto& f : structures) {
        MultiPoly prod(1L);
        for (const auto& t : f.trees) prod *= structural_hook_product(t);
        forest_sum += prod;
        if (f.trees.size() == 1) tree_sum += prod;
    }
    const Rat nfact(factorial(static_cast<unsigned>(n)));
    const MultiPoly one_plus_alpha = MultiPoly(1L) + MultiPoly::variable(Var::alpha);
    const MultiPoly rhs_forest = p_poly(n).subst({{Var::a, MultiPoly(Rat(k))},
                                                  {Var::b, Rat(k + 1) * one_plus_alpha},
                                                  {Var::c, one_plus_alpha}});
    const MultiPoly rhs_tree = -p_poly(n).subst({{Var::a, MultiPoly(Rat(k))},
                                                 {Var::b, Rat(k + 1) * one_plus_alpha},
                                                 {Var::c, -one_plus_alpha}});
    report.add("n! sum_F prod (1+alpha/h) = P_n(k, (k+1)(1+alpha), 1+alpha)",
               (nfact * forest_sum).str(), rhs_forest.str());
    report.add("n! sum_T prod (1+alpha/h) = -P_n(k, (k+1)(1+alpha), -(1+alpha))",
               (nfact * tree_sum).str(), rhs_tree.str());
    return report;
}

Report ksym_check(int n, int k) {
    // sum_T v^(n-prop) u^(prop-comp) w^comp over (k+1)-ary trees equals
    // sum_F u^(n-prop) v^(prop-comp) w^comp over k-colored forests; both
    // sides reduce to P_n(ku, (k+1)v, w) by the a<->b symmetry.
    Report report;
    const MultiPoly lhs = kary_triple_poly(n, k + 1);
    const MultiPoly rhs = colored_triple_poly(n, k);
    report.add("(k+1)-ary triple poly = k-colored triple poly", lhs.str(), rhs.str());
    return report;
}

}  // namespace propcount

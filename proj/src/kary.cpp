#include "propcount/kary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "propcount/closedform.hpp"

namespace propcount {

namespace {

int internal_count_of(const KaryNode& node) {
    if (node.is_leaf()) return 0;
    int total = 1;
    for (const auto& ch : node.children) total += internal_count_of(ch);
    return total;
}

// Smallest internal label in the subtree, or 0 for a leaf-only subtree.
int subtree_min_label(const KaryNode& node) {
    if (node.is_leaf()) return 0;
    int mn = node.label;
    for (const auto& ch : node.children) {
        int m = subtree_min_label(ch);
        if (m != 0) mn = std::min(mn, m);
    }
    return mn;
}

int subtree_max_label(const KaryNode& node) {
    if (node.is_leaf()) return 0;
    int mx = node.label;
    for (const auto& ch : node.children) mx = std::max(mx, subtree_max_label(ch));
    return mx;
}

void collect_hooks(const KaryNode& node, std::vector<int>& hook, std::vector<bool>& is_proper,
                   int& proper) {
    if (node.is_leaf()) return;
    const int size = internal_count_of(node);
    hook[static_cast<std::size_t>(node.label)] = size;
    if (subtree_min_label(node) == node.label) {
        is_proper[static_cast<std::size_t>(node.label)] = true;
        ++proper;
    }
    for (const auto& ch : node.children) collect_hooks(ch, hook, is_proper, proper);
}

// Follows the decomposing path from the root: always toward the first
// child, except that an improper vertex whose smallest descendant lies
// under the first child sends the walk to the second child. Returns the
// visited internal nodes paired with the child index taken from each.
std::vector<std::pair<const KaryNode*, int>> decomposing_path(const KaryNode& root, int k) {
    if (k < 2) throw std::invalid_argument("the decomposing path is defined only for k >= 2");
    std::vector<std::pair<const KaryNode*, int>> path;
    const KaryNode* node = &root;
    while (!node->is_leaf()) {
        int take = 0;
        if (subtree_min_label(*node) != node->label) {
            // Improper: locate the subtree holding the smallest descendant.
            const int mn = subtree_min_label(*node);
            if (!node->children[0].is_leaf() && subtree_min_label(node->children[0]) == mn)
                take = 1;
        }
        path.emplace_back(node, take);
        node = &node->children[static_cast<std::size_t>(take)];
    }
    return path;
}

KaryNode copy_replacing_child(const KaryNode& node, int child_index) {
    KaryNode out = node;
    out.children[static_cast<std::size_t>(child_index)] = KaryNode{};
    return out;
}

void shapes_for(int n, int k, std::map<int, std::vector<KaryNode>>& memo);

void compositions_into(int total, int parts, std::vector<int>& current,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        current.push_back(total);
        fn(current);
        current.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        current.push_back(first);
        compositions_into(total - first, parts - 1, current, fn);
        current.pop_back();
    }
}

void shapes_for(int n, int k, std::map<int, std::vector<KaryNode>>& memo) {
    if (memo.count(n)) return;
    std::vector<KaryNode> result;
    if (n == 0) {
        result.push_back(KaryNode{});
    } else {
        for (int m = 0; m < n; ++m) shapes_for(m, k, memo);
        std::vector<int> sizes;
        compositions_into(n - 1, k, sizes, [&](const std::vector<int>& split) {
            // Cartesian product of child shape lists for this size split.
            std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
            while (true) {
                KaryNode node;
                node.children.reserve(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i)
                    node.children.push_back(
                        memo[split[static_cast<std::size_t>(i)]][idx[static_cast<std::size_t>(i)]]);
                result.push_back(std::move(node));
                int pos = k - 1;
                while (pos >= 0) {
                    if (++idx[static_cast<std::size_t>(pos)] <
                        memo[split[static_cast<std::size_t>(pos)]].size())
                        break;
                    idx[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        });
    }
    memo.emplace(n, std::move(result));
}

void assign_labels_preorder(KaryNode& node, const std::vector<int>& labels, std::size_t& next) {
    if (node.is_leaf()) return;
    node.label = labels[next++];
    for (auto& ch : node.children) assign_labels_preorder(ch, labels, next);
}

Int labeled_count_closed_form(int n, int k) {
    return binomial(Int(k * n + 1), static_cast<unsigned>(n)) / Int(k * n + 1) *
           factorial(static_cast<unsigned>(n));
}

void validate_tree(const KaryNode& node, int k, std::vector<int>& labels_seen) {
    if (node.is_leaf()) {
        if (node.label != 0) throw std::invalid_argument("leaf with a label");
        return;
    }
    if (static_cast<int>(node.children.size()) != k)
        throw std::invalid_argument("internal node with " +
                                    std::to_string(node.children.size()) + " children, expected " +
                                    std::to_string(k));
    if (node.label < 1) throw std::invalid_argument("internal node without a valid label");
    labels_seen.push_back(node.label);
    for (const auto& ch : node.children) validate_tree(ch, k, labels_seen);
}

}  // namespace

int KaryTree::internal_count() const { return internal_count_of(root); }

namespace {

void write_literal(const KaryNode& node, std::ostream& out) {
    if (node.is_leaf()) {
        out << '.';
        return;
    }
    out << node.label << '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out << ',';
        write_literal(node.children[i], out);
    }
    out << ')';
}

KaryNode parse_node(const std::string& s, std::size_t& pos, int k) {
    if (pos >= s.size()) throw std::invalid_argument("truncated tree literal");
    if (s[pos] == '.') {
        ++pos;
        return KaryNode{};
    }
    std::size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected label or '.' in tree literal");
    KaryNode node;
    node.label = std::stoi(s.substr(start, pos - start));
    if (pos >= s.size() || s[pos] != '(')
        throw std::invalid_argument("labeled node must list its children");
    ++pos;
    for (int i = 0; i < k; ++i) {
        if (i > 0) {
            if (pos >= s.size() || s[pos] != ',')
                throw std::invalid_argument("expected ',' in tree literal");
            ++pos;
        }
        node.children.push_back(parse_node(s, pos, k));
    }
    if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("expected ')' in tree literal: arity must be exactly " +
                                    std::to_string(k));
    ++pos;
    return node;
}

}  // namespace

std::string KaryTree::literal() const {
    std::ostringstream out;
    write_literal(root, out);
    return out.str();
}

KaryTree parse_kary_literal(const std::string& text, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::size_t pos = 0;
    KaryTree t;
    t.k = k;
    t.root = parse_node(s, pos, k);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in tree literal");
    std::vector<int> labels;
    validate_tree(t.root, k, labels);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("labels must form a permutation of 1..n");
    return t;
}

KaryStats kary_stats(const KaryTree& t) {
    KaryStats st;
    // Components of a decomposition keep their original labels, so the
    // arrays are sized by the largest label rather than the vertex count.
    const int top = subtree_max_label(t.root);
    st.hook.assign(static_cast<std::size_t>(top) + 1, 0);
    st.is_proper.assign(static_cast<std::size_t>(top) + 1, false);
    collect_hooks(t.root, st.hook, st.is_proper, st.proper);
    if (t.k >= 2 && !t.root.is_leaf())
        st.comp = static_cast<int>(decomposing_path(t.root, t.k).size());
    return st;
}

std::vector<KaryNode> kary_shapes(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("kary_shapes: need n >= 0, k >= 1");
    if (n > kKaryShapeLimit)
        throw std::invalid_argument("n=" + std::to_string(n) +
                                    " exceeds the shape enumeration limit " +
                                    std::to_string(kKaryShapeLimit));
    std::map<int, std::vector<KaryNode>> memo;
    shapes_for(n, k, memo);
    return std::move(memo[n]);
}

void for_each_kary(int n, int k, const std::function<void(const KaryTree&)>& fn) {
    if (n < 0 || k < 1) throw std::invalid_argument("for_each_kary: need n >= 0, k >= 1");
    if (n > kKaryLabeledLimit || labeled_count_closed_form(n, k) > 5'000'000)
        throw std::invalid_argument("labeled k-ary enumeration over budget at n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k));
    const auto shapes = kary_shapes(n, k);
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    KaryTree t;
    t.k = k;
    for (const auto& shape : shapes) {
        std::vector<int> perm = labels;
        do {
            t.root = shape;
            std::size_t next = 0;
            assign_labels_preorder(t.root, perm, next);
            fn(t);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

Int kary_count(int n, int k) {
    Int count = 0;
    for_each_kary(n, k, [&](const KaryTree&) { ++count; });
    return count;
}

std::vector<KaryTree> kary_decompose(const KaryTree& t) {
    if (t.k < 2)
        throw std::invalid_argument(
            "decomposition is not defined for unary trees (the path rule needs a second child)");
    if (t.root.is_leaf()) throw std::invalid_argument("cannot decompose an empty tree");
    const auto path = decomposing_path(t.root, t.k);
    std::vector<KaryTree> parts;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& [node, take] = path[i];
        KaryTree part;
        part.k = t.k;
        if (node->children[static_cast<std::size_t>(take)].is_leaf()) {
            part.root = *node;  // last path vertex keeps its leaf edge
        } else {
            part.root = copy_replacing_child(*node, take);
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

KaryTree kary_recompose(std::vector<KaryTree> parts) {
    if (parts.empty()) throw std::invalid_argument("nothing to recompose");
    const int k = parts.front().k;
    std::vector<int> all_labels;
    for (const auto& p : parts) {
        if (p.k != k) throw std::invalid_argument("parts disagree on k");
        if (p.root.is_leaf()) throw std::invalid_argument("empty part");
        const KaryStats st = kary_stats(p);
        if (st.comp != 1)
            throw std::invalid_argument("part " + p.literal() + " has comp = " +
                                        std::to_string(st.comp) + ", expected 1");
        for (std::size_t l = 1; l < st.hook.size(); ++l)
            if (st.hook[l] > 0) all_labels.push_back(static_cast<int>(l));
    }
    std::sort(all_labels.begin(), all_labels.end());
    if (std::adjacent_find(all_labels.begin(), all_labels.end()) != all_labels.end())
        throw std::invalid_argument("parts have overlapping labels");

    std::sort(parts.begin(), parts.end(), [](const KaryTree& x, const KaryTree& y) {
        return subtree_min_label(x.root) < subtree_min_label(y.root);
    });
    KaryTree current = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        KaryTree next = parts[static_cast<std::size_t>(i)];
        const int attach = next.root.children[0].is_leaf() ? 0 : 1;
        if (!next.root.children[static_cast<std::size_t>(attach)].is_leaf())
            throw std::invalid_argument("part " + next.literal() +
                                        " has no free slot for the next component");
        next.root.children[static_cast<std::size_t>(attach)] = current.root;
        current = std::move(next);
    }
    return current;
}

MultiPoly kary_triple_poly(int n, int k) {
    if (k < 2) throw std::invalid_argument("the component statistic needs k >= 2");
    MultiPoly sum;
    for_each_kary(n, k, [&](const KaryTree& t) {
        const KaryStats st = kary_stats(t);
        if (st.comp < 1 || st.comp > st.proper || st.proper > n)
            throw std::logic_error("statistic invariant violated on " + t.literal());
        ExpoVec e{};
        e[static_cast<int>(Var::v)] = static_cast<std::uint8_t>(n - st.proper);
        e[static_cast<int>(Var::u)] = static_cast<std::uint8_t>(st.proper - st.comp);
        e[static_cast<int>(Var::w)] = static_cast<std::uint8_t>(st.comp);
        sum += MultiPoly::term(Rat(1), e);
    });
    return sum;
}

MultiPoly kary_prop_poly(int n, int k) {
    MultiPoly sum;
    for_each_kary(n, k, [&](const KaryTree& t) {
        const KaryStats st = kary_stats(t);
        sum += MultiPoly::variable(Var::u, static_cast<unsigned>(st.proper));
    });
    return sum;
}

Report postnikov_check(int n, int k, const Rat& alpha) {
    Report report;
    const auto shapes = kary_shapes(n, k);
    const MultiPoly alpha_var = MultiPoly::variable(Var::alpha);
    MultiPoly hook_sum;
    Rat hook_sum_at_1(0);
    for (const auto& shape : shapes) {
        // Hooks do not depend on the labeling; use any representative.
        KaryTree t;
        t.k = k;
        t.root = shape;
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 1);
        std::size_t next = 0;
        assign_labels_preorder(t.root, labels, next);
        const KaryStats st = kary_stats(t);
        MultiPoly prod(1L);
        Rat prod1(1);
        for (int l = 1; l <= n; ++l) {
            const int h = st.hook[static_cast<std::size_t>(l)];
            prod *= MultiPoly(1L) + Rat(1, h) * alpha_var;
            prod1 *= Rat(h + 1, h);
        }
        hook_sum += prod;
        hook_sum_at_1 += prod1;
    }
    const Rat nfact(factorial(static_cast<unsigned>(n)));
    const MultiPoly one_plus_alpha = MultiPoly(1L) + alpha_var;
    const MultiPoly lhs = nfact * hook_sum;
    const MultiPoly rhs = p_poly(n).subst({{Var::a, MultiPoly(Rat(k))},
                                           {Var::b, Rat(k - 1) * one_plus_alpha},
                                           {Var::c, one_plus_alpha}});
    report.add("n! sum_shapes prod (1+alpha/h) = P_n(k, (k-1)(1+alpha), 1+alpha)", lhs.str(),
               rhs.str());
    report.add("evaluation at alpha = " + rat_str(alpha),
               rat_str(lhs.eval({{Var::alpha, alpha}})), rat_str(rhs.eval({{Var::alpha, alpha}})));
    if (k == 2 && alpha == 1) {
        const Rat eq1 = nfact / rat_pow(Rat(2), n) * hook_sum_at_1;
        report.add("(n!/2^n) sum_shapes prod (1+1/h) = (n+1)^{n-1}", rat_str(eq1),
                   rat_str(rat_pow(Rat(n + 1), n - 1)));
    }
    return report;
}

}  // namespace propcount

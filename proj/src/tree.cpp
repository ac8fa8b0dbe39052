#include "chainrot/tree.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace chainrot {

namespace {

// Iterative in-order walk over raw 1-based child arrays. Safe on arbitrary
// depth; assumes the arrays describe a tree (no cycles).
std::vector<int> raw_inorder(int n, const std::vector<int>& left,
                             const std::vector<int>& right, int root) {
    std::vector<int> out;
    out.reserve(n);
    std::vector<int> stack;
    int cur = root;
    while (cur != 0 || !stack.empty()) {
        while (cur != 0) {
            stack.push_back(cur);
            cur = left[cur];
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        cur = right[cur];
    }
    return out;
}

}  // namespace

Tree Tree::build(int n, const std::vector<int>& left,
                 const std::vector<int>& right, int root) {
    if (n < 1)
        throw TreeError(TreeErrorKind::InvalidVertex,
                        "vertex count must be at least 1, got " + std::to_string(n));
    if (static_cast<int>(left.size()) != n || static_cast<int>(right.size()) != n)
        throw TreeError(TreeErrorKind::InvalidVertex,
                        "child arrays must both have length n=" + std::to_string(n));
    if (root < 1 || root > n)
        throw TreeError(TreeErrorKind::InvalidVertex,
                        "root " + std::to_string(root) + " out of range 1.." +
                            std::to_string(n));

    std::vector<int> l(n + 1, 0), r(n + 1, 0);
    std::vector<int> indeg(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        for (int c : {left[v - 1], right[v - 1]}) {
            if (c < 0 || c > n)
                throw TreeError(TreeErrorKind::InvalidVertex,
                                "child " + std::to_string(c) + " of vertex " +
                                    std::to_string(v) + " out of range 0.." +
                                    std::to_string(n));
        }
        l[v] = left[v - 1];
        r[v] = right[v - 1];
        for (int c : {l[v], r[v]}) {
            if (c != 0 && ++indeg[c] > 1)
                throw TreeError(TreeErrorKind::DuplicateChild,
                                "vertex " + std::to_string(c) +
                                    " appears as a child more than once");
        }
    }
    if (indeg[root] > 0)
        throw TreeError(TreeErrorKind::Cycle,
                        "root " + std::to_string(root) + " has a parent");

    // Reachability from the root. With in-degrees at most one and a
    // parentless root a revisit is impossible, but check anyway.
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : {l[v], r[v]}) {
            if (c == 0) continue;
            if (seen[c])
                throw TreeError(TreeErrorKind::Cycle,
                                "vertex " + std::to_string(c) +
                                    " reached twice from the root");
            seen[c] = 1;
            ++reached;
            stack.push_back(c);
        }
    }
    if (reached < n) {
        for (int v = 1; v <= n; ++v) {
            if (!seen[v] && indeg[v] == 0)
                throw TreeError(TreeErrorKind::Forest,
                                "vertex " + std::to_string(v) +
                                    " is disconnected from the root");
        }
        for (int v = 1; v <= n; ++v) {
            if (!seen[v])
                throw TreeError(TreeErrorKind::Cycle,
                                "vertex " + std::to_string(v) +
                                    " lies on a cycle detached from the root");
        }
    }

    std::vector<int> order = raw_inorder(n, l, r, root);
    for (int i = 0; i < n; ++i) {
        if (order[i] != i + 1)
            throw TreeError(TreeErrorKind::InfixViolation,
                            "in-order position " + std::to_string(i + 1) +
                                " holds vertex " + std::to_string(order[i]));
    }

    Tree t;
    t.n_ = n;
    t.root_ = root;
    t.left_ = std::move(l);
    t.right_ = std::move(r);
    t.compute_parents();
    return t;
}

Tree Tree::unchecked(int n, std::vector<int> left, std::vector<int> right,
                     int root) {
    Tree t;
    t.n_ = n;
    t.root_ = root;
    t.left_ = std::move(left);
    t.right_ = std::move(right);
    t.compute_parents();
    return t;
}

void Tree::compute_parents() {
    parent_.assign(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) {
        if (left_[v]) parent_[left_[v]] = v;
        if (right_[v]) parent_[right_[v]] = v;
    }
}

Interval Tree::subtree_interval(int v) const {
    int lo = v, hi = v;
    while (left_[lo]) lo = left_[lo];
    while (right_[hi]) hi = right_[hi];
    return {lo, hi};
}

std::vector<Interval> Tree::subtree_intervals() const {
    // Infix labeling makes every subtree span [leftmost, rightmost] label,
    // both reachable by a single chain walk, so no full traversal is needed.
    std::vector<Interval> out(n_ + 1, Interval{0, 0});
    for (int v = 1; v <= n_; ++v) out[v] = subtree_interval(v);
    return out;
}

std::vector<int> Tree::depths() const {
    std::vector<int> d(n_ + 1, 0);
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : {left_[v], right_[v]}) {
            if (c) {
                d[c] = d[v] + 1;
                stack.push_back(c);
            }
        }
    }
    return d;
}

std::vector<int> Tree::inorder() const {
    return raw_inorder(n_, left_, right_, root_);
}

std::string Chain::notation() const {
    std::string s = "[" + std::to_string(top);
    if (top != bottom) s += "-" + std::to_string(bottom);
    return s + "]";
}

std::vector<Chain> maximal_chains(const Tree& t, Side side) {
    std::vector<int> depth = t.depths();
    std::vector<Chain> chains;
    for (int v = 1; v <= t.n(); ++v) {
        bool is_top = t.is_root(v) || t.side_of(v) != side;
        if (!is_top) continue;
        Chain c;
        c.side = side;
        c.top = v;
        c.maximal = true;
        for (int w = v; w != 0; w = t.child(w, side)) {
            c.vertices.push_back(w);
            c.bottom = w;
        }
        chains.push_back(std::move(c));
    }
    std::sort(chains.begin(), chains.end(), [&](const Chain& a, const Chain& b) {
        if (depth[a.top] != depth[b.top]) return depth[a.top] > depth[b.top];
        return a.top < b.top;
    });
    return chains;
}

int chain_count(const Tree& t, Side side) {
    // Every non-null pointer of the opposite side ends one chain of this
    // side and starts another, so the count is that pointer total plus one.
    Side opp = opposite(side);
    int filled = 0;
    for (int v = 1; v <= t.n(); ++v)
        if (t.child(v, opp)) ++filled;
    return filled + 1;
}

ShapeKey ShapeKey::of(const Tree& t) {
    std::string bits;
    bits.reserve(2 * t.n() + 1);
    // Explicit stack preorder; entries are subtree roots, 0 for empty slots.
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == 0) {
            bits += '0';
            continue;
        }
        bits += '1';
        stack.push_back(t.right(v));
        stack.push_back(t.left(v));
    }
    return ShapeKey{std::move(bits)};
}

ShapeKey shape_key(const Tree& t) { return ShapeKey::of(t); }

Tree parse_shape(const std::string& bits) {
    if (bits.empty()) throw ParseError("empty shape string");
    for (char c : bits)
        if (c != '0' && c != '1')
            throw ParseError(std::string("shape strings use only 0 and 1, got '") +
                             c + "'");
    if (bits.size() % 2 == 0)
        throw ParseError("shape string length must be odd (2n+1)");
    int n = static_cast<int>(bits.size()) / 2;
    if (n == 0) throw ParseError("shape encodes an empty tree");

    // First pass: match each '1' with the structure below it. A preorder
    // walk assigns in-order labels on the fly by counting nodes already
    // emitted to the left.
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    int next_label = 1;
    size_t pos = 0;
    // Returns the label of the subtree root, 0 for an empty slot.
    std::function<int()> parse = [&]() -> int {
        if (pos >= bits.size()) throw ParseError("shape string ends early");
        if (bits[pos] == '0') {
            ++pos;
            return 0;
        }
        ++pos;
        int l = parse();
        if (next_label > n) throw ParseError("shape string ends early");
        int me = next_label++;
        int r = parse();
        left[me] = l;
        right[me] = r;
        return me;
    };
    int root = parse();
    if (pos != bits.size()) throw ParseError("trailing characters after shape");
    if (next_label != n + 1) throw ParseError("malformed shape string");
    return TreeInternal::make(n, std::move(left), std::move(right), root);
}

namespace {

void gen_shapes(int lo, int hi, std::vector<int>& left, std::vector<int>& right,
                const std::function<void(int)>& emit) {
    if (lo > hi) {
        emit(0);
        return;
    }
    for (int root = lo; root <= hi; ++root) {
        gen_shapes(lo, root - 1, left, right, [&](int lroot) {
            left[root] = lroot;
            gen_shapes(root + 1, hi, left, right, [&](int rroot) {
                right[root] = rroot;
                emit(root);
            });
        });
    }
}

}  // namespace

void for_each_tree(int n, const std::function<void(const Tree&)>& fn) {
    if (n < 1)
        throw TreeError(TreeErrorKind::InvalidVertex,
                        "vertex count must be at least 1, got " + std::to_string(n));
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    gen_shapes(1, n, left, right, [&](int root) {
        fn(TreeInternal::make(n, left, right, root));
    });
}

std::vector<Tree> enumerate_trees(int n) {
    std::vector<Tree> out;
    for_each_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

namespace {

struct LiteralNode {
    int label = 0;
    int left = -1;   // index into node pool, -1 absent
    int right = -1;
};

class LiteralParser {
public:
    explicit LiteralParser(const std::string& text) : s_(text) {}

    Tree run() {
        int root = parse_node();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing characters after tree literal");
        int n = static_cast<int>(nodes_.size());
        std::vector<char> seen(n + 1, 0);
        for (const LiteralNode& nd : nodes_) {
            if (nd.label < 1 || nd.label > n)
                throw ParseError("literal labels must be 1.." + std::to_string(n) +
                                 ", got " + std::to_string(nd.label));
            if (seen[nd.label]++)
                throw ParseError("duplicate label " + std::to_string(nd.label));
        }
        std::vector<int> left(n, 0), right(n, 0);
        for (const LiteralNode& nd : nodes_) {
            if (nd.left >= 0) left[nd.label - 1] = nodes_[nd.left].label;
            if (nd.right >= 0) right[nd.label - 1] = nodes_[nd.right].label;
        }
        return Tree::build(n, left, right, nodes_[root].label);
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // "·" is U+00B7, two bytes in UTF-8; "." is the ASCII alternative.
    bool eat_empty() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            return true;
        }
        if (pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xC2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0xB7) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    int parse_label() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected a vertex label at position " +
                             std::to_string(start));
        return std::stoi(s_.substr(start, pos_ - start));
    }

    // node := label | label '(' child ',' child ')'
    int parse_node() {
        int label = parse_label();
        int idx = static_cast<int>(nodes_.size());
        nodes_.push_back(LiteralNode{label, -1, -1});
        if (eat('(')) {
            nodes_[idx].left = parse_child();
            if (!eat(','))
                throw ParseError("expected ',' between children of vertex " +
                                 std::to_string(label));
            nodes_[idx].right = parse_child();
            if (!eat(')'))
                throw ParseError("expected ')' closing vertex " +
                                 std::to_string(label));
        }
        return idx;
    }

    int parse_child() {
        if (eat_empty()) return -1;
        return parse_node();
    }

    const std::string& s_;
    size_t pos_ = 0;
    std::vector<LiteralNode> nodes_;
};

void literal_rec(const Tree& t, int v, std::string& out) {
    out += std::to_string(v);
    if (t.left(v) == 0 && t.right(v) == 0) return;
    out += '(';
    if (t.left(v))
        literal_rec(t, t.left(v), out);
    else
        out += "\xC2\xB7";
    out += ',';
    if (t.right(v))
        literal_rec(t, t.right(v), out);
    else
        out += "\xC2\xB7";
    out += ')';
}

}  // namespace

Tree parse_literal(const std::string& text) { return LiteralParser(text).run(); }

std::string to_literal(const Tree& t) {
    std::string out;
    literal_rec(t, t.root(), out);
    return out;
}

}  // namespace chainrot

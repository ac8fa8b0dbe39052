#pragma once

// Infix-labeled rooted binary trees over vertices 1..n: validation, subtree
// intervals, maximal chain enumeration, shape keys, and exhaustive shape
// enumeration. Trees are immutable values; every transformation returns a
// new tree.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chainrot/errors.hpp"

namespace chainrot {

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

// Contiguous label range [lo, hi] spanned by some subtree.
struct Interval {
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo + 1; }
    bool contains(const Interval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// A rooted binary tree whose in-order traversal visits 1, 2, ..., n.
// Child and parent slots use 0 for "absent". Instances are immutable after
// construction and safe to share across threads.
class Tree {
public:
    // Validates and builds a tree from child maps. `left` and `right` have
    // size n and hold the children of vertex i+1 at index i (0 = none).
    // Throws TreeError with a distinct kind for out-of-range vertices,
    // duplicate children, cycles, forests, and infix-order violations.
    static Tree build(int n, const std::vector<int>& left,
                      const std::vector<int>& right, int root);

    int n() const { return n_; }
    int root() const { return root_; }
    int left(int v) const { return left_[v]; }
    int right(int v) const { return right_[v]; }
    int parent(int v) const { return parent_[v]; }
    int child(int v, Side s) const { return s == Side::Left ? left_[v] : right_[v]; }

    bool is_root(int v) const { return v == root_; }

    // Side of v relative to its parent; v must not be the root.
    Side side_of(int v) const {
        return left_[parent_[v]] == v ? Side::Left : Side::Right;
    }

    // [min label, max label] of the subtree rooted at v. O(height).
    Interval subtree_interval(int v) const;

    // Intervals for every vertex (index 1..n) in one traversal.
    std::vector<Interval> subtree_intervals() const;

    // Depth of every vertex (root = 0), index 1..n.
    std::vector<int> depths() const;

    // In-order vertex sequence. Always 1..n for a valid tree; exposed for
    // tests that re-check the invariant.
    std::vector<int> inorder() const;

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.n_ == b.n_ && a.root_ == b.root_ && a.left_ == b.left_ &&
               a.right_ == b.right_;
    }

private:
    Tree() = default;

    // Constructs without validation from 1-based slot vectors of size n+1.
    // Callers guarantee structural validity (move application, shape
    // decoding, enumeration).
    static Tree unchecked(int n, std::vector<int> left, std::vector<int> right,
                          int root);

    void compute_parents();

    int n_ = 0;
    int root_ = 0;
    std::vector<int> left_;    // 1-based, [0] unused
    std::vector<int> right_;
    std::vector<int> parent_;

    friend class TreeInternal;
};

// Grants trusted modules access to the unchecked constructor.
class TreeInternal {
public:
    static Tree make(int n, std::vector<int> left, std::vector<int> right, int root) {
        return Tree::unchecked(n, std::move(left), std::move(right), root);
    }
    static const std::vector<int>& left(const Tree& t) { return t.left_; }
    static const std::vector<int>& right(const Tree& t) { return t.right_; }
};

// Maximal or general chain of same-side child links, top to bottom.
struct Chain {
    Side side = Side::Left;
    int top = 0;
    int bottom = 0;
    std::vector<int> vertices;  // from top to bottom
    bool maximal = false;

    int length() const { return static_cast<int>(vertices.size()); }
    // Paper-style notation: "[7-4]", singleton "[7]".
    std::string notation() const;
};

// All maximal chains of the given side. Every vertex appears in exactly one
// returned chain. Order: descending depth of the chain top, ties by label.
std::vector<Chain> maximal_chains(const Tree& t, Side side);

// Number of maximal chains of the given side, via the pointer-count identity
// (opposite-side non-null pointers + 1). O(n).
int chain_count(const Tree& t, Side side);

// Canonical preorder shape encoding: node -> '1' enc(left) enc(right),
// empty slot -> '0'. Length exactly 2n+1. Labels are implied by infix rank,
// so the key identifies the shape completely.
struct ShapeKey {
    std::string bits;

    static ShapeKey of(const Tree& t);
    int n() const { return (static_cast<int>(bits.size()) - 1) / 2; }
    friend bool operator==(const ShapeKey&, const ShapeKey&) = default;
    friend auto operator<=>(const ShapeKey&, const ShapeKey&) = default;
};

ShapeKey shape_key(const Tree& t);

// Decodes a preorder bitstring back into the unique tree with that shape.
// Throws ParseError on malformed input.
Tree parse_shape(const std::string& bits);

// Calls fn once for every tree shape of n vertices (Catalan(n) shapes),
// in the deterministic order of the root-split recursion.
void for_each_tree(int n, const std::function<void(const Tree&)>& fn);

// Materialized form of for_each_tree. Caller bounds n.
std::vector<Tree> enumerate_trees(int n);

// Human tree literal: "v(L,R)" with "·" (or ASCII ".") for an empty child
// and a bare label for a leaf, e.g. "9(3(2(1,·),7(5(4,6),8)),10)".
Tree parse_literal(const std::string& text);
std::string to_literal(const Tree& t);

// Auto-detecting parser: JSON object, shape bitstring, or literal.
Tree parse_tree(const std::string& text);

}  // namespace chainrot

template <>
struct std::hash<chainrot::ShapeKey> {
    size_t operator()(const chainrot::ShapeKey& k) const noexcept {
        return std::hash<std::string>{}(k.bits);
    }
};

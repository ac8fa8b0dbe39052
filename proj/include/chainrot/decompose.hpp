#pragma once

// Equivalent-edge detection between two same-size trees and the splitting
// of the pair into independent sub-pairs. An edge of S and an edge of T are
// equivalent when the subtrees below them span the same label interval;
// cutting both separates the problem.

#include <utility>
#include <variant>
#include <vector>

#include "chainrot/tree.hpp"

namespace chainrot {

// One matched edge pair: the child subtree spans `interval` in both trees.
// Edges are (parent, child) in their respective tree.
struct EquivalentEdgePair {
    Interval interval;
    std::pair<int, int> s_edge;
    std::pair<int, int> t_edge;

    friend bool operator==(const EquivalentEdgePair&,
                           const EquivalentEdgePair&) = default;
};

// All equivalent edge pairs, ordered by interval (lo, then hi). Found by
// intersecting the two child-subtree interval sets; each non-root vertex
// contributes one interval, so the count is at most n-1 (exactly n-1 when
// the trees are equal).
std::vector<EquivalentEdgePair> equivalent_edges(const Tree& s, const Tree& t);

// A vertex of a split part either stands for one original vertex or is a
// placeholder for a nested equivalent interval contracted to a leaf.
using PartLabel = std::variant<int, Interval>;

inline bool is_placeholder(const PartLabel& l) {
    return std::holds_alternative<Interval>(l);
}

struct SplitPair {
    Interval interval;           // original label span this part covers
    Tree s_part;
    Tree t_part;
    std::vector<PartLabel> label_map;  // new label i -> label_map[i-1]
    int real_size = 0;           // non-placeholder vertices

    int size() const { return s_part.n(); }
};

// Splits (s, t) along all equivalent edges into e+1 independent sub-pairs.
// Nested intervals are handled innermost-first: inside an enclosing part
// each already-extracted interval appears as a single placeholder leaf, and
// labels are renumbered 1..m preserving relative order. Parts are returned
// smallest-first (ties by interval start), the whole-tree remainder last.
// The label maps partition the original vertices; total part size is n + e.
std::vector<SplitPair> split(const Tree& s, const Tree& t);

}  // namespace chainrot

#pragma once

// Named tree families, Catalan counting, and uniform random shapes via
// rank/unrank on the root-split enumeration order.

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "chainrot/tree.hpp"

namespace chainrot {

using BigInt = boost::multiprecision::cpp_int;

// Number of tree shapes on n vertices (exact, arbitrary size).
BigInt catalan(int n);

// Same, restricted to values that fit in 64 bits (n <= 35); throws
// std::overflow_error beyond that.
std::uint64_t catalan_u64(int n);

// Left: root n, every vertex's left child is its predecessor. Right: the
// mirror. A complete chain has chain count 1 on its own side and n on the
// other.
Tree complete_chain(int n, Side side);

// A pair (S, T) with left chain counts c and n, no equivalent edges, and
// coinciding chain-distance bounds: both equal n - c. S stacks a left spine
// n..c+1, hangs vertex 1 below c+1, and gives 1 the right chain 2..c; T is
// the complete right chain. The defining properties are re-verified on
// every call. Requires 1 <= c <= n-1.
std::pair<Tree, Tree> tight_pair(int n, int c);

// Position of t in the deterministic enumeration order of its size class,
// in [0, catalan(n)).
BigInt tree_rank(const Tree& t);

// Inverse of tree_rank; throws std::out_of_range for rank outside
// [0, catalan(n)).
Tree tree_unrank(int n, const BigInt& rank);

// Uniform over all catalan(n) shapes, deterministic for a given seed:
// draws a uniform rank by rejection sampling and unranks it.
Tree random_tree(int n, std::uint64_t seed);

}  // namespace chainrot

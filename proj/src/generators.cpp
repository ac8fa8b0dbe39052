#include "chainrot/generators.hpp"

#include <cassert>
#include <mutex>
#include <random>
#include <stdexcept>

#include "chainrot/bounds.hpp"
#include "chainrot/decompose.hpp"

namespace chainrot {

namespace {

// Memoized Catalan table; grows on demand. Copies out under the lock so a
// concurrent growth (vector reallocation) cannot invalidate the result.
BigInt catalan_memo(int n) {
    static std::mutex mu;
    static std::vector<BigInt> table{1};  // catalan(0) = 1
    std::scoped_lock lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        // catalan(m) = catalan(m-1) * 2(2m-1) / (m+1), exact division.
        table.push_back(table.back() * 2 * (2 * m - 1) / (m + 1));
    }
    return table[n];
}

}  // namespace

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan of negative n");
    return catalan_memo(n);
}

std::uint64_t catalan_u64(int n) {
    BigInt c = catalan(n);
    if (c > BigInt(UINT64_MAX))
        throw std::overflow_error("catalan(" + std::to_string(n) +
                                  ") exceeds 64 bits");
    return c.convert_to<std::uint64_t>();
}

Tree complete_chain(int n, Side side) {
    if (n < 1)
        throw std::invalid_argument("complete_chain needs n >= 1, got " +
                                    std::to_string(n));
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    int root;
    if (side == Side::Left) {
        for (int v = 2; v <= n; ++v) left[v] = v - 1;
        root = n;
    } else {
        for (int v = 1; v < n; ++v) right[v] = v + 1;
        root = 1;
    }
    return TreeInternal::make(n, std::move(left), std::move(right), root);
}

std::pair<Tree, Tree> tight_pair(int n, int c) {
    if (n < 2 || c < 1 || c > n - 1)
        throw std::invalid_argument("tight_pair needs n >= 2 and 1 <= c <= n-1");
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    for (int v = c + 2; v <= n; ++v) left[v] = v - 1;  // spine n..c+1
    left[c + 1] = 1;
    for (int v = 1; v < c; ++v) right[v] = v + 1;      // right chain 1..c
    Tree s = TreeInternal::make(n, std::move(left), std::move(right), n);
    Tree t = complete_chain(n, Side::Right);

    // The construction is used as a bound-tightness witness, so its
    // defining properties are enforced here rather than assumed.
    if (chain_count(s, Side::Left) != c ||
        chain_lower_bound(s, t) != n - c ||
        chain_upper_bound(s, t) != n - c ||
        !equivalent_edges(s, t).empty())
        throw std::logic_error("tight_pair construction failed its contract");
    return {std::move(s), std::move(t)};
}

namespace {

// Enumeration order within a label interval: root ascending, then left
// subtree shape (major), then right subtree shape (minor). Matches the
// exhaustive enumerator.
int unrank_interval(int lo, int hi, BigInt rank, std::vector<int>& left,
                    std::vector<int>& right) {
    if (lo > hi) return 0;
    int m = hi - lo + 1;
    for (int j = 1; j <= m; ++j) {
        const BigInt lc = catalan(j - 1);
        const BigInt rc = catalan(m - j);
        BigInt block = lc * rc;
        if (rank < block) {
            int root = lo + j - 1;
            left[root] = unrank_interval(lo, root - 1, rank / rc, left, right);
            right[root] = unrank_interval(root + 1, hi, rank % rc, left, right);
            return root;
        }
        rank -= block;
    }
    throw std::logic_error("unrank walked past the last root split");
}

BigInt rank_interval(const Tree& t, int lo, int hi, int root) {
    if (lo > hi) return 0;
    int m = hi - lo + 1;
    BigInt rank = 0;
    for (int j = 1; j < root - lo + 1; ++j)
        rank += catalan(j - 1) * catalan(m - j);
    BigInt lrank = rank_interval(t, lo, root - 1, t.left(root));
    BigInt rrank = rank_interval(t, root + 1, hi, t.right(root));
    return rank + lrank * catalan(hi - root) + rrank;
}

}  // namespace

Tree tree_unrank(int n, const BigInt& rank) {
    if (n < 1)
        throw std::invalid_argument("tree_unrank needs n >= 1, got " +
                                    std::to_string(n));
    if (rank < 0 || rank >= catalan(n))
        throw std::out_of_range("rank outside [0, catalan(n))");
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    int root = unrank_interval(1, n, rank, left, right);
    return TreeInternal::make(n, std::move(left), std::move(right), root);
}

BigInt tree_rank(const Tree& t) {
    return rank_interval(t, 1, t.n(), t.root());
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_tree needs n >= 1, got " +
                                    std::to_string(n));
    const BigInt total = catalan(n);
    std::mt19937_64 rng(seed);
    unsigned bits = static_cast<unsigned>(msb(total)) + 1;
    unsigned words = (bits + 63) / 64;
    // Rejection sampling over [0, 2^bits): below-total within two expected
    // draws, unbiased.
    while (true) {
        BigInt r = 0;
        for (unsigned w = 0; w < words; ++w) r = (r << 64) | BigInt(rng());
        r >>= words * 64 - bits;
        if (r < total) return tree_unrank(n, r);
    }
}

}  // namespace chainrot

#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"

#include "chainrot/decompose.hpp"
#include "chainrot/generators.hpp"
#include "chainrot/tree.hpp"
#include "fixtures.hpp"

using namespace chainrot;

namespace {

struct Expect {
    Interval iv;
    std::pair<int, int> s_edge, t_edge;
};

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("equivalent edges are the common child-subtree intervals") {
    std::vector<EquivalentEdgePair> got =
        equivalent_edges(fx::base(), fx::after_inverse());
    std::vector<Expect> want = {
        {{1, 1}, {2, 1}, {2, 1}},   {{1, 2}, {3, 2}, {3, 2}},
        {{1, 8}, {9, 3}, {9, 3}},   {{4, 4}, {5, 4}, {5, 4}},
        {{4, 8}, {3, 7}, {3, 5}},   {{6, 6}, {5, 6}, {7, 6}},
        {{8, 8}, {7, 8}, {7, 8}},   {{10, 10}, {9, 10}, {9, 10}},
    };
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(got[i].interval == want[i].iv);
        CHECK(got[i].s_edge == want[i].s_edge);
        CHECK(got[i].t_edge == want[i].t_edge);
    }
}

TEST_CASE("a tree shares all its non-root edges with itself") {
    Tree t = fx::base();
    CHECK(equivalent_edges(t, t).size() == t.n() - 1);
    for (int n = 1; n <= 6; ++n)
        for_each_tree(n, [&](const Tree& u) {
            CHECK(static_cast<int>(equivalent_edges(u, u).size()) == n - 1);
        });
}

TEST_CASE("opposite chains share no edges") {
    for (int n = 2; n <= 8; ++n)
        CHECK(equivalent_edges(complete_chain(n, Side::Left),
                               complete_chain(n, Side::Right))
                  .empty());
}

TEST_CASE("shared intervals are laminar") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        for (const Tree& s : trees)
            for (const Tree& t : trees) {
                auto eq = equivalent_edges(s, t);
                for (std::size_t i = 0; i < eq.size(); ++i)
                    for (std::size_t j = i + 1; j < eq.size(); ++j) {
                        const Interval& a = eq[i].interval;
                        const Interval& b = eq[j].interval;
                        bool disjoint = a.hi < b.lo || b.hi < a.lo;
                        bool nested = (a.lo <= b.lo && b.hi <= a.hi) ||
                                      (b.lo <= a.lo && a.hi <= b.hi);
                        CHECK((disjoint || nested));
                    }
            }
    }
}

TEST_CASE("splitting the fixture pair yields nine parts, innermost first") {
    std::vector<SplitPair> parts = split(fx::base(), fx::after_inverse());
    REQUIRE(parts.size() == 9);

    std::vector<Interval> intervals;
    for (const SplitPair& p : parts) intervals.push_back(p.interval);
    CHECK(intervals ==
          std::vector<Interval>{{1, 1},
                                {4, 4},
                                {6, 6},
                                {8, 8},
                                {10, 10},
                                {1, 2},
                                {4, 8},
                                {1, 8},
                                {1, 10}});

    // the single part whose two sides differ
    const SplitPair& mid = parts[6];
    CHECK(to_literal(mid.s_part) == "4(2(1,3),5)");
    CHECK(to_literal(mid.t_part) == "2(1,4(3,5))");
    CHECK(mid.real_size == 2);
    REQUIRE(mid.label_map.size() == 5);
    CHECK(mid.label_map[0] == PartLabel{Interval{4, 4}});
    CHECK(mid.label_map[1] == PartLabel{5});
    CHECK(mid.label_map[2] == PartLabel{Interval{6, 6}});
    CHECK(mid.label_map[3] == PartLabel{7});
    CHECK(mid.label_map[4] == PartLabel{Interval{8, 8}});

    for (const SplitPair& p : parts) {
        if (&p == &mid) continue;
        CHECK(p.s_part == p.t_part);
    }
    CHECK(to_literal(parts[5].s_part) == "2(1,\xC2\xB7)");  // [1,2]
    CHECK(to_literal(parts[7].s_part) == "2(1,3)");         // [1,8]
    CHECK(to_literal(parts[8].s_part) == "2(1,3)");         // remainder

    // singleton parts carry one real vertex and no placeholders
    for (int i = 0; i < 5; ++i) {
        CHECK(parts[i].size() == 1);
        CHECK(parts[i].real_size == 1);
        CHECK(std::holds_alternative<int>(parts[i].label_map[0]));
    }
}

TEST_CASE("part sizes sum to n plus the shared edge count") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        for (const Tree& s : trees)
            for (const Tree& t : trees) {
                int e = static_cast<int>(equivalent_edges(s, t).size());
                auto parts = split(s, t);
                CHECK(static_cast<int>(parts.size()) == e + 1);
                int total = 0, real = 0;
                for (const SplitPair& p : parts) {
                    total += p.size();
                    real += p.real_size;
                    CHECK(p.s_part.n() == p.t_part.n());
                    CHECK(p.size() == static_cast<int>(p.label_map.size()));
                }
                CHECK(total == n + e);
                CHECK(real == n);
            }
    }
}

TEST_CASE("parts agree on placeholder positions and split no further") {
    auto check_pair = [](const Tree& s, const Tree& t) {
        for (const SplitPair& p : split(s, t)) {
            // placeholders sit at the same new labels on both sides, as leaves
            for (std::size_t i = 0; i < p.label_map.size(); ++i) {
                if (!is_placeholder(p.label_map[i])) continue;
                int v = static_cast<int>(i) + 1;
                CHECK(p.s_part.left(v) == 0);
                CHECK(p.s_part.right(v) == 0);
                CHECK(p.t_part.left(v) == 0);
                CHECK(p.t_part.right(v) == 0);
            }
            // the only shared edges left inside a part hang placeholder leaves
            for (const EquivalentEdgePair& q :
                 equivalent_edges(p.s_part, p.t_part)) {
                CHECK(q.interval.lo == q.interval.hi);
                CHECK(is_placeholder(p.label_map[q.interval.lo - 1]));
            }
        }
    };
    check_pair(fx::base(), fx::after_inverse());
    for (int n = 1; n <= 6; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        for (const Tree& s : trees)
            for (const Tree& t : trees) check_pair(s, t);
    }
}

TEST_CASE("identical trees split into single-vertex parts and a root part") {
    Tree t = fx::base();
    auto parts = split(t, t);
    CHECK(parts.size() == t.n());
    for (const SplitPair& p : parts) CHECK(p.real_size == 1);
}

}  // TEST_SUITE

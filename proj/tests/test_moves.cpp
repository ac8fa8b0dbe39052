#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "chainrot/errors.hpp"
#include "chainrot/moves.hpp"
#include "chainrot/tree.hpp"
#include "fixtures.hpp"

using namespace chainrot;

TEST_SUITE("moves") {

TEST_CASE("a direct chain rotation lifts the chain over its pivot") {
    Tree t = fx::base();
    Move m = parse_move(t, "rot([7-5],3)");
    CHECK(m.kind == MoveKind::Direct);
    CHECK(m.side == Side::Left);
    CHECK(m.top == 7);
    CHECK(m.bottom == 5);
    CHECK(m.pivot == 3);
    CHECK(is_legal(t, m));
    Tree out = apply(t, m);
    CHECK(out == fx::after_direct());
    CHECK(pointer_delta(t, out) == 3);
}

TEST_CASE("the matching inverse move restores the original tree") {
    Tree t = fx::after_direct();
    Move m = parse_move(t, "rot(3,[7-5])");
    CHECK(m.kind == MoveKind::Inverse);
    Tree out = apply(t, m);
    CHECK(out == fx::base());
    CHECK(pointer_delta(t, out) == 3);
}

TEST_CASE("an inverse move on a singleton chain") {
    Tree t = fx::base();
    Tree out = apply(t, parse_move(t, "rot(5,[7])"));
    CHECK(out == fx::after_inverse());
    CHECK(pointer_delta(t, out) == 3);
}

TEST_CASE("every application changes exactly three pointer slots") {
    for (int n = 2; n <= 6; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            for (const Move& m : enumerate_moves(t, MoveSet::CROT)) {
                Tree out = apply(t, m);
                CHECK(pointer_delta(t, out) == 3);
            }
        });
    }
}

TEST_CASE("illegal descriptors are rejected with the violated precondition") {
    Tree t = fx::base();
    auto kind_of = [&](const char* text) {
        try {
            apply(t, parse_move(t, text));
        } catch (const IllegalMove& e) {
            return e.kind();
        }
        FAIL("expected IllegalMove");
        return MoveErrorKind::BadVertex;
    };
    // 9 is not a left chain descendant of 7
    CHECK(kind_of("rot([7-9],3)L") == MoveErrorKind::BrokenChain);
    // 9 is not the parent of 7
    CHECK(kind_of("rot([7-5],9)") == MoveErrorKind::WrongPivot);
    // 4 has no left child 5: pivot of the inverse move must hang off the bottom
    CHECK(kind_of("rot(5,[4])L") == MoveErrorKind::WrongPivot);
    CHECK_THROWS_AS(parse_move(t, "rot([7-11],3)"), IllegalMove);
    CHECK_THROWS_AS(parse_move(t, "rot([0],3)"), IllegalMove);
    CHECK(is_legal(t, Move{MoveKind::Direct, Side::Left, 7, 5, 3}));
    CHECK_FALSE(is_legal(t, Move{MoveKind::Direct, Side::Right, 7, 5, 3}));
}

TEST_CASE("inversion flips the descriptor and undoes the move") {
    for (int n = 2; n <= 6; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            for (const Move& m : enumerate_moves(t, MoveSet::CROT)) {
                Move back = invert(m);
                CHECK(back.kind != m.kind);
                CHECK(back.side == m.side);
                CHECK(back.top == m.top);
                CHECK(back.bottom == m.bottom);
                CHECK(back.pivot == m.pivot);
                CHECK(invert(back) == m);
                Tree mid = apply(t, m);
                CHECK(is_legal(mid, back));
                CHECK(apply(mid, back) == t);
            }
        });
    }
}

TEST_CASE("enumerated moves are exactly the legal ones") {
    Tree t = fx::base();
    auto moves = enumerate_moves(t, MoveSet::CROT);
    std::set<std::string> texts;
    for (const Move& m : moves) {
        CHECK(is_legal(t, m));
        CHECK(texts.insert(format_move(m)).second);  // no duplicate descriptors
    }
    // the direct left moves available from top 7 are the three chain prefixes
    CHECK(texts.count("rot([7],3)L"));
    CHECK(texts.count("rot([7-5],3)L"));
    CHECK(texts.count("rot([7-4],3)L"));
    CHECK_FALSE(texts.count("rot([7-6],3)L"));  // 6 is not on the chain
}

TEST_CASE("the singleton move set is contained in the chain move set") {
    for (int n = 2; n <= 6; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            auto rot = enumerate_moves(t, MoveSet::ROT);
            auto crot = enumerate_moves(t, MoveSet::CROT);
            for (const Move& m : rot) {
                CHECK(m.top == m.bottom);
                CHECK(std::find(crot.begin(), crot.end(), m) != crot.end());
            }
        });
    }
}

TEST_CASE("a two-vertex chain has exactly two descriptors") {
    Tree t = parse_literal("2(1,.)");
    auto crot = enumerate_moves(t, MoveSet::CROT);
    REQUIRE(crot.size() == 2);
    Tree other = parse_literal("1(.,2)");
    for (const Move& m : crot) CHECK(apply(t, m) == other);
    CHECK(enumerate_moves(t, MoveSet::ROT).size() == 2);
}

TEST_CASE("move text round-trips through format and parse") {
    for (int n = 2; n <= 5; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            for (const Move& m : enumerate_moves(t, MoveSet::CROT)) {
                CHECK(resolve_move(t, parse_move_text(format_move(m))) == m);
                // without the side suffix the tree disambiguates
                CHECK(parse_move(t, format_move(m, false)) == m);
            }
        });
    }
    CHECK_THROWS_AS(parse_move_text("rot(7-5,3)"), ParseError);
    CHECK_THROWS_AS(parse_move_text("rot([7-5])"), ParseError);
    CHECK_THROWS_AS(parse_move_text("spin([7-5],3)"), ParseError);
}

TEST_CASE("chain count shifts depend on maximality and the vacated slot") {
    for (int n = 2; n <= 6; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            int l = chain_count(t, Side::Left);
            int r = chain_count(t, Side::Right);
            for (const Move& m : enumerate_moves(t, MoveSet::CROT)) {
                Tree out = apply(t, m);
                int lo = chain_count(out, Side::Left);
                int ro = chain_count(out, Side::Right);
                if (m.kind == MoveKind::Direct) {
                    bool maximal = t.child(m.bottom, m.side) == 0;
                    if (maximal) {
                        // the moved chain merges with the pivot's chain
                        CHECK(lo - l == (m.side == Side::Left ? -1 : +1));
                        CHECK(ro - r == (m.side == Side::Left ? +1 : -1));
                    } else {
                        CHECK(lo == l);
                        CHECK(ro == r);
                    }
                } else {
                    bool splits = t.child(m.pivot, opposite(m.side)) == 0;
                    if (splits) {
                        CHECK(lo - l == (m.side == Side::Left ? +1 : -1));
                        CHECK(ro - r == (m.side == Side::Left ? -1 : +1));
                    } else {
                        CHECK(lo == l);
                        CHECK(ro == r);
                    }
                }
            }
        });
    }
}

}  // TEST_SUITE

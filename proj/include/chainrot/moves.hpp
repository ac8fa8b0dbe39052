#pragma once

// Chain rotations: legality checking, application, inversion, enumeration,
// and the slot-difference counter. A chain rotation grabs a whole left or
// right chain [u-v] and re-hangs it around a pivot w in one step; the
// familiar single rotation is the singleton-chain case.

#include <optional>
#include <string>
#include <vector>

#include "chainrot/errors.hpp"
#include "chainrot/tree.hpp"

namespace chainrot {

enum class MoveKind { Direct, Inverse };

// Direct moves only cover singleton chains in the ROT set; CROT allows any
// chain length for both kinds.
enum class MoveSet { ROT, CROT };

// A chain rotation descriptor. `top`/`bottom` delimit the chain [u-v],
// `pivot` is w: the parent of `top` for direct moves, the side-child of
// `bottom` for inverse moves. Descriptors are only meaningful relative to a
// specific tree; apply() re-checks legality there.
struct Move {
    MoveKind kind = MoveKind::Direct;
    Side side = Side::Left;
    int top = 0;
    int bottom = 0;
    int pivot = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

// Textual move before side resolution: "rot([7-5],3)" gives kind/top/
// bottom/pivot; a trailing L or R fixes the side, otherwise the side is
// inferred from the labels (top != bottom) or from the tree at resolution.
struct MoveText {
    MoveKind kind = MoveKind::Direct;
    int top = 0;
    int bottom = 0;
    int pivot = 0;
    std::optional<Side> side;
};

// True when m can be applied to t.
bool is_legal(const Tree& t, const Move& m);

// Applies the chain rotation. Direct: top takes pivot's place, pivot hangs
// below the chain bottom, the bottom's old same-side subtree moves into the
// pivot's vacated slot. Inverse: the exact reversal. Throws IllegalMove when
// the chain or pivot relation does not hold in t.
Tree apply(const Tree& t, const Move& m);

// Swaps Direct and Inverse, keeping the chain and pivot. Applying a move and
// then its inversion restores the original tree.
Move invert(const Move& m);

// All legal move descriptors on t. CROT walks every chain suffix; ROT keeps
// only singleton chains. Distinct descriptors may produce equal trees; no
// deduplication happens here.
std::vector<Move> enumerate_moves(const Tree& t, MoveSet set);

// Number of differing (vertex, side) child slots between two same-size
// trees, plus one when the roots differ. Every legal move scores exactly 3.
int pointer_delta(const Tree& a, const Tree& b);

// "rot([7-5],3)" for direct, "rot(3,[7-5])" for inverse; with_side appends
// 'L' or 'R' so scripts stay unambiguous without the tree.
std::string format_move(const Move& m, bool with_side = true);

// Parses the rot(...) syntax, accepting an optional trailing side letter.
MoveText parse_move_text(const std::string& text);

// Fixes the side of a parsed move against a concrete tree. Multi-vertex
// chains imply their side from the label order; singletons consult the
// pivot relation in t.
Move resolve_move(const Tree& t, const MoveText& mt);

inline Move parse_move(const Tree& t, const std::string& text) {
    return resolve_move(t, parse_move_text(text));
}

}  // namespace chainrot

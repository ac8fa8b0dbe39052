#pragma once

// Constructive transformation scripts and closed-form distance bounds.
// collapse_left repeatedly merges a deepest maximal left chain into its
// parent's chain until one chain remains; composing a forward collapse of s
// with a reversed, inverted collapse of t yields an explicit script s -> t
// whose length realizes the chain-count upper bound.

#include <optional>
#include <string>
#include <vector>

#include "chainrot/moves.hpp"
#include "chainrot/tree.hpp"

namespace chainrot {

// An ordered move sequence transforming the tree with shape `start` into
// the tree with shape `end`; replay from `start` must reproduce `end`.
struct Script {
    int n = 0;
    ShapeKey start;
    ShapeKey end;
    std::vector<Move> moves;

    int length() const { return static_cast<int>(moves.size()); }
};

// Merges maximal left (right) chains until the complete left (right) chain
// remains. Chain selection is deterministic: deepest chain top first, ties
// by smallest label. The script length is always the initial chain count
// minus one, each move lowering it by exactly one.
Script collapse_left(const Tree& y);
Script collapse_right(const Tree& y);
Script collapse(const Tree& y, Side side);

// Explicit script from s to t through a complete chain, using whichever
// side gives the shorter composition (ties prefer left). Its length is
// exactly min(L_s + L_t - 2, R_s + R_t - 2).
Script transform_script(const Tree& s, const Tree& t);

// min(L_s + L_t - 2, R_s + R_t - 2); never exceeds n - 1 because each
// tree's two chain counts sum to n + 1.
int chain_upper_bound(const Tree& s, const Tree& t);

// |L_s - L_t|, which equals |R_s - R_t|: one move shifts a chain count by
// at most one, so the gap is a floor on the chain-rotation distance.
int chain_lower_bound(const Tree& s, const Tree& t);

// n - e - 1 where e counts equivalent edge pairs: a floor on the CLASSICAL
// single-rotation distance, not on the chain-rotation distance. Sound as
// stated only because e counts every shared child-subtree interval.
int rotation_lower_bound(const Tree& s, const Tree& t);

// The same floor itemized per split part as (real vertex count - 1); the
// terms sum to n - e - 1 and each is the e=0 floor of its own part.
std::vector<int> rotation_lower_bound_terms(const Tree& s, const Tree& t);

struct VerifyResult {
    bool ok = false;
    int failed_index = -1;  // first bad move, or -1 when the endpoint differs
    std::string message;
};

// Replays the script from s, checking each move's legality, and compares
// the result with t. Also rejects scripts whose recorded start/end shapes
// disagree with s and t.
VerifyResult verify_script(const Tree& s, const Script& script, const Tree& t);

struct DistanceReport {
    int n = 0;
    int e = 0;       // equivalent edge pairs
    int lower = 0;   // chain-count floor
    int upper = 0;   // chain-count ceiling
    std::optional<int> exact;
    std::optional<Script> script;
};

// Bounds plus the constructive witness script; no exact search.
DistanceReport bounds_report(const Tree& s, const Tree& t);

// Script text: header "n=<n> start=<bits> end=<bits>", then one move per
// line with its side suffix.
std::string script_to_text(const Script& script);
Script script_from_text(const std::string& text);

}  // namespace chainrot

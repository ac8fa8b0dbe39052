// Shared fixtures: one 10-vertex tree with a rich chain structure, plus the
// two trees reachable from it by a single chain rotation either way.
#pragma once

#include "chainrot/tree.hpp"

namespace fx {

// L = 5 left chains, R = 6 right chains.
inline const char* kBase = "9(3(2(1,.),7(5(4,6),8)),10)";
// kBase after the inverse move rot(5,[7]).
inline const char* kAfterInverse = "9(3(2(1,.),5(4,7(6,8))),10)";
// kBase after the direct move rot([7-5],3).
inline const char* kAfterDirect = "9(7(5(3(2(1,.),4),6),8),10)";

inline chainrot::Tree base() { return chainrot::parse_literal(kBase); }
inline chainrot::Tree after_inverse() {
    return chainrot::parse_literal(kAfterInverse);
}
inline chainrot::Tree after_direct() {
    return chainrot::parse_literal(kAfterDirect);
}

}  // namespace fx

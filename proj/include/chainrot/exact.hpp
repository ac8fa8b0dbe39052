#pragma once

// Exhaustive shortest-path oracle over the move graph on all tree shapes of
// a given size: exact distances with witness scripts, single-source sweeps,
// a full-space property audit, and graph diameters. Everything here is
// desk-scale by design; size caps refuse Catalan-sized blowups explicitly.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "chainrot/bounds.hpp"
#include "chainrot/moves.hpp"
#include "chainrot/tree.hpp"

namespace chainrot {

// Size caps are configuration, not constants. 0 threads means one worker
// per hardware thread.
struct ExactConfig {
    int max_n = 12;            // distance (bidirectional search)
    int max_n_sssp_crot = 11;  // full-space sweep, chain moves
    int max_n_sssp_rot = 12;   // full-space sweep, single rotations
    int max_n_audit = 8;
    int max_n_diameter = 10;
    int max_n_dot = 7;
    int threads = 0;
};

struct DistanceResult {
    int distance = 0;
    Script script;  // one optimal witness; replay-verified before returning
};

// Exact shortest-path distance in the undirected move graph (every move
// inverts, so edges are symmetric), by bidirectional breadth-first search
// over shape-deduplicated frontiers. The distance is deterministic; the
// witness script is one shortest path, not a canonical one.
DistanceResult distance(const Tree& s, const Tree& t, MoveSet set,
                        const ExactConfig& cfg = {});

// Distances from s to every shape of its size. Throws if the sweep fails to
// reach all catalan(n) shapes (the move graph is connected, so that would
// be an internal error).
std::unordered_map<ShapeKey, int> sssp(const Tree& s, MoveSet set,
                                       const ExactConfig& cfg = {});

// Materialized move graph: shapes indexed in enumeration order, adjacency
// in CSR form with duplicate-target edges collapsed.
struct MoveGraph {
    int n = 0;
    MoveSet set = MoveSet::CROT;
    std::vector<ShapeKey> keys;                    // rank -> shape
    std::unordered_map<ShapeKey, int> index;       // shape -> rank
    std::vector<std::uint32_t> offsets;            // CSR, size keys.size()+1
    std::vector<std::uint32_t> edges;

    int size() const { return static_cast<int>(keys.size()); }
};

MoveGraph build_move_graph(int n, MoveSet set, const ExactConfig& cfg = {});

// Undirected DOT rendering of the move graph, capped at small n.
std::string move_graph_dot(const MoveGraph& g, const ExactConfig& cfg = {});

// One pair whose whole-pair distance differs from the sum over its split
// parts (shapes serialized for reporting).
struct AdditivityRecord {
    ShapeKey s;
    ShapeKey t;
    int e = 0;
    int whole = 0;
    int split_sum = 0;
};

// Full-space sweep over all ordered shape pairs of size n, checking every
// closed-form bound against the exact oracle and measuring (never
// asserting) whether the chain distance is additive across equivalent-edge
// splits. Violations carry the offending pair verbatim.
struct AuditReport {
    int n = 0;
    long long shapes = 0;         // catalan(n)
    long long ordered_pairs = 0;  // shapes squared
    std::vector<std::string> violations;

    long long bound_checks = 0;      // lb <= C <= ub <= n-1
    long long symmetry_checks = 0;   // C(s,t) == C(t,s)
    long long rot_floor_checks = 0;  // C <= D everywhere; D >= n-1 when e = 0
    long long triangle_checks = 0;   // sampled triples

    long long additivity_pairs = 0;  // ordered pairs with e >= 1
    long long additive = 0;
    long long non_additive = 0;
    std::vector<AdditivityRecord> mismatches;
};

AuditReport audit(int n, const ExactConfig& cfg = {});

struct DiameterResult {
    int n = 0;
    MoveSet set = MoveSet::CROT;
    int value = 0;
    ShapeKey a;
    ShapeKey b;
};

// Largest exact distance over all shape pairs, with a witness pair chosen
// deterministically (smallest source rank, then smallest target rank).
DiameterResult diameter(int n, MoveSet set, const ExactConfig& cfg = {});

}  // namespace chainrot

#pragma once

// JSON and DOT serialization for every public value type, plus the
// auto-detecting tree parser. All JSON is emitted with lexicographically
// sorted keys so golden files stay stable.

#include <string>
#include <vector>

#include "json.hpp"

#include "chainrot/bounds.hpp"
#include "chainrot/decompose.hpp"
#include "chainrot/exact.hpp"
#include "chainrot/tree.hpp"

namespace chainrot {

// {"n": n, "root": r, "left": [...], "right": [...]} with 0 for absent
// children; arrays are indexed by vertex - 1.
nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

// Accepts a JSON object, a 0/1 shape string, or a v(L,R) literal.
Tree parse_tree(const std::string& text);

// Chain inventory: counts and per-chain details for both sides.
nlohmann::json chains_to_json(const Tree& t);

// {"n":…, "start":…, "end":…, "length":…, "moves":["rot([6],5)L", …]}
nlohmann::json script_to_json(const Script& s);
Script script_from_json(const nlohmann::json& j);

nlohmann::json equivalent_edges_to_json(const std::vector<EquivalentEdgePair>& eq);
nlohmann::json split_to_json(const std::vector<SplitPair>& parts);
nlohmann::json distance_report_to_json(const DistanceReport& r);
nlohmann::json audit_report_to_json(const AuditReport& r);
nlohmann::json diameter_to_json(const DiameterResult& r);

// One tree as a DOT digraph, left edges marked "L", right edges "R".
std::string tree_to_dot(const Tree& t);

}  // namespace chainrot

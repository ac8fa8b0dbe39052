#include "chainrot/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chainrot {

using nlohmann::json;

json tree_to_json(const Tree& t) {
    std::vector<int> left(t.n()), right(t.n());
    for (int v = 1; v <= t.n(); ++v) {
        left[v - 1] = t.left(v);
        right[v - 1] = t.right(v);
    }
    return json{{"n", t.n()},
                {"root", t.root()},
                {"left", left},
                {"right", right}};
}

Tree tree_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("tree JSON must be an object with n/root/left/right");
    for (const char* key : {"n", "root", "left", "right"})
        if (!j.contains(key))
            throw ParseError(std::string("tree JSON misses field \"") + key +
                             "\"");
    int n = j.at("n").get<int>();
    std::vector<int> left = j.at("left").get<std::vector<int>>();
    std::vector<int> right = j.at("right").get<std::vector<int>>();
    return Tree::build(n, left, right, j.at("root").get<int>());
}

Tree parse_tree(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty tree input");
    std::size_t e = text.find_last_not_of(" \t\r\n");
    std::string body = text.substr(b, e - b + 1);
    if (body.front() == '{') {
        json j = json::parse(body, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed tree JSON");
        return tree_from_json(j);
    }
    if (body.find_first_not_of("01") == std::string::npos)
        return parse_shape(body);
    return parse_literal(body);
}

namespace {

json chain_to_json(const Chain& c) {
    return json{{"side", c.side == Side::Left ? "left" : "right"},
                {"top", c.top},
                {"bottom", c.bottom},
                {"vertices", c.vertices},
                {"notation", c.notation()}};
}

}  // namespace

json chains_to_json(const Tree& t) {
    json left = json::array(), right = json::array();
    for (const Chain& c : maximal_chains(t, Side::Left))
        left.push_back(chain_to_json(c));
    for (const Chain& c : maximal_chains(t, Side::Right))
        right.push_back(chain_to_json(c));
    return json{{"n", t.n()},
                {"L", chain_count(t, Side::Left)},
                {"R", chain_count(t, Side::Right)},
                {"left", left},
                {"right", right}};
}

json script_to_json(const Script& s) {
    json moves = json::array();
    for (const Move& m : s.moves) moves.push_back(format_move(m, true));
    return json{{"n", s.n},
                {"start", s.start.bits},
                {"end", s.end.bits},
                {"length", s.length()},
                {"moves", moves}};
}

Script script_from_json(const json& j) {
    Script s;
    s.n = j.at("n").get<int>();
    s.start.bits = j.at("start").get<std::string>();
    s.end.bits = j.at("end").get<std::string>();
    for (const auto& mv : j.at("moves")) {
        MoveText mt = parse_move_text(mv.get<std::string>());
        if (!mt.side)
            throw ParseError("script moves need an L or R side suffix: \"" +
                             mv.get<std::string>() + "\"");
        s.moves.push_back(Move{mt.kind, *mt.side, mt.top, mt.bottom, mt.pivot});
    }
    return s;
}

namespace {

json interval_to_json(const Interval& iv) {
    return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

}  // namespace

json equivalent_edges_to_json(const std::vector<EquivalentEdgePair>& eq) {
    json out = json::array();
    for (const EquivalentEdgePair& p : eq)
        out.push_back(json{{"interval", interval_to_json(p.interval)},
                           {"s_edge", {p.s_edge.first, p.s_edge.second}},
                           {"t_edge", {p.t_edge.first, p.t_edge.second}}});
    return out;
}

json split_to_json(const std::vector<SplitPair>& parts) {
    json out = json::array();
    for (const SplitPair& p : parts) {
        json labels = json::array();
        for (const PartLabel& l : p.label_map) {
            if (is_placeholder(l))
                labels.push_back(interval_to_json(std::get<Interval>(l)));
            else
                labels.push_back(std::get<int>(l));
        }
        out.push_back(json{{"interval", interval_to_json(p.interval)},
                           {"s_part", tree_to_json(p.s_part)},
                           {"t_part", tree_to_json(p.t_part)},
                           {"label_map", labels}});
    }
    return out;
}

json distance_report_to_json(const DistanceReport& r) {
    json out{{"n", r.n}, {"e", r.e}, {"lower", r.lower}, {"upper", r.upper}};
    if (r.exact) out["exact"] = *r.exact;
    if (r.script) out["script"] = script_to_json(*r.script);
    return out;
}

json audit_report_to_json(const AuditReport& r) {
    json mismatches = json::array();
    for (const AdditivityRecord& m : r.mismatches)
        mismatches.push_back(json{{"s", m.s.bits},
                                  {"t", m.t.bits},
                                  {"e", m.e},
                                  {"whole", m.whole},
                                  {"split_sum", m.split_sum}});
    return json{{"n", r.n},
                {"shapes", r.shapes},
                {"ordered_pairs", r.ordered_pairs},
                {"violations", r.violations},
                {"checks",
                 {{"bounds", r.bound_checks},
                  {"symmetry", r.symmetry_checks},
                  {"rotation_floor", r.rot_floor_checks},
                  {"triangle_sampled", r.triangle_checks}}},
                {"additivity",
                 {{"pairs", r.additivity_pairs},
                  {"additive", r.additive},
                  {"non_additive", r.non_additive},
                  {"mismatches", mismatches}}}};
}

json diameter_to_json(const DiameterResult& r) {
    return json{{"n", r.n},
                {"moves", r.set == MoveSet::CROT ? "crot" : "rot"},
                {"diameter", r.value},
                {"witness", {{"s", r.a.bits}, {"t", r.b.bits}}}};
}

std::string tree_to_dot(const Tree& t) {
    std::ostringstream os;
    os << "digraph tree {\n  node [shape=circle];\n";
    for (int v = 1; v <= t.n(); ++v) os << "  v" << v << " [label=\"" << v
                                        << "\"];\n";
    for (int v = 1; v <= t.n(); ++v) {
        if (t.left(v))
            os << "  v" << v << " -> v" << t.left(v) << " [label=\"L\"];\n";
        if (t.right(v))
            os << "  v" << v << " -> v" << t.right(v) << " [label=\"R\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace chainrot

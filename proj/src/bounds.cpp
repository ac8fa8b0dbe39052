#include "chainrot/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "chainrot/decompose.hpp"

namespace chainrot {

namespace {

void require_same_n(const Tree& s, const Tree& t, const char* what) {
    if (s.n() != t.n())
        throw std::invalid_argument(std::string(what) +
                                    " needs trees of equal size, got " +
                                    std::to_string(s.n()) + " and " +
                                    std::to_string(t.n()));
}

}  // namespace

Script collapse(const Tree& y, Side side) {
    Script out;
    out.n = y.n();
    out.start = shape_key(y);
    Tree cur = y;
    int chains = chain_count(cur, side);
    while (chains > 1) {
        // maximal_chains is depth-sorted, so the front chain is the pick.
        // Its top cannot be the root (the root's chain top has depth 0 and
        // at least one other chain exists), hence maximality makes the top
        // an opposite-side child and the direct move below is legal.
        std::vector<Chain> mc = maximal_chains(cur, side);
        const Chain& pick = mc.front();
        Move m{MoveKind::Direct, side, pick.top, pick.bottom, cur.parent(pick.top)};
        cur = apply(cur, m);
        out.moves.push_back(m);
        --chains;
        assert(chain_count(cur, side) == chains);
    }
    out.end = shape_key(cur);
    return out;
}

Script collapse_left(const Tree& y) { return collapse(y, Side::Left); }
Script collapse_right(const Tree& y) { return collapse(y, Side::Right); }

namespace {

Script compose_through_chain(const Tree& s, const Tree& t, Side side) {
    Script fwd = collapse(s, side);
    Script back = collapse(t, side);
    Script out;
    out.n = s.n();
    out.start = fwd.start;
    out.end = back.start;
    out.moves = std::move(fwd.moves);
    for (auto it = back.moves.rbegin(); it != back.moves.rend(); ++it)
        out.moves.push_back(invert(*it));
    return out;
}

}  // namespace

Script transform_script(const Tree& s, const Tree& t) {
    require_same_n(s, t, "transform_script");
    Script via_left = compose_through_chain(s, t, Side::Left);
    Script via_right = compose_through_chain(s, t, Side::Right);
    return via_right.length() < via_left.length() ? std::move(via_right)
                                                  : std::move(via_left);
}

int chain_upper_bound(const Tree& s, const Tree& t) {
    require_same_n(s, t, "chain_upper_bound");
    int via_left = chain_count(s, Side::Left) + chain_count(t, Side::Left) - 2;
    int via_right = chain_count(s, Side::Right) + chain_count(t, Side::Right) - 2;
    int bound = std::min(via_left, via_right);
    // The two sums total 2n - 2, so their minimum is at most n - 1.
    assert(bound <= s.n() - 1);
    return bound;
}

int chain_lower_bound(const Tree& s, const Tree& t) {
    require_same_n(s, t, "chain_lower_bound");
    int gap = chain_count(s, Side::Left) - chain_count(t, Side::Left);
    return gap < 0 ? -gap : gap;
}

int rotation_lower_bound(const Tree& s, const Tree& t) {
    require_same_n(s, t, "rotation_lower_bound");
    int e = static_cast<int>(equivalent_edges(s, t).size());
    return s.n() - e - 1;
}

std::vector<int> rotation_lower_bound_terms(const Tree& s, const Tree& t) {
    std::vector<int> terms;
    for (const SplitPair& part : split(s, t))
        terms.push_back(part.real_size - 1);
    return terms;
}

VerifyResult verify_script(const Tree& s, const Script& script, const Tree& t) {
    if (script.n != s.n() || s.n() != t.n())
        return {false, -1, "size mismatch between script and trees"};
    if (!script.start.bits.empty() && script.start != shape_key(s))
        return {false, -1, "script start shape differs from the source tree"};
    if (!script.end.bits.empty() && script.end != shape_key(t))
        return {false, -1, "script end shape differs from the target tree"};
    Tree cur = s;
    for (int i = 0; i < script.length(); ++i) {
        const Move& m = script.moves[i];
        if (!is_legal(cur, m))
            return {false, i,
                    "move " + std::to_string(i) + " (" + format_move(m) +
                        ") is illegal at its position"};
        cur = apply(cur, m);
    }
    if (!(cur == t))
        return {false, -1, "replay ends at " + to_literal(cur) + ", expected " +
                               to_literal(t)};
    return {true, -1, ""};
}

DistanceReport bounds_report(const Tree& s, const Tree& t) {
    require_same_n(s, t, "bounds_report");
    DistanceReport r;
    r.n = s.n();
    r.e = static_cast<int>(equivalent_edges(s, t).size());
    r.lower = chain_lower_bound(s, t);
    r.upper = chain_upper_bound(s, t);
    r.script = transform_script(s, t);
    return r;
}

std::string script_to_text(const Script& script) {
    std::ostringstream os;
    os << "n=" << script.n << " start=" << script.start.bits
       << " end=" << script.end.bits << "\n";
    for (const Move& m : script.moves) os << format_move(m, true) << "\n";
    return os.str();
}

Script script_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty script");
    Script out;
    {
        std::istringstream hs(line);
        std::string field;
        bool got_n = false, got_start = false, got_end = false;
        while (hs >> field) {
            if (field.rfind("n=", 0) == 0) {
                out.n = std::stoi(field.substr(2));
                got_n = true;
            } else if (field.rfind("start=", 0) == 0) {
                out.start.bits = field.substr(6);
                got_start = true;
            } else if (field.rfind("end=", 0) == 0) {
                out.end.bits = field.substr(4);
                got_end = true;
            } else {
                throw ParseError("unexpected script header field \"" + field + "\"");
            }
        }
        if (!got_n || !got_start || !got_end)
            throw ParseError("script header needs n=, start= and end=");
    }
    // Header shapes must parse; replay legality is checked separately.
    Tree cur = parse_shape(out.start.bits);
    parse_shape(out.end.bits);
    if (cur.n() != out.n)
        throw ParseError("script header n disagrees with start shape");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        MoveText mt = parse_move_text(line);
        if (!mt.side)
            throw ParseError("script moves need an L or R side suffix: \"" +
                             line + "\"");
        out.moves.push_back(Move{mt.kind, *mt.side, mt.top, mt.bottom, mt.pivot});
    }
    return out;
}

}  // namespace chainrot

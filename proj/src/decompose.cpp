#include "chainrot/decompose.hpp"

#include <algorithm>
#include <stdexcept>

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

std::vector<EquivalentEdgePair> equivalent_edges(const Tree& s, const Tree& t) {
    require_same_n(s, t, "equivalent_edges");
    int n = s.n();
    // Child-subtree intervals of s, bucketed by low endpoint. Intervals
    // within one tree are laminar, so a bucket holds at most height-many
    // entries and the whole intersection stays near-linear.
    std::vector<Interval> si = s.subtree_intervals();
    std::vector<Interval> ti = t.subtree_intervals();
    std::vector<std::vector<std::pair<int, int>>> by_lo(n + 1);  // (hi, child)
    for (int v = 1; v <= n; ++v) {
        if (s.is_root(v)) continue;
        by_lo[si[v].lo].push_back({si[v].hi, v});
    }
    std::vector<EquivalentEdgePair> out;
    for (int v = 1; v <= n; ++v) {
        if (t.is_root(v)) continue;
        for (auto [hi, child] : by_lo[ti[v].lo]) {
            if (hi == ti[v].hi) {
                out.push_back(EquivalentEdgePair{ti[v],
                                                 {s.parent(child), child},
                                                 {t.parent(v), v}});
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const EquivalentEdgePair& a, const EquivalentEdgePair& b) {
                  return a.interval < b.interval;
              });
    return out;
}

std::vector<SplitPair> split(const Tree& s, const Tree& t) {
    require_same_n(s, t, "split");
    int n = s.n();
    std::vector<EquivalentEdgePair> eq = equivalent_edges(s, t);
    int e = static_cast<int>(eq.size());

    // One part per equivalent interval plus the whole-tree remainder at
    // index e. The laminar parent of a part is its smallest strict encloser.
    int parts = e + 1;
    std::vector<Interval> part_iv(parts);
    std::vector<int> s_root(parts), t_root(parts);
    for (int i = 0; i < e; ++i) {
        part_iv[i] = eq[i].interval;
        s_root[i] = eq[i].s_edge.second;
        t_root[i] = eq[i].t_edge.second;
    }
    part_iv[e] = Interval{1, n};
    s_root[e] = s.root();
    t_root[e] = t.root();

    std::vector<int> parent_part(parts, e);
    for (int i = 0; i < e; ++i) {
        int best = e;
        for (int j = 0; j < e; ++j) {
            if (j != i && part_iv[j].contains(part_iv[i]) &&
                part_iv[j] != part_iv[i] && part_iv[best].contains(part_iv[j]))
                best = j;
        }
        parent_part[i] = best;
    }
    std::vector<std::vector<int>> children_of(parts);
    for (int i = 0; i < e; ++i) children_of[parent_part[i]].push_back(i);

    // Owning part of each original vertex: smallest interval covering it.
    // A part's subtree root is always owned by that part, because nested
    // equivalent intervals lie strictly below it and exclude its label.
    std::vector<int> owner(n + 1, e);
    for (int v = 1; v <= n; ++v) {
        for (int i = 0; i < e; ++i) {
            if (part_iv[i].lo <= v && v <= part_iv[i].hi &&
                part_iv[owner[v]].contains(part_iv[i]))
                owner[v] = i;
        }
    }

    // Emission order: innermost-first by size, ties by interval start,
    // remainder last.
    std::vector<int> order(parts);
    for (int i = 0; i < parts; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (a == parts - 1) return false;
        if (b == parts - 1) return true;
        if (part_iv[a].size() != part_iv[b].size())
            return part_iv[a].size() < part_iv[b].size();
        return part_iv[a].lo < part_iv[b].lo;
    });

    std::vector<Interval> ivs = s.subtree_intervals();
    std::vector<Interval> ivt = t.subtree_intervals();
    std::vector<SplitPair> out;
    out.reserve(parts);
    for (int which : order) {
        // Members: real vertices owned by this part plus one placeholder
        // leaf per laminar child, ordered by original position. A
        // placeholder sits where its interval starts, which keeps the new
        // labeling order-preserving.
        std::vector<std::pair<int, PartLabel>> members;  // (position, label)
        for (int v = 1; v <= n; ++v)
            if (owner[v] == which) members.push_back({v, PartLabel{v}});
        for (int c : children_of[which])
            members.push_back({part_iv[c].lo, PartLabel{part_iv[c]}});
        std::sort(members.begin(), members.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        int m = static_cast<int>(members.size());
        std::vector<int> new_label_at(n + 1, 0);
        std::vector<PartLabel> labels;
        labels.reserve(m);
        int real = 0;
        for (int i = 0; i < m; ++i) {
            new_label_at[members[i].first] = i + 1;
            labels.push_back(members[i].second);
            if (!is_placeholder(members[i].second)) ++real;
        }

        auto build_side = [&](const Tree& tr, const std::vector<Interval>& iv,
                              int root_vertex) {
            std::vector<int> left(m, 0), right(m, 0);
            std::vector<int> stack{root_vertex};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (owner[v] != which) continue;  // placeholder: children cut
                for (Side sd : {Side::Left, Side::Right}) {
                    int c = tr.child(v, sd);
                    if (c == 0) continue;
                    int ckey = owner[c] == which ? c : iv[c].lo;
                    (sd == Side::Left ? left : right)[new_label_at[v] - 1] =
                        new_label_at[ckey];
                    stack.push_back(c);
                }
            }
            int rkey = owner[root_vertex] == which ? root_vertex
                                                   : iv[root_vertex].lo;
            return Tree::build(m, left, right, new_label_at[rkey]);
        };

        out.push_back(SplitPair{part_iv[which], build_side(s, ivs, s_root[which]),
                                build_side(t, ivt, t_root[which]),
                                std::move(labels), real});
    }
    return out;
}

}  // namespace chainrot

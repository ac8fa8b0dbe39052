// Acceptance gate. Runs every shipping criterion end to end and prints one
// [PASS]/[FAIL] line per criterion; exits nonzero if any fail. Criteria with
// a wall-clock budget enforce it here rather than trusting the harness.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chainrot/bounds.hpp"
#include "chainrot/decompose.hpp"
#include "chainrot/exact.hpp"
#include "chainrot/generators.hpp"
#include "chainrot/json_io.hpp"
#include "chainrot/moves.hpp"
#include "chainrot/tree.hpp"

using namespace chainrot;
using nlohmann::json;

namespace {

const char* kBase = "9(3(2(1,.),7(5(4,6),8)),10)";
const char* kAfterInverse = "9(3(2(1,.),5(4,7(6,8))),10)";
const char* kAfterDirect = "9(7(5(3(2(1,.),4),6),8),10)";

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// Cached so the additivity report does not redo the n=8 sweep.
std::optional<AuditReport> g_audit8;

// C1: the two chain tallies always sum to n+1, and the pointer-count formula
// agrees with an explicit walk of the maximal chains.
std::string c1_chain_identity() {
    long long checked = 0;
    for (int n = 1; n <= 8; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            int l = chain_count(t, Side::Left);
            int r = chain_count(t, Side::Right);
            require(l + r == n + 1, "tally sum broke at n=" + std::to_string(n));
            require(static_cast<int>(maximal_chains(t, Side::Left).size()) == l,
                    "left tally mismatch at n=" + std::to_string(n));
            require(static_cast<int>(maximal_chains(t, Side::Right).size()) == r,
                    "right tally mismatch at n=" + std::to_string(n));
            ++checked;
        });
    }
    const int sizes[] = {16, 32, 64};
    for (int k = 0; k < 1000; ++k) {
        int n = sizes[k % 3];
        Tree t = random_tree(n, 811800 + k);
        int l = chain_count(t, Side::Left);
        int r = chain_count(t, Side::Right);
        require(l + r == n + 1, "tally sum broke on a random tree");
        require(static_cast<int>(maximal_chains(t, Side::Left).size()) == l &&
                    static_cast<int>(maximal_chains(t, Side::Right).size()) == r,
                "tally mismatch on a random tree");
        ++checked;
    }
    return std::to_string(checked) + " trees";
}

// C2: every enumerated move applies, moves exactly three pointers, and lands
// on a tree that revalidates from scratch.
std::string c2_moves_well_formed() {
    long long applied = 0;
    for (int n = 1; n <= 7; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            for (MoveSet set : {MoveSet::ROT, MoveSet::CROT}) {
                for (const Move& m : enumerate_moves(t, set)) {
                    require(is_legal(t, m), "enumerated move not legal");
                    Tree out = apply(t, m);
                    require(pointer_delta(t, out) == 3,
                            "move changed a slot count other than 3");
                    std::vector<int> left(n), right(n);
                    for (int v = 1; v <= n; ++v) {
                        left[v - 1] = out.left(v);
                        right[v - 1] = out.right(v);
                    }
                    Tree rebuilt = Tree::build(n, left, right, out.root());
                    require(rebuilt == out, "post-move tree failed revalidation");
                    ++applied;
                }
            }
        });
    }
    return std::to_string(applied) + " applications";
}

// C3: the worked ten-vertex example behaves exactly as documented.
std::string c3_worked_example() {
    Tree t = parse_literal(kBase);
    Tree t_prime = parse_literal(kAfterInverse);
    Tree t_dprime = parse_literal(kAfterDirect);

    require(chain_count(t, Side::Left) == 5, "left tally of the example");
    require(chain_count(t, Side::Right) == 6, "right tally of the example");

    require(apply(t, parse_move(t, "rot([7-5],3)")) == t_dprime,
            "direct move did not land on the documented tree");
    require(apply(t_dprime, parse_move(t_dprime, "rot(3,[7-5])")) == t,
            "inverse move did not restore the original");

    std::vector<EquivalentEdgePair> eq = equivalent_edges(t, t_prime);
    bool documented_pair = false;
    for (const EquivalentEdgePair& p : eq)
        documented_pair |= p.interval == Interval{4, 8} &&
                           p.s_edge == std::pair<int, int>{3, 7} &&
                           p.t_edge == std::pair<int, int>{3, 5};
    require(documented_pair, "the [4,8] shared edge is missing");
    require(eq.size() == 8, "full shared-edge set changed size");

    require(distance(t, t_dprime, MoveSet::CROT).distance == 1,
            "exact distance of the example pair");
    return "fixture pair verified";
}

// C4: the constructive script verifies for every pair and its length matches
// the closed form; per-side collapses use one move per merged chain.
std::string c4_transform() {
    long long pairs = 0;
    for (int n = 1; n <= 8; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        for (const Tree& s : trees) {
            require(collapse_left(s).length() == chain_count(s, Side::Left) - 1,
                    "left collapse length");
            require(collapse_right(s).length() ==
                        chain_count(s, Side::Right) - 1,
                    "right collapse length");
        }
        for (const Tree& s : trees)
            for (const Tree& t : trees) {
                Script sc = transform_script(s, t);
                require(sc.length() == chain_upper_bound(s, t),
                        "script length differs from the closed form");
                require(verify_script(s, sc, t).ok, "script failed to verify");
                ++pairs;
            }
    }
    for (int k = 0; k < 500; ++k) {
        Tree s = random_tree(20, 440000 + 2 * k);
        Tree t = random_tree(20, 440001 + 2 * k);
        Script sc = transform_script(s, t);
        require(sc.length() == chain_upper_bound(s, t),
                "script length differs from the closed form at n=20");
        require(verify_script(s, sc, t).ok, "n=20 script failed to verify");
        ++pairs;
    }
    return std::to_string(pairs) + " pairs";
}

// C5: the exhaustive n=8 audit reports no violations.
std::string c5_audit() {
    g_audit8 = audit(8);
    const AuditReport& r = *g_audit8;
    for (const std::string& v : r.violations) std::cerr << "  " << v << "\n";
    require(r.violations.empty(),
            std::to_string(r.violations.size()) + " violations");
    require(r.shapes == 1430, "shape count");
    require(r.bound_checks > 0 && r.symmetry_checks > 0 &&
                r.rot_floor_checks > 0 && r.triangle_checks > 0,
            "a check family did not run");
    std::ostringstream os;
    os << r.ordered_pairs << " pairs, " << r.bound_checks << " bound checks";
    return os.str();
}

// C6: the generated tight pairs really pin lower and upper bounds to n-c and
// the exact distance lands on the same value; opposite chains sit n-1 apart.
std::string c6_tight_pairs() {
    int verified = 0;
    for (int n = 5; n <= 10; ++n) {
        for (int c = 1; c <= n - 1; ++c) {
            auto [s, t] = tight_pair(n, c);
            require(equivalent_edges(s, t).empty(), "tight pair shares an edge");
            require(chain_lower_bound(s, t) == n - c, "tight pair lower bound");
            require(chain_upper_bound(s, t) == n - c, "tight pair upper bound");
            require(distance(s, t, MoveSet::CROT).distance == n - c,
                    "tight pair exact distance");
            ++verified;
        }
        require(distance(complete_chain(n, Side::Left),
                         complete_chain(n, Side::Right), MoveSet::CROT)
                        .distance == n - 1,
                "opposite chains distance");
    }
    return std::to_string(verified) + " pairs at sizes 5..10";
}

// C7: applying a move and its inverse descriptor is the identity, and
// inversion is an involution on descriptors.
std::string c7_inversion() {
    long long checked = 0;
    for (int n = 2; n <= 6; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            for (const Move& m : enumerate_moves(t, MoveSet::CROT)) {
                Move back = invert(m);
                require(invert(back) == m, "inversion is not an involution");
                Tree mid = apply(t, m);
                require(apply(mid, back) == t, "inverse failed to undo");
                ++checked;
            }
        });
    }
    return std::to_string(checked) + " round trips";
}

// C8: singleton-move diameters for n <= 10, with the chain floor and the
// chain-move distance as cross-checks on each witness pair.
std::string c8_diameter() {
    std::ostringstream os;
    for (int n = 2; n <= 10; ++n) {
        DiameterResult d = diameter(n, MoveSet::ROT);
        Tree a = parse_shape(d.a.bits);
        Tree b = parse_shape(d.b.bits);
        require(distance(a, b, MoveSet::CROT).distance <= d.value,
                "chain moves beat singleton moves nowhere");
        Tree l = complete_chain(n, Side::Left);
        Tree r = complete_chain(n, Side::Right);
        require(distance(l, r, MoveSet::ROT).distance >= n - 1,
                "opposite chains sit below the floor");
        os << (n > 2 ? " " : "") << "D(" << n << ")=" << d.value;
    }
    return os.str();
}

// C9: additivity of the distance across split parts is measured over every
// pair with at least one shared edge at n <= 8 and reported, never asserted.
std::string c9_additivity_report() {
    json per_n = json::array();
    long long pairs = 0, additive = 0, non_additive = 0;
    for (int n = 1; n <= 8; ++n) {
        AuditReport r = (n == 8 && g_audit8) ? *g_audit8 : audit(n);
        require(r.additive + r.non_additive == r.additivity_pairs,
                "additivity counters disagree");
        require(r.mismatches.size() == static_cast<std::size_t>(r.non_additive),
                "mismatch records disagree with the counter");
        json mism = json::array();
        for (const AdditivityRecord& m : r.mismatches)
            mism.push_back(json{{"s", m.s.bits},
                                {"t", m.t.bits},
                                {"e", m.e},
                                {"whole", m.whole},
                                {"split_sum", m.split_sum}});
        per_n.push_back(json{{"n", n},
                             {"pairs", r.additivity_pairs},
                             {"additive", r.additive},
                             {"non_additive", r.non_additive},
                             {"mismatches", mism}});
        pairs += r.additivity_pairs;
        additive += r.additive;
        non_additive += r.non_additive;
    }
    json report{{"scope", "all ordered shape pairs with e >= 1, n <= 8"},
                {"pairs", pairs},
                {"additive", additive},
                {"non_additive", non_additive},
                {"per_n", per_n}};
    std::filesystem::path path =
        std::filesystem::absolute("additivity_report.json");
    std::ofstream out(path);
    require(static_cast<bool>(out), "cannot write the report file");
    out << report.dump(2) << "\n";
    std::ostringstream os;
    os << pairs << " pairs, " << non_additive << " non-additive, report at "
       << path.string();
    return os.str();
}

struct Criterion {
    const char* id;
    const char* label;
    double budget_seconds;  // 0 = no budget
    std::function<std::string()> fn;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"C1", "chain tallies sum to n+1 on exhaustive and random trees", 5,
         c1_chain_identity},
        {"C2", "every legal move shifts exactly three pointers", 10,
         c2_moves_well_formed},
        {"C3", "the documented ten-vertex example", 0, c3_worked_example},
        {"C4", "constructive scripts verify at the closed-form length", 60,
         c4_transform},
        {"C5", "exhaustive audit at n=8 finds no violations", 600, c5_audit},
        {"C6", "tight pairs meet their bounds exactly", 300, c6_tight_pairs},
        {"C7", "move inversion round-trips", 0, c7_inversion},
        {"C8", "singleton-move diameters up to n=10", 0, c8_diameter},
        {"C9", "split additivity measured and reported", 0,
         c9_additivity_report},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        try {
            note = c.fn();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            note = "over budget: " + std::to_string(secs) + "s > " +
                   std::to_string(c.budget_seconds) + "s";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.label << " ("
             << secs << "s)";
        if (!note.empty()) line << " -- " << note;
        std::cout << line.str() << std::endl;
        failures += ok ? 0 : 1;
    }
    std::cout << (9 - failures) << "/9 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}

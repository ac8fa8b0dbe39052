#include "chainrot/exact.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chainrot/decompose.hpp"
#include "chainrot/generators.hpp"
#include "chainrot/parallel.hpp"

namespace chainrot {

namespace {

// Shape bits packed into one machine word; 2n+1 bits, so n <= 31.
std::uint64_t pack_key(const ShapeKey& k) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < k.bits.size(); ++i)
        if (k.bits[i] == '1') out |= std::uint64_t(1) << i;
    return out;
}

ShapeKey unpack_key(std::uint64_t packed, int n) {
    std::string bits(2 * n + 1, '0');
    for (int i = 0; i < 2 * n + 1; ++i)
        if (packed >> i & 1) bits[i] = '1';
    return ShapeKey{std::move(bits)};
}

void require_packable(int n) {
    if (n > 31)
        throw CapExceeded("packed shape keys support n <= 31, got n=" +
                          std::to_string(n));
}

[[noreturn]] void refuse(const std::string& op, int n, int cap,
                         const std::string& knob) {
    throw CapExceeded(op + " refused at n=" + std::to_string(n) +
                      ": the shape space holds catalan(" + std::to_string(n) +
                      ") = " + catalan(n).str() + " states, over the cap " +
                      std::to_string(cap) + "; raise " + knob + " to proceed");
}

// All packed neighbor shapes of t under the move set, with the move that
// produces each.
void neighbor_shapes(const Tree& t, MoveSet set,
                     std::vector<std::pair<std::uint64_t, Move>>& out) {
    out.clear();
    for (const Move& m : enumerate_moves(t, set))
        out.push_back({pack_key(shape_key(apply(t, m))), m});
}

struct ParentLink {
    std::uint64_t from = 0;
    Move move;  // applied at `from` to reach this state
};

}  // namespace

DistanceResult distance(const Tree& s, const Tree& t, MoveSet set,
                        const ExactConfig& cfg) {
    if (s.n() != t.n())
        throw std::invalid_argument("distance needs trees of equal size, got " +
                                    std::to_string(s.n()) + " and " +
                                    std::to_string(t.n()));
    int n = s.n();
    if (n > cfg.max_n) refuse("distance", n, cfg.max_n, "max_n");
    require_packable(n);

    Script script;
    script.n = n;
    script.start = shape_key(s);
    script.end = shape_key(t);
    std::uint64_t from = pack_key(script.start);
    std::uint64_t to = pack_key(script.end);
    if (from == to) return {0, std::move(script)};

    // Bidirectional BFS, expanding the smaller frontier one full level at a
    // time. A node discovered by both sides bounds the answer; once the two
    // completed radii plus one reach that bound, it is exact.
    std::unordered_map<std::uint64_t, int> dist_f{{from, 0}}, dist_b{{to, 0}};
    std::unordered_map<std::uint64_t, ParentLink> par_f, par_b;
    std::vector<std::uint64_t> frontier_f{from}, frontier_b{to};
    int radius_f = 0, radius_b = 0;
    int best = INT_MAX;
    std::uint64_t meet = 0;
    std::vector<std::pair<std::uint64_t, Move>> nbrs;

    while (!frontier_f.empty() && !frontier_b.empty() &&
           radius_f + radius_b + 1 < best) {
        bool forward = frontier_f.size() <= frontier_b.size();
        auto& dist_own = forward ? dist_f : dist_b;
        auto& dist_other = forward ? dist_b : dist_f;
        auto& parents = forward ? par_f : par_b;
        auto& frontier = forward ? frontier_f : frontier_b;
        int next_d = (forward ? radius_f : radius_b) + 1;

        std::vector<std::uint64_t> next;
        for (std::uint64_t x : frontier) {
            Tree xt = parse_shape(unpack_key(x, n).bits);
            neighbor_shapes(xt, set, nbrs);
            for (auto& [y, mv] : nbrs) {
                if (dist_own.emplace(y, next_d).second) {
                    parents.emplace(y, ParentLink{x, mv});
                    next.push_back(y);
                    auto hit = dist_other.find(y);
                    if (hit != dist_other.end()) {
                        int total = next_d + hit->second;
                        if (total < best) {
                            best = total;
                            meet = y;
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
        (forward ? radius_f : radius_b) = next_d;
    }
    if (best == INT_MAX)
        throw std::logic_error("move graph unexpectedly disconnected");

    // Forward half: meet back to s, reversed.
    std::vector<Move> fwd;
    for (std::uint64_t x = meet; x != from;) {
        const ParentLink& pl = par_f.at(x);
        fwd.push_back(pl.move);
        x = pl.from;
    }
    std::reverse(fwd.begin(), fwd.end());
    script.moves = std::move(fwd);
    // Backward half: walking meet -> t undoes each recorded move.
    for (std::uint64_t x = meet; x != to;) {
        const ParentLink& pl = par_b.at(x);
        script.moves.push_back(invert(pl.move));
        x = pl.from;
    }
    assert(static_cast<int>(script.moves.size()) == best);
    assert(verify_script(s, script, t).ok);
    return {best, std::move(script)};
}

std::unordered_map<ShapeKey, int> sssp(const Tree& s, MoveSet set,
                                       const ExactConfig& cfg) {
    int n = s.n();
    int cap = set == MoveSet::CROT ? cfg.max_n_sssp_crot : cfg.max_n_sssp_rot;
    const char* knob =
        set == MoveSet::CROT ? "max_n_sssp_crot" : "max_n_sssp_rot";
    if (n > cap) refuse("sssp", n, cap, knob);
    require_packable(n);

    std::unordered_map<std::uint64_t, int> dist{{pack_key(shape_key(s)), 0}};
    std::vector<std::uint64_t> frontier{pack_key(shape_key(s))};
    std::vector<std::pair<std::uint64_t, Move>> nbrs;
    int d = 0;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t x : frontier) {
            Tree xt = parse_shape(unpack_key(x, n).bits);
            neighbor_shapes(xt, set, nbrs);
            for (auto& [y, mv] : nbrs)
                if (dist.emplace(y, d + 1).second) next.push_back(y);
        }
        frontier = std::move(next);
        ++d;
    }
    if (dist.size() != catalan_u64(n))
        throw std::logic_error("sssp reached " + std::to_string(dist.size()) +
                               " shapes, expected catalan(" + std::to_string(n) +
                               ") = " + catalan(n).str());
    std::unordered_map<ShapeKey, int> out;
    out.reserve(dist.size());
    for (auto& [packed, dd] : dist) out.emplace(unpack_key(packed, n), dd);
    return out;
}

MoveGraph build_move_graph(int n, MoveSet set, const ExactConfig& cfg) {
    int cap = set == MoveSet::CROT ? cfg.max_n_sssp_crot : cfg.max_n_sssp_rot;
    const char* knob =
        set == MoveSet::CROT ? "max_n_sssp_crot" : "max_n_sssp_rot";
    if (n > cap) refuse("build_move_graph", n, cap, knob);

    MoveGraph g;
    g.n = n;
    g.set = set;
    for_each_tree(n, [&](const Tree& t) { g.keys.push_back(shape_key(t)); });
    g.index.reserve(g.keys.size());
    for (int i = 0; i < g.size(); ++i) g.index.emplace(g.keys[i], i);

    int total = g.size();
    std::vector<std::vector<std::uint32_t>> adj(total);
    parallel_for_chunks(0, total, cfg.threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
            Tree t = parse_shape(g.keys[i].bits);
            std::vector<std::uint32_t> row;
            for (const Move& m : enumerate_moves(t, set))
                row.push_back(g.index.at(shape_key(apply(t, m))));
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            adj[i] = std::move(row);
        }
    });
    g.offsets.assign(total + 1, 0);
    for (int i = 0; i < total; ++i)
        g.offsets[i + 1] = g.offsets[i] + static_cast<std::uint32_t>(adj[i].size());
    g.edges.reserve(g.offsets[total]);
    for (int i = 0; i < total; ++i)
        g.edges.insert(g.edges.end(), adj[i].begin(), adj[i].end());
    return g;
}

std::string move_graph_dot(const MoveGraph& g, const ExactConfig& cfg) {
    if (g.n > cfg.max_n_dot)
        refuse("move_graph_dot", g.n, cfg.max_n_dot, "max_n_dot");
    std::ostringstream os;
    os << "graph moves_" << (g.set == MoveSet::CROT ? "crot" : "rot") << "_n"
       << g.n << " {\n";
    for (int i = 0; i < g.size(); ++i)
        os << "  s" << i << " [label=\"" << g.keys[i].bits << "\"];\n";
    for (int i = 0; i < g.size(); ++i)
        for (std::uint32_t e = g.offsets[i]; e < g.offsets[i + 1]; ++e)
            if (static_cast<int>(g.edges[e]) > i)
                os << "  s" << i << " -- s" << g.edges[e] << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

// Single-source BFS over CSR adjacency into a caller-owned buffer.
void bfs_csr(const MoveGraph& g, int src, std::vector<std::int16_t>& dist,
             std::vector<std::int32_t>& cur, std::vector<std::int32_t>& next) {
    std::fill(dist.begin(), dist.end(), std::int16_t(-1));
    dist[src] = 0;
    cur.clear();
    cur.push_back(src);
    std::int16_t d = 0;
    while (!cur.empty()) {
        next.clear();
        for (std::int32_t x : cur) {
            for (std::uint32_t e = g.offsets[x]; e < g.offsets[x + 1]; ++e) {
                std::int32_t y = g.edges[e];
                if (dist[y] < 0) {
                    dist[y] = d + 1;
                    next.push_back(y);
                }
            }
        }
        cur.swap(next);
        ++d;
    }
}

// Full distance matrix (row-major) for the graph, one BFS per source.
std::vector<std::int16_t> distance_matrix(const MoveGraph& g, int threads) {
    int total = g.size();
    std::vector<std::int16_t> mat(static_cast<std::size_t>(total) * total);
    parallel_for_chunks(0, total, threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<std::int16_t> dist(total);
        std::vector<std::int32_t> cur, next;
        for (std::int64_t i = lo; i < hi; ++i) {
            bfs_csr(g, static_cast<int>(i), dist, cur, next);
            std::copy(dist.begin(), dist.end(), mat.begin() + i * total);
        }
    });
    return mat;
}

}  // namespace

AuditReport audit(int n, const ExactConfig& cfg) {
    if (n > cfg.max_n_audit) refuse("audit", n, cfg.max_n_audit, "max_n_audit");
    if (n < 1) throw std::invalid_argument("audit needs n >= 1");

    AuditReport report;
    report.n = n;

    // Exact oracle tables: chain-move distances for every size up to n (the
    // split parts are smaller trees), single-rotation distances at size n.
    std::vector<MoveGraph> crot_graph(n + 1);
    std::vector<std::vector<std::int16_t>> crot_dist(n + 1);
    for (int m = 1; m <= n; ++m) {
        crot_graph[m] = build_move_graph(m, MoveSet::CROT, cfg);
        crot_dist[m] = distance_matrix(crot_graph[m], cfg.threads);
    }
    MoveGraph rot_graph = build_move_graph(n, MoveSet::ROT, cfg);
    std::vector<std::int16_t> rot_dist = distance_matrix(rot_graph, cfg.threads);

    const MoveGraph& g = crot_graph[n];
    int total = g.size();
    report.shapes = total;
    report.ordered_pairs = static_cast<long long>(total) * total;
    const std::vector<std::int16_t>& cmat = crot_dist[n];

    std::vector<Tree> trees;
    trees.reserve(total);
    std::vector<int> lcount(total), rcount(total);
    for (int i = 0; i < total; ++i) {
        trees.push_back(parse_shape(g.keys[i].bits));
        lcount[i] = chain_count(trees[i], Side::Left);
        rcount[i] = chain_count(trees[i], Side::Right);
    }

    struct RowResult {
        std::vector<std::string> violations;
        std::vector<AdditivityRecord> mismatches;
        long long bound_checks = 0, symmetry_checks = 0, rot_floor_checks = 0;
        long long additivity_pairs = 0, additive = 0, non_additive = 0;
    };
    std::vector<RowResult> rows(total);

    parallel_for_chunks(0, total, cfg.threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
            RowResult& row = rows[i];
            auto pair_name = [&](int a, int b) {
                return "s=" + g.keys[a].bits + " t=" + g.keys[b].bits;
            };
            for (int j = 0; j < total; ++j) {
                int c = cmat[i * total + j];
                int d = rot_dist[i * total + j];
                int lb = std::abs(lcount[i] - lcount[j]);
                int ub = std::min(lcount[i] + lcount[j] - 2,
                                  rcount[i] + rcount[j] - 2);
                ++row.bound_checks;
                if (!(lb <= c && c <= ub && ub <= n - 1))
                    row.violations.push_back(
                        "bounds violated: " + pair_name(i, j) + " lb=" +
                        std::to_string(lb) + " C=" + std::to_string(c) +
                        " ub=" + std::to_string(ub));
                ++row.symmetry_checks;
                if (c != cmat[static_cast<std::size_t>(j) * total + i])
                    row.violations.push_back(
                        "asymmetry: " + pair_name(i, j) + " C(s,t)=" +
                        std::to_string(c) + " C(t,s)=" +
                        std::to_string(cmat[static_cast<std::size_t>(j) * total + i]));
                ++row.rot_floor_checks;
                if (c > d)
                    row.violations.push_back(
                        "chain distance exceeds rotation distance: " +
                        pair_name(i, j) + " C=" + std::to_string(c) +
                        " D=" + std::to_string(d));
                std::vector<EquivalentEdgePair> eq =
                    equivalent_edges(trees[i], trees[j]);
                int e = static_cast<int>(eq.size());
                if (e == 0 && d < n - 1)
                    row.violations.push_back(
                        "rotation floor violated: " + pair_name(i, j) +
                        " has no equivalent edges but D=" + std::to_string(d) +
                        " < " + std::to_string(n - 1));
                if (e >= 1) {
                    ++row.additivity_pairs;
                    int sum = 0;
                    for (const SplitPair& part : split(trees[i], trees[j])) {
                        int m = part.size();
                        const MoveGraph& gm = crot_graph[m];
                        int a = gm.index.at(shape_key(part.s_part));
                        int b = gm.index.at(shape_key(part.t_part));
                        sum += crot_dist[m][static_cast<std::size_t>(a) *
                                                gm.size() +
                                            b];
                    }
                    if (sum == c) {
                        ++row.additive;
                    } else {
                        ++row.non_additive;
                        row.mismatches.push_back(AdditivityRecord{
                            g.keys[i], g.keys[j], e, c, sum});
                    }
                }
            }
        }
    });

    for (RowResult& row : rows) {
        for (auto& v : row.violations) report.violations.push_back(std::move(v));
        for (auto& m : row.mismatches) report.mismatches.push_back(std::move(m));
        report.bound_checks += row.bound_checks;
        report.symmetry_checks += row.symmetry_checks;
        report.rot_floor_checks += row.rot_floor_checks;
        report.additivity_pairs += row.additivity_pairs;
        report.additive += row.additive;
        report.non_additive += row.non_additive;
    }

    // Triangle inequality, sampled with a fixed seed for reproducibility.
    std::mt19937 rng(20250817);
    std::uniform_int_distribution<int> pick(0, total - 1);
    long long samples = std::min<long long>(20000, report.ordered_pairs * total);
    for (long long k = 0; k < samples; ++k) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        ++report.triangle_checks;
        int ab = cmat[static_cast<std::size_t>(a) * total + b];
        int bc = cmat[static_cast<std::size_t>(b) * total + c];
        int ac = cmat[static_cast<std::size_t>(a) * total + c];
        if (ac > ab + bc)
            report.violations.push_back(
                "triangle inequality violated: a=" + g.keys[a].bits + " b=" +
                g.keys[b].bits + " c=" + g.keys[c].bits);
    }
    return report;
}

DiameterResult diameter(int n, MoveSet set, const ExactConfig& cfg) {
    if (n > cfg.max_n_diameter)
        refuse("diameter", n, cfg.max_n_diameter, "max_n_diameter");
    MoveGraph g = build_move_graph(n, set, cfg);
    int total = g.size();

    struct Best {
        int value = -1;
        int src = INT_MAX;
        int dst = INT_MAX;
    };
    int workers = effective_threads(cfg.threads);
    std::vector<Best> bests(workers);
    std::mutex assign_mu;
    int next_worker = 0;
    parallel_for_chunks(0, total, cfg.threads, [&](std::int64_t lo, std::int64_t hi) {
        int my_id;
        {
            std::scoped_lock lock(assign_mu);
            my_id = next_worker++;
        }
        Best local;
        std::vector<std::int16_t> dist(total);
        std::vector<std::int32_t> cur, next;
        for (std::int64_t i = lo; i < hi; ++i) {
            bfs_csr(g, static_cast<int>(i), dist, cur, next);
            int ecc = 0, far = static_cast<int>(i);
            for (int j = 0; j < total; ++j) {
                if (dist[j] > ecc) {
                    ecc = dist[j];
                    far = j;
                }
            }
            if (ecc > local.value ||
                (ecc == local.value && (static_cast<int>(i) < local.src ||
                                        (static_cast<int>(i) == local.src &&
                                         far < local.dst)))) {
                local.value = ecc;
                local.src = static_cast<int>(i);
                local.dst = far;
            }
        }
        bests[my_id] = local;
    });

    Best overall;
    for (const Best& b : bests) {
        if (b.value > overall.value ||
            (b.value == overall.value &&
             (b.src < overall.src ||
              (b.src == overall.src && b.dst < overall.dst))))
            overall = b;
    }
    // Chain moves can always finish within n-1 steps, so a larger value
    // would mean the oracle itself is broken.
    if (set == MoveSet::CROT) assert(overall.value <= n - 1);
    return DiameterResult{n, set, overall.value, g.keys[overall.src],
                          g.keys[overall.dst]};
}

}  // namespace chainrot

// chainrot: command line front end. Subcommands map one-to-one onto library
// operations; trees are accepted as literals, shape bitstrings, or JSON.
// Exit codes: 0 success, 1 domain error (message names the violated
// precondition), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "chainrot/bounds.hpp"
#include "chainrot/decompose.hpp"
#include "chainrot/exact.hpp"
#include "chainrot/generators.hpp"
#include "chainrot/json_io.hpp"
#include "chainrot/moves.hpp"
#include "chainrot/tree.hpp"

namespace {

using namespace chainrot;
using nlohmann::json;

Tree read_tree(const std::string& text, const std::string& input_format) {
    if (input_format == "literal") return parse_literal(text);
    if (input_format == "bits") return parse_shape(text);
    if (input_format == "json") {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed tree JSON");
        return tree_from_json(j);
    }
    return parse_tree(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

MoveSet move_set_of(const std::string& name) {
    if (name == "rot") return MoveSet::ROT;
    if (name == "crot") return MoveSet::CROT;
    throw ParseError("--moves must be rot or crot, got \"" + name + "\"");
}

// --max-n lifts every size cap at once; per-operation defaults otherwise.
ExactConfig config_for(int max_n, int threads) {
    ExactConfig cfg;
    if (max_n > 0) {
        cfg.max_n = max_n;
        cfg.max_n_sssp_crot = max_n;
        cfg.max_n_sssp_rot = max_n;
        cfg.max_n_audit = max_n;
        cfg.max_n_diameter = max_n;
        cfg.max_n_dot = std::max(cfg.max_n_dot, max_n);
    }
    cfg.threads = threads;
    return cfg;
}

std::string read_stream_or_file(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Script read_script(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty script input");
    if (text[b] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed script JSON");
        return script_from_json(j);
    }
    return script_from_text(text);
}

void write_dot_file(const std::string& path, const std::string& dot) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write \"" + path + "\"");
    out << dot;
}

int run(int argc, char** argv) {
    CLI::App app{"chain rotations on infix-labeled binary trees"};
    app.require_subcommand(1);

    std::string tree_text, s_text, t_text;
    std::string input_format = "auto";
    std::string format = "json";
    std::string moves_name = "crot";
    std::string family, dot_path, script_path;
    int n = 0, c = 0, count = 1, threads = 0, max_n = 0;
    std::uint64_t seed = 0;
    bool check = false;

    auto add_common = [&](CLI::App* cmd, bool with_moves = false) {
        cmd->add_option("--format", format, "output format: json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        cmd->add_option("--input-format", input_format,
                        "force tree input format: auto, literal, bits or json")
            ->check(CLI::IsMember({"auto", "literal", "bits", "json"}));
        if (with_moves)
            cmd->add_option("--moves", moves_name, "move set: rot or crot")
                ->check(CLI::IsMember({"rot", "crot"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a tree");
    validate->add_option("--tree", tree_text, "tree input")->required();
    add_common(validate);

    CLI::App* chains = app.add_subcommand("chains", "maximal chain inventory");
    chains->add_option("--tree", tree_text, "tree input")->required();
    add_common(chains);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "chain-distance bounds and the constructive script");
    bounds->add_option("--s", s_text, "source tree")->required();
    bounds->add_option("--t", t_text, "target tree")->required();
    add_common(bounds);

    CLI::App* transform = app.add_subcommand(
        "transform", "constructive transformation script between two trees");
    transform->add_option("--s", s_text, "source tree")->required();
    transform->add_option("--t", t_text, "target tree")->required();
    transform->add_flag("--check", check,
                        "verify a script (from --script or stdin) instead");
    transform->add_option("--script", script_path,
                          "script file for --check, '-' for stdin");
    add_common(transform);

    CLI::App* exact_cmd = app.add_subcommand(
        "exact", "exact distance by exhaustive search (size-capped)");
    exact_cmd->add_option("--s", s_text, "source tree")->required();
    exact_cmd->add_option("--t", t_text, "target tree")->required();
    exact_cmd->add_option("--max-n", max_n, "override all size caps");
    exact_cmd->add_option("--threads", threads, "worker threads (0 = all)");
    add_common(exact_cmd, true);

    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "equivalent edges and independent sub-pairs");
    decompose_cmd->add_option("--s", s_text, "source tree")->required();
    decompose_cmd->add_option("--t", t_text, "target tree")->required();
    add_common(decompose_cmd);

    CLI::App* generate = app.add_subcommand("generate", "named tree families");
    generate
        ->add_option("--family", family,
                     "left-chain, right-chain, tight or random")
        ->required()
        ->check(CLI::IsMember({"left-chain", "right-chain", "tight", "random"}));
    generate->add_option("--n", n, "vertex count")->required();
    generate->add_option("--c", c, "left chain count of the tight pair source");
    generate->add_option("--seed", seed, "random seed");
    generate->add_option("--count", count, "number of random trees");
    add_common(generate);

    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "exhaustive bound checks over all shape pairs of size n");
    audit_cmd->add_option("--n", n, "vertex count")->required();
    audit_cmd->add_option("--max-n", max_n, "override all size caps");
    audit_cmd->add_option("--threads", threads, "worker threads (0 = all)");
    audit_cmd->add_option("--dot", dot_path, "also write the move graph as DOT");
    add_common(audit_cmd, true);

    CLI::App* diameter_cmd =
        app.add_subcommand("diameter", "largest exact distance at size n");
    diameter_cmd->add_option("--n", n, "vertex count")->required();
    diameter_cmd->add_option("--max-n", max_n, "override all size caps");
    diameter_cmd->add_option("--threads", threads, "worker threads (0 = all)");
    diameter_cmd->add_option("--dot", dot_path,
                             "also write the move graph as DOT");
    add_common(diameter_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (validate->parsed()) {
        Tree t = read_tree(tree_text, input_format);
        if (format == "dot") {
            std::cout << tree_to_dot(t);
        } else if (format == "text") {
            std::cout << "valid: n=" << t.n() << " root=" << t.root()
                      << " shape=" << shape_key(t).bits << "\n"
                      << to_literal(t) << "\n";
        } else {
            emit(json{{"valid", true},
                      {"n", t.n()},
                      {"root", t.root()},
                      {"shape", shape_key(t).bits},
                      {"literal", to_literal(t)},
                      {"tree", tree_to_json(t)}});
        }
        return 0;
    }

    if (chains->parsed()) {
        Tree t = read_tree(tree_text, input_format);
        if (format == "dot") {
            std::cout << tree_to_dot(t);
        } else if (format == "text") {
            std::cout << "L = " << chain_count(t, Side::Left) << "\n"
                      << "R = " << chain_count(t, Side::Right) << "\n";
            for (Side side : {Side::Left, Side::Right}) {
                std::cout << (side == Side::Left ? "left: " : "right:");
                for (const Chain& ch : maximal_chains(t, side))
                    std::cout << " " << ch.notation();
                std::cout << "\n";
            }
        } else {
            emit(chains_to_json(t));
        }
        return 0;
    }

    if (bounds->parsed()) {
        Tree s = read_tree(s_text, input_format);
        Tree t = read_tree(t_text, input_format);
        DistanceReport r = bounds_report(s, t);
        json out = distance_report_to_json(r);
        out["rotation_floor"] = rotation_lower_bound(s, t);
        out["rotation_floor_terms"] = rotation_lower_bound_terms(s, t);
        if (format == "text") {
            std::cout << "n = " << r.n << "\ne = " << r.e
                      << "\nlower = " << r.lower << "\nupper = " << r.upper
                      << "\nrotation_floor = " << rotation_lower_bound(s, t)
                      << "\n";
        } else {
            emit(out);
        }
        return 0;
    }

    if (transform->parsed()) {
        Tree s = read_tree(s_text, input_format);
        Tree t = read_tree(t_text, input_format);
        if (check) {
            Script script = read_script(read_stream_or_file(script_path));
            VerifyResult vr = verify_script(s, script, t);
            if (!vr.ok) {
                std::cerr << "error: script verification failed: " << vr.message
                          << "\n";
                return 1;
            }
            emit(json{{"ok", true}, {"length", script.length()}});
            return 0;
        }
        Script script = transform_script(s, t);
        if (format == "text")
            std::cout << script_to_text(script);
        else
            emit(script_to_json(script));
        return 0;
    }

    if (exact_cmd->parsed()) {
        Tree s = read_tree(s_text, input_format);
        Tree t = read_tree(t_text, input_format);
        ExactConfig cfg = config_for(max_n, threads);
        MoveSet set = move_set_of(moves_name);
        DistanceResult dr = distance(s, t, set, cfg);
        json out;
        if (set == MoveSet::CROT) {
            DistanceReport r = bounds_report(s, t);
            r.exact = dr.distance;
            r.script = dr.script;
            out = distance_report_to_json(r);
        } else {
            out = json{{"n", s.n()},
                       {"e", static_cast<int>(equivalent_edges(s, t).size())},
                       {"exact", dr.distance},
                       {"rotation_floor", rotation_lower_bound(s, t)},
                       {"script", script_to_json(dr.script)}};
        }
        out["distance"] = dr.distance;
        out["moves"] = moves_name;
        if (format == "text") {
            std::cout << "distance = " << dr.distance << "\n"
                      << script_to_text(dr.script);
        } else {
            emit(out);
        }
        return 0;
    }

    if (decompose_cmd->parsed()) {
        Tree s = read_tree(s_text, input_format);
        Tree t = read_tree(t_text, input_format);
        std::vector<EquivalentEdgePair> eq = equivalent_edges(s, t);
        std::vector<SplitPair> parts = split(s, t);
        if (format == "text") {
            std::cout << "e = " << eq.size() << "\n";
            for (const EquivalentEdgePair& p : eq)
                std::cout << "[" << p.interval.lo << "," << p.interval.hi
                          << "] via (" << p.s_edge.first << "," << p.s_edge.second
                          << ") and (" << p.t_edge.first << ","
                          << p.t_edge.second << ")\n";
            for (const SplitPair& p : parts)
                std::cout << "part [" << p.interval.lo << "," << p.interval.hi
                          << "]: " << to_literal(p.s_part) << "  vs  "
                          << to_literal(p.t_part) << "\n";
        } else {
            emit(json{{"e", eq.size()},
                      {"equivalent_edges", equivalent_edges_to_json(eq)},
                      {"splits", split_to_json(parts)}});
        }
        return 0;
    }

    if (generate->parsed()) {
        auto emit_tree = [&](const Tree& t) {
            if (format == "dot")
                std::cout << tree_to_dot(t);
            else if (format == "text")
                std::cout << to_literal(t) << "\n";
            else
                emit(json{{"n", t.n()},
                          {"shape", shape_key(t).bits},
                          {"literal", to_literal(t)},
                          {"tree", tree_to_json(t)}});
        };
        if (family == "left-chain") {
            emit_tree(complete_chain(n, Side::Left));
        } else if (family == "right-chain") {
            emit_tree(complete_chain(n, Side::Right));
        } else if (family == "tight") {
            auto [s, t] = tight_pair(n, c);
            if (format == "text") {
                std::cout << to_literal(s) << "\n" << to_literal(t) << "\n";
            } else {
                emit(json{{"s", tree_to_json(s)},
                          {"t", tree_to_json(t)},
                          {"s_literal", to_literal(s)},
                          {"t_literal", to_literal(t)}});
            }
        } else {
            for (int k = 0; k < count; ++k) emit_tree(random_tree(n, seed + k));
        }
        return 0;
    }

    if (audit_cmd->parsed()) {
        ExactConfig cfg = config_for(max_n, threads);
        AuditReport report = audit(n, cfg);
        if (!dot_path.empty())
            write_dot_file(dot_path,
                           move_graph_dot(
                               build_move_graph(n, move_set_of(moves_name), cfg),
                               cfg));
        if (format == "text") {
            std::cout << "n = " << report.n << ", shapes = " << report.shapes
                      << ", ordered pairs = " << report.ordered_pairs << "\n"
                      << "violations = " << report.violations.size() << "\n"
                      << "additivity: " << report.additive << " additive, "
                      << report.non_additive << " not, of "
                      << report.additivity_pairs << "\n";
            for (const std::string& v : report.violations)
                std::cout << v << "\n";
        } else {
            emit(audit_report_to_json(report));
        }
        return 0;
    }

    if (diameter_cmd->parsed()) {
        ExactConfig cfg = config_for(max_n, threads);
        MoveSet set = move_set_of(moves_name);
        DiameterResult r = diameter(n, set, cfg);
        if (!dot_path.empty())
            write_dot_file(dot_path,
                           move_graph_dot(build_move_graph(n, set, cfg), cfg));
        if (format == "text")
            std::cout << "diameter = " << r.value << "\n";
        else
            emit(diameter_to_json(r));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

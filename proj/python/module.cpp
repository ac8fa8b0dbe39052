// Python bindings. Trees are first-class objects; structured reports cross
// the boundary as JSON strings and are decoded by the package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainrot/bounds.hpp"
#include "chainrot/decompose.hpp"
#include "chainrot/exact.hpp"
#include "chainrot/generators.hpp"
#include "chainrot/json_io.hpp"
#include "chainrot/moves.hpp"
#include "chainrot/tree.hpp"

namespace py = pybind11;
using namespace chainrot;

namespace {

Side side_of_name(const std::string& name) {
    if (name == "left" || name == "L") return Side::Left;
    if (name == "right" || name == "R") return Side::Right;
    throw ParseError("side must be left or right, got \"" + name + "\"");
}

MoveSet move_set_of_name(const std::string& name) {
    if (name == "rot") return MoveSet::ROT;
    if (name == "crot") return MoveSet::CROT;
    throw ParseError("moves must be rot or crot, got \"" + name + "\"");
}

ExactConfig config_with(int max_n, int threads) {
    ExactConfig cfg;
    if (max_n > 0) {
        cfg.max_n = max_n;
        cfg.max_n_sssp_crot = max_n;
        cfg.max_n_sssp_rot = max_n;
        cfg.max_n_audit = max_n;
        cfg.max_n_diameter = max_n;
    }
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "chain rotations on infix-labeled binary trees";

    py::register_exception<TreeError>(m, "TreeError");
    py::register_exception<IllegalMove>(m, "IllegalMove");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<CapExceeded>(m, "CapExceeded");

    py::class_<Tree>(m, "Tree")
        .def_static(
            "parse", [](const std::string& text) { return parse_tree(text); },
            py::arg("text"),
            "Parse a literal, shape bitstring, or JSON tree description.")
        .def_static(
            "build",
            [](int n, const std::vector<int>& left,
               const std::vector<int>& right, int root) {
                return Tree::build(n, left, right, root);
            },
            py::arg("n"), py::arg("left"), py::arg("right"), py::arg("root"))
        .def_property_readonly("n", &Tree::n)
        .def_property_readonly("root", &Tree::root)
        .def("left", &Tree::left, py::arg("v"))
        .def("right", &Tree::right, py::arg("v"))
        .def("parent", &Tree::parent, py::arg("v"))
        .def("subtree_interval",
             [](const Tree& t, int v) {
                 Interval iv = t.subtree_interval(v);
                 return std::make_pair(iv.lo, iv.hi);
             },
             py::arg("v"))
        .def("literal", [](const Tree& t) { return to_literal(t); })
        .def("shape", [](const Tree& t) { return shape_key(t).bits; })
        .def("json", [](const Tree& t) { return tree_to_json(t).dump(); })
        .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
        .def("__hash__",
             [](const Tree& t) {
                 return std::hash<ShapeKey>{}(shape_key(t));
             })
        .def("__repr__", [](const Tree& t) {
            return "Tree(" + to_literal(t) + ")";
        });

    m.def("chain_count",
          [](const Tree& t, const std::string& side) {
              return chain_count(t, side_of_name(side));
          },
          py::arg("tree"), py::arg("side"));
    m.def("chains_json", [](const Tree& t) { return chains_to_json(t).dump(); });

    m.def("legal_moves",
          [](const Tree& t, const std::string& moves) {
              std::vector<std::string> out;
              for (const Move& mv : enumerate_moves(t, move_set_of_name(moves)))
                  out.push_back(format_move(mv));
              return out;
          },
          py::arg("tree"), py::arg("moves") = "crot");
    m.def("apply_move",
          [](const Tree& t, const std::string& text) {
              return apply(t, parse_move(t, text));
          },
          py::arg("tree"), py::arg("move"));
    m.def("invert_move",
          [](const Tree& t, const std::string& text) {
              return format_move(invert(parse_move(t, text)));
          },
          py::arg("tree"), py::arg("move"),
          "The descriptor that undoes `move` when applied to apply(tree, move).");
    m.def("pointer_delta", &pointer_delta, py::arg("a"), py::arg("b"));

    m.def("equivalent_edges_json", [](const Tree& s, const Tree& t) {
        return equivalent_edges_to_json(equivalent_edges(s, t)).dump();
    });
    m.def("split_json", [](const Tree& s, const Tree& t) {
        return split_to_json(split(s, t)).dump();
    });

    m.def("collapse_json",
          [](const Tree& t, const std::string& side) {
              return script_to_json(collapse(t, side_of_name(side))).dump();
          },
          py::arg("tree"), py::arg("side"));
    m.def("transform_json", [](const Tree& s, const Tree& t) {
        return script_to_json(transform_script(s, t)).dump();
    });
    m.def("verify_script",
          [](const Tree& s, const std::string& script_json, const Tree& t) {
              Script script =
                  script_from_json(nlohmann::json::parse(script_json));
              VerifyResult r = verify_script(s, script, t);
              return std::make_pair(r.ok, r.message);
          },
          py::arg("s"), py::arg("script_json"), py::arg("t"));
    m.def("bounds_json", [](const Tree& s, const Tree& t) {
        nlohmann::json j = distance_report_to_json(bounds_report(s, t));
        j["rotation_floor"] = rotation_lower_bound(s, t);
        j["rotation_floor_terms"] = rotation_lower_bound_terms(s, t);
        return j.dump();
    });

    m.def("distance_json",
          [](const Tree& s, const Tree& t, const std::string& moves, int max_n,
             int threads) {
              DistanceResult r = distance(s, t, move_set_of_name(moves),
                                          config_with(max_n, threads));
              nlohmann::json j{{"distance", r.distance},
                               {"script", script_to_json(r.script)}};
              return j.dump();
          },
          py::arg("s"), py::arg("t"), py::arg("moves") = "crot",
          py::arg("max_n") = 0, py::arg("threads") = 0);
    m.def("audit_json",
          [](int n, int max_n, int threads) {
              return audit_report_to_json(audit(n, config_with(max_n, threads)))
                  .dump();
          },
          py::arg("n"), py::arg("max_n") = 0, py::arg("threads") = 0);
    m.def("diameter_json",
          [](int n, const std::string& moves, int max_n, int threads) {
              return diameter_to_json(diameter(n, move_set_of_name(moves),
                                               config_with(max_n, threads)))
                  .dump();
          },
          py::arg("n"), py::arg("moves") = "rot", py::arg("max_n") = 0,
          py::arg("threads") = 0);

    m.def("enumerate_trees", &enumerate_trees, py::arg("n"));
    m.def("complete_chain",
          [](int n, const std::string& side) {
              return complete_chain(n, side_of_name(side));
          },
          py::arg("n"), py::arg("side"));
    m.def("tight_pair", &tight_pair, py::arg("n"), py::arg("c"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed") = 0);
    m.def("catalan_str", [](int n) { return catalan(n).str(); }, py::arg("n"));
    m.def("tree_rank_str",
          [](const Tree& t) { return tree_rank(t).str(); }, py::arg("tree"));
    m.def("tree_unrank",
          [](int n, const std::string& rank) {
              return tree_unrank(n, BigInt(rank));
          },
          py::arg("n"), py::arg("rank"));
}

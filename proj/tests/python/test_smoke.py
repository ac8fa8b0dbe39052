"""Smoke test for the python bindings; runs standalone or under pytest."""

import json

import chainrot as cr


def test_tree_round_trip():
    t = cr.Tree.parse("9(3(2(1,.),7(5(4,6),8)),10)")
    assert t.n == 10
    assert t.root == 9
    assert t.shape() == "111100011100100100100"
    assert t.subtree_interval(7) == (4, 8)
    assert cr.Tree.parse(t.shape()) == t
    assert cr.Tree.parse(t.json()) == t
    assert cr.Tree.build(2, [0, 1], [0, 0], 2) == cr.Tree.parse("2(1,.)")


def test_chains_and_moves():
    t = cr.Tree.parse("9(3(2(1,.),7(5(4,6),8)),10)")
    assert cr.chain_count(t, "left") == 5
    assert cr.chain_count(t, "right") == 6
    inventory = cr.chains(t)
    assert inventory["L"] == 5
    assert [c["notation"] for c in inventory["left"]][2] == "[7-4]"

    after = cr.apply_move(t, "rot([7-5],3)")
    assert after == cr.Tree.parse("9(7(5(3(2(1,.),4),6),8),10)")
    assert cr.pointer_delta(t, after) == 3
    back = cr.invert_move(t, "rot([7-5],3)L")
    assert cr.apply_move(after, back) == t
    assert "rot([7-5],3)L" in cr.legal_moves(t, "crot")


def test_errors_carry_types():
    try:
        cr.Tree.parse("2(1,1)")
    except cr.ParseError:
        pass
    else:
        raise AssertionError("duplicate labels must be rejected")
    try:
        cr.apply_move(cr.Tree.parse("2(1,.)"), "rot([2],1)L")
    except cr.IllegalMove:
        pass
    else:
        raise AssertionError("rotating the root over a leaf must be rejected")


def test_scripts_and_bounds():
    s = cr.Tree.parse("9(3(2(1,.),7(5(4,6),8)),10)")
    t = cr.Tree.parse("9(7(5(3(2(1,.),4),6),8),10)")
    script = cr.transform(s, t)
    assert script["length"] == 8
    ok, message = cr.verify_script(s, json.dumps(script), t)
    assert ok, message

    report = cr.bounds(s, t)
    assert report["lower"] == 0
    assert report["upper"] == 8
    assert report["rotation_floor"] >= 0

    assert cr.distance(s, t)["distance"] == 1
    assert cr.collapse(s, "left")["length"] == 4


def test_decompose():
    s = cr.Tree.parse("9(3(2(1,.),7(5(4,6),8)),10)")
    t = cr.Tree.parse("9(3(2(1,.),5(4,7(6,8))),10)")
    edges = cr.equivalent_edges(s, t)
    assert {"lo": 4, "hi": 8} in [p["interval"] for p in edges]
    assert len(edges) == 8
    assert len(cr.split(s, t)) == 9


def test_generators_and_search():
    assert cr.catalan(10) == 16796
    assert len(cr.enumerate_trees(4)) == 14
    s, t = cr.tight_pair(8, 3)
    rep = cr.bounds(s, t)
    assert rep["lower"] == rep["upper"] == 5
    assert cr.distance(s, t)["distance"] == 5

    tree = cr.random_tree(40, 11)
    assert cr.tree_unrank(40, cr.tree_rank(tree)) == tree

    assert cr.diameter(5, "crot")["diameter"] == 4
    report = cr.audit(4)
    assert report["violations"] == []


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL {name}: {exc}")
    raise SystemExit(1 if failures else 0)

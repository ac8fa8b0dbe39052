"""Chain rotations on infix-labeled binary trees.

Thin wrapper over the compiled extension: structured results come back as
dicts (decoded from the core's JSON), big integers as ints.
"""

import json as _json

from ._core import (
    CapExceeded,
    IllegalMove,
    ParseError,
    Tree,
    TreeError,
    apply_move,
    chain_count,
    complete_chain,
    enumerate_trees,
    invert_move,
    legal_moves,
    pointer_delta,
    random_tree,
    tight_pair,
    verify_script,
)
from . import _core


def chains(tree):
    return _json.loads(_core.chains_json(tree))


def equivalent_edges(s, t):
    return _json.loads(_core.equivalent_edges_json(s, t))


def split(s, t):
    return _json.loads(_core.split_json(s, t))


def collapse(tree, side):
    return _json.loads(_core.collapse_json(tree, side))


def transform(s, t):
    return _json.loads(_core.transform_json(s, t))


def bounds(s, t):
    return _json.loads(_core.bounds_json(s, t))


def distance(s, t, moves="crot", max_n=0, threads=0):
    return _json.loads(_core.distance_json(s, t, moves, max_n, threads))


def audit(n, max_n=0, threads=0):
    return _json.loads(_core.audit_json(n, max_n, threads))


def diameter(n, moves="rot", max_n=0, threads=0):
    return _json.loads(_core.diameter_json(n, moves, max_n, threads))


def catalan(n):
    return int(_core.catalan_str(n))


def tree_rank(tree):
    return int(_core.tree_rank_str(tree))


def tree_unrank(n, rank):
    return _core.tree_unrank(n, str(rank))


__all__ = [
    "CapExceeded",
    "IllegalMove",
    "ParseError",
    "Tree",
    "TreeError",
    "apply_move",
    "audit",
    "bounds",
    "catalan",
    "chain_count",
    "chains",
    "collapse",
    "complete_chain",
    "diameter",
    "distance",
    "enumerate_trees",
    "equivalent_edges",
    "invert_move",
    "legal_moves",
    "pointer_delta",
    "random_tree",
    "split",
    "tight_pair",
    "transform",
    "tree_rank",
    "tree_unrank",
    "verify_script",
]

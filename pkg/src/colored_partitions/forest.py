"""Final positions under psi, Motzkin words and the forest picture.

``theta[x]`` is the position, in psi(nu), of the part that comes from index
x of the half-expanded sequence.  Reading psi(nu) left to right and writing
U for an upper half, D for a lower half and H for a primary part gives a
Motzkin word.  Cutting at the H letters leaves Dyck words, each of which is
a planted plane tree; edges are labelled by the secondary part whose upper
half opened them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bridge import IndexedPartition, index_split
from .errors import InternalError
from .machines import psi_trace
from .parts import Part, format_part


def theta(nu: Sequence[Part], n: int) -> tuple:
    """theta[x] for x = 0 .. p+2s+1 (theta[0] = 0, the last entry is fixed)."""
    return psi_trace(nu, n).theta


def bridge_from_theta(ip: IndexedPartition, th: Sequence[int]) -> dict:
    """Br(i) as the first primary index past i that ends up to the left of
    nu_i, or else the last upper index from i on that ends up no further right."""
    out = {}
    prim = ip.prim + (ip.sentinel,)
    for i in ip.upper:
        b = next((j for j in prim if j > i and th[j] < th[i]), None)
        if b is None:
            b = max(u for u in ip.upper if u >= i and th[u] <= th[i])
        out[i] = b
    return out


def relation_violations(ip: IndexedPartition, th: Sequence[int]) -> list[str]:
    """Ordering facts that theta must satisfy; returns the broken ones."""
    bad = []
    I, J = ip.upper, ip.prim
    for a, i in enumerate(I):
        if not i + 1 <= th[i + 1]:
            bad.append(f"lower half {i + 1} moved left")
        if not th[i] < th[i + 1]:
            bad.append(f"halves of {i} out of order")
        for i2 in I[a + 1:]:
            nested = th[i2] < th[i] < th[i + 1] < th[i2 + 1]
            before = th[i] < th[i + 1] < th[i2] < th[i2 + 1]
            if not (nested or before):
                bad.append(f"upper indices {i}, {i2} cross")
        for j in J:
            if not (th[j] < th[i] or th[i + 1] < th[j]):
                bad.append(f"primary {j} lands inside secondary {i}")
    for a, j in enumerate(J):
        if th[j] > j:
            bad.append(f"primary {j} moved right")
        for j2 in J[a + 1:]:
            if not th[j] < th[j2]:
                bad.append(f"primaries {j}, {j2} swapped")
    return bad


def motzkin_word(ip: IndexedPartition, th: Sequence[int]) -> str:
    letters = [""] * (ip.width + 1)
    for i in ip.upper:
        letters[th[i]] = "U"
        letters[th[i + 1]] = "D"
    for j in ip.prim:
        letters[th[j]] = "H"
    word = "".join(letters[1:])
    if len(word) != ip.width:
        raise InternalError("theta is not a permutation")
    return word


def is_motzkin(word: str) -> bool:
    h = 0
    for c in word:
        h += 1 if c == "U" else -1 if c == "D" else 0
        if h < 0:
            return False
    return h == 0


@dataclass
class Node:
    edge: int | None = None        # upper index labelling the edge from the parent
    children: list = field(default_factory=list)


@dataclass
class Tree:
    root: Node
    primary: int | None            # primary index recorded on the root, if any

    @property
    def planted(self) -> bool:
        return self.primary is None

    def edges(self) -> list[int]:
        out, stack = [], list(reversed(self.root.children))
        while stack:
            v = stack.pop()
            out.append(v.edge)
            stack.extend(reversed(v.children))
        return out


def forest(ip: IndexedPartition, th: Sequence[int]) -> list[Tree]:
    """One tree per H-free segment of the Motzkin word.

    The tree right after an H carries that primary index on its root; the
    segment before the first H has no primary and is kept as a planted tree.
    """
    inv = {th[x]: x for x in range(1, ip.width + 1)}
    prim = set(ip.prim)
    lower = {u + 1 for u in ip.upper}
    trees = [Tree(Node(), None)]
    stack = [trees[0].root]
    for pos in range(1, ip.width + 1):
        x = inv[pos]
        if x in prim:
            if len(stack) != 1:
                raise InternalError("primary part inside a Dyck segment")
            trees.append(Tree(Node(), x))
            stack = [trees[-1].root]
        elif x in lower:
            # a lower half closes the edge its own upper half opened
            if len(stack) < 2 or stack.pop().edge != x - 1:
                raise InternalError("halves are not properly nested")
        else:
            v = Node(edge=x)
            stack[-1].children.append(v)
            stack.append(v)
    if len(stack) != 1:
        raise InternalError("unbalanced segment")
    return trees


def word_of_forest(trees: list[Tree]) -> str:
    out = []

    def walk(v):
        for c in v.children:
            out.append("U")
            walk(c)
            out.append("D")

    for t in trees:
        if t.primary is not None:
            out.append("H")
        walk(t.root)
    return "".join(out)


def root_edges(trees: list[Tree]) -> list[int]:
    return sorted(c.edge for t in trees for c in t.root.children)


def dot_export(trees: list[Tree], ip: IndexedPartition, name: str = "forest") -> str:
    """Graphviz text: one cluster per tree, edges labelled by secondary parts."""
    lines = [f"digraph {name} {{", "  node [shape=circle, label=\"\", width=0.15];"]
    ids = iter(range(10 ** 9))

    def walk(v, me):
        for c in v.children:
            child = f"v{next(ids)}"
            lines.append(f"    {child};")
            label = format_part(ip.secondary(c.edge))
            lines.append(f"    {me} -> {child} [label=\"{label} (i={c.edge})\"];")
            walk(c, child)

    for k, t in enumerate(trees):
        lines.append(f"  subgraph cluster_{k} {{")
        root = f"v{next(ids)}"
        if t.planted:
            lines.append(f"    {root} [shape=point];")
            stem = f"v{next(ids)}"
            lines.append(f"    {stem} [shape=none, label=\"\"];")
            lines.append(f"    {stem} -> {root} [style=dashed];")
        else:
            label = format_part(ip.halves[t.primary])
            lines.append(f"    {root} [shape=box, width=0.3, label=\"{label} (j={t.primary})\"];")
        walk(t.root, root)
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def forest_report(nu: Sequence[Part], n: int) -> dict:
    ip = index_split(nu, n)
    th = theta(nu, n)
    trees = forest(ip, th)

    def tree_json(v):
        return [{"edge": c.edge, "part": format_part(ip.secondary(c.edge)),
                 "children": tree_json(c)} for c in v.children]

    return {
        "theta": list(th[1:ip.width + 1]),
        "word": motzkin_word(ip, th),
        "trees": [{"primary": t.primary,
                   "primary_part": None if t.primary is None else format_part(ip.halves[t.primary]),
                   "planted": t.planted,
                   "children": tree_json(t.root)} for t in trees],
    }

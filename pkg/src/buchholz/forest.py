"""Double forests and monotone double forests.

A forest is stored by immediate-predecessor links: every node has at most one
``le1_parent`` (its cover in the first order) and at most one ``le2_pred``
(its cover in the second order).  Both orders are the reflexive-transitive
closures of those links.  Nodes carry a natural-number label ``delta``; plain
double forests are the ones labelled 0 everywhere.

Instances are treated as immutable once built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Optional

__all__ = [
    "DoubleForest", "ValidationReport", "validate_double_forest", "validate_m2f",
    "height", "m2f_height", "canonical_form", "covering_exists", "is_covering",
    "tree_covering_exists", "disjoint_union", "substructure_above", "relabel",
    "singleton", "rooted_trees", "double_trees", "is_double_tree",
]


class DoubleForest:
    def __init__(self, nodes: Iterable[str], le1_parent: Mapping[str, Optional[str]] = None,
                 le2_pred: Mapping[str, Optional[str]] = None,
                 delta: Mapping[str, int] = None):
        self.nodes = tuple(nodes)
        le1_parent = le1_parent or {}
        le2_pred = le2_pred or {}
        delta = delta or {}
        self.le1_parent = {x: le1_parent.get(x) for x in self.nodes}
        self.le2_pred = {x: le2_pred.get(x) for x in self.nodes}
        self.delta = {x: int(delta.get(x, 0)) for x in self.nodes}

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"DoubleForest({len(self.nodes)} nodes)"

    def __eq__(self, other):
        if not isinstance(other, DoubleForest):
            return NotImplemented
        return (set(self.nodes) == set(other.nodes) and self.le1_parent == other.le1_parent
                and self.le2_pred == other.le2_pred and self.delta == other.delta)

    __hash__ = None

    # -- derived structure -------------------------------------------------

    @cached_property
    def children(self) -> dict:
        out = {x: [] for x in self.nodes}
        for x in self.nodes:
            p = self.le1_parent[x]
            if p is not None:
                out[p].append(x)
        return out

    @cached_property
    def roots(self) -> tuple:
        return tuple(x for x in self.nodes if self.le1_parent[x] is None)

    def ancestors1(self, x: str) -> list:
        """``x`` and its first-order predecessors, nearest first."""
        out = [x]
        while (x := self.le1_parent[x]) is not None:
            out.append(x)
        return out

    def ancestors2(self, x: str) -> list:
        out = [x]
        while (x := self.le2_pred[x]) is not None:
            out.append(x)
        return out

    def le1(self, x: str, y: str) -> bool:
        return x in self.ancestors1(y)

    def le2(self, x: str, y: str) -> bool:
        return x in self.ancestors2(y)

    def depth2(self, x: str) -> int:
        return len(self.ancestors2(x)) - 1

    @property
    def root(self) -> str:
        if len(self.roots) != 1:
            raise ValueError("not a tree: first order has %d minimal nodes" % len(self.roots))
        return self.roots[0]

    @property
    def order(self) -> int:
        """Label of the root of a tree."""
        return self.delta[self.root]

    def preorder(self) -> list:
        out = []
        stack = list(reversed(self.roots))
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(reversed(self.children[x]))
        return out

    @cached_property
    def _bits(self) -> "_Bits":
        return _Bits(self)

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {"nodes": [
            {"id": x, "delta": self.delta[x], "le1_parent": self.le1_parent[x],
             "le2_pred": self.le2_pred[x]}
            for x in self.nodes]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "DoubleForest":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            entries = data["nodes"]
            nodes = [str(e["id"]) for e in entries]
            parent = {str(e["id"]): e.get("le1_parent") for e in entries}
            pred = {str(e["id"]): e.get("le2_pred") for e in entries}
            delta = {str(e["id"]): e.get("delta", 0) for e in entries}
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed forest JSON: {exc}") from exc
        if len(set(nodes)) != len(nodes):
            raise ValueError("malformed forest JSON: duplicate node ids")
        for x in nodes:
            if not isinstance(delta[x], int) or isinstance(delta[x], bool) or delta[x] < 0:
                raise ValueError(f"malformed forest JSON: delta of {x!r} is not a natural number")
            for link in (parent[x], pred[x]):
                if link is not None and link not in parent:
                    raise ValueError(f"malformed forest JSON: {x!r} links to unknown node {link!r}")
        return cls(nodes, parent, pred, delta)

    def to_dot(self, name: str = "forest") -> str:
        lines = [f"digraph {name} {{"]
        for x in self.nodes:
            lines.append(f'  "{x}" [label="{x}:{self.delta[x]}"];')
        for x in self.nodes:
            if self.le1_parent[x] is not None:
                lines.append(f'  "{self.le1_parent[x]}" -> "{x}" [style=solid];')
        for x in self.nodes:
            if self.le2_pred[x] is not None:
                lines.append(f'  "{self.le2_pred[x]}" -> "{x}" [style=dashed];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def singleton(delta: int = 0, name: str = "r") -> DoubleForest:
    return DoubleForest([name], delta={name: delta})


# -- validation ------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    axiom: Optional[str] = None
    witness: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return f"fail({self.axiom}) witness={list(self.witness)}"


def _acyclic(links: Mapping[str, Optional[str]]) -> Optional[str]:
    for start in links:
        seen = {start}
        x = links[start]
        while x is not None:
            if x in seen:
                return start
            seen.add(x)
            x = links[x]
    return None


def validate_double_forest(f: DoubleForest) -> ValidationReport:
    nodes = set(f.nodes)
    if len(nodes) != len(f.nodes):
        return ValidationReport(False, "distinct-ids")
    for x in f.nodes:
        for link in (f.le1_parent[x], f.le2_pred[x]):
            if link is not None and link not in nodes:
                return ValidationReport(False, "unknown-node", (x, link))
    bad = _acyclic(f.le1_parent)
    if bad is not None:
        return ValidationReport(False, "le1-forest", (bad,))
    bad = _acyclic(f.le2_pred)
    if bad is not None:
        return ValidationReport(False, "le2-forest", (bad,))
    for x in f.nodes:
        anc1 = f.ancestors1(x)
        for a in f.ancestors2(x)[1:]:
            if a not in anc1:
                return ValidationReport(False, "nesting", (a, x))
            # every b strictly between a and x in the first order must lie above a in the second
            for b in anc1[1:anc1.index(a)]:
                if not f.le2(a, b):
                    return ValidationReport(False, "interpolation", (a, b, x))
    return ValidationReport(True)


def validate_m2f(f: DoubleForest) -> ValidationReport:
    report = validate_double_forest(f)
    if not report:
        return report
    for x in f.nodes:
        if f.delta[x] < 0:
            return ValidationReport(False, "natural-labels", (x,))
        p = f.le1_parent[x]
        if p is not None and f.delta[p] < f.delta[x]:
            return ValidationReport(False, "descending", (p, x))
        q = f.le2_pred[x]
        if q is not None and f.delta[q] != f.delta[x]:
            return ValidationReport(False, "constant-on-le2", (q, x))
    return ValidationReport(True)


def is_double_tree(f: DoubleForest) -> bool:
    """Both orders are trees: one first-order root, second order rooted there too."""
    if len(f.roots) != 1 or not validate_double_forest(f):
        return False
    r = f.roots[0]
    return all(f.ancestors2(x)[-1] == r for x in f.nodes)


# -- heights ---------------------------------------------------------------


def height(f: DoubleForest) -> int:
    """Size of the longest second-order chain, minus one."""
    if not f.nodes:
        raise ValueError("height of an empty forest")
    return max(f.depth2(x) for x in f.nodes)


def m2f_height(f: DoubleForest) -> int:
    """Largest ``v + k`` with a second-order chain of ``k + 1`` nodes labelled ``v``."""
    if not f.nodes:
        raise ValueError("height of an empty forest")
    return max(f.delta[x] + f.depth2(x) for x in f.nodes)


# -- isomorphism -----------------------------------------------------------


def _tree_code(f: DoubleForest, x: str, depth: dict) -> tuple:
    pred = f.le2_pred[x]
    pred_depth = depth[pred] if pred is not None else -1
    kids = []
    for c in f.children[x]:
        depth[c] = depth[x] + 1
        kids.append(_tree_code(f, c, depth))
    kids.sort()
    return (f.delta[x], pred_depth, tuple(kids))


def canonical_form(f: DoubleForest) -> tuple:
    """Isomorphism invariant: equal for two valid forests iff they are
    isomorphic (orders and labels preserved)."""
    report = validate_m2f(f)
    if not report:
        raise ValueError(f"canonical_form needs a valid monotone double forest: {report}")
    codes = []
    for r in f.roots:
        depth = {r: 0}
        codes.append(_tree_code(f, r, depth))
    codes.sort()
    return tuple(codes)


# -- coverings -------------------------------------------------------------


class _Bits:
    """Index-based view of a forest used by the covering search."""

    def __init__(self, f: DoubleForest):
        order = f.preorder()
        self.ids = order
        index = {x: i for i, x in enumerate(order)}
        n = len(order)
        self.n = n
        self.parent = [-1 if f.le1_parent[x] is None else index[f.le1_parent[x]] for x in order]
        self.pred = [-1 if f.le2_pred[x] is None else index[f.le2_pred[x]] for x in order]
        self.delta = [f.delta[x] for x in order]
        # above1[i]: nodes strictly above i in the first order; above2 likewise
        above1 = [0] * n
        above2 = [0] * n
        for i in reversed(range(n)):
            p = self.parent[i]
            if p >= 0:
                above1[p] |= above1[i] | (1 << i)
        for i in range(n):
            j = self.pred[i]
            while j >= 0:
                above2[j] |= 1 << i
                j = self.pred[j]
        self.above1 = above1
        self.above2 = above2
        self.size1 = [bin(m).count("1") for m in above1]
        self.size2 = [bin(m).count("1") for m in above2]
        self.depth2 = [0] * n
        for i in range(n):
            if self.pred[i] >= 0:
                self.depth2[i] = self.depth2[self.pred[i]] + 1
        max_delta = max(self.delta, default=0)
        # at_least[d]: nodes labelled >= d
        self.at_least = [sum(1 << i for i in range(n) if self.delta[i] >= d)
                         for d in range(max_delta + 2)]


def _search_order(s: _Bits) -> list:
    # preorder with larger first-order subtrees first
    kids = [[] for _ in range(s.n)]
    roots = []
    for i in range(s.n):
        (kids[s.parent[i]] if s.parent[i] >= 0 else roots).append(i)
    out = []
    stack = sorted(roots, key=lambda i: s.size1[i])
    while stack:
        i = stack.pop()
        out.append(i)
        stack.extend(sorted(kids[i], key=lambda j: s.size1[j]))
    return out


def _covering_map(s: _Bits, t: _Bits) -> Optional[list]:
    if s.n == 0:
        return []
    if s.n > t.n:
        return None
    full = (1 << t.n) - 1
    max_t_delta = len(t.at_least) - 2
    if max(s.delta) > max_t_delta:
        return None
    if max(d + k for d, k in zip(s.delta, s.depth2)) > max(d + k for d, k in zip(t.delta, t.depth2)):
        return None
    seq = _search_order(s)
    h = [-1] * s.n

    def candidates(i: int, used: int) -> int:
        p = s.parent[i]
        mask = t.above1[h[p]] if p >= 0 else full
        q = s.pred[i]
        if q >= 0:
            mask &= t.above2[h[q]]
        return mask & t.at_least[s.delta[i]] & ~used

    def place(k: int, used: int) -> bool:
        if k == len(seq):
            return True
        i = seq[k]
        mask = candidates(i, used)
        need1, need2 = s.size1[i], s.size2[i]
        while mask:
            low = mask & -mask
            mask ^= low
            z = low.bit_length() - 1
            if t.size1[z] < need1 or t.size2[z] < need2:
                continue
            free = ~(used | low)
            if bin(t.above1[z] & free).count("1") < need1:
                continue
            if bin(t.above2[z] & free).count("1") < need2:
                continue
            h[i] = z
            if place(k + 1, used | low):
                return True
        h[i] = -1
        return False

    return h if place(0, 0) else None


def covering_exists(s: DoubleForest, t: DoubleForest) -> Optional[dict]:
    """A covering of ``s`` into ``t`` as a node map, or None.

    A covering is an injection preserving both orders forward and never
    decreasing labels.
    """
    sb, tb = s._bits, t._bits
    h = _covering_map(sb, tb)
    if h is None:
        return None
    return {sb.ids[i]: tb.ids[z] for i, z in enumerate(h)}


def is_covering(h: Mapping[str, str], s: DoubleForest, t: DoubleForest) -> bool:
    """Check a candidate map pair by pair."""
    if set(h) != set(s.nodes) or len(set(h.values())) != len(h):
        return False
    if not all(y in t.delta for y in h.values()):
        return False
    for x in s.nodes:
        if s.delta[x] > t.delta[h[x]]:
            return False
        for y in s.nodes:
            if s.le1(x, y) and not t.le1(h[x], h[y]):
                return False
            if s.le2(x, y) and not t.le2(h[x], h[y]):
                return False
    return True


def _tree_forest(tree: Mapping[str, Optional[str]]) -> DoubleForest:
    return DoubleForest(list(tree), tree)


def tree_covering_exists(s: Mapping[str, Optional[str]], t: Mapping[str, Optional[str]]) -> bool:
    """Covering between plain rooted trees given as ``node -> parent`` maps."""
    return covering_exists(_tree_forest(s), _tree_forest(t)) is not None


# -- constructions ---------------------------------------------------------


def relabel(f: DoubleForest, prefix: str) -> DoubleForest:
    def m(x):
        return None if x is None else prefix + x
    return DoubleForest(
        [m(x) for x in f.nodes],
        {m(x): m(f.le1_parent[x]) for x in f.nodes},
        {m(x): m(f.le2_pred[x]) for x in f.nodes},
        {m(x): f.delta[x] for x in f.nodes})


def disjoint_union(ts: Iterable[DoubleForest]) -> DoubleForest:
    """Disjoint union; component ``i`` has its ids prefixed with ``"i."``."""
    nodes, parent, pred, delta = [], {}, {}, {}
    for i, t in enumerate(ts):
        r = relabel(t, f"{i}.")
        nodes.extend(r.nodes)
        parent.update(r.le1_parent)
        pred.update(r.le2_pred)
        delta.update(r.delta)
    return DoubleForest(nodes, parent, pred, delta)


def substructure_above(t: DoubleForest, x: str) -> DoubleForest:
    """Induced substructure on the nodes first-order above ``x`` (inclusive)."""
    if x not in t.delta:
        raise KeyError(f"unknown node {x!r}")
    keep = [y for y in t.nodes if x in t.ancestors1(y)]
    inside = set(keep)

    def cut(link):
        return link if link in inside else None
    return DoubleForest(
        keep,
        {y: cut(t.le1_parent[y]) for y in keep},
        {y: cut(t.le2_pred[y]) for y in keep},
        {y: t.delta[y] for y in keep})


# -- small-structure enumeration ---------------------------------------------


@lru_cache(maxsize=None)
def _tree_shapes(n: int) -> tuple:
    """Canonical codes of rooted trees with ``n`` nodes: a code is the sorted
    tuple of its children's codes."""
    if n == 1:
        return ((),)
    return tuple(tuple(sorted(kids)) for kids in _shape_multisets(n - 1, None))


@lru_cache(maxsize=None)
def _shape_multisets(total: int, bound) -> tuple:
    # multisets of shapes with sizes summing to total, every shape <= bound
    if total == 0:
        return ((),)
    out = []
    for size in range(1, total + 1):
        for shape in _tree_shapes(size):
            key = (size, shape)
            if bound is not None and key > bound:
                continue
            for rest in _shape_multisets(total - size, key):
                out.append((shape,) + rest)
    return tuple(out)


def _shape_forest(shape: tuple) -> DoubleForest:
    nodes, parent = [], {}

    def build(code, up):
        x = str(len(nodes))
        nodes.append(x)
        parent[x] = up
        for c in code:
            build(c, x)
    build(shape, None)
    return DoubleForest(nodes, parent)


def rooted_trees(n: int) -> list:
    """One representative of every rooted tree with ``n`` nodes up to
    isomorphism, as a ``DoubleForest`` with an empty second order."""
    return [_shape_forest(shape) for shape in _tree_shapes(n)]


def double_trees(n: int, max_height: Optional[int] = None) -> list:
    """One representative of every double tree with ``n`` nodes up to isomorphism."""
    seen = {}
    for tree in rooted_trees(n):
        order = [x for x in tree.preorder() if tree.le1_parent[x] is not None]
        pred = {}

        def above2(a, x):
            while x is not None:
                if x == a:
                    return True
                x = pred.get(x)
            return False

        def go(k, depth):
            if k == len(order):
                f = DoubleForest(tree.nodes, tree.le1_parent, pred)
                seen.setdefault(canonical_form(f), f)
                return
            x = order[k]
            anc = tree.ancestors1(x)
            for j, a in enumerate(anc[1:], start=1):
                # interpolation: everything strictly between a and x must sit above a
                if not all(above2(a, b) for b in anc[1:j]):
                    continue
                d = depth[a] + 1
                if max_height is not None and d > max_height:
                    continue
                pred[x] = a
                depth[x] = d
                go(k + 1, depth)
                del pred[x], depth[x]

        go(0, {tree.roots[0]: 0})
    return [seen[k] for k in sorted(seen)]

"""Exhaustive checks of the reduction theorem, its corollary and the supporting
lemmas on finite fragments, plus controlled bad-sequence experiments.

Each suite walks a bounded space, counts the instances it looked at and
collects counterexamples.  A suite passes iff it found none.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from buchholz import oracles
from buchholz.collapse import coll, exp, psi, translate, translate_sum
from buchholz.forest import (
    DoubleForest, canonical_form, covering_exists, disjoint_union, double_trees, height,
    is_covering, is_double_tree, m2f_height, relabel, rooted_trees, substructure_above,
    tree_covering_exists, validate_m2f,
)
from buchholz.order import compare, leq, lt
from buchholz.ot import (
    DEFAULT_ENUM_LIMIT, ResourceLimitExceeded, all_terms, enumerate_ot, g_set, in_ot_restricted,
    is_ot, ot_terms_of_norm, u_subterms,
)
from buchholz.term import D, OMEGA, ZERO, Sum, Term, make_sum, max_subscript, norm, order, parts, show

__all__ = [
    "VerificationReport", "Budget", "SUITES", "run_suite", "verify_main_theorem",
    "verify_corollary", "verify_lemma_suite", "BadSequenceResult",
    "longest_controlled_bad_sequence", "random_m2f",
]


class Budget:
    """Caps on checked instances and wall time; exceeding either raises."""

    def __init__(self, max_instances: Optional[int] = None, time_budget: Optional[float] = None):
        self.max_instances = max_instances
        self.time_budget = time_budget
        self.count = 0
        self.start = time.monotonic()

    def tick(self, n: int = 1):
        self.count += n
        if self.max_instances is not None and self.count > self.max_instances:
            raise ResourceLimitExceeded(f"instance cap {self.max_instances} exceeded")
        if self.time_budget is not None and time.monotonic() - self.start > self.time_budget:
            raise ResourceLimitExceeded(f"time budget {self.time_budget}s exceeded")


@dataclass
class VerificationReport:
    suite: str
    params: dict
    instances: int = 0
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self, timing: bool = False) -> dict:
        out = {"suite": self.suite, "params": self.params, "instances": self.instances,
               "violations": self.violations, "stats": self.stats, "passed": self.passed}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.stats.items()))
        return (f"{status} {self.suite}: {self.instances} instances, "
                f"{len(self.violations)} violations{extra}")


def _principals(k, n):
    return [a for a in enumerate_ot(k, n) if isinstance(a, D)]


def _pair_violation(a, b, fa, fb, h):
    return {"a": show(a), "b": show(b), "forest_a": fa.to_json(), "forest_b": fb.to_json(),
            "covering": h}


# -- theorem and corollary ---------------------------------------------------


def _check_pairs(items, forests, lo, hi):
    """Pairs (items[i], items[j]) for lo <= i < hi."""
    count = coverings = converse = 0
    bad = []
    for i in range(lo, hi):
        a, fa = items[i], forests[i]
        for b, fb in zip(items, forests):
            count += 1
            h = covering_exists(fa, fb)
            below = leq(a, b)
            if h is not None:
                coverings += 1
                if not below:
                    bad.append(_pair_violation(a, b, fa, fb, h))
            elif below:
                converse += 1
    return count, coverings, converse, bad


def _shard_task(args):
    kind, k, n, lo, hi = args
    items, forests = _pair_space(kind, k, n)
    return _check_pairs(items, forests, lo, hi)


def _pair_space(kind, k, n):
    if kind == "main":
        items = _principals(k, n)
        return items, [translate(a) for a in items]
    items = [a for a in enumerate_ot(k, n, order_zero_only=True) if a != ZERO]
    return items, [translate_sum(a) for a in items]


def _run_pairs(kind, name, max_subscript, max_norm, budget, jobs):
    report = VerificationReport(name, {"max_sub": max_subscript, "max_norm": max_norm})
    items, forests = _pair_space(kind, max_subscript, max_norm)
    budget.tick(len(items) ** 2)
    if jobs > 1 and len(items) > 1:
        step = -(-len(items) // jobs)
        tasks = [(kind, max_subscript, max_norm, lo, min(lo + step, len(items)))
                 for lo in range(0, len(items), step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_shard_task, tasks))
    else:
        results = [_check_pairs(items, forests, 0, len(items))]
    for count, coverings, converse, bad in results:
        report.instances += count
        report.stats["coverings"] = report.stats.get("coverings", 0) + coverings
        report.stats["leq_without_covering"] = report.stats.get("leq_without_covering", 0) + converse
        report.violations.extend(bad)
    report.stats["terms"] = len(items)
    return report


def verify_main_theorem(max_subscript: int, max_norm: int, budget: Budget = None,
                        jobs: int = 1) -> VerificationReport:
    """Covering between the trees of two principal terms forces the terms to be ordered."""
    return _run_pairs("main", "main", max_subscript, max_norm, budget or Budget(), jobs)


def verify_corollary(max_subscript: int, max_norm: int, budget: Budget = None,
                     jobs: int = 1) -> VerificationReport:
    return _run_pairs("corollary", "corollary", max_subscript, max_norm, budget or Budget(), jobs)


# -- ordering suites -----------------------------------------------------------


def _relation_matrix(terms):
    n = len(terms)
    m = np.zeros((n, n), dtype=np.int8)
    for i, a in enumerate(terms):
        for j, b in enumerate(terms):
            m[i, j] = int(compare(a, b))
    return m


def _suite_linear_order(p, budget):
    terms = all_terms(p["max_sub"], p["max_norm"])
    budget.tick(len(terms) ** 2)
    report = VerificationReport("linear-order", {})
    m = _relation_matrix(terms)
    n = len(terms)
    for i in range(n):
        if m[i, i] != 0:
            report.violations.append({"irreflexive": show(terms[i])})
        for j in range(n):
            if (m[i, j] == 0) != (terms[i] == terms[j]):
                report.violations.append({"equal_iff_identical": [show(terms[i]), show(terms[j])]})
            if m[i, j] != -m[j, i]:
                report.violations.append({"antisymmetric": [show(terms[i]), show(terms[j])]})
            if bool(m[i, j] < 0) != oracles.prec_by_clauses(terms[i], terms[j]):
                report.violations.append({"clauses": [show(terms[i]), show(terms[j])]})
    report.instances = n * n

    def transitive(idx, label):
        less = (m[np.ix_(idx, idx)] < 0).astype(np.int64)
        chained = (less @ less) > 0
        broken = np.argwhere(chained & (less == 0))
        for i, k in broken[:10]:
            report.violations.append({label: [show(terms[idx[i]]), show(terms[idx[k]])]})
        return len(idx) ** 3

    small = [i for i, a in enumerate(terms) if norm(a) <= p["triples_norm"]]
    report.stats["triples_full"] = transitive(small, "transitive")
    rng = random.Random(p["seed"])
    sample = sorted(rng.sample(range(n), min(p["sample"], n)))
    report.stats["triples_sample"] = transitive(sample, "transitive_sample")
    report.stats["terms"] = n
    return report


def _suite_order_monotonicity(p, budget):
    terms = all_terms(p["max_sub"], p["max_norm"])
    budget.tick(len(terms) ** 2)
    report = VerificationReport("order-monotonicity", {})
    for a in terms:
        for b in terms:
            if order(a) < order(b):
                report.instances += 1
                if not lt(a, b):
                    report.violations.append({"a": show(a), "b": show(b)})
    return report


def _assignment_maps(m, n):
    return itertools.product(range(n), repeat=m)


def _suite_lexicographic(p, budget):
    terms = [a for a in enumerate_ot(p["max_sub"], p["max_norm"]) if a != ZERO]
    report = VerificationReport("lexicographic", {})
    for a in terms:
        xs = parts(a)
        for b in terms:
            ys = parts(b)
            for pmap in _assignment_maps(len(xs), len(ys)):
                budget.tick()
                shared = [sum(1 for q in pmap if q == pmap[i]) > 1 for i in range(len(xs))]
                if not all(leq(xs[i], ys[pmap[i]]) for i in range(len(xs))):
                    continue
                if any(shared[i] and xs[i] == ys[pmap[i]] for i in range(len(xs))):
                    continue
                report.instances += 1
                injective = len(set(pmap)) == len(pmap)
                ok = leq(a, b) if injective else lt(a, b)
                if not ok:
                    report.violations.append({"a": show(a), "b": show(b), "map": list(pmap)})
    return report


# -- ordinal-term closure suites -----------------------------------------------


def _ot(p):
    return enumerate_ot(p["max_sub"], p["max_norm"])


def _suite_subscript_raising(p, budget):
    report = VerificationReport("subscript-raising", {})
    for a in _ot(p):
        if not isinstance(a, D):
            continue
        for v in list(range(a.index, p["max_sub"] + 2)) + [OMEGA]:
            budget.tick()
            report.instances += 1
            if not is_ot(D(v, a.arg)):
                report.violations.append({"term": show(a), "raised_to": str(v)})
    return report


def _suite_prefix(p, budget):
    report = VerificationReport("prefix", {})
    for a in _ot(p):
        if isinstance(a, D) and isinstance(a.arg, Sum):
            for m in range(1, len(a.arg.parts)):
                budget.tick()
                report.instances += 1
                b = D(a.index, make_sum(a.arg.parts[:m]))
                if not is_ot(b):
                    report.violations.append({"term": show(a), "prefix": show(b)})
    return report


def _suite_g_subset(p, budget):
    report = VerificationReport("g-subset", {})
    for a in _ot(p):
        for u in list(range(p["max_sub"] + 2)) + [OMEGA]:
            budget.tick()
            report.instances += 1
            for c in g_set(u, a):
                if not is_ot(c):
                    report.violations.append({"term": show(a), "u": str(u), "member": show(c)})
    return report


def _suite_descending_sum(p, budget):
    report = VerificationReport("descending-sum", {})
    for a in _ot(p):
        if isinstance(a, Sum):
            budget.tick()
            report.instances += 1
            orders = [order(x) for x in a.parts]
            if any(x < y for x, y in zip(orders, orders[1:])):
                report.violations.append({"term": show(a)})
    return report


def _suite_lusubterm(p, budget):
    report = VerificationReport("lusubterm", {})
    for a in _ot(p):
        if not isinstance(a, D):
            continue
        for b in u_subterms(a.index, a):
            if order(b) == a.index:
                budget.tick()
                report.instances += 1
                if not leq(b, a):
                    report.violations.append({"term": show(a), "subterm": show(b)})
    return report


def _suite_ld0domega(p, budget):
    report = VerificationReport("lD0Domega", {})
    terms = _ot(p)
    k = p["max_sub"]
    bounds = [(D(0, D(n + 1, ZERO)), n + 1) for n in range(k + 1)] + [(D(0, D(OMEGA, ZERO)), OMEGA)]
    for a in terms:
        for bound, level in bounds:
            budget.tick()
            report.instances += 1
            if lt(a, bound) and not (order(a) == 0 and in_ot_restricted(a, level)):
                report.violations.append({"term": show(a), "bound": show(bound)})
        if isinstance(a, D) and a.index == 0:
            for n in range(k + 1):
                if order(a.arg) <= n:
                    report.instances += 1
                    if not in_ot_restricted(a, n + 1):
                        report.violations.append({"term": show(a), "level": n + 1})
    return report


# -- collapse suites -----------------------------------------------------------


def _translated(p):
    items = _principals(p["max_sub"], p["max_norm"])
    return [(a, translate(a)) for a in items]


def _decompositions(p):
    """(u, args, trees of args) for every principal D_u(args) with args != 0."""
    for a, _ in _translated(p):
        if a.arg != ZERO:
            xs = parts(a.arg)
            yield a, a.index, xs, [translate(x) for x in xs]


def _suite_collapse_order(p, budget):
    report = VerificationReport("collapse-order", {})
    for a, t in _translated(p):
        budget.tick()
        report.instances += 1
        if not validate_m2f(t) or len(t.roots) != 1 or t.order != order(a):
            report.violations.append({"term": show(a), "check": "translate"})
    for a, u, xs, ts in _decompositions(p):
        budget.tick()
        report.instances += 1
        r = psi(u, ts)
        if not validate_m2f(r) or r.order != u:
            report.violations.append({"term": show(a), "check": "psi"})
        top = {t.order for t in ts}
        if len(top) == 1 and min(top) >= 1:
            c = coll(ts)
            report.instances += 1
            if not validate_m2f(c) or c.order != min(top) - 1:
                report.violations.append({"term": show(a), "check": "coll"})
        w = max(t.order for t in ts)
        e = exp(w, ts)
        report.instances += 1
        if not validate_m2f(e) or e.order != w:
            report.violations.append({"term": show(a), "check": "exp"})
    return report


def _suite_norm_identity(p, budget):
    report = VerificationReport("norm-identity", {})
    for a, u, xs, ts in _decompositions(p):
        if u < ts[-1].order:
            budget.tick()
            report.instances += 1
            expected = sum(len(t) for t in ts) + ts[0].order - u
            got = len(psi(u, ts))
            if got != expected:
                report.violations.append({"term": show(a), "nodes": got, "expected": expected})
    return report


def _suite_norm_bound(p, budget):
    report = VerificationReport("norm-bound", {})
    for a, t in _translated(p):
        budget.tick()
        report.instances += 1
        n = max_subscript(a)
        if len(t) > (n + 1) * norm(a):
            report.violations.append({"term": show(a), "nodes": len(t), "bound": (n + 1) * norm(a)})
    return report


def _suite_height(p, budget):
    report = VerificationReport("height", {})
    for a, t in _translated(p):
        budget.tick()
        report.instances += 1
        if m2f_height(t) != max_subscript(a):
            report.violations.append({"term": show(a), "height": m2f_height(t)})
        if t.order == 0 and m2f_height(t) != height(t):
            report.violations.append({"term": show(a), "check": "order-0 heights agree"})
    for a, u, xs, ts in _decompositions(p):
        report.instances += 1
        want = max([u] + [m2f_height(t) for t in ts])
        if m2f_height(psi(u, ts)) != want:
            report.violations.append({"term": show(a), "check": "psi height"})
    for a in enumerate_ot(p["max_sub"], p["max_norm"], order_zero_only=True):
        if a == ZERO:
            continue
        budget.tick()
        report.instances += 1
        f = translate_sum(a)
        if not is_double_tree(f) or height(f) != max_subscript(a) + 1:
            report.violations.append({"term": show(a), "check": "sum height"})
    return report


def _psi_picture(u, ts):
    """Direct description of psi(u, ts) when every input has order > u: a spine
    r_{u+1} < ... < r_v of new nodes with each input hanging off the spine node
    matching its order."""
    v = ts[0].order
    spine = [f"s{w}" for w in range(u + 1, v + 1)]
    nodes, parent, pred, delta = list(spine), {}, {}, {}
    for k, x in enumerate(spine):
        parent[x] = spine[k - 1] if k else None
        pred[x] = spine[k - 1] if k else None
        delta[x] = u
    for i, t in enumerate(ts):
        for x in t.nodes:
            y = f"{i}:{x}"
            nodes.append(y)
            px = t.le1_parent[x]
            parent[y] = f"{i}:{px}" if px is not None else f"s{t.order}"
            qx = t.le2_pred[x]
            if qx is not None:
                pred[y] = f"{i}:{qx}"
            elif t.delta[x] > u:
                pred[y] = f"s{t.delta[x]}"
            else:
                pred[y] = None
            delta[y] = min(t.delta[x], u)
    return DoubleForest(nodes, parent, pred, delta)


def _suite_psi_picture(p, budget):
    report = VerificationReport("psi-picture", {})
    for a, u, xs, ts in _decompositions(p):
        if u < ts[-1].order:
            budget.tick()
            report.instances += 1
            if canonical_form(psi(u, ts)) != canonical_form(_psi_picture(u, ts)):
                report.violations.append({"term": show(a)})
    return report


def _suite_lminsubterm(p, budget):
    report = VerificationReport("lminsubterm", {})
    for a, t in _translated(p):
        for v in sorted(set(t.delta.values())):
            level = [x for x in t.nodes if t.delta[x] == v]
            inside = set(level)
            minimal = [x for x in level if not any(y in inside for y in t.ancestors1(x)[1:])]
            candidates = [b for b in u_subterms(v, a) if isinstance(b, D) and b.index == v]
            codes = {canonical_form(translate(b)) for b in candidates}
            for x in minimal:
                budget.tick()
                report.instances += 1
                if canonical_form(substructure_above(t, x)) not in codes:
                    report.violations.append({"term": show(a), "node": x, "order": v})
    return report


def _tree_pool(p):
    """Distinct translated trees, grouped by order."""
    pool = {}
    for _, t in _translated(p):
        pool.setdefault(canonical_form(t), t)
    by_order = {}
    for key in sorted(pool):
        t = pool[key]
        by_order.setdefault(t.order, []).append(t)
    return by_order


def _multisets(trees, budget_nodes):
    """Nonempty multisets of ``trees`` whose sizes sum to at most ``budget_nodes``."""
    out = []

    def go(start, chosen, used):
        if chosen:
            out.append(list(chosen))
        for i in range(start, len(trees)):
            if used + len(trees[i]) <= budget_nodes:
                chosen.append(trees[i])
                go(i, chosen, used + len(trees[i]))
                chosen.pop()
    go(0, [], 0)
    return out


def _coll_inputs(p):
    out = []
    for w, trees in sorted(_tree_pool(p).items()):
        if w >= 1:
            out.extend((w - 1, ts) for ts in _multisets(trees, p["max_nodes"] - 1))
    return out


def _embedded_copy(result, t, prefix, labels):
    """Is ``t``, ids prefixed, an induced substructure of ``result``?"""
    ids = {x: prefix + x for x in t.nodes}
    inside = set(ids.values())
    for x, y in ids.items():
        up1 = result.le1_parent[y] if result.le1_parent[y] in inside else None
        up2 = result.le2_pred[y] if result.le2_pred[y] in inside else None
        if up1 != ids.get(t.le1_parent[x]) or up2 != ids.get(t.le2_pred[x]):
            return False
        if labels and result.delta[y] != t.delta[x]:
            return False
    return True


def _check_root_adjunction(report, result, ts, u, labels, local):
    """Shared checks for coll and exp: a tree of order u, each input embedded,
    and the part above a node ``x`` of input i equal to that of the input when
    ``local(t, x)`` holds."""
    if not validate_m2f(result) or len(result.roots) != 1 or result.order != u:
        report.violations.append({"inputs": [t.to_json() for t in ts], "part": 1})
        return
    for i, t in enumerate(ts):
        prefix = f"{i}."
        if not _embedded_copy(result, t, prefix, labels):
            report.violations.append({"inputs": [s.to_json() for s in ts], "part": 2, "component": i})
        for x in t.nodes:
            if local(t, x) and substructure_above(result, prefix + x) != relabel(substructure_above(t, x), prefix):
                report.violations.append({"inputs": [s.to_json() for s in ts], "part": 3, "node": x})


def _suite_lcoll(p, budget):
    report = VerificationReport("lcoll", {})
    for u, ts in _coll_inputs(p):
        budget.tick()
        report.instances += 1
        _check_root_adjunction(report, coll(ts), ts, u, labels=False,
                               local=lambda t, x: t.delta[x] <= u)
    return report


def _suite_lexp(p, budget):
    report = VerificationReport("lexp", {})
    pool = _tree_pool(p)
    for u in range(p["max_sub"] + 1):
        trees = [t for w, ts in sorted(pool.items()) if w <= u for t in ts]
        for ts in _multisets(trees, p["max_nodes"] - 1):
            budget.tick()
            report.instances += 1
            _check_root_adjunction(report, exp(u, ts), ts, u, labels=True,
                                   local=lambda t, x: True)
    return report


def _suite_lcases(p, budget):
    report = VerificationReport("lcases", {})
    # the bound is on the pair: |coll(ts)| + |coll(ss)| <= max_nodes
    by_u = {}
    for u, ts in _coll_inputs({**p, "max_nodes": p["max_nodes"] - 2}):
        by_u.setdefault(u, []).append((ts, coll(ts), disjoint_union(ts)))
    covered = 0
    for u, items in sorted(by_u.items()):
        for ts, a1, sum_t in items:
            for ss, a2, sum_s in items:
                if len(a1) + len(a2) > p["max_nodes"]:
                    continue
                budget.tick()
                report.instances += 1
                if covering_exists(a1, a2) is None:
                    continue
                covered += 1
                if covering_exists(sum_t, sum_s) is not None:
                    continue
                if any(s.delta[x] == u and covering_exists(a1, substructure_above(s, x)) is not None
                       for s in ss for x in s.nodes):
                    continue
                report.violations.append({"left": [t.to_json() for t in ts],
                                          "right": [s.to_json() for s in ss]})
    report.stats["covering_pairs"] = covered
    return report


# -- forest suites -------------------------------------------------------------


def random_m2f(rng: random.Random, n: int, max_delta: int = 2, p_root: float = 0.25,
               p_pred: float = 0.5) -> DoubleForest:
    """A random valid monotone double forest on ``n`` nodes with shuffled ids."""
    while True:
        parent = [None]
        for i in range(1, n):
            parent.append(None if rng.random() < p_root else rng.randrange(i))
        pred = [None] * n
        delta = [0] * n
        for i in range(n):
            anc = []
            j = parent[i]
            while j is not None:
                anc.append(j)
                j = parent[j]
            if anc and rng.random() < p_pred:
                pred[i] = rng.choice(anc)
            if pred[i] is not None:
                delta[i] = delta[pred[i]]
            elif parent[i] is not None:
                delta[i] = rng.randint(0, delta[parent[i]])
            else:
                delta[i] = rng.randint(0, max_delta)
        names = [f"n{k}" for k in rng.sample(range(100), n)]
        order = list(range(n))
        rng.shuffle(order)
        f = DoubleForest(
            [names[i] for i in order],
            {names[i]: (None if parent[i] is None else names[parent[i]]) for i in range(n)},
            {names[i]: (None if pred[i] is None else names[pred[i]]) for i in range(n)},
            {names[i]: delta[i] for i in range(n)})
        if validate_m2f(f):
            return f


def _shuffled_copy(rng, f):
    names = {x: f"m{k}" for x, k in zip(f.nodes, rng.sample(range(100), len(f)))}
    order = list(f.nodes)
    rng.shuffle(order)

    def m(x):
        return None if x is None else names[x]
    return DoubleForest([names[x] for x in order], {names[x]: m(f.le1_parent[x]) for x in f.nodes},
                        {names[x]: m(f.le2_pred[x]) for x in f.nodes},
                        {names[x]: f.delta[x] for x in f.nodes})


def _drop_leaves(rng, f):
    keep = list(f.nodes)
    for _ in range(rng.randint(1, max(1, len(keep) - 1))):
        leaves = [x for x in keep if not any(f.le1_parent[y] == x for y in keep)]
        if len(keep) > 1:
            keep.remove(rng.choice(leaves))
    return DoubleForest(keep, {x: f.le1_parent[x] for x in keep},
                        {x: f.le2_pred[x] for x in keep}, {x: f.delta[x] for x in keep})


def _mutate(rng, f):
    for _ in range(50):
        x = rng.choice(f.nodes)
        delta = dict(f.delta)
        pred = dict(f.le2_pred)
        if rng.random() < 0.5:
            delta[x] = max(0, delta[x] + rng.choice([-1, 1]))
        else:
            pred[x] = rng.choice([None] + f.ancestors1(x)[1:])
        g = DoubleForest(f.nodes, f.le1_parent, pred, delta)
        if validate_m2f(g):
            return g
    return f


def _random_pairs(p):
    rng = random.Random(p["seed"])
    pairs = []
    for k in range(p["samples"]):
        t = random_m2f(rng, rng.randint(1, p["max_nodes"]))
        kind = k % 4
        if kind == 0:
            s = random_m2f(rng, rng.randint(1, p["max_nodes"]))
        elif kind == 1:
            s = _shuffled_copy(rng, t)
        elif kind == 2:
            s = _shuffled_copy(rng, _drop_leaves(rng, t))
        else:
            s = _mutate(rng, t)
        pairs.append((s, t))
    return pairs


def _suite_covering_oracle(p, budget):
    report = VerificationReport("covering-oracle", {})
    found = 0
    for s, t in _random_pairs(p):
        budget.tick()
        report.instances += 1
        h = covering_exists(s, t)
        ref = oracles.covering_bruteforce(s, t)
        found += h is not None
        if (h is None) != (ref is None) or (h is not None and not is_covering(h, s, t)):
            report.violations.append({"s": s.to_json(), "t": t.to_json()})
    report.stats["coverings"] = found
    return report


def _suite_canonical_oracle(p, budget):
    report = VerificationReport("canonical-oracle", {})
    same = 0
    for s, t in _random_pairs(p):
        budget.tick()
        report.instances += 1
        iso = oracles.isomorphic_bruteforce(s, t)
        same += iso
        if (canonical_form(s) == canonical_form(t)) != iso:
            report.violations.append({"s": s.to_json(), "t": t.to_json()})
    report.stats["isomorphic"] = same
    return report


def _suite_ltc(p, budget):
    report = VerificationReport("ltc", {})
    trees = [t for n in range(1, p["max_nodes"] + 1) for t in double_trees(n, max_height=1)]
    for s in trees:
        for t in trees:
            budget.tick()
            report.instances += 1
            double = covering_exists(s, t) is not None
            plain = tree_covering_exists(s.le1_parent, t.le1_parent)
            if double != plain:
                report.violations.append({"s": s.to_json(), "t": t.to_json()})
    report.stats["double_trees"] = len(trees)
    return report


def _suite_height_vs_norm(p, budget):
    report = VerificationReport("height-vs-norm", {})
    sources = [t for n in range(1, p["max_nodes"] + 1) for t in double_trees(n)]
    targets = [t for n in range(1, p["max_nodes"] + 2) for t in double_trees(n)]
    for s in sources:
        for t in targets:
            if height(t) >= len(s) - 1:
                budget.tick()
                report.instances += 1
                h = covering_exists(s, t)
                if h is None or not is_covering(h, s, t):
                    report.violations.append({"p": s.to_json(), "q": t.to_json()})
    return report


# -- registry ------------------------------------------------------------------

TERM_DEFAULTS = {"max_sub": 2, "max_norm": 6}

SUITES: dict = {
    "linear-order": (_suite_linear_order,
                     {"max_sub": 2, "max_norm": 5, "triples_norm": 4, "sample": 200, "seed": 0}),
    "order-monotonicity": (_suite_order_monotonicity, {"max_sub": 2, "max_norm": 5}),
    "lexicographic": (_suite_lexicographic, {"max_sub": 2, "max_norm": 5}),
    "subscript-raising": (_suite_subscript_raising, TERM_DEFAULTS),
    "prefix": (_suite_prefix, TERM_DEFAULTS),
    "g-subset": (_suite_g_subset, TERM_DEFAULTS),
    "descending-sum": (_suite_descending_sum, TERM_DEFAULTS),
    "lusubterm": (_suite_lusubterm, TERM_DEFAULTS),
    "lD0Domega": (_suite_ld0domega, TERM_DEFAULTS),
    "collapse-order": (_suite_collapse_order, TERM_DEFAULTS),
    "norm-identity": (_suite_norm_identity, TERM_DEFAULTS),
    "norm-bound": (_suite_norm_bound, TERM_DEFAULTS),
    "height": (_suite_height, TERM_DEFAULTS),
    "psi-picture": (_suite_psi_picture, TERM_DEFAULTS),
    "lminsubterm": (_suite_lminsubterm, TERM_DEFAULTS),
    "lcoll": (_suite_lcoll, {"max_sub": 2, "max_norm": 6, "max_nodes": 10}),
    "lexp": (_suite_lexp, {"max_sub": 2, "max_norm": 6, "max_nodes": 8}),
    "lcases": (_suite_lcases, {"max_sub": 2, "max_norm": 6, "max_nodes": 10}),
    "covering-oracle": (_suite_covering_oracle, {"samples": 500, "max_nodes": 6, "seed": 0}),
    "canonical-oracle": (_suite_canonical_oracle, {"samples": 500, "max_nodes": 6, "seed": 0}),
    "ltc": (_suite_ltc, {"max_nodes": 5}),
    "height-vs-norm": (_suite_height_vs_norm, {"max_nodes": 5}),
}

PAIR_SUITES = {"main": verify_main_theorem, "corollary": verify_corollary}


def suite_names() -> list:
    return sorted(PAIR_SUITES) + sorted(SUITES)


def verify_lemma_suite(name: str, params: dict = None, budget: Budget = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(suite_names())}")
    fn, defaults = SUITES[name]
    p = dict(defaults)
    for key, value in (params or {}).items():
        if value is not None and key in defaults:
            p[key] = value
    budget = budget or Budget()
    start = time.monotonic()
    report = fn(p, budget)
    report.suite = name
    report.params = p
    report.elapsed = time.monotonic() - start
    return report


def run_suite(name: str, params: dict = None, budget: Budget = None, jobs: int = 1) -> VerificationReport:
    """Run any suite by id, main theorem and corollary included."""
    if name in PAIR_SUITES:
        p = {"max_sub": 2, "max_norm": 6}
        for key, value in (params or {}).items():
            if value is not None and key in p:
                p[key] = value
        start = time.monotonic()
        report = PAIR_SUITES[name](p["max_sub"], p["max_norm"], budget, jobs)
        report.elapsed = time.monotonic() - start
        return report
    return verify_lemma_suite(name, params, budget)


# -- controlled bad sequences --------------------------------------------------


@dataclass
class BadSequenceResult:
    c: int
    domain: str
    sequence: list
    length: int
    exhausted: bool
    steps: int = 0
    capped: bool = False

    def to_json(self) -> dict:
        return {"c": self.c, "domain": self.domain, "sequence": self.sequence,
                "length": self.length, "exhausted": self.exhausted, "steps": self.steps,
                "capped": self.capped}


def _domain(domain: str, height_cap, max_subscript: int):
    """(items_of_norm, norm, below, render); ``below(p, q)`` means p sits below q."""
    if domain == "ot-terms":
        return (lambda n: ot_terms_of_norm(max_subscript, n)), norm, leq, show
    if domain == "trees":
        def items(n):
            ts = rooted_trees(n)
            if height_cap is not None:
                ts = [t for t in ts if max(len(t.ancestors1(x)) for x in t.nodes) - 1 <= height_cap]
            return ts
    elif domain == "double-trees":
        def items(n):
            return double_trees(n, max_height=height_cap)
    else:
        raise ValueError(f"unknown domain {domain!r}")
    return items, len, lambda s, t: covering_exists(s, t) is not None, lambda t: t.to_json()


def longest_controlled_bad_sequence(c: int, domain: str, length_cap: int,
                                    height_cap: Optional[int] = None, max_subscript: int = 1,
                                    max_steps: int = 200_000) -> BadSequenceResult:
    """Depth-first search for the longest sequence q_0, q_1, ... with
    ``norm(q_i) <= c * (i + 1)`` and no ``i < j`` such that q_i sits below q_j.

    For ordinal terms this is a strictly descending controlled sequence.  The
    pool of candidates grows by norm only as far as the search reaches.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    items_of_norm, size, below, render = _domain(domain, height_cap, max_subscript)
    items: list = []
    loaded = 0
    best: list = []
    steps = 0
    capped = False
    truncated = False
    memo = {}

    def load(limit):
        nonlocal loaded
        while loaded < limit:
            loaded += 1
            items.extend(items_of_norm(loaded))
            if len(items) > DEFAULT_ENUM_LIMIT:
                raise ResourceLimitExceeded(
                    f"more than {DEFAULT_ENUM_LIMIT} {domain} of norm <= {loaded}")

    def dominated(i, j):
        key = (i, j)
        if key not in memo:
            memo[key] = below(items[i], items[j])
        return memo[key]

    def go(seq):
        nonlocal best, steps, capped, truncated
        if len(seq) > len(best):
            best = list(seq)
        if len(seq) == length_cap:
            # nothing longer is wanted, stop the whole search
            truncated = True
            return
        limit = c * (len(seq) + 1)
        load(limit)
        for j in range(len(items)):
            if size(items[j]) > limit:
                break
            if any(dominated(i, j) for i in seq):
                continue
            steps += 1
            if steps > max_steps:
                capped = True
                return
            seq.append(j)
            go(seq)
            seq.pop()
            if capped or truncated:
                return

    go([])
    return BadSequenceResult(c, domain, [render(items[i]) for i in best], len(best),
                             exhausted=not (capped or truncated), steps=steps, capped=capped)

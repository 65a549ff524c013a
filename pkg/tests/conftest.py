import random
import sys

from hypothesis import settings, strategies as st

from buchholz.forest import DoubleForest
from buchholz.term import D, OMEGA, ZERO, make_sum

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

indices = st.one_of(st.integers(0, 3), st.just(OMEGA))


def _extend(children):
    principal = st.builds(D, indices, children)
    return st.one_of(principal, st.lists(principal, min_size=2, max_size=3).map(make_sum))


terms = st.recursive(st.just(ZERO), _extend, max_leaves=8)
finite_terms = st.recursive(
    st.just(ZERO),
    lambda ch: st.one_of(
        st.builds(D, st.integers(0, 2), ch),
        st.lists(st.builds(D, st.integers(0, 2), ch), min_size=2, max_size=3).map(make_sum)),
    max_leaves=6)


@st.composite
def m2f(draw, max_nodes=6, max_delta=2):
    """A random valid monotone double forest."""
    from buchholz.verify import random_m2f
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_nodes))
    return random_m2f(random.Random(seed), n, max_delta=max_delta)


def forest(links, delta=None):
    """Build a forest from ``{node: (le1_parent, le2_pred)}``."""
    nodes = list(links)
    return DoubleForest(nodes, {x: links[x][0] for x in nodes}, {x: links[x][1] for x in nodes},
                        delta or {})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

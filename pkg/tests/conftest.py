import itertools
import random
from fractions import Fraction

import pytest

from cograph_spectra.cotree import Graph, parse_cotree
from cograph_spectra.oracle import exact_inertia

SEVEN_LEAF = "(J (U (J L L) (J L L)) (U (J L L) L))"
# 2K2 joined with 2K1; its balanced completion is (2,2,2)
SIX_LEAF = "(J (U (J L L) (J L L)) (U L L))"
STAR = "(J (U L L) L)"


@pytest.fixture
def seven_leaf():
    return parse_cotree(SEVEN_LEAF)


@pytest.fixture
def six_leaf():
    return parse_cotree(SIX_LEAF)


@pytest.fixture
def star():
    return parse_cotree(STAR)


@pytest.fixture
def rng():
    return random.Random(20240611)


def has_induced_p4(g: Graph) -> bool:
    """Brute-force scan over ordered 4-tuples."""
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        if a > d:
            continue
        e = g.has_edge
        if e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(b, d) or e(a, d)):
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def bound_violations(bounds, mat) -> list:
    """Indices k whose bound misses the k-th largest eigenvalue of ``mat``.

    Uses only exact inertia at the endpoints: beta_k >= c iff at least k
    eigenvalues are >= c, and beta_k > c iff at least k are > c.
    """
    cache = {}

    def counts(c):
        c = Fraction(c)
        if c not in cache:
            plus, zero, _ = exact_inertia(mat, -c)
            cache[c] = (plus, plus + zero)  # (#> c, #>= c)
        return cache[c]

    bad = []
    for k, b in enumerate(bounds.bounds, 1):
        gt, ge = counts(b.lo)
        lower_ok = (gt if b.lo_open else ge) >= k
        gt, ge = counts(b.hi)
        upper_ok = (ge if b.hi_open else gt) < k
        if not (lower_ok and upper_ok):
            bad.append(k)
    return bad


# --- acceptance report -----------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

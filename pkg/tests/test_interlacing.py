import logging
from fractions import Fraction

import pytest

from conftest import bound_violations
from cograph_spectra.balanced import full_spectrum
from cograph_spectra.cotree import (
    CotreeStructureError,
    balance_completion,
    balanced_cotree,
    expand_to_graph,
    parse_cotree,
    recognize_cograph,
)
from cograph_spectra.diagonalize import multiplicity
from cograph_spectra.generate import random_cotree
from cograph_spectra.interlacing import (
    Bound,
    EigenBounds,
    check_bounds,
    estimate_spectrum,
    interlace,
    refine,
)
from cograph_spectra.oracle import adjacency, eigenvalues_bisect

F = Fraction


def _render(bounds):
    return [b.render() for b in bounds]


def test_bound_basics():
    b = Bound(0, 1, lo_open=True)
    assert b.render() == "(0, 1]"
    assert not b.contains(0) and b.contains(1) and b.contains(F(1, 2))
    assert Bound(-1, -1).render() == "[-1]"
    with pytest.raises(ValueError):
        Bound(1, 0)
    with pytest.raises(ValueError):
        Bound(0, 0, lo_open=True)
    assert Bound(-1, 1).intersect(Bound(0, 5, lo_open=True)) == Bound(0, 1, lo_open=True)
    assert Bound(0, 1, lo_open=True).within(Bound(0, 1))
    assert not Bound(0, 1).within(Bound(0, 1, lo_open=True))


def test_interlace_examples():
    b = interlace({5: 1, 3: 1, 1: 2, -1: 4}, 6)
    assert _render(b) == ["[1, 5]", "[1, 3]", "[-1, 1]", "[-1, 1]", "[-1]", "[-1]"]
    assert _render(interlace({1: 1, -1: 1}, 1)) == ["[-1, 1]"]
    with pytest.raises(ValueError):
        interlace({1: 1, -1: 1}, 2)


def test_interlace_consecutive():
    spec = full_spectrum((2, 2, 2))
    lam = [v for v, m in spec.descending() for _ in range(m)]
    b = interlace(spec, 7)
    for k, bound in enumerate(b, 1):
        assert (bound.hi, bound.lo) == (lam[k - 1], lam[k])


def test_k2_inside_k3():
    bounds = interlace(full_spectrum((3,)), 2)
    assert _render(bounds) == ["[-1, 2]", "[-1]"]
    refined = refine(bounds, parse_cotree("(J L L)"))
    assert _render(refined) == ["(0, 2]", "[-1]"]
    assert check_bounds(refined, [1, -1]) == []


def test_six_leaf_estimate(six_leaf):
    params, bounds = estimate_spectrum(six_leaf)
    assert params.a == (2, 2, 2)
    # the graph is 2K2 joined with 2K1: eigenvalues (1 +- sqrt 33)/2, 1, 0, -1, -1
    assert _render(bounds) == ["[1, 5]", "(0, 1]", "[0]", "[-1]", "[-1]", "[-3, -1)"]
    assert bound_violations(bounds, adjacency(expand_to_graph(six_leaf))) == []


def test_join_of_stars():
    t = parse_cotree("(J (U L L L) (U L L L) L)")
    params, bounds = estimate_spectrum(t)
    assert params.a == (3, 3)
    assert bounds[1].hi <= 6
    assert bounds[7].lo >= -3 and bounds[7].hi == -1 and bounds[7].hi_open
    # only one eigenvalue is positive, so beta_2 is already pinned at or below 0
    assert bounds[2].hi <= 0
    assert bound_violations(bounds, adjacency(expand_to_graph(t))) == []


def test_estimate_k2_and_leaf():
    _, bounds = estimate_spectrum(parse_cotree("(J L L)"))
    assert check_bounds(bounds, [1, -1]) == []
    params, bounds = estimate_spectrum(parse_cotree("L"))
    assert params.a == (1,) and _render(bounds) == ["[0]"]


def test_estimate_balanced_target_is_exact():
    t = balanced_cotree((2, 3, 2))
    _, bounds = estimate_spectrum(t)
    assert all(b.is_exact for b in bounds)
    lam = [v for v, m in full_spectrum((2, 3, 2)).descending() for _ in range(m)]
    assert [b.lo for b in bounds] == lam


def test_estimate_rejects_union_root():
    with pytest.raises(CotreeStructureError):
        estimate_spectrum(parse_cotree("(U L L)"))


def test_refine_rejects_size_mismatch():
    with pytest.raises(ValueError):
        refine(interlace({1: 1, -1: 1}, 1), parse_cotree("(J L L)"))


def test_refine_flags_contradiction():
    wrong = EigenBounds(2, (Bound(-1, -1), Bound(-1, -1)))
    with pytest.raises(ValueError):
        refine(wrong, parse_cotree("(J L L)"))


def test_soundness_random(rng):
    for _ in range(150):
        t = random_cotree(rng, rng.randint(2, 24))
        _, bounds = estimate_spectrum(t)
        assert bound_violations(bounds, adjacency(expand_to_graph(t))) == []
        for k in range(1, bounds.m):
            assert bounds[k].hi >= bounds[k + 1].hi and bounds[k].lo >= bounds[k + 1].lo


def test_refine_never_widens(rng):
    for _ in range(100):
        t = random_cotree(rng, rng.randint(2, 30))
        raw_spec = full_spectrum(balance_completion(t).params)
        if raw_spec.n == t.n:
            continue
        raw = interlace(raw_spec, t.n)
        refined = refine(raw, t)
        for a, b in zip(refined, raw):
            assert a.within(b)
            assert a.lo_open or not b.lo_open or a.lo > b.lo
            assert a.hi_open or not b.hi_open or a.hi < b.hi


@pytest.mark.parametrize("a", [(2, 2, 2), (3, 2), (2, 3, 2), (3, 3)])
def test_one_leaf_deleted_chain(a):
    full = balanced_cotree(a)
    spec = full_spectrum(a)
    lam = [v for v, m in spec.descending() for _ in range(m)]
    # drop the last leaf
    t = recognize_cograph(expand_to_graph(full).induced(range(full.n - 1)))
    items = eigenvalues_bisect(adjacency(expand_to_graph(t)), F(1, 2**20))
    beta = []
    for it in sorted(items, key=lambda it: it.lo, reverse=True):
        beta.extend([it] * it.count)
    assert len(beta) == len(lam) - 1
    for k, it in enumerate(beta):
        assert lam[k] >= it.lo and it.hi >= lam[k + 1]
    bounds = refine(interlace(spec, t.n), t)
    assert bound_violations(bounds, adjacency(expand_to_graph(t))) == []


def test_exactness_harvesting(rng):
    for _ in range(80):
        t = random_cotree(rng, rng.randint(2, 30))
        _, bounds = estimate_spectrum(t)
        exact = {}
        for b in bounds:
            if b.is_exact:
                exact[b.lo] = exact.get(b.lo, 0) + 1
        for c, count in exact.items():
            assert count <= multiplicity(t, c)
        assert exact.get(0, 0) == multiplicity(t, 0)
        assert exact.get(-1, 0) == multiplicity(t, -1)


def test_width_diagnostic(caplog):
    # a long path through alternating levels forces a much larger completion
    t = parse_cotree("(J (U (J (U (J (U L L L L) L) L) L) L) L L L L L)")
    with caplog.at_level(logging.WARNING, logger="cograph_spectra.interlacing"):
        params, _ = estimate_spectrum(t)
    assert params.order > 16 * t.n
    assert "wide" in caplog.text


def test_json_round_trip(six_leaf):
    _, bounds = estimate_spectrum(six_leaf)
    assert EigenBounds.from_json(bounds.to_json()) == bounds
    assert bounds.render().splitlines()[1] == "beta_2 in (0, 1]"

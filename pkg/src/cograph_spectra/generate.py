"""Random cotrees for property checks and the ``verify`` command."""

from __future__ import annotations

import random

from .cotree import Cotree, Kind


def random_cotree(rng: random.Random, n: int, *, connected: bool = True) -> Cotree:
    """Random normalized cotree on ``n`` leaves.

    Branching varies per node, so both shallow bushy trees and deep narrow
    ones show up.  ``connected`` forces a join root.
    """
    if n < 1:
        raise ValueError("n must be positive")
    root_kind = Kind.JOIN if connected else rng.choice((Kind.JOIN, Kind.UNION))
    root: list = [None]
    work = [(n, root_kind, root, 0)]
    while work:
        size, kind, slot, idx = work.pop()
        if size == 1:
            slot[idx] = "L"
            continue
        cap = min(size, rng.choice((2, 2, 3, 4, size)))
        k = rng.randint(2, cap)
        cuts = sorted(rng.sample(range(1, size), k - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        kids: list = [None] * k
        slot[idx] = (kind, kids)
        for i, part in enumerate(parts):
            work.append((part, kind.opposite, kids, i))
    return Cotree.from_nested(root[0])

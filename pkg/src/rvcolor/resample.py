"""Moser-Tardos resampling for "no witness set is monochromatic"."""
from __future__ import annotations

import heapq
import random
from collections import defaultdict
from typing import Sequence

from .errors import InvalidArgumentError, ResampleCapExceeded

Target = tuple[int, Sequence[int]]


def as_rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def resample_until_distinct(
    targets: Sequence[Target],
    palette: int,
    seed=None,
    cap: int | None = None,
) -> tuple[dict[int, int], int]:
    """Color the union of the witness sets so none of them is monochromatic.

    Every witness vertex starts with a uniform color from ``range(palette)``.
    While a witness set is monochromatic, the one belonging to the
    lowest-id target is recolored from scratch. Raises
    :class:`ResampleCapExceeded` after ``cap`` resamplings (default
    ``100 * len(targets)``).
    """
    if palette < 2:
        raise InvalidArgumentError("palette must have at least 2 colors")
    order = sorted(targets, key=lambda t: t[0])
    witness = [tuple(sorted(x)) for _, x in order]
    for (u, _), x in zip(order, witness):
        if len(x) < 2:
            raise InvalidArgumentError(f"witness set of target {u} has fewer than 2 vertices")
    rng = as_rng(seed)
    if cap is None:
        cap = 100 * len(order)

    assignment = {v: 0 for x in witness for v in x}
    for v in sorted(assignment):
        assignment[v] = rng.randrange(palette)

    users = defaultdict(list)
    for i, x in enumerate(witness):
        for v in x:
            users[v].append(i)

    def bad(i: int) -> bool:
        x = witness[i]
        first = assignment[x[0]]
        return all(assignment[v] == first for v in x)

    heap = [i for i in range(len(witness)) if bad(i)]
    queued = set(heap)
    resamples = 0
    while heap:
        i = heapq.heappop(heap)
        queued.discard(i)
        if not bad(i):
            continue
        if resamples >= cap:
            raise ResampleCapExceeded(resamples, cap)
        for v in witness[i]:
            assignment[v] = rng.randrange(palette)
        resamples += 1
        for v in witness[i]:
            for j in users[v]:
                if j not in queued and bad(j):
                    queued.add(j)
                    heapq.heappush(heap, j)
    return assignment, resamples

"""Closed-form upper and lower bounds on the rainbow vertex-connection number.

Regimes, by order n and minimum degree delta:

========  ==========================================  =========================
tag       condition                                   bound
========  ==========================================  =========================
Complete  delta = n - 1                               0
High      delta >= sqrt(n-1) - 1 and n >= 290         3n/(delta+1) + 5
Mid       16 <= delta <= sqrt(n-1) - 2                4n/(delta+1) + 5
Low       6 <= delta <= 15, delta <= sqrt(n-1) - 2    4n/(delta+1) + C(delta)
Tree      3 <= delta <= 5                             n - leaf guarantee
Fallback  everything else                             n - 2
========  ==========================================  =========================

The square-root comparisons are done in exact integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgumentError

HIGH_MIN_ORDER = 290
HIGH_PALETTE = 7
MID_C = 5.0

REGIME_TAGS = ("Complete", "High", "Mid", "Low", "Tree", "Fallback")


@dataclass(frozen=True)
class Regime:
    tag: str
    theorem_applies: bool
    bound_value: float


def ceil_third(delta: int) -> int:
    return -(-delta // 3)


def c_delta(delta: int) -> float:
    """Additive constant of the low-degree bound (natural logarithm)."""
    if delta <= 3:
        raise InvalidArgumentError("C(delta) is singular for delta <= 3")
    poly = delta**3 + 2 * delta**2 + 3
    exponent = (3 * math.log(poly) - 3 * (math.log(3) - 1)) / (delta - 3)
    return math.exp(exponent) - 2


def fringe_constant(delta: int) -> float:
    """C(delta) as used by the split-regime coloring: 5 from delta = 16 on."""
    return MID_C if delta >= 16 else c_delta(delta)


def split_palette(delta: int) -> int:
    """Integer palette for the fringe in the split regime: ceil(C(delta)) + 2."""
    return math.ceil(fringe_constant(delta)) + 2


def lll_margin(delta: int, palette: int) -> float:
    """e * p * (d + 1) for the monochromatic-witness events.

    ``p = palette^(1 - ceil(delta/3))`` and ``d + 1 = ((delta+1)^2 - 1) * ceil(delta/3) + 1``;
    the local lemma applies when the result is below 1.
    """
    if palette < 2:
        raise InvalidArgumentError("palette must have at least 2 colors")
    if delta < 1:
        raise InvalidArgumentError("delta must be positive")
    k = ceil_third(delta)
    return math.e * palette ** (1 - k) * (((delta + 1) ** 2 - 1) * k + 1)


def leaf_guarantee(n: int, delta: int) -> float:
    """Known spanning-tree leaf guarantees for minimum degree 3, 4, 5."""
    if delta == 3:
        return n / 4 + 2
    if delta == 4:
        return 2 * n / 5 + 8 / 5
    if delta == 5:
        return n / 2 + 2
    raise InvalidArgumentError("leaf guarantee only known here for delta in {3, 4, 5}")


def tree_bound(n: int, delta: int) -> float:
    return n - leaf_guarantee(n, delta)


def is_high(n: int, delta: int) -> bool:
    # delta >= sqrt(n-1) - 1
    return (delta + 1) ** 2 >= n - 1


def is_below_mid_ceiling(n: int, delta: int) -> bool:
    # delta <= sqrt(n-1) - 2
    return (delta + 2) ** 2 <= n - 1


def regime_predicates(n: int, delta: int) -> dict[str, bool]:
    """Every regime's membership test, each excluding the complete case."""
    complete = delta == n - 1
    rest = not complete
    return {
        "Complete": complete,
        "High": rest and is_high(n, delta) and n >= HIGH_MIN_ORDER,
        "Mid": rest and 16 <= delta and is_below_mid_ceiling(n, delta),
        "Low": rest and 6 <= delta <= 15 and is_below_mid_ceiling(n, delta),
        "Tree": rest and 3 <= delta <= 5,
        "Fallback": rest
        and not (is_high(n, delta) and n >= HIGH_MIN_ORDER)
        and not (delta >= 6 and is_below_mid_ceiling(n, delta))
        and not 3 <= delta <= 5,
    }


def theorem_bound(n: int, delta: int) -> Regime:
    if n < 2 or not 1 <= delta < n:
        raise InvalidArgumentError(f"need n >= 2 and 1 <= delta < n, got n={n}, delta={delta}")
    tag = next(t for t, hit in regime_predicates(n, delta).items() if hit)
    if tag == "Complete":
        return Regime(tag, True, 0.0)
    if tag == "High":
        return Regime(tag, True, 3 * n / (delta + 1) + 5)
    if tag == "Mid":
        return Regime(tag, True, 4 * n / (delta + 1) + MID_C)
    if tag == "Low":
        return Regime(tag, True, 4 * n / (delta + 1) + c_delta(delta))
    if tag == "Tree":
        return Regime(tag, True, tree_bound(n, delta))
    return Regime(tag, False, float(n - 2))


def dominator_size_bound(n: int, delta: int) -> float:
    return 3 * n / (delta + 1) - 2


def edge_budget(n: int, delta: int) -> float:
    return n * (delta + 1 / (delta + 1))


def caro_blocks(n: int, delta: int) -> int:
    """Number m of inner blocks of the clique chain with these parameters."""
    if delta < 3 or (n - 2) % (delta + 1) != 0 or (n - 2) // (delta + 1) < 2:
        raise InvalidArgumentError(f"(n={n}, delta={delta}) is not realised by the clique chain")
    return (n - 2) // (delta + 1) - 2


def h_family_diameter(n: int, delta: int) -> float:
    caro_blocks(n, delta)
    return (3 * n - delta - 7) / (delta + 1)


def h_family_lower_bound(n: int, delta: int) -> float:
    """(3n - 6)/(delta + 1) - 2, which equals the chain's diameter minus one."""
    caro_blocks(n, delta)
    value = (3 * n - 6) / (delta + 1) - 2
    if not math.isclose(value, h_family_diameter(n, delta) - 1):
        raise AssertionError("lower bound and diameter - 1 disagree")
    return value


def large_delta_bound(n: int, delta: int, b: float) -> float:
    if b <= 2.5:
        raise InvalidArgumentError("b must exceed 2.5")
    if delta < 2:
        raise InvalidArgumentError("delta must be at least 2")
    return b * math.log(delta) * n / delta

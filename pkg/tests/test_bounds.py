import math

import pytest

from rvcolor.bounds import (
    c_delta,
    ceil_third,
    dominator_size_bound,
    edge_budget,
    fringe_constant,
    h_family_diameter,
    h_family_lower_bound,
    is_below_mid_ceiling,
    is_high,
    large_delta_bound,
    leaf_guarantee,
    lll_margin,
    regime_predicates,
    split_palette,
    theorem_bound,
    tree_bound,
)
from rvcolor.errors import InvalidArgumentError


def test_c_delta_closed_forms():
    # exponent at delta = 6 is ln(291/3) + 1, so C(6) = 97e - 2
    assert c_delta(6) == pytest.approx(97 * math.e - 2, abs=1e-9)
    assert c_delta(6) == pytest.approx(261.6733, abs=1e-4)
    assert c_delta(15) == pytest.approx(math.exp((math.log(1276) + 1) / 4) - 2, abs=1e-9)
    assert c_delta(15) == pytest.approx(5.675, abs=0.01)
    assert c_delta(16) == pytest.approx(4.85, abs=0.01) and c_delta(16) <= 5


@pytest.mark.parametrize("delta", [0, 3, -1])
def test_c_delta_singular(delta):
    with pytest.raises(InvalidArgumentError):
        c_delta(delta)


@pytest.mark.parametrize("delta", range(6, 16))
def test_c_delta_identity(delta):
    lhs = math.e * (c_delta(delta) + 2) ** (1 - delta / 3) * (delta**3 + 2 * delta**2 + 3) / 3
    assert lhs == pytest.approx(1, abs=1e-9)


def test_fringe_constant_switches_at_16():
    assert fringe_constant(16) == 5 and fringe_constant(40) == 5
    assert fringe_constant(15) == c_delta(15)
    assert split_palette(16) == 7
    assert split_palette(6) == math.ceil(97 * math.e - 2) + 2


def test_lll_margins():
    assert lll_margin(16, 7) == pytest.approx(math.e * 1729 / 16807, rel=1e-12)
    assert lll_margin(16, 7) == pytest.approx(0.280, abs=0.001)
    assert lll_margin(6, 7) == pytest.approx(math.e * 97 / 7, rel=1e-12)
    assert lll_margin(6, 7) > 1


@pytest.mark.parametrize("delta", range(6, 16))
def test_split_palette_satisfies_local_lemma(delta):
    assert lll_margin(delta, split_palette(delta)) < 1


def test_lll_margin_arguments():
    with pytest.raises(InvalidArgumentError):
        lll_margin(6, 1)


def test_theorem_bound_examples():
    r = theorem_bound(290, 17)
    assert (r.tag, r.theorem_applies) == ("High", True)
    assert r.bound_value == pytest.approx(3 * 290 / 18 + 5)
    r = theorem_bound(1000, 20)
    assert r.tag == "Mid" and r.bound_value == pytest.approx(4000 / 21 + 5)
    assert r.bound_value == pytest.approx(195.48, abs=0.01)
    r = theorem_bound(100, 3)
    assert r.tag == "Tree" and r.bound_value == pytest.approx(73)
    assert theorem_bound(10, 9).bound_value == 0
    r = theorem_bound(10, 2)
    assert r.tag == "Fallback" and not r.theorem_applies and r.bound_value == 8


def test_theorem_bound_low_regime():
    r = theorem_bound(2000, 6)
    assert r.tag == "Low"
    assert r.bound_value == pytest.approx(8000 / 7 + c_delta(6))


def test_regime_boundaries_use_exact_square_roots():
    # sqrt(289) = 16 exactly: (16+1)^2 = 289 >= n - 1 = 289
    assert is_high(290, 16)
    assert not is_high(291, 15)
    # delta <= sqrt(n-1) - 2 with n - 1 = 324: 16 + 2 = 18
    assert is_below_mid_ceiling(325, 16)
    assert not is_below_mid_ceiling(324, 16)


GRID = [
    (n, delta)
    for n in (2, 5, 30, 289, 290, 291, 500, 2000)
    for delta in (1, 2, 3, 4, 5, 6, 10, 15, 16, 17, 25, 40)
    if delta < n
]


@pytest.mark.parametrize("n,delta", GRID)
def test_regimes_partition_the_plane(n, delta):
    hits = [tag for tag, hit in regime_predicates(n, delta).items() if hit]
    assert len(hits) == 1
    assert theorem_bound(n, delta).tag == hits[0]


def test_tree_bounds():
    assert leaf_guarantee(100, 3) == 27
    assert tree_bound(100, 4) == pytest.approx(60 - 1.6)
    assert tree_bound(100, 5) == pytest.approx(48)
    with pytest.raises(InvalidArgumentError):
        leaf_guarantee(100, 6)


def test_simple_bounds():
    assert ceil_third(7) == 3 and ceil_third(6) == 2
    assert dominator_size_bound(12, 2) == 10
    assert dominator_size_bound(5, 4) == 1
    assert edge_budget(12, 2) == pytest.approx(28)
    assert edge_budget(10, 9) == pytest.approx(91)


def test_h_family():
    assert h_family_lower_bound(14, 3) == 7
    assert h_family_diameter(14, 3) == 8
    assert h_family_lower_bound(22, 4) == 10
    # the m = 0 chain: (30 - 6)/4 - 2 = 4 = diameter - 1
    assert h_family_lower_bound(10, 3) == 4
    assert h_family_diameter(10, 3) == 5
    with pytest.raises(InvalidArgumentError):
        h_family_lower_bound(15, 3)


def test_large_delta_bound():
    assert large_delta_bound(1000, 100, 2.6) == pytest.approx(2.6 * math.log(100) * 10)
    assert large_delta_bound(1000, 100, 2.6) == pytest.approx(119.7, abs=0.05)
    assert large_delta_bound(100, 100, 2.6) == pytest.approx(11.97, abs=0.01)
    with pytest.raises(InvalidArgumentError):
        large_delta_bound(100, 10, 2.5)

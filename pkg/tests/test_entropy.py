"""Entropy values, their exact algebra, and the entropy-power inequality."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entrodist.entropy import (
    GVParams,
    LogQValue,
    binomial_sum_index_set,
    entropy_distance,
    entropy_weight,
    gv_parameters,
    product_entropy_weight,
    qary_entropy,
    qary_entropy_inv,
    qary_entropy_power,
    surface_count,
    triangle_factor,
    weight_entropy,
    weight_entropy_argmax,
    weight_entropy_preimage,
)
from entrodist.errors import InfeasibleParameterError
from entrodist.gf import GFVector, field_make


def test_surface_count_values():
    assert surface_count(2, 7, 3) == 35
    assert surface_count(5, 9, 0) == 1
    assert surface_count(3, 4, 3) == math.comb(4, 3) * 2**3 == 32
    with pytest.raises(InfeasibleParameterError):
        surface_count(2, 4, 5)


def test_weight_entropy_values():
    v = weight_entropy(2, 7, 3)
    assert v.surface == 35
    assert abs(float(v) - math.log2(35)) < 1e-12
    assert weight_entropy(2, 9, 9).surface == 1 and float(weight_entropy(2, 9, 9)) == 0.0
    assert weight_entropy(3, 4, 4).surface == 16  # n log_q(q-1) at q=3, n=4


def test_weight_entropy_argmax_against_exhaustive():
    for q in (2, 3, 4, 5):
        for n in range(1, 16):
            surfaces = [surface_count(q, n, i) for i in range(n + 1)]
            best = max(surfaces)
            got = weight_entropy_argmax(q, n)
            exhaustive = tuple(i for i, s in enumerate(surfaces) if s == best)
            assert got == exhaustive, (q, n, got, exhaustive)


def test_weight_entropy_argmax_examples():
    assert weight_entropy_argmax(2, 7) == (3, 4)
    assert weight_entropy_argmax(3, 4) == (3,)
    assert weight_entropy_argmax(2, 1) == (0, 1)


def test_preimage_interval():
    # surfaces at (2,7): 1 7 21 35 35 21 7 1
    assert weight_entropy_preimage(2, 7, LogQValue(2, 7)) == (1, 6)
    assert weight_entropy_preimage(2, 7, LogQValue.zero(2)) == (0, 7)
    assert weight_entropy_preimage(2, 7, LogQValue(2, 35)) == (3, 4)
    with pytest.raises(InfeasibleParameterError):
        weight_entropy_preimage(2, 7, LogQValue(2, 36))


def test_preimage_is_exact_filter():
    for q in (2, 3):
        for n in range(1, 10):
            for i in range(n + 1):
                h = weight_entropy(q, n, i)
                d1, d2 = weight_entropy_preimage(q, n, h)
                members = {j for j in range(n + 1) if surface_count(q, n, j) >= h.surface}
                assert members == set(range(d1, d2 + 1))


def test_entropy_weight_and_distance_vectors():
    f = field_make(2)
    x = GFVector(f, (1, 1, 1, 0, 0, 0, 0))
    assert entropy_weight(x).surface == 35
    assert entropy_distance(x, x).surface == 1
    ones = GFVector(f, (1,) * 6)
    assert entropy_weight(ones).surface == 1  # all-one binary word weighs zero


def test_product_entropy_weight():
    f = field_make(2)
    x1 = GFVector(f, (1, 1, 1))
    x2 = GFVector(f, (1, 0, 1, 1, 0, 1, 0))
    assert product_entropy_weight(x1, x2).surface == 1 * 35
    z1 = GFVector(f, (0, 0, 0))
    z2 = GFVector(f, (0,) * 7)
    assert product_entropy_weight(z1, z2).surface == 1
    y1 = GFVector(f, (1, 1, 0))
    y2 = GFVector(f, (1, 1, 0, 0, 0, 0, 0))
    assert product_entropy_weight(y1, y2).surface == 3 * 21


def test_triangle_factor():
    assert triangle_factor(0, 0, 5) == 1
    assert triangle_factor(1, 2, 4) == Fraction(3, 4)
    assert triangle_factor(3, 3, 6) == Fraction(1, 2)
    with pytest.raises(InfeasibleParameterError):
        triangle_factor(5, 0, 4)


def test_qary_entropy_basics():
    assert qary_entropy(2, 0.5) == pytest.approx(1.0, abs=1e-12)
    assert qary_entropy(3, 0.0) == 0.0
    assert qary_entropy_inv(2, 1.0) == pytest.approx(0.5, abs=1e-10)
    assert qary_entropy_inv(2, 0.0) == pytest.approx(0.0, abs=1e-10)
    for q in (2, 3, 5):
        for y in (0.1, 0.4, 0.7, 0.95):
            x = qary_entropy_inv(q, y)
            assert qary_entropy(q, x) == pytest.approx(y, abs=1e-9)


def test_entropy_power_exact_values():
    assert qary_entropy_power(2, 6, 0) == 1
    assert qary_entropy_power(2, 4, 2) == 16
    assert qary_entropy_power(3, 3, 2) == 27
    # float cross-check against q^(n H_q(k/n))
    for q, n, k in [(2, 10, 3), (3, 9, 4), (4, 8, 5)]:
        exact = qary_entropy_power(q, n, k)
        approx = q ** (n * qary_entropy(q, k / n))
        assert float(exact) == pytest.approx(approx, rel=1e-9)


def test_entropy_power_inequality_exhaustive():
    # sum over the balanced index set never exceeds the entropy power;
    # equality exactly at the balance point and at the degenerate ends
    for q in (2, 3, 4):
        for n in range(1, 25):
            for k in range(n + 1):
                total = sum(surface_count(q, n, i) for i in binomial_sum_index_set(q, n, k))
                power = qary_entropy_power(q, n, k)
                assert total <= power
                expect_equal = k in (0, n) or q * k == (q - 1) * n
                assert (total == power) == expect_equal, (q, n, k)


def test_gv_parameters():
    p = gv_parameters(2, 1024, 512)
    assert isinstance(p, GVParams)
    # oracle: bisection target is hit exactly
    assert qary_entropy(2, p.delta) == pytest.approx(0.490234375, abs=1e-10)
    assert p.delta == pytest.approx(0.1068152, abs=1e-5)
    assert p.gamma == pytest.approx(p.delta / (1 - p.delta), abs=1e-12)
    assert 0 < p.delta < 0.5 and 0 < p.gamma < 1
    with pytest.raises(InfeasibleParameterError):
        gv_parameters(2, 4, 3)


def test_finite_length_entropy_trend():
    # normalized weight entropy approaches the q-ary entropy from below as n
    # grows; the gap shrinks along a doubling ladder and is < 0.02 at n = 400
    for q in (2, 3, 5):
        for alpha in (0.1, 0.3, 0.5):
            gaps = []
            for n in (50, 100, 200, 400):
                v = float(weight_entropy(q, n, math.floor(alpha * n))) / n
                gaps.append(abs(v - qary_entropy(q, alpha)))
            assert all(a >= b for a, b in zip(gaps, gaps[1:])), (q, alpha, gaps)
            assert gaps[-1] < 0.02


# ---------------------------------------------------------------------------
# LogQValue algebra
# ---------------------------------------------------------------------------

surfaces = st.integers(min_value=1, max_value=10**12)


@given(surfaces, surfaces, surfaces)
def test_logq_addition_associative_exact(a, b, c):
    x, y, z = LogQValue(2, a), LogQValue(2, b), LogQValue(2, c)
    assert (x + y) + z == x + (y + z)
    assert ((x + y) + z).surface == a * b * c


@given(surfaces, surfaces)
@settings(max_examples=200)
def test_logq_ordering_matches_float(a, b):
    x, y = LogQValue(3, a), LogQValue(3, b)
    assert (x < y) == (a < b)
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


def test_logq_base_mismatch():
    with pytest.raises(InfeasibleParameterError):
        LogQValue(2, 3) + LogQValue(3, 3)
    with pytest.raises(InfeasibleParameterError):
        LogQValue(2, 3) < LogQValue(3, 3)


def test_logq_cross_length_addition_is_legal():
    # values from spaces of different lengths combine whenever q matches
    a = weight_entropy(2, 3, 3)
    b = weight_entropy(2, 7, 4)
    assert (a + b).surface == 35


def test_logq_json_roundtrip():
    v = LogQValue(2, 35)
    d = v.to_json_dict()
    assert d == {"q": 2, "surface": "35", "approx": pytest.approx(math.log2(35))}
    assert LogQValue.from_json_dict(d) == v


def test_logq_rejects_nonpositive_surface():
    with pytest.raises(InfeasibleParameterError):
        LogQValue(2, 0)


def test_logq_huge_surface_float():
    v = LogQValue(2, 2**5000 * 3)
    assert float(v) == pytest.approx(5000 + math.log2(3), rel=1e-12)


# ---------------------------------------------------------------------------
# Metric properties on vectors (exhaustive at small sizes)
# ---------------------------------------------------------------------------


def _all_vectors(f, n):
    for elems in itertools.product(f.elements(), repeat=n):
        yield GFVector(f, elems)


@pytest.mark.parametrize("q", [2, 3])
def test_range_and_scalar_rule_exhaustive(q):
    f = field_make(q)
    for n in range(1, 7):
        qn = q**n
        for x in _all_vectors(f, n):
            s = entropy_weight(x).surface
            assert 1 <= s < qn  # 0 <= entropy weight < n, exactly
            for a in range(1, q):
                assert entropy_weight(x.scale(a)) == entropy_weight(x)
            assert entropy_weight(x.scale(0)).surface == 1


@pytest.mark.parametrize("q", [2, 3])
def test_identity_of_indiscernibles(q):
    f = field_make(q)
    for n in range(1, 6):
        for x in _all_vectors(f, n):
            zero = entropy_weight(x).surface == 1
            if q == 2:
                expect = x.weight() in (0, n)  # binary pseudometric: 0 and all-one
            else:
                expect = x.weight() == 0
            assert zero == expect

"""Compiled and pure kernels agree with each other and with direct enumeration."""

import itertools
import random

import pytest

from entrodist import _purecore, kernels
from entrodist.codes import binary_row_masks, weight_distribution_bruteforce
from entrodist.entropy import surface_count, surface_ranks
from entrodist.gf import GFMatrix, GFVector, field_make


def oracle_wd(field, rows, n):
    """Weight counts by plain product enumeration over all messages."""
    counts = [0] * (n + 1)
    k = len(rows)
    for msg in itertools.product(field.elements(), repeat=k):
        acc = [0] * n
        for x, row in zip(msg, rows):
            if x:
                acc = [field.add(a, field.mul(x, e)) for a, e in zip(acc, row)]
        counts[sum(1 for e in acc if e)] += 1
    return counts


def random_rows(field, k, n, rng):
    return [tuple(rng.randrange(field.q) for _ in range(n)) for _ in range(k)]


@pytest.mark.parametrize("seed", range(5))
def test_wd_binary_both_backends_match_oracle(seed):
    f = field_make(2)
    rng = random.Random(seed)
    k, n = rng.randrange(1, 8), rng.randrange(1, 12)
    rows = random_rows(f, k, n, rng)
    masks = [sum(1 << j for j, e in enumerate(r) if e) for r in rows]
    expected = oracle_wd(f, rows, n)
    assert _purecore.wd_binary(masks, n) == expected
    assert kernels.wd_binary(masks, n) == expected


@pytest.mark.parametrize("q,seed", [(4, 0), (4, 1), (8, 2), (16, 3)])
def test_wd_gf2lanes_matches_oracle(q, seed):
    from entrodist.codes import _gf2lane_rows, code_from_generator

    f = {4: field_make(2, 2), 8: field_make(2, 3), 16: field_make(2, 4)}[q]
    rng = random.Random(seed)
    k, n = rng.randrange(1, 4), rng.randrange(2, 8)
    rows = random_rows(f, k, n, rng)
    m = GFMatrix(f, tuple(rows), n)
    if m.rank() < k:
        rows = rows[: m.rank()] or [(1,) + (0,) * (n - 1)]
    code = code_from_generator(GFMatrix(f, tuple(rows), n))
    lanes = _gf2lane_rows(code)
    expected = oracle_wd(f, code.generator.entries, n)
    assert _purecore.wd_gf2lanes(lanes, n) == expected
    assert kernels.wd_gf2lanes(lanes, n) == expected


@pytest.mark.parametrize("q,r,seed", [(3, 1, 0), (5, 1, 1), (9, 2, 2)])
def test_wd_qary_matches_oracle(q, r, seed):
    from entrodist.codes import _qary_step_rows, code_from_generator

    p = 3 if q in (3, 9) else 5
    f = field_make(p, r)
    rng = random.Random(seed)
    k, n = rng.randrange(1, 4), rng.randrange(2, 7)
    rows = random_rows(f, k, n, rng)
    m = GFMatrix(f, tuple(rows), n)
    if m.rank() == 0:
        rows = [(1,) + (0,) * (n - 1)]
    code = code_from_generator(GFMatrix(f, tuple(rows), n))
    step_rows = _qary_step_rows(code)
    expected = oracle_wd(f, code.generator.entries, n)
    assert _purecore.wd_qary(f.p, [bytes(x) for x in step_rows], n, f.q, f.add_table) == expected
    assert kernels.wd_qary(f.p, step_rows, n, f.q, f.add_table) == expected


@pytest.mark.parametrize("seed", range(4))
def test_min_weight_rank_matches_wd(seed):
    rng = random.Random(100 + seed)
    f = field_make(2)
    k, n = rng.randrange(1, 7), rng.randrange(2, 12)
    rows = random_rows(f, k, n, rng)
    masks = [sum(1 << j for j, e in enumerate(r) if e) for r in rows]
    ranks, distinct = surface_ranks(2, n)
    wd = oracle_wd(f, rows, n)
    # min surface over nonzero words, counting the zero word only if some
    # nonzero message maps to it (rank deficiency)
    surf = [
        surface_count(2, n, i)
        for i in range(n + 1)
        if (wd[i] - (1 if i == 0 else 0)) > 0
    ]
    expected = min(surf) if surf else None
    got_pure = _purecore.min_weight_rank_binary(masks, ranks, 0)
    got_fast = kernels.min_weight_rank_binary(masks, ranks, 0)
    assert got_pure == got_fast
    if expected is not None:
        assert distinct[got_pure] == expected


def test_min_weight_rank_abort_is_sound():
    # aborting early may only return a value below the abort threshold
    f = field_make(2)
    rng = random.Random(9)
    for _ in range(20):
        k, n = rng.randrange(1, 6), rng.randrange(2, 10)
        masks = [rng.randrange(1, 1 << n) for _ in range(k)]
        ranks, distinct = surface_ranks(2, n)
        full = kernels.min_weight_rank_binary(masks, ranks, 0)
        for abort in range(len(distinct) + 1):
            got = kernels.min_weight_rank_binary(masks, ranks, abort)
            if got >= abort:
                assert got == full
            else:
                assert full < abort


@pytest.mark.parametrize("seed", range(3))
def test_encoder_min_rank_matches_enumeration(seed):
    rng = random.Random(200 + seed)
    f = field_make(2)
    k, n = rng.randrange(1, 6), rng.randrange(1, 8)
    rows = [rng.randrange(1 << n) for _ in range(k)]
    products = [
        surface_count(2, k, i) * surface_count(2, n, j)
        for i in range(k + 1)
        for j in range(n + 1)
    ]
    distinct = sorted(set(products))
    rank_of = {s: r for r, s in enumerate(distinct)}
    ranks2d = [rank_of[s] for s in products]
    best = None
    for x in range(1, 1 << k):
        y = 0
        for j in range(k):
            if (x >> j) & 1:
                y ^= rows[j]
        s = surface_count(2, k, bin(x).count("1")) * surface_count(2, n, bin(y).count("1"))
        best = s if best is None else min(best, s)
    got_pure = _purecore.encoder_min_rank_binary(rows, k, n, ranks2d, 0)
    got_fast = kernels.encoder_min_rank_binary(rows, k, n, ranks2d, 0)
    assert got_pure == got_fast
    assert distinct[got_pure] == best


def test_gray_step_covers_every_codeword_once():
    # the Gray sequence visits all 2^k masks exactly once
    masks = [0b0011, 0b0101, 0b1001]
    seen = {0}
    c = 0
    for t in range(1, 1 << 3):
        c ^= masks[(t & -t).bit_length() - 1]
        seen.add(c)
    span = {0}
    for m in masks:
        span |= {m ^ s for s in span}
    assert seen == span and len(seen) == 8


def test_large_n_falls_back_to_pure():
    # 70 coordinates exceed the compiled kernel's word size
    f = field_make(2)
    n = 70
    rows = tuple(tuple(1 if j in (i, i + 1) else 0 for j in range(n)) for i in range(3))
    from entrodist.codes import code_from_generator

    code = code_from_generator(GFMatrix(f, rows, n))
    wd = weight_distribution_bruteforce(code)
    assert wd.counts == tuple(oracle_wd(f, code.generator.entries, n))

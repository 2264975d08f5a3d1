"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernels cap the coordinate count at 62 (single machine
word) and the enumeration count below 2^62; the wrappers route anything
larger to the pure implementations, which have no size limits.
"""

from __future__ import annotations

from . import _purecore

try:
    from . import _fastcore
except ImportError:  # pragma: no cover - depends on the build
    _fastcore = None

BACKEND = "compiled" if _fastcore is not None else "pure"

_MAX_N = 62
_MAX_STEPS = 1 << 62


def backend() -> str:
    return BACKEND


def wd_binary(masks, n):
    if _fastcore is not None and n <= _MAX_N and len(masks) <= _MAX_N:
        return _fastcore.wd_binary(list(masks), n)
    return _purecore.wd_binary(list(masks), n)


def wd_gf2lanes(lanes, n):
    if _fastcore is not None and n <= _MAX_N and len(lanes) <= _MAX_N and len(lanes[0]) <= 16:
        return _fastcore.wd_gf2lanes([list(row) for row in lanes], n)
    return _purecore.wd_gf2lanes([list(row) for row in lanes], n)


def wd_qary(p, rows, n, q, add_table):
    if _fastcore is not None and q <= 256 and p ** len(rows) < _MAX_STEPS:
        return _fastcore.wd_qary(p, [bytes(r) for r in rows], n, q, add_table)
    return _purecore.wd_qary(p, [bytes(r) for r in rows], n, q, add_table)


def min_weight_rank_binary(masks, ranks, abort_below):
    if _fastcore is not None and len(ranks) - 1 <= _MAX_N and len(masks) <= _MAX_N:
        return _fastcore.min_weight_rank_binary(list(masks), list(ranks), abort_below)
    return _purecore.min_weight_rank_binary(list(masks), list(ranks), abort_below)


def min_weight_rank_qary(p, rows, n, q, add_table, ranks, abort_below):
    return _purecore.min_weight_rank_qary(
        p, [bytes(r) for r in rows], n, q, add_table, list(ranks), abort_below
    )


def encoder_min_rank_binary(out_rows, k, n, ranks2d, abort_below):
    if _fastcore is not None and n <= _MAX_N and k <= _MAX_N:
        return _fastcore.encoder_min_rank_binary(list(out_rows), k, n, list(ranks2d), abort_below)
    return _purecore.encoder_min_rank_binary(list(out_rows), k, n, list(ranks2d), abort_below)

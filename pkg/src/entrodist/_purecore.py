"""Pure-Python enumeration kernels.

Reference implementations of the hot loops; the compiled twin in
_fastcore.pyx mirrors these signatures.  All enumerate codewords in
Gray order so each step adds a single precomputed row: for counter t,
the changing digit is the number of trailing (p-1) digits of t in base
p, and stepping a digit by one (mod p) is one field addition of the
corresponding row, since the prime subfield is cyclic.
"""

from __future__ import annotations


def wd_binary(masks: list[int], n: int) -> list[int]:
    """Weight counts over all XOR combinations of ``masks`` (2^k words)."""
    k = len(masks)
    counts = [0] * (n + 1)
    counts[0] = 1
    c = 0
    for t in range(1, 1 << k):
        c ^= masks[(t & -t).bit_length() - 1]
        counts[c.bit_count()] += 1
    return counts


def wd_gf2lanes(lanes: list[list[int]], n: int) -> list[int]:
    """Weight counts for a GF(2^r) code given bit-sliced step rows.

    ``lanes[d]`` holds the r lane masks of step row d (lane s = bit s of every
    coordinate's element code); GF(2^r) vector addition is lane-wise XOR.
    """
    digits = len(lanes)
    r = len(lanes[0])
    counts = [0] * (n + 1)
    counts[0] = 1
    cur = [0] * r
    for t in range(1, 1 << digits):
        row = lanes[(t & -t).bit_length() - 1]
        acc = 0
        for s in range(r):
            cur[s] ^= row[s]
            acc |= cur[s]
        counts[acc.bit_count()] += 1
    return counts


def _trailing_digits(t: int, p: int) -> int:
    j = 0
    while t % p == p - 1:
        t //= p
        j += 1
    return j


def wd_qary(p: int, rows: list[bytes], n: int, q: int, add_table: bytes) -> list[int]:
    """Weight counts for a general GF(q) code, q = p^r, via its step rows."""
    digits = len(rows)
    counts = [0] * (n + 1)
    counts[0] = 1
    cur = bytearray(n)
    total = p**digits
    for t in range(total - 1):
        row = rows[_trailing_digits(t, p)]
        w = 0
        for m in range(n):
            e = add_table[cur[m] * q + row[m]]
            cur[m] = e
            if e:
                w += 1
        counts[w] += 1
    return counts


def min_weight_rank_binary(masks: list[int], ranks: list[int], abort_below: int) -> int:
    """Min of ranks[weight] over nonzero XOR combinations of ``masks``.

    Returns early (with the running minimum) once it drops below
    ``abort_below``; callers use that for feasibility checks and for
    best-so-far pruning.
    """
    k = len(masks)
    best = len(ranks)
    c = 0
    for t in range(1, 1 << k):
        c ^= masks[(t & -t).bit_length() - 1]
        rk = ranks[c.bit_count()]
        if rk < best:
            best = rk
            if best < abort_below:
                return best
    return best


def min_weight_rank_qary(
    p: int, rows: list[bytes], n: int, q: int, add_table: bytes, ranks: list[int], abort_below: int
) -> int:
    """q-ary twin of min_weight_rank_binary."""
    digits = len(rows)
    best = len(ranks)
    cur = bytearray(n)
    total = p**digits
    for t in range(total - 1):
        row = rows[_trailing_digits(t, p)]
        w = 0
        for m in range(n):
            e = add_table[cur[m] * q + row[m]]
            cur[m] = e
            if e:
                w += 1
        rk = ranks[w]
        if rk < best:
            best = rk
            if best < abort_below:
                return best
    return best


def encoder_min_rank_binary(out_rows: list[int], k: int, n: int, ranks2d: list[int], abort_below: int) -> int:
    """Min of ranks2d[wt(x)*(n+1) + wt(xG)] over nonzero binary inputs x."""
    best = len(ranks2d)
    x = 0
    y = 0
    for t in range(1, 1 << k):
        j = (t & -t).bit_length() - 1
        x ^= 1 << j
        y ^= out_rows[j]
        rk = ranks2d[x.bit_count() * (n + 1) + y.bit_count()]
        if rk < best:
            best = rk
            if best < abort_below:
                return best
    return best

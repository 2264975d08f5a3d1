# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; mirrors _purecore (see there for the
Gray-stepping invariants).  Limits: n <= 62 coordinates for the bitmask
kernels, q <= 256 and p^digits < 2^62 for the byte kernel."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset
from libc.stdint cimport int64_t, uint64_t, uint8_t


cdef inline int _popcount(uint64_t x) noexcept nogil:
    x = x - ((x >> 1) & 0x5555555555555555ULL)
    x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0FULL
    return <int>((x * 0x0101010101010101ULL) >> 56)


cdef inline int _trailing_ones(uint64_t t) noexcept nogil:
    cdef int j = 0
    while t & 1:
        t >>= 1
        j += 1
    return j


def wd_binary(masks, int n):
    cdef int k = len(masks)
    cdef uint64_t rows[64]
    cdef int64_t counts[65]
    cdef int i
    for i in range(k):
        rows[i] = <uint64_t>masks[i]
    memset(counts, 0, sizeof(counts))
    cdef uint64_t c = 0, t
    cdef uint64_t total = (<uint64_t>1 << k) - 1
    counts[0] = 1
    with nogil:
        for t in range(total):
            c ^= rows[_trailing_ones(t)]
            counts[_popcount(c)] += 1
    return [counts[i] for i in range(n + 1)]


def wd_gf2lanes(lanes, int n):
    cdef int digits = len(lanes)
    cdef int r = len(lanes[0])
    cdef uint64_t* rows = <uint64_t*>malloc(digits * r * sizeof(uint64_t))
    cdef int64_t counts[65]
    cdef uint64_t cur[16]
    cdef int i, s
    for i in range(digits):
        for s in range(r):
            rows[i * r + s] = <uint64_t>lanes[i][s]
    memset(counts, 0, sizeof(counts))
    for s in range(r):
        cur[s] = 0
    counts[0] = 1
    cdef uint64_t t, acc
    cdef uint64_t total = (<uint64_t>1 << digits) - 1
    cdef int j
    with nogil:
        for t in range(total):
            j = _trailing_ones(t)
            acc = 0
            for s in range(r):
                cur[s] ^= rows[j * r + s]
                acc |= cur[s]
            counts[_popcount(acc)] += 1
    free(rows)
    return [counts[i] for i in range(n + 1)]


def wd_qary(int p, rows, int n, int q, const uint8_t[::1] add_table):
    cdef int digits = len(rows)
    cdef uint8_t* rmat = <uint8_t*>malloc(digits * n)
    cdef uint8_t* cur = <uint8_t*>malloc(n)
    cdef int64_t* counts = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    cdef int i, m
    for i in range(digits):
        row = rows[i]
        for m in range(n):
            rmat[i * n + m] = <uint8_t>row[m]
    memset(cur, 0, n)
    memset(counts, 0, (n + 1) * sizeof(int64_t))
    counts[0] = 1
    cdef uint64_t total = 1
    for i in range(digits):
        total *= <uint64_t>p
    cdef uint64_t t, tt
    cdef int j, w
    cdef uint8_t e
    cdef const uint8_t* at = &add_table[0]
    with nogil:
        for t in range(total - 1):
            tt = t
            j = 0
            while tt % p == <uint64_t>(p - 1):
                tt //= p
                j += 1
            w = 0
            for m in range(n):
                e = at[cur[m] * q + rmat[j * n + m]]
                cur[m] = e
                if e:
                    w += 1
            counts[w] += 1
    out = [counts[i] for i in range(n + 1)]
    free(rmat)
    free(cur)
    free(counts)
    return out


def min_weight_rank_binary(masks, ranks, int abort_below):
    cdef int k = len(masks)
    cdef uint64_t rows[64]
    cdef int rk_table[65]
    cdef int i
    for i in range(k):
        rows[i] = <uint64_t>masks[i]
    cdef int nr = len(ranks)
    for i in range(nr):
        rk_table[i] = ranks[i]
    cdef int best = nr
    cdef uint64_t c = 0, t
    cdef uint64_t total = (<uint64_t>1 << k) - 1
    cdef int rk
    with nogil:
        for t in range(total):
            c ^= rows[_trailing_ones(t)]
            rk = rk_table[_popcount(c)]
            if rk < best:
                best = rk
                if best < abort_below:
                    break
    return best


def encoder_min_rank_binary(out_rows, int k, int n, ranks2d, int abort_below):
    cdef uint64_t rows[64]
    cdef int i
    for i in range(k):
        rows[i] = <uint64_t>out_rows[i]
    cdef int nr = len(ranks2d)
    cdef int* rk_table = <int*>malloc(nr * sizeof(int))
    for i in range(nr):
        rk_table[i] = ranks2d[i]
    cdef int best = nr
    cdef uint64_t x = 0, y = 0, t
    cdef uint64_t total = (<uint64_t>1 << k) - 1
    cdef int j, rk
    with nogil:
        for t in range(total):
            j = _trailing_ones(t)
            x ^= <uint64_t>1 << j
            y ^= rows[j]
            rk = rk_table[_popcount(x) * (n + 1) + _popcount(y)]
            if rk < best:
                best = rk
                if best < abort_below:
                    break
    free(rk_table)
    return best

"""Bounds on the largest code size at a given entropy distance, and on the
largest entropy distance of a full-rank linear encoder.

All thresholds are LogQValue surfaces, so set memberships like
"entropy < h" are decided by integer comparison and the step-function
boundaries (e.g. the weight-3/weight-4 tie at n = 7, q = 2) are exact.
The exhaustive ground truth enumerates subspaces by canonical RREF
generators, one per subspace.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass

from . import kernels
from .codes import DEFAULT_BUDGET, LinearCode, code_from_generator, zero_code
from .entropy import LogQValue, surface_count, surface_ranks, weight_entropy, weight_entropy_preimage
from .errors import BudgetExceededError, InfeasibleParameterError
from .gf import FieldSpec, GFMatrix, field_of_order


def gilbert_lower(q: int, n: int, h: LogQValue) -> int:
    """Guaranteed code size: ceil(q^n / #{x : entropy weight < h}).

    At h = 0 the set is empty and the whole space qualifies, so q^n.
    """
    if h.surface <= 1:
        return q**n
    ball = sum(surface_count(q, n, i) for i in range(n + 1) if surface_count(q, n, i) < h.surface)
    return -(-(q**n) // ball)


def hamming_upper(q: int, n: int, h: LogQValue) -> int:
    """Sphere-packing bound adapted to entropy distance.

    Uses packing radius t = ceil(d/2) - 1 for the smallest weight d whose
    entropy reaches h; the binary case packs both a low- and a high-weight
    ball around every codeword, doubling the denominator.
    """
    d = next((i for i in range(n + 1) if surface_count(q, n, i) >= h.surface), None)
    if d is None:
        raise InfeasibleParameterError("threshold exceeds the maximum weight entropy")
    t = -(-d // 2) - 1
    if t < 0:
        return q**n
    ball = sum(surface_count(q, n, i) for i in range(t + 1))
    if q == 2:
        ball *= 2
    return q**n // ball


def singleton_upper(q: int, n: int, h: LogQValue) -> int:
    """q^min(n - d1 + 1, d2) for the weight interval [d1, d2] of entropy >= h."""
    d1, d2 = weight_entropy_preimage(q, n, h)
    return q ** min(n - d1 + 1, d2)


def dq_at_weight1(q: int, n: int) -> int:
    """Exact largest size at threshold = entropy of weight 1.

    Binary codes must avoid the all-one word (the only nonzero word with
    entropy weight 0), which halves the space; for q >= 3 only the zero word
    falls below the threshold, so the whole space qualifies.
    """
    if n < 1:
        raise InfeasibleParameterError("n must be >= 1")
    return 2 ** (n - 1) if q == 2 else q**n


def d2_at_weight2(n: int) -> int:
    """Exact largest binary size at threshold = entropy of weight 2, n >= 4."""
    if n < 4:
        raise InfeasibleParameterError("need n >= 4")
    return 2 ** (n - 3) if n % 2 else 2 ** (n - 2)


@dataclass(frozen=True)
class RecursionBound:
    """Shorter-length parameters whose max size bounds the original one:
    D_q(n, h) <= factor * D_q(n - 1, threshold)."""

    n: int
    threshold: LogQValue
    factor: int


def puncture_recursion_bound(q: int, n: int, h: LogQValue) -> RecursionBound:
    """Puncturing recursion; needs the low end d1 of the weight interval >= 2."""
    d1, d2 = weight_entropy_preimage(q, n, h)
    if d1 < 2:
        raise InfeasibleParameterError("puncturing recursion needs d1 >= 2")
    thr = min(weight_entropy(q, n - 1, d1 - 1), weight_entropy(q, n - 1, min(d2, n - 1)))
    return RecursionBound(n - 1, thr, 1)


def shorten_recursion_bound(q: int, n: int, h: LogQValue) -> RecursionBound:
    """Shortening recursion; costs a factor q but keeps d1."""
    d1, d2 = weight_entropy_preimage(q, n, h)
    thr = min(weight_entropy(q, n - 1, d1), weight_entropy(q, n - 1, min(d2, n - 1)))
    return RecursionBound(n - 1, thr, q)


def _upper_bound_at(q: int, n: int, h: LogQValue) -> int:
    u = min(hamming_upper(q, n, h), singleton_upper(q, n, h))
    if q == 2 and n >= 4 and h.surface == surface_count(2, n, 2):
        u = min(u, d2_at_weight2(n))
    return u


def max_ed_lower(q: int, n: int, k: int) -> LogQValue:
    """Largest lattice threshold h whose guaranteed size reaches q^k.

    Bounds are step functions of h between consecutive weight-entropy values,
    so scanning the finite lattice {entropy of weight i} is lossless.
    """
    if not 1 <= k <= n:
        raise InfeasibleParameterError("need 1 <= k <= n")
    target = q**k
    best = LogQValue.zero(q)
    for s in sorted({surface_count(q, n, i) for i in range(n + 1)}):
        h = LogQValue(q, s)
        if gilbert_lower(q, n, h) >= target and h > best:
            best = h
    return best


def max_ed_upper(q: int, n: int, k: int) -> LogQValue:
    """Largest lattice threshold not excluded by any upper bound at size q^k."""
    if not 1 <= k <= n:
        raise InfeasibleParameterError("need 1 <= k <= n")
    target = q**k
    best = LogQValue.zero(q)
    for s in sorted({surface_count(q, n, i) for i in range(n + 1)}):
        h = LogQValue(q, s)
        if _upper_bound_at(q, n, h) >= target and h > best:
            best = h
    return best


# ---------------------------------------------------------------------------
# Encoder bounds
# ---------------------------------------------------------------------------


def encoder_ed_upper(q: int, k: int, n: int) -> LogQValue:
    """Upper bound on the largest entropy distance of a full-rank k -> n encoder."""
    if k < 1 or n < 1:
        raise InfeasibleParameterError("need k, n >= 1")
    if q == 2:
        return weight_entropy(2, n, -(-(n - 1) // 2))
    return weight_entropy(q, k, 1) + weight_entropy(q, n, -(-((q - 1) * n - 1) // q))


@dataclass(frozen=True)
class EncoderLowerReport:
    """The counting argument behind the encoder lower bound, kept exact.

    Each admissible weight pair (i, j) carries weight C(k,i)C(n,j)(q-1)^(i+j),
    which is also its product surface; h0 is the largest pair value whose
    strictly-below cumulative weight stays under the threshold."""

    q: int
    k: int
    n: int
    h0: LogQValue
    threshold: int
    weight_below: int
    weight_at: int
    saturated: bool


def encoder_ed_lower_report(q: int, k: int, n: int) -> EncoderLowerReport:
    if k < 1 or n < 1:
        raise InfeasibleParameterError("need k, n >= 1")
    j_min = 1 if k <= n else 0
    weight_at_value: dict[int, int] = {}
    for i in range(1, k + 1):
        si = surface_count(q, k, i)
        for j in range(j_min, n + 1):
            v = si * surface_count(q, n, j)
            weight_at_value[v] = weight_at_value.get(v, 0) + v
    kp = min(k, n)
    threshold = (q - 1) * (q**n - q ** (kp - 1))
    values = sorted(weight_at_value)
    cum_below = 0
    h0_surface = values[0]
    h0_below = 0
    for v in values:
        if cum_below < threshold:
            h0_surface = v
            h0_below = cum_below
        cum_below += weight_at_value[v]
    saturated = cum_below < threshold
    return EncoderLowerReport(
        q=q,
        k=k,
        n=n,
        h0=LogQValue(q, h0_surface),
        threshold=threshold,
        weight_below=h0_below,
        weight_at=weight_at_value[h0_surface],
        saturated=saturated,
    )


def encoder_ed_lower(q: int, k: int, n: int) -> LogQValue:
    """Lower bound on the largest entropy distance of a full-rank k -> n encoder."""
    return encoder_ed_lower_report(q, k, n).h0


# ---------------------------------------------------------------------------
# Exhaustive ground truth
# ---------------------------------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def subspace_generators(field: FieldSpec, n: int, k: int):
    """All k-dim subspaces of GF(q)^n, one canonical RREF generator each.

    Yields tuples of rows (as coordinate tuples).  A pivot-column pattern
    fixes the echelon shape; the remaining entries (right of each pivot, in
    non-pivot columns) range freely.
    """
    q = field.q
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j not in pivot_set and j > pivots[i]
        ]
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        for assign in itertools.product(range(q), repeat=len(free)):
            rows = [row[:] for row in base]
            for (i, j), v in zip(free, assign):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def _dq_cost(q: int, n: int, k_max: int) -> int:
    return sum(gaussian_binomial(n, k, q) * q**k for k in range(1, k_max + 1))


def _rows_to_masks(rows) -> list[int]:
    return [sum(1 << j for j, e in enumerate(row) if e) for row in rows]


def _min_rank_of_rows(field: FieldSpec, rows, n: int, ranks, abort_below: int) -> int:
    if field.q == 2:
        return kernels.min_weight_rank_binary(_rows_to_masks(rows), ranks, abort_below)
    step_rows = []
    for row in rows:
        for s in range(field.r):
            scale = field.p**s
            step_rows.append(bytes(field.mul(scale, e) for e in row))
    return kernels.min_weight_rank_qary(
        field.p, step_rows, n, field.q, field.add_table, ranks, abort_below
    )


@dataclass(frozen=True)
class DqResult:
    q: int
    n: int
    h: LogQValue
    value: int
    witness: LinearCode


def dq_exhaustive(q: int, n: int, h: LogQValue, budget: int | None = DEFAULT_BUDGET) -> DqResult:
    """Exact largest code size with entropy distance >= h, with a witness.

    Scans dimensions top-down from the best upper bound and stops at the
    first feasible subspace; infeasible subspaces abort their codeword scan
    at the first offending weight.
    """
    field = field_of_order(q)
    max_ent = max(surface_count(q, n, i) for i in range(n + 1))
    if h.surface > max_ent:
        raise InfeasibleParameterError("threshold exceeds the maximum weight entropy")
    ranks, distinct = surface_ranks(q, n)
    need_rank = bisect_left(distinct, h.surface)
    k_hi = 0
    upper = _upper_bound_at(q, n, h)
    while q ** (k_hi + 1) <= upper and k_hi + 1 <= n:
        k_hi += 1
    if budget is not None and _dq_cost(q, n, k_hi) > budget:
        raise BudgetExceededError(f"subspace scan up to dimension {k_hi} exceeds budget {budget}")
    for k in range(k_hi, 0, -1):
        for rows in subspace_generators(field, n, k):
            got = _min_rank_of_rows(field, rows, n, ranks, need_rank)
            if got >= need_rank:
                witness = code_from_generator(GFMatrix(field, rows, n))
                return DqResult(q, n, h, q**k, witness)
    return DqResult(q, n, h, 1, zero_code(field, n))


@dataclass(frozen=True)
class DqProfile:
    """Per-dimension maxima of the entropy distance over all subspaces.

    max_surfaces[k] is the largest attainable entropy-distance surface of a
    k-dim code (None at k = 0, where the minimum is over an empty set); it is
    nonincreasing in k, so the largest size at threshold h is q^(largest k
    with max_surfaces[k] >= h)."""

    q: int
    n: int
    max_surfaces: tuple
    witnesses: tuple

    def value_at(self, h: LogQValue) -> int:
        best = 0
        for k in range(1, self.n + 1):
            if self.max_surfaces[k] is not None and self.max_surfaces[k] >= h.surface:
                best = k
        return self.q**best


def dq_profile(q: int, n: int, budget: int | None = DEFAULT_BUDGET) -> DqProfile:
    """One full subspace sweep answering every threshold at once."""
    field = field_of_order(q)
    ranks, distinct = surface_ranks(q, n)
    if budget is not None and _dq_cost(q, n, n) > budget:
        raise BudgetExceededError(f"full subspace sweep for n = {n} exceeds budget {budget}")
    max_surfaces: list = [None]
    witnesses: list = [zero_code(field, n)]
    for k in range(1, n + 1):
        best_rank = -1
        best_rows = None
        for rows in subspace_generators(field, n, k):
            got = _min_rank_of_rows(field, rows, n, ranks, best_rank + 1)
            if got > best_rank:
                best_rank = got
                best_rows = rows
        max_surfaces.append(distinct[best_rank])
        witnesses.append(code_from_generator(GFMatrix(field, best_rows, n)))
    return DqProfile(q, n, tuple(max_surfaces), tuple(witnesses))

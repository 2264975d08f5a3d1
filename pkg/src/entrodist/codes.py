"""Linear codes: construction, weight distributions, entropy distance.

Codes are stored by the canonical reduced row-echelon form of their
generator, so two codes compare (and hash) equal exactly when they are
the same subspace.  Weight distributions come from Gray-code brute
force when q^k fits the budget, otherwise from the dual spectrum via
the MacWilliams transform; both paths are exact.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .errors import BudgetExceededError, InfeasibleParameterError, RankDropError
from .gf import FieldSpec, GFMatrix, GFVector, field_make, field_of_order
from .entropy import LogQValue, surface_count

DEFAULT_BUDGET = 1 << 26


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] linear code, held as its canonical RREF generator."""

    field: FieldSpec
    generator: GFMatrix
    n: int
    k: int

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def codewords(self) -> Iterator[GFVector]:
        """All q^k codewords; intended for small codes only."""
        f = self.field
        for msg in itertools.product(f.elements(), repeat=self.k):
            acc = [0] * self.n
            for x, row in zip(msg, self.generator.entries):
                if x:
                    acc = [f.add(a, f.mul(x, e)) for a, e in zip(acc, row)]
            yield GFVector(f, tuple(acc))


def _canonical(m: GFMatrix) -> tuple[GFMatrix, int]:
    reduced, rank, _ = m.rref()
    gen = GFMatrix(m.field, reduced.entries[:rank], m.cols)
    return gen, rank


def code_from_generator(m: GFMatrix) -> LinearCode:
    gen, rank = _canonical(m)
    if rank == 0:
        raise InfeasibleParameterError("generator matrix is zero")
    return LinearCode(m.field, gen, m.cols, rank)


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    """The [n, 0] code containing only the zero word."""
    return LinearCode(field, GFMatrix(field, (), n), n, 0)


def full_space_code(field: FieldSpec, n: int) -> LinearCode:
    return code_from_generator(GFMatrix.identity(field, n))


def dual(c: LinearCode) -> LinearCode:
    """The dual code; the [n, n] full space duals to the [n, 0] zero code."""
    if c.k == c.n:
        return zero_code(c.field, c.n)
    if c.k == 0:
        return full_space_code(c.field, c.n)
    return code_from_generator(c.generator.kernel_basis())


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts A_0..A_n per Hamming weight, exact integers."""

    q: int
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise InfeasibleParameterError("need n + 1 weight counts")
        if self.counts[0] != 1 or any(a < 0 for a in self.counts):
            raise InfeasibleParameterError("not a linear-code weight distribution")
        total = sum(self.counts)
        size = 1
        while size < total:
            size *= self.q
        if size != total:
            raise InfeasibleParameterError("total count is not a power of q")

    @property
    def size(self) -> int:
        return sum(self.counts)

    def to_json_list(self) -> list[str]:
        return [str(a) for a in self.counts]


# ---------------------------------------------------------------------------
# Brute-force enumeration
# ---------------------------------------------------------------------------


def binary_row_masks(code: LinearCode) -> list[int]:
    return [sum(1 << j for j, e in enumerate(row) if e) for row in code.generator.entries]


def _gf2lane_rows(code: LinearCode) -> list[list[int]]:
    """Bit-sliced step rows for GF(2^r): scaled copies x^s * row, r lanes each."""
    f = code.field
    r = f.r
    out = []
    for row in code.generator.entries:
        for s in range(r):
            scaled = [f.mul(1 << s, e) for e in row]
            lanes = []
            for lane in range(r):
                mask = 0
                for j, e in enumerate(scaled):
                    if (e >> lane) & 1:
                        mask |= 1 << j
                lanes.append(mask)
            out.append(lanes)
    return out


def _qary_step_rows(code: LinearCode) -> list[bytes]:
    """Step rows for odd characteristic: scaled copies x^s * row, s < r."""
    f = code.field
    out = []
    for row in code.generator.entries:
        for s in range(f.r):
            scale = f.p**s
            out.append(bytes(f.mul(scale, e) for e in row))
    return out


def weight_distribution_bruteforce(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> WeightDistribution:
    """Exact weight counts by enumerating all q^k codewords in Gray order."""
    q = c.field.q
    if budget is not None and q**c.k > budget:
        raise BudgetExceededError(
            f"q^k = {q}^{c.k} exceeds the enumeration budget {budget}"
        )
    if c.k == 0:
        return WeightDistribution(q, c.n, (1,) + (0,) * c.n)
    f = c.field
    if q == 2:
        counts = kernels.wd_binary(binary_row_masks(c), c.n)
    elif f.p == 2:
        counts = kernels.wd_gf2lanes(_gf2lane_rows(c), c.n)
    else:
        counts = kernels.wd_qary(f.p, _qary_step_rows(c), c.n, q, f.add_table)
    return WeightDistribution(q, c.n, tuple(counts))


# ---------------------------------------------------------------------------
# MacWilliams transform
# ---------------------------------------------------------------------------


def _krawtchouk(q: int, n: int, j: int, i: int) -> int:
    """Coefficient of x^j y^(n-j) in (y - x)^i (y + (q-1)x)^(n-i)."""
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
        for s in range(j + 1)
    )


def macwilliams_transform(wd: WeightDistribution, code_size: int) -> WeightDistribution:
    """Weight distribution of the dual of a code with the given spectrum and size."""
    q, n = wd.q, wd.n
    out = []
    for j in range(n + 1):
        total = sum(a * _krawtchouk(q, n, j, i) for i, a in enumerate(wd.counts) if a)
        if total % code_size or total < 0:
            raise InfeasibleParameterError(
                f"transform is not integral at weight {j}; input is not a code spectrum"
            )
        out.append(total // code_size)
    return WeightDistribution(q, n, tuple(out))


@functools.lru_cache(maxsize=4096)
def weight_distribution(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> WeightDistribution:
    """Exact spectrum via the cheaper of direct enumeration and the dual route."""
    q = c.field.q
    if budget is None or q**c.k <= budget:
        return weight_distribution_bruteforce(c, budget)
    if q ** (c.n - c.k) <= budget:
        dual_wd = weight_distribution_bruteforce(dual(c), budget)
        return macwilliams_transform(dual_wd, q ** (c.n - c.k))
    raise BudgetExceededError(
        f"both q^k = {q}^{c.k} and q^(n-k) = {q}^{c.n - c.k} exceed the budget {budget}"
    )


def hamming_distance_of_code(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> int:
    if c.k == 0:
        raise InfeasibleParameterError("the zero code has no nonzero codeword")
    wd = weight_distribution(c, budget)
    return next(i for i in range(1, c.n + 1) if wd.counts[i])


def entropy_distance_of_code(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> LogQValue:
    """Minimum entropy weight over nonzero codewords, decided by exact surfaces."""
    if c.k == 0:
        raise InfeasibleParameterError("the zero code has no nonzero codeword")
    wd = weight_distribution(c, budget)
    q = c.field.q
    best = None
    for i in range(1, c.n + 1):
        if wd.counts[i]:
            s = surface_count(q, c.n, i)
            if best is None or s < best:
                best = s
    return LogQValue(q, best)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def repetition(q: int, n: int) -> LinearCode:
    """[n, 1] code generated by the all-one row."""
    f = field_of_order(q)
    return code_from_generator(GFMatrix(f, ((1,) * n,), n))


def spc(q: int, n: int) -> LinearCode:
    """[n, n-1] single parity-check code: dual of the repetition code."""
    if n < 2:
        raise InfeasibleParameterError("single parity-check code needs n >= 2")
    return dual(repetition(q, n))


def _normalized_columns(f: FieldSpec, k: int) -> list[tuple[int, ...]]:
    # one representative per 1-dim subspace of GF(q)^k: first nonzero entry 1,
    # enumerated by ascending integer code with coordinate 0 least significant
    q = f.q
    cols = []
    for code in range(1, q**k):
        digits = []
        c = code
        for _ in range(k):
            c, d = divmod(c, q)
            digits.append(d)
        if next(d for d in digits if d) == 1:
            cols.append(tuple(digits))
    return cols


def simplex(q: int, k: int) -> LinearCode:
    """[(q^k-1)/(q-1), k] simplex code; columns in a fixed canonical order."""
    if k < 1:
        raise InfeasibleParameterError("simplex code needs k >= 1")
    f = field_of_order(q)
    cols = _normalized_columns(f, k)
    rows = tuple(tuple(col[i] for col in cols) for i in range(k))
    return code_from_generator(GFMatrix(f, rows, len(cols)))


def hamming(q: int, k: int) -> LinearCode:
    """[(q^k-1)/(q-1), (q^k-1)/(q-1) - k] Hamming code: dual of the simplex code."""
    if k < 2:
        raise InfeasibleParameterError("Hamming code needs k >= 2")
    return dual(simplex(q, k))


def reed_muller(r: int, m: int) -> LinearCode:
    """Binary Reed-Muller code of order r in m variables, length 2^m.

    Rows evaluate the monomials of degree <= r (graded-lex over the variable
    subsets) at all 2^m points; point j assigns variable i the bit i of j.
    """
    if not 0 <= r <= m:
        raise InfeasibleParameterError("need 0 <= r <= m")
    f = field_make(2)
    n = 1 << m
    rows = []
    for deg in range(r + 1):
        for vars_ in itertools.combinations(range(m), deg):
            rows.append(tuple(int(all((j >> v) & 1 for v in vars_)) for j in range(n)))
    return code_from_generator(GFMatrix(f, tuple(rows), n))


def puncture(c: LinearCode, coord: int) -> LinearCode:
    """Delete one coordinate; raises RankDropError if codewords merge."""
    if not 0 <= coord < c.n:
        raise InfeasibleParameterError("coordinate out of range")
    if c.n < 2:
        raise InfeasibleParameterError("cannot puncture to length 0")
    rows = tuple(row[:coord] + row[coord + 1 :] for row in c.generator.entries)
    m = GFMatrix(c.field, rows, c.n - 1)
    gen, rank = _canonical(m)
    if rank < c.k:
        raise RankDropError(f"puncturing coordinate {coord} merges codewords")
    return LinearCode(c.field, gen, c.n - 1, rank)


def zero_coordinate_subcode(c: LinearCode, coord: int) -> LinearCode:
    """The subcode of words with symbol zero at ``coord`` (same length)."""
    if not 0 <= coord < c.n:
        raise InfeasibleParameterError("coordinate out of range")
    f = c.field
    rows = [list(r) for r in c.generator.entries]
    pivot = next((i for i, r in enumerate(rows) if r[coord]), None)
    if pivot is None:
        return c
    prow = rows[pivot]
    inv = f.inv(prow[coord])
    kept = []
    for i, r in enumerate(rows):
        if i == pivot:
            continue
        if r[coord]:
            s = f.mul(r[coord], inv)
            r = [f.sub(e, f.mul(s, pe)) for e, pe in zip(r, prow)]
        kept.append(tuple(r))
    if not kept:
        return zero_code(f, c.n)
    return code_from_generator(GFMatrix(f, tuple(kept), c.n))


def shorten(c: LinearCode, coord: int) -> LinearCode:
    """Restrict to words with symbol zero at ``coord``, then drop it."""
    sub = zero_coordinate_subcode(c, coord)
    if sub.k == 0:
        return zero_code(c.field, c.n - 1)
    return puncture(sub, coord)


def rm_zero_subcode(r: int, m: int, coord: int = 0) -> tuple[LinearCode, LinearCode]:
    """From the Reed-Muller (r, m) code: the subcode vanishing at ``coord``
    and its puncture on that coordinate.  Both have positive entropy
    distance, unlike Reed-Muller codes themselves (which contain the all-one
    word).  At r = 1 the punctured code is the binary simplex code."""
    if r < 1:
        raise InfeasibleParameterError("need r >= 1 for a nontrivial subcode")
    base = reed_muller(r, m)
    sub = zero_coordinate_subcode(base, coord)
    return sub, puncture(sub, coord)


def dq_at_weight2_witness(n: int) -> LinearCode:
    """A largest binary code of length n with entropy distance of weight 2.

    (I | 1^T | 0^T) for even n ([n, n-2]) and (I | 1^T | 0^T | 0^T) for odd n
    ([n, n-3]): every nonzero word has weight between 2 and n - 2.
    """
    if n < 4:
        raise InfeasibleParameterError("need n >= 4")
    f = field_make(2)
    k = n - 2 if n % 2 == 0 else n - 3
    rows = tuple(
        tuple(1 if j == i else 0 for j in range(k)) + (1,) + (0,) * (n - k - 1)
        for i in range(k)
    )
    return code_from_generator(GFMatrix(f, rows, n))

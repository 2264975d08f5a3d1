"""Linear encoders and the entropy distance of their graphs.

An encoder is a full-rank k x n matrix kept as given (the mapping
matters, not just the row space).  Its entropy distance is the minimum,
over nonzero inputs x, of entropy_weight(x) + entropy_weight(x G) --
the entropy weight of (x, xG) in the product space -- decided by exact
surface products.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass

from . import kernels
from .codes import DEFAULT_BUDGET, LinearCode, code_from_generator
from .entropy import LogQValue, surface_count
from .errors import BudgetExceededError, InfeasibleParameterError
from .gf import FieldSpec, GFMatrix, GFVector, field_of_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearEncoder:
    field: FieldSpec
    matrix: GFMatrix
    k: int
    n: int

    def __repr__(self):
        return f"LinearEncoder({self.k}->{self.n} over {self.field!r})"

    def encode(self, x: GFVector) -> GFVector:
        return x @ self.matrix


def encoder_from_matrix(m: GFMatrix) -> LinearEncoder:
    """Validates full rank min(rows, cols): no information lost for k <= n,
    no output vectors wasted for k >= n."""
    rank = m.rank()
    if rank != min(m.rows, m.cols):
        raise InfeasibleParameterError(
            f"encoder matrix has rank {rank}, needs {min(m.rows, m.cols)}"
        )
    return LinearEncoder(m.field, m, m.rows, m.cols)


def _pair_ranks(q: int, k: int, n: int) -> tuple[list[int], list[int]]:
    """Rank the product surfaces C(k,i)(q-1)^i * C(n,j)(q-1)^j exactly.

    Returns (flattened (k+1)x(n+1) rank table, distinct surfaces ascending).
    """
    products = [
        surface_count(q, k, i) * surface_count(q, n, j)
        for i in range(k + 1)
        for j in range(n + 1)
    ]
    distinct = sorted(set(products))
    rank_of = {s: r for r, s in enumerate(distinct)}
    return [rank_of[s] for s in products], distinct


def encoder_entropy_distance(f: LinearEncoder, budget: int | None = DEFAULT_BUDGET) -> LogQValue:
    """Minimum product entropy weight of (x, xG) over nonzero inputs x."""
    q = f.field.q
    if budget is not None and q**f.k > budget:
        raise BudgetExceededError(f"q^k = {q}^{f.k} exceeds the budget {budget}")
    ranks, distinct = _pair_ranks(q, f.k, f.n)
    if q == 2:
        rows = [sum(1 << j for j, e in enumerate(row) if e) for row in f.matrix.entries]
        best = kernels.encoder_min_rank_binary(rows, f.k, f.n, ranks, 0)
        return LogQValue(2, distinct[best])
    best = None
    for msg in itertools.product(f.field.elements(), repeat=f.k):
        if not any(msg):
            continue
        x = GFVector(f.field, msg)
        s = surface_count(q, f.k, x.weight()) * surface_count(q, f.n, f.encode(x).weight())
        if best is None or s < best:
            best = s
    return LogQValue(q, best)


def encoder_min_witness(f: LinearEncoder, budget: int | None = DEFAULT_BUDGET) -> tuple[GFVector, LogQValue]:
    """A minimizing input vector together with the encoder entropy distance."""
    q = f.field.q
    if budget is not None and q**f.k > budget:
        raise BudgetExceededError(f"q^k = {q}^{f.k} exceeds the budget {budget}")
    best = None
    best_x = None
    for msg in itertools.product(f.field.elements(), repeat=f.k):
        if not any(msg):
            continue
        x = GFVector(f.field, msg)
        s = surface_count(q, f.k, x.weight()) * surface_count(q, f.n, f.encode(x).weight())
        if best is None or s < best:
            best, best_x = s, x
    return best_x, LogQValue(q, best)


def graph_code(f: LinearEncoder) -> LinearCode:
    """The [k+n, k] code generated by (I_k | G), i.e. the graph {(x, xG)}.

    Note the two distances on this object differ: encoder_entropy_distance
    uses the product-space weight (sum over the two components), while
    entropy_distance_of_code on the returned code uses the plain length-(k+n)
    weight entropy.
    """
    field = f.field
    rows = tuple(
        tuple(1 if j == i else 0 for j in range(f.k)) + f.matrix.entries[i]
        for i in range(f.k)
    )
    return code_from_generator(GFMatrix(field, rows, f.k + f.n))


def product_subspace_entropy_distance(
    v: LinearCode, split: int, budget: int | None = DEFAULT_BUDGET
) -> LogQValue:
    """Entropy distance of an arbitrary subspace of GF(q)^split x GF(q)^(n-split).

    Generalizes the encoder case (whose graph is such a subspace); minimum of
    the two-component entropy weight over nonzero vectors.
    """
    if not 0 < split < v.n:
        raise InfeasibleParameterError("split must cut the length in two nonempty parts")
    q = v.field.q
    if budget is not None and q**v.k > budget:
        raise BudgetExceededError(f"q^k = {q}^{v.k} exceeds the budget {budget}")
    if v.k == 0:
        raise InfeasibleParameterError("the zero subspace has no nonzero vector")
    best = None
    n2 = v.n - split
    for w in v.codewords():
        if not any(w.elems):
            continue
        w1 = sum(1 for e in w.elems[:split] if e)
        w2 = sum(1 for e in w.elems[split:] if e)
        s = surface_count(q, split, w1) * surface_count(q, n2, w2)
        if best is None or s < best:
            best = s
    return LogQValue(q, best)


@dataclass(frozen=True)
class EncoderSearchResult:
    encoder: LinearEncoder
    value: LogQValue
    mode: str
    examined: int
    rejected_rank: int


def _matrix_from_code_int(field: FieldSpec, k: int, n: int, code: int) -> GFMatrix:
    q = field.q
    entries = []
    for _ in range(k):
        row = []
        for _ in range(n):
            code, e = divmod(code, q)
            row.append(e)
        entries.append(tuple(row))
    return GFMatrix(field, tuple(entries), n)


def encoder_search_best(
    q: int,
    k: int,
    n: int,
    mode: str = "exhaustive",
    budget: int | None = DEFAULT_BUDGET,
    seed: int = 0,
    trials: int = 10_000,
) -> EncoderSearchResult:
    """Best full-rank encoder found: exact maximum in exhaustive mode,
    seeded uniform rejection sampling in random mode.

    Ties keep the first encoder attaining the running maximum, so results
    are deterministic for a fixed seed and schedule.
    """
    field = field_of_order(q)
    want_rank = min(k, n)
    best: LogQValue | None = None
    best_enc = None
    examined = 0
    rejected = 0

    if mode == "exhaustive":
        total = q ** (k * n)
        if budget is not None and total * q**k > budget:
            raise BudgetExceededError(
                f"exhaustive search needs {total} matrices x {q}^{k} inputs; over budget {budget}"
            )
        for code in range(total):
            m = _matrix_from_code_int(field, k, n, code)
            if m.rank() != want_rank:
                rejected += 1
                continue
            enc = LinearEncoder(field, m, k, n)
            val = encoder_entropy_distance(enc, budget=None)
            examined += 1
            if best is None or val > best:
                best, best_enc = val, enc
    elif mode == "random":
        rng = random.Random(seed)
        total = q ** (k * n)
        for _ in range(trials):
            m = _matrix_from_code_int(field, k, n, rng.randrange(total))
            if m.rank() != want_rank:
                rejected += 1
                continue
            enc = LinearEncoder(field, m, k, n)
            val = encoder_entropy_distance(enc, budget=None)
            examined += 1
            if best is None or val > best:
                best, best_enc = val, enc
        if examined:
            logger.info(
                "random encoder search: %d/%d samples full rank (%.1f%% rejected)",
                examined,
                examined + rejected,
                100.0 * rejected / (examined + rejected),
            )
    else:
        raise InfeasibleParameterError(f"unknown search mode {mode!r}")

    if best_enc is None:
        raise InfeasibleParameterError("no full-rank encoder found")
    return EncoderSearchResult(best_enc, best, mode, examined, rejected)

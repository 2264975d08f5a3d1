"""The entropy-distance metric layer.

The entropy value attached to a Hamming weight i in GF(q)^n is
log_q [ C(n,i) (q-1)^i ], the log of the surface area of the radius-i
sphere.  Every such value is stored exactly as its integer surface;
sums of values multiply surfaces, and comparisons compare integers, so
tie cases (e.g. weights 3 and 4 at n = 7, q = 2) are decided exactly.
Floats only appear in presentation helpers.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleParameterError
from .gf import GFVector

_LN2 = math.log(2.0)


def _log_int(w: int) -> float:
    """Natural log of a positive int of any size."""
    if w.bit_length() <= 900:
        return math.log(w)
    s = w.bit_length() - 900
    return math.log(w >> s) + s * _LN2


def surface_count(q: int, n: int, i: int) -> int:
    """C(n,i) * (q-1)^i, the number of vectors of weight i in GF(q)^n."""
    if not 0 <= i <= n:
        raise InfeasibleParameterError(f"weight {i} out of range [0, {n}]")
    return math.comb(n, i) * (q - 1) ** i


@functools.total_ordering
@dataclass(frozen=True)
class LogQValue:
    """An exact value log_q(surface) for a positive integer surface.

    Addition multiplies surfaces.  Ordering and equality require matching q
    and compare the integer surfaces, so they are exact.
    """

    q: int
    surface: int

    def __post_init__(self):
        if self.q < 2:
            raise InfeasibleParameterError("q must be >= 2")
        if self.surface < 1:
            raise InfeasibleParameterError("surface must be a positive integer")

    @classmethod
    def zero(cls, q: int) -> "LogQValue":
        return cls(q, 1)

    def _check_base(self, other: "LogQValue"):
        if not isinstance(other, LogQValue):
            raise TypeError(f"cannot combine LogQValue with {type(other).__name__}")
        if self.q != other.q:
            raise InfeasibleParameterError("LogQValue bases differ")

    def __add__(self, other: "LogQValue") -> "LogQValue":
        self._check_base(other)
        return LogQValue(self.q, self.surface * other.surface)

    def __lt__(self, other: "LogQValue") -> bool:
        self._check_base(other)
        return self.surface < other.surface

    def __float__(self) -> float:
        return _log_int(self.surface) / math.log(self.q)

    @property
    def approx(self) -> float:
        return float(self)

    def is_zero(self) -> bool:
        return self.surface == 1

    def to_json_dict(self) -> dict:
        return {"q": self.q, "surface": str(self.surface), "approx": float(self)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "LogQValue":
        return cls(int(d["q"]), int(d["surface"]))

    def __repr__(self):
        return f"LogQValue(log_{self.q} {self.surface} ~ {float(self):.6g})"


def weight_entropy(q: int, n: int, i: int) -> LogQValue:
    """log_q of the surface of the radius-i sphere in GF(q)^n, exactly."""
    return LogQValue(q, surface_count(q, n, i))


def weight_entropy_argmax(q: int, n: int) -> tuple[int, ...]:
    """The one or two weights maximizing weight_entropy(q, n, .)."""
    if n < 1:
        raise InfeasibleParameterError("n must be >= 1")
    x0 = Fraction((q - 1) * n - 1, q)
    out = sorted({math.ceil(x0), math.floor(x0) + 1})
    return tuple(out)


def weight_entropy_preimage(q: int, n: int, h: LogQValue) -> tuple[int, int]:
    """The integer interval [d1, d2] of weights whose entropy is >= h.

    Weight entropy is unimodal in the weight, so the preimage is contiguous.
    """
    hits = [i for i in range(n + 1) if surface_count(q, n, i) >= h.surface]
    if not hits:
        raise InfeasibleParameterError("threshold exceeds the maximum weight entropy")
    d1, d2 = hits[0], hits[-1]
    assert d2 - d1 + 1 == len(hits)
    return d1, d2


def surface_ranks(q: int, n: int) -> tuple[list[int], list[int]]:
    """Per-weight rank in the ascending order of distinct surfaces.

    Returns (ranks, distinct) with ranks[w] the index of surface_count(q,n,w)
    in the sorted list of distinct surfaces.  Lets integer-only scan kernels
    minimize entropy values without big-int comparisons.
    """
    surfaces = [surface_count(q, n, i) for i in range(n + 1)]
    distinct = sorted(set(surfaces))
    rank_of = {s: r for r, s in enumerate(distinct)}
    return [rank_of[s] for s in surfaces], distinct


def entropy_weight(x: GFVector) -> LogQValue:
    return weight_entropy(x.field.q, x.n, x.weight())


def entropy_distance(x: GFVector, y: GFVector) -> LogQValue:
    return entropy_weight(x - y)


def product_entropy_weight(x1: GFVector, x2: GFVector) -> LogQValue:
    """Entropy weight of (x1, x2) in the product space: the exact sum."""
    if x1.field != x2.field:
        raise InfeasibleParameterError("vectors over different fields")
    return entropy_weight(x1) + entropy_weight(x2)


def product_entropy_distance(x1: GFVector, y1: GFVector, x2: GFVector, y2: GFVector) -> LogQValue:
    return entropy_distance(x1, y1) + entropy_distance(x2, y2)


def triangle_factor(w1: int, w2: int, n: int) -> Fraction:
    """The factor max{w1, n-w1, w2, n-w2}/n from the entropy-weight triangle bound."""
    if not (0 <= w1 <= n and 0 <= w2 <= n):
        raise InfeasibleParameterError("weights out of range")
    return Fraction(max(w1, n - w1, w2, n - w2), n)


def qary_entropy(q: int, x: float) -> float:
    """H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0."""
    if not 0.0 <= x <= 1.0:
        raise InfeasibleParameterError("argument must lie in [0, 1]")
    lq = math.log(q)
    s = x * math.log(q - 1) / lq if q > 2 else 0.0
    if 0.0 < x:
        s -= x * math.log(x) / lq
    if x < 1.0:
        s -= (1.0 - x) * math.log(1.0 - x) / lq
    return s


def qary_entropy_inv(q: int, y: float) -> float:
    """Inverse of qary_entropy from [0, 1] onto [0, 1 - 1/q], by bisection."""
    if not 0.0 <= y <= 1.0:
        raise InfeasibleParameterError("argument must lie in [0, 1]")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 1.0 - 1.0 / q
    lo, hi = 0.0, 1.0 - 1.0 / q
    # strictly increasing on [0, 1-1/q]; the derivative blows up at 0, so
    # bisection is the robust choice
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if qary_entropy(q, mid) < y:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12:
            break
    return 0.5 * (lo + hi)


def qary_entropy_power(q: int, n: int, k: int) -> Fraction:
    """q^(n * H_q(k/n)) as an exact rational: (q-1)^k n^n / (k^k (n-k)^(n-k))."""
    if not 0 <= k <= n:
        raise InfeasibleParameterError("k out of range")
    num = (q - 1) ** k * n**n
    den = (k**k if k else 1) * ((n - k) ** (n - k) if n - k else 1)
    return Fraction(num, den)


def binomial_sum_index_set(q: int, n: int, k: int) -> range:
    """The weight set whose surface total is bounded by qary_entropy_power.

    {0..k} below the balance point k = (q-1)n/q, {0..n} at it, {k..n} above.
    """
    if q * k < (q - 1) * n:
        return range(0, k + 1)
    if q * k == (q - 1) * n:
        return range(0, n + 1)
    return range(k, n + 1)


@dataclass(frozen=True)
class GVParams:
    """Gilbert-Varshamov radius delta and the packing decay base gamma."""

    q: int
    n: int
    k: int
    delta: float
    gamma: float


def gv_parameters(q: int, n: int, k: int) -> GVParams:
    """delta = H_q^-1(1 - k/n - log_q(n)/n) and gamma = delta/((q-1)(1-delta))."""
    arg = 1.0 - k / n - math.log(n) / (n * math.log(q))
    if not 0.0 < arg < 1.0:
        raise InfeasibleParameterError(
            f"1 - k/n - log_q(n)/n = {arg:.6g} outside (0, 1); parameters too small"
        )
    delta = qary_entropy_inv(q, arg)
    gamma = delta / ((q - 1) * (1.0 - delta))
    return GVParams(q, n, k, delta, gamma)

"""Random multiplier codes, white codes, and rough-sphere packing.

A multiplier code arises from multiplying the embedded message space by
a nonzero element of the degree-n extension field: averaged over all
multipliers, every nonzero weight class is hit proportionally to its
sphere surface, which is why a sampled code usually has a "white"
(surface-shaped) spectrum.  A white code packs translated fillers with
only a negligible set of collisions; the experiments here compute the
collision sets exhaustively and check every claimed inequality with
exact integers.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .codes import LinearCode, code_from_generator, weight_distribution_bruteforce
from .entropy import gv_parameters, surface_count
from .errors import InfeasibleParameterError, SearchExhaustedError
from .gf import ExtensionField, FieldSpec, GFMatrix, GFVector, VectorCodec, field_of_order

logger = logging.getLogger(__name__)

MAX_SPACE = 1 << 20


# ---------------------------------------------------------------------------
# Monomial maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialMap:
    """Coordinate permutation combined with nonzero per-coordinate scaling.

    Maps x to y with y[i] = v[i] * x[sigma_inv[i]]; weight preserving, hence
    entropy-weight preserving.  ``sigma`` gives the new position of each old
    coordinate (0-based).
    """

    field: FieldSpec
    sigma: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)) or len(self.v) != n:
            raise InfeasibleParameterError("invalid permutation")
        if any(not 0 < c < self.field.q for c in self.v):
            raise InfeasibleParameterError("scaling entries must be nonzero")

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MonomialMap":
        return cls(field, tuple(range(n)), (1,) * n)

    def apply(self, x: GFVector) -> GFVector:
        f = self.field
        out = [0] * len(self.sigma)
        for old, new in enumerate(self.sigma):
            out[new] = f.mul(self.v[new], x.elems[old])
        return GFVector(f, tuple(out))

    def apply_code(self, codec: VectorCodec, code: int) -> int:
        return codec.from_vector(self.apply(codec.to_vector(code)))

    def inverse(self) -> "MonomialMap":
        f = self.field
        n = len(self.sigma)
        inv_sigma = [0] * n
        inv_v = [0] * n
        for old, new in enumerate(self.sigma):
            inv_sigma[new] = old
            inv_v[old] = f.inv(self.v[new])
        return MonomialMap(f, tuple(inv_sigma), tuple(inv_v))


def random_monomial_map(field: FieldSpec, n: int, rng: random.Random) -> MonomialMap:
    sigma = list(range(n))
    rng.shuffle(sigma)
    v = tuple(rng.randrange(1, field.q) for _ in range(n))
    return MonomialMap(field, tuple(sigma), v)


# ---------------------------------------------------------------------------
# Multiplier codes
# ---------------------------------------------------------------------------


def get_extension(field: FieldSpec, n: int) -> ExtensionField:
    return ExtensionField(field, n)


def multiplier_code(field: FieldSpec, n: int, k: int, v: int, ext: ExtensionField | None = None) -> LinearCode:
    """The [n, k] code {v * g(x)} where g embeds GF(q)^k as the first k
    coordinates of the degree-n extension and v is a nonzero multiplier."""
    if v == 0:
        raise InfeasibleParameterError("multiplier must be nonzero")
    if not 1 <= k <= n:
        raise InfeasibleParameterError("need 1 <= k <= n")
    if ext is None:
        ext = get_extension(field, n)
    q = field.q
    rows = []
    for i in range(k):
        prod = ext.mul(v, q**i)
        rows.append(ext.decode(prod))
    return code_from_generator(GFMatrix(field, tuple(rows), n))


def multiplier_ensemble(field: FieldSpec, n: int, k: int) -> Iterator[tuple[int, LinearCode]]:
    """All q^n - 1 multiplier codes, in multiplier order."""
    ext = get_extension(field, n)
    for v in ext.nonzero():
        yield v, multiplier_code(field, n, k, v, ext)


def ensemble_weight_sums(q: int, n: int, k: int) -> list[int]:
    """Sum of the weight distributions over the whole multiplier ensemble.

    For every weight i >= 1 the exact total is (q^k - 1) C(n,i) (q-1)^i: each
    nonzero message lands on each weight-i vector for the same number of
    multipliers.
    """
    field = field_of_order(q)
    sums = [0] * (n + 1)
    for _, code in multiplier_ensemble(field, n, k):
        wd = weight_distribution_bruteforce(code)
        for i, a in enumerate(wd.counts):
            sums[i] += a
    return sums


def is_white(code: LinearCode, wd=None) -> bool:
    """Exact check that every nonzero weight count stays strictly below
    n q^-(n-k) times the sphere surface."""
    if wd is None:
        wd = weight_distribution_bruteforce(code)
    q, n, k = code.field.q, code.n, code.k
    shortfall = q ** (n - k)
    return all(
        wd.counts[i] * shortfall < n * surface_count(q, n, i) for i in range(1, n + 1)
    )


@dataclass(frozen=True)
class WhiteCodeResult:
    v: int
    code: LinearCode
    trials: int


def find_white_code(q: int, n: int, k: int, seed: int = 0, max_trials: int = 1000) -> WhiteCodeResult:
    """Sample multipliers until the resulting code has a white spectrum."""
    field = field_of_order(q)
    ext = get_extension(field, n)
    rng = random.Random(seed)
    shortfall = q ** (n - k)
    best_margin = None
    for trial in range(1, max_trials + 1):
        v = rng.randrange(1, ext.size)
        code = multiplier_code(field, n, k, v, ext)
        wd = weight_distribution_bruteforce(code)
        margin = max(
            Fraction(wd.counts[i] * shortfall, n * surface_count(q, n, i))
            for i in range(1, n + 1)
        )
        if margin < 1:
            return WhiteCodeResult(v, code, trial)
        if best_margin is None or margin < best_margin:
            best_margin = margin
    raise SearchExhaustedError(
        f"no white [{n},{k}] code over GF({q}) in {max_trials} trials; "
        f"best violation margin {best_margin} (need < 1)"
    )


# ---------------------------------------------------------------------------
# Packing experiments
# ---------------------------------------------------------------------------


def ball_codes(codec: VectorCodec, radius: int) -> set[int]:
    """Packed codes of all vectors of weight <= radius."""
    import itertools

    if radius < 0:
        raise InfeasibleParameterError("radius must be >= 0")
    n, q = codec.n, codec.field.q
    out = set()
    for w in range(min(radius, n) + 1):
        for support in itertools.combinations(range(n), w):
            for values in itertools.product(range(1, q), repeat=w):
                code = 0
                for pos, val in zip(support, values):
                    code += val * q**pos
                out.add(code)
    return out


def _codeword_codes(code: LinearCode, codec: VectorCodec) -> list[int]:
    return [codec.from_vector(w) for w in code.codewords()]


@dataclass(frozen=True)
class PackingResult:
    """Outcome of one packing experiment, all inequalities exact.

    The retained set B collects filler elements with no collision against any
    translate by a nonzero codeword; cond_seed / cond_bulk / cond_disjoint
    mirror the three guarantees (low-surface elements survive, B is almost
    all of S, translates of B are pairwise disjoint).
    """

    code: LinearCode
    filler: str
    s_size: int
    s0_size: int
    b_size: int
    collided: frozenset
    cond_seed: bool
    cond_bulk: bool
    cond_disjoint: bool
    hypothesis_ok: bool
    monomial: MonomialMap | None = None
    success: bool = True


def packing_experiment_ball(code: LinearCode, radius: int) -> PackingResult:
    """Identity-map packing of the radius-r ball against the code translates.

    The ball is invariant under monomial maps, so no map search is needed.
    Computes the collision indicator of every filler element exhaustively,
    then checks the three guarantees with exact integer arithmetic.
    """
    q, n, k = code.field.q, code.n, code.k
    if q**n > MAX_SPACE:
        raise InfeasibleParameterError(f"space size {q}^{n} exceeds {MAX_SPACE}")
    codec = VectorCodec(code.field, n)
    s = ball_codes(codec, radius)
    shortfall = q ** (n - k)
    hypothesis_ok = len(s) * n < shortfall
    if not hypothesis_ok:
        logger.warning(
            "|S| = %d does not satisfy |S| < q^(n-k)/n = %s; guarantees may fail",
            len(s),
            Fraction(shortfall, n),
        )
    collided = set()
    for c in _codeword_codes(code, codec):
        if c == 0:
            continue
        for sp in s:
            collided.add(codec.add(c, sp))
    b = {sp for sp in s if sp not in collided}
    s0 = {
        sp
        for sp in s
        if surface_count(q, n, codec.weight(sp)) * n * len(s) <= shortfall
    }
    cond_seed = s0 <= b
    # |B| > |S| (1 - n q^-(n-k) (|S| - |S0|)), cleared of denominators
    cond_bulk = len(b) * shortfall > len(s) * (shortfall - n * (len(s) - len(s0)))
    cond_disjoint = all(
        not any(codec.add(c, bp) in b for bp in b)
        for c in _codeword_codes(code, codec)
        if c != 0
    )
    # B was built collision-free, so disjointness must hold by construction
    assert cond_disjoint
    return PackingResult(
        code=code,
        filler=f"ball radius {radius}",
        s_size=len(s),
        s0_size=len(s0),
        b_size=len(b),
        collided=frozenset(collided & s),
        cond_seed=cond_seed,
        cond_bulk=cond_bulk,
        cond_disjoint=cond_disjoint,
        hypothesis_ok=hypothesis_ok,
    )


def packing_experiment_monomial(
    code: LinearCode, s_codes: Sequence[int] | set[int], seed: int = 0, trials: int = 200
) -> PackingResult:
    """Search monomial maps f for one whose mapped filler f(S) packs well.

    Success needs the zero element collision-free and the retained set B
    larger than |S| (1 - 2 n q^-(n-k) |S|), both checked exactly.  Failure
    after the trial budget is reported in the result, not raised: existence
    is only guaranteed on average when |S| < q^(n-k) / (2n).
    """
    q, n, k = code.field.q, code.n, code.k
    if q**n > MAX_SPACE:
        raise InfeasibleParameterError(f"space size {q}^{n} exceeds {MAX_SPACE}")
    s = set(s_codes)
    if 0 not in s:
        raise InfeasibleParameterError("the filler must contain the zero vector")
    codec = VectorCodec(code.field, n)
    shortfall = q ** (n - k)
    hypothesis_ok = 2 * len(s) * n < shortfall
    words = [c for c in _codeword_codes(code, codec) if c != 0]
    rng = random.Random(seed)
    best = None
    for trial in range(trials):
        m = (
            MonomialMap.identity(code.field, n)
            if trial == 0
            else random_monomial_map(code.field, n, rng)
        )
        fs = {m.apply_code(codec, sp) for sp in s}
        collided_img = set()
        for c in words:
            for sp in fs:
                collided_img.add(codec.add(c, sp))
        b = {sp for sp in s if m.apply_code(codec, sp) not in collided_img}
        ok = (0 in b) and (len(b) * shortfall > len(s) * (shortfall - 2 * n * len(s)))
        result = PackingResult(
            code=code,
            filler=f"explicit set of {len(s)}",
            s_size=len(s),
            s0_size=0,
            b_size=len(b),
            collided=frozenset(s - b),
            cond_seed=0 in b,
            cond_bulk=len(b) * shortfall > len(s) * (shortfall - 2 * n * len(s)),
            cond_disjoint=True,
            hypothesis_ok=hypothesis_ok,
            monomial=m,
            success=ok,
        )
        if ok:
            return result
        if best is None or result.b_size > best.b_size:
            best = result
    logger.info("no monomial map met the packing conditions in %d trials", trials)
    return best


# ---------------------------------------------------------------------------
# Separable subspaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparableSubspace:
    """A subspace meeting the forbidden set B only at 0; when maximal, its
    translates by B cover the whole space, giving size >= q^n / |B|."""

    code: LinearCode
    size: int
    b_size: int
    covering_verified: bool


def greedy_separable_subspace(field: FieldSpec, n: int, b_codes) -> SeparableSubspace:
    """Greedily extend a subspace avoiding B (packed codes, scalar-closed).

    Candidates are scanned in ascending packed-code order; at termination the
    covering property is verified exhaustively.
    """
    q = field.q
    if q**n > MAX_SPACE:
        raise InfeasibleParameterError(f"space size {q}^{n} exceeds {MAX_SPACE}")
    b = set(b_codes)
    if 0 not in b:
        raise InfeasibleParameterError("B must contain the zero vector")
    codec = VectorCodec(field, n)
    for a in range(2, q):
        if any(codec.scale(x, a) not in b for x in b):
            raise InfeasibleParameterError("B is not closed under scalar multiples")

    span = {0}
    basis = []
    for x in range(1, q**n):
        if any(codec.add(x, v) in b for v in span):
            continue
        basis.append(x)
        scaled = [codec.scale(x, a) for a in range(1, q)]
        old = list(span)
        span.update(codec.add(sx, v) for sx in scaled for v in old)
    # covering: every vector lies in some v + B
    covered = set()
    for v in span:
        covered.update(codec.add(v, bp) for bp in b)
    covering = len(covered) == q**n
    assert covering, "maximal separable subspace failed to cover the space"
    assert len(span) * len(b) >= q**n
    if basis:
        rows = tuple(codec.decode(x) for x in basis)
        code = code_from_generator(GFMatrix(field, rows, n))
    else:
        from .codes import zero_code

        code = zero_code(field, n)
    return SeparableSubspace(code=code, size=len(span), b_size=len(b), covering_verified=covering)


def low_entropy_ball(field: FieldSpec, n: int, h_surface: int) -> set[int]:
    """Packed codes of vectors with entropy weight strictly below the surface."""
    codec = VectorCodec(field, n)
    q = field.q
    small_weights = {i for i in range(n + 1) if surface_count(q, n, i) < h_surface}
    return {c for c in codec.all_codes() if codec.weight(c) in small_weights}


# ---------------------------------------------------------------------------
# End-to-end demo
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RoughPackingReport:
    q: int
    n: int
    k: int
    epsilon: float
    delta: float
    gamma: float
    radius: int
    experiment: PackingResult
    retained_ratio: Fraction
    threshold: float
    satisfied: bool


def rough_packing_demo(q: int, n: int, k: int, epsilon: float, seed: int = 0) -> RoughPackingReport:
    """Pack a near-GV-radius ball against a freshly found white code.

    Reports whether the retained fraction beats 1 - gamma^epsilon; the
    comparison is floating (gamma^epsilon is irrational) at 1e-9, everything
    else exact.
    """
    params = gv_parameters(q, n, k)
    radius = math.floor(params.delta * n - epsilon)
    if radius < 0:
        raise InfeasibleParameterError(
            f"epsilon = {epsilon:.6g} makes the radius negative (delta n = {params.delta * n:.6g})"
        )
    white = find_white_code(q, n, k, seed=seed)
    experiment = packing_experiment_ball(white.code, radius)
    ratio = Fraction(experiment.b_size, experiment.s_size)
    threshold = 1.0 - params.gamma**epsilon
    return RoughPackingReport(
        q=q,
        n=n,
        k=k,
        epsilon=epsilon,
        delta=params.delta,
        gamma=params.gamma,
        radius=radius,
        experiment=experiment,
        retained_ratio=ratio,
        threshold=threshold,
        satisfied=float(ratio) > threshold - 1e-9,
    )

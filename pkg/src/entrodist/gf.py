"""Arithmetic in GF(p^r) and exact linear algebra over it.

Field elements are plain ints in [0, q).  The code of an element is the
base-p digit encoding of its polynomial coordinates, a_0 least
significant; for prime fields the code is the residue itself and for
GF(2^r) it is the usual coefficient bitmask.

Extension fields reduce modulo a monic irreducible polynomial.  When
none is supplied, the default is the lexicographically smallest monic
irreducible of the right degree (smallest integer encoding of the
coefficient vector), which is deterministic across runs, so element
codes are stable and safe to serialize.  For GF(4) this recovers
x^2 + x + 1, for GF(8) x^3 + x + 1, and so on.

Multiplication in extension fields uses log/antilog tables, which caps
supported sizes at q <= 2^16.  All values are immutable and every
operation is a pure function.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InfeasibleParameterError, MatrixFormatError

MAX_FIELD_ORDER = 1 << 16


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over an arbitrary field.
#
# A polynomial is a tuple of element codes, lowest degree first, with no
# trailing zeros (the zero polynomial is the empty tuple).  These are used to
# validate reduction polynomials and to build multiplication tables; they are
# not performance critical.
# ---------------------------------------------------------------------------


def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_add(f, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(f.add(x, y))
    return _poly_trim(out)


def _poly_scale(f, a, s):
    if s == 0:
        return ()
    return _poly_trim([f.mul(s, x) for x in a])


def _poly_mul(f, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return _poly_trim(out)


def _poly_mod(f, a, m):
    a = list(a)
    dm = len(m) - 1
    lead_inv = f.inv(m[-1])
    while len(a) > dm:
        c = a[-1]
        if c != 0:
            s = f.mul(c, lead_inv)
            off = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[off + i] = f.sub(a[off + i], f.mul(s, mi))
        a.pop()
    return _poly_trim(a)


def _poly_mulmod(f, a, b, m):
    return _poly_mod(f, _poly_mul(f, a, b), m)


def _poly_powmod(f, a, e, m):
    result = (1,)
    base = _poly_mod(f, a, m)
    while e:
        if e & 1:
            result = _poly_mulmod(f, result, base, m)
        base = _poly_mulmod(f, base, base, m)
        e >>= 1
    return result


def _poly_gcd(f, a, b):
    while b:
        lead_inv = f.inv(b[-1])
        b_monic = _poly_scale(f, b, lead_inv)
        a, b = b, _poly_mod(f, a, b_monic)
    return a


def poly_is_irreducible(field, coeffs: Sequence[int]) -> bool:
    """Rabin's test for a monic polynomial over ``field``."""
    m = _poly_trim(coeffs)
    deg = len(m) - 1
    if deg < 1 or m[-1] != 1:
        return False
    if deg == 1:
        return True
    Q = field.q
    x = (0, 1)
    # x^(Q^deg) == x mod m, and gcd(x^(Q^(deg/l)) - x, m) == 1 for prime l | deg
    if _poly_powmod(field, x, Q**deg, m) != x:
        return False
    d = deg
    l = 2
    prime_divs = []
    while l * l <= d:
        if d % l == 0:
            prime_divs.append(l)
            while d % l == 0:
                d //= l
        l += 1
    if d > 1:
        prime_divs.append(d)
    for l in prime_divs:
        xp = _poly_powmod(field, x, Q ** (deg // l), m)
        g = _poly_gcd(field, _poly_add(field, xp, _poly_scale(field, x, field.neg(1))), m)
        if len(g) - 1 != 0:
            return False
    return True


def _encode_digits(digits: Sequence[int], base: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * base + d
    return code


def _decode_digits(code: int, base: int, length: int):
    out = []
    for _ in range(length):
        code, d = divmod(code, base)
        out.append(d)
    return tuple(out)


def find_irreducible(field, degree: int):
    """Smallest monic irreducible of ``degree`` over ``field``.

    Candidates x^degree + g(x) are ordered by the integer encoding of g's
    coefficient vector (constant term least significant), so the result is
    deterministic.
    """
    Q = field.q
    for enc in range(Q**degree):
        low = _decode_digits(enc, Q, degree)
        cand = low + (1,)
        if poly_is_irreducible(field, cand):
            return cand
    raise InfeasibleParameterError(f"no irreducible polynomial of degree {degree}")


def _multiplicative_tables(base, m: int, poly):
    """exp/log tables for the degree-m extension of ``base`` defined by ``poly``.

    Element codes are base-Q digit encodings of the coordinate vector.
    Returns (exp, log) with exp of length 2*(N-1) for reduction-free lookups.
    """
    Q = base.q
    N = Q**m

    if Q == 2:
        # Pack GF(2) polynomials as bitmasks; the element code is the mask.
        mod_mask = _encode_digits(poly, 2)

        def raw_mul(a: int, b: int) -> int:
            p = 0
            while b:
                if b & 1:
                    p ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= mod_mask
            return p

    else:

        def raw_mul(a: int, b: int) -> int:
            pa = _poly_trim(_decode_digits(a, Q, m))
            pb = _poly_trim(_decode_digits(b, Q, m))
            pc = _poly_mulmod(base, pa, pb, poly)
            return _encode_digits(pc + (0,) * (m - len(pc)), Q)

    for gen in range(2, N):
        exp = [0] * (2 * (N - 1))
        log = [0] * N
        cur = 1
        ok = True
        for i in range(N - 1):
            exp[i] = cur
            log[cur] = i
            cur = raw_mul(cur, gen)
            if cur == 1 and i != N - 2:
                ok = False
                break
        if ok and cur == 1:
            for i in range(N - 1, 2 * (N - 1)):
                exp[i] = exp[i - (N - 1)]
            return exp, log
    raise InfeasibleParameterError("no multiplicative generator found")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^r), with arithmetic on integer element codes."""

    __slots__ = ("p", "r", "q", "reduction_poly", "_exp", "_log", "_add_table")

    def __init__(self, p: int, r: int = 1, poly: Sequence[int] | None = None):
        if not is_prime(p):
            raise InfeasibleParameterError(f"{p} is not prime")
        if r < 1:
            raise InfeasibleParameterError("extension degree must be >= 1")
        q = p**r
        if q > MAX_FIELD_ORDER:
            raise InfeasibleParameterError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        self.p = p
        self.r = r
        self.q = q
        self._add_table = None
        if r == 1:
            if poly is not None:
                raise InfeasibleParameterError("prime fields take no reduction polynomial")
            self.reduction_poly = None
            self._exp = self._log = None
            return
        base = field_make(p)
        if poly is None:
            poly = find_irreducible(base, r)
        else:
            poly = tuple(int(c) % p for c in poly)
            if len(poly) != r + 1 or poly[-1] != 1:
                raise InfeasibleParameterError(f"reduction polynomial must be monic of degree {r}")
            if not poly_is_irreducible(base, poly):
                raise InfeasibleParameterError(f"polynomial {poly} is reducible over GF({p})")
        self.reduction_poly = poly
        self._exp, self._log = _multiplicative_tables(base, r, poly)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        code, mult = 0, 1
        for _ in range(self.r):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            code += (da + db) % p * mult
            mult *= p
        return code

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.r == 1:
            return -a % self.p
        p = self.p
        code, mult = 0, 1
        for _ in range(self.r):
            a, da = divmod(a, p)
            code += -da % p * mult
            mult *= p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[self.q - 1 - self._log[a]]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    @property
    def add_table(self) -> bytes:
        """Flattened q*q addition table; only available for q <= 256."""
        if self._add_table is None:
            if self.q > 256:
                raise InfeasibleParameterError("addition table limited to q <= 256")
            q = self.q
            self._add_table = bytes(self.add(a, b) for a in range(q) for b in range(q))
        return self._add_table

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.r, self.reduction_poly) == (other.p, other.r, other.reduction_poly)
        )

    def __hash__(self):
        return hash((self.p, self.r, self.reduction_poly))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"


@functools.lru_cache(maxsize=None)
def field_make(p: int, r: int = 1, poly: tuple | None = None) -> FieldSpec:
    """Construct (and cache) GF(p^r); ``poly`` overrides the default reduction."""
    return FieldSpec(p, r, poly)


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q, with the default reduction polynomial."""
    if q < 2:
        raise InfeasibleParameterError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    r = 0
    m = q
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise InfeasibleParameterError(f"{q} is not a prime power")
    return field_make(p, r)


class ExtensionField:
    """GF(Q^m) presented as an m-dimensional vector space over a base field.

    Element codes are base-Q digit encodings of the coordinate vector in the
    polynomial basis, so code <-> coordinates is the natural digit map for any
    base field, prime or not.  Used for the multiplier-code ensemble, where a
    field multiplication acts as a linear map on GF(Q)^m.
    """

    __slots__ = ("base", "m", "size", "poly", "_exp", "_log")

    def __init__(self, base: FieldSpec, m: int, poly: Sequence[int] | None = None):
        if base.q**m > MAX_FIELD_ORDER:
            raise InfeasibleParameterError(
                f"extension of order {base.q}^{m} exceeds {MAX_FIELD_ORDER}"
            )
        self.base = base
        self.m = m
        self.size = base.q**m
        if poly is None:
            poly = find_irreducible(base, m)
        else:
            poly = tuple(poly)
            if len(poly) != m + 1 or poly[-1] != 1 or not poly_is_irreducible(base, poly):
                raise InfeasibleParameterError("invalid reduction polynomial")
        self.poly = poly
        self._exp, self._log = _multiplicative_tables(base, m, poly)

    def encode(self, coords: Sequence[int]) -> int:
        return _encode_digits(coords, self.base.q)

    def decode(self, code: int):
        return _decode_digits(code, self.base.q, self.m)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def nonzero(self) -> range:
        return range(1, self.size)


# ---------------------------------------------------------------------------
# Vectors and matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GFVector:
    field: FieldSpec
    elems: tuple[int, ...]

    def __post_init__(self):
        q = self.field.q
        if any(not 0 <= e < q for e in self.elems):
            raise InfeasibleParameterError("element code out of range")

    @property
    def n(self) -> int:
        return len(self.elems)

    def weight(self) -> int:
        return sum(1 for e in self.elems if e)

    def _check_peer(self, other: "GFVector"):
        if self.field != other.field or len(self.elems) != len(other.elems):
            raise InfeasibleParameterError("vectors live in different spaces")

    def __add__(self, other: "GFVector") -> "GFVector":
        self._check_peer(other)
        f = self.field
        return GFVector(f, tuple(f.add(a, b) for a, b in zip(self.elems, other.elems)))

    def __sub__(self, other: "GFVector") -> "GFVector":
        self._check_peer(other)
        f = self.field
        return GFVector(f, tuple(f.sub(a, b) for a, b in zip(self.elems, other.elems)))

    def __neg__(self) -> "GFVector":
        f = self.field
        return GFVector(f, tuple(f.neg(a) for a in self.elems))

    def scale(self, a: int) -> "GFVector":
        f = self.field
        return GFVector(f, tuple(f.mul(a, e) for e in self.elems))

    def __matmul__(self, m: "GFMatrix") -> "GFVector":
        if self.field != m.field or self.n != m.rows:
            raise InfeasibleParameterError("dimension mismatch in vector-matrix product")
        f = self.field
        out = [0] * m.cols
        for x, row in zip(self.elems, m.entries):
            if x == 0:
                continue
            for j, e in enumerate(row):
                if e:
                    out[j] = f.add(out[j], f.mul(x, e))
        return GFVector(f, tuple(out))


@dataclass(frozen=True)
class GFMatrix:
    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        q = self.field.q
        for row in self.entries:
            if len(row) != self.cols:
                raise InfeasibleParameterError("ragged matrix")
            if any(not 0 <= e < q for e in row):
                raise InfeasibleParameterError("element code out of range")
        if self.cols < 1:
            raise InfeasibleParameterError("matrix needs at least one column")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None):
        rows = tuple(tuple(int(e) for e in r) for r in rows)
        if cols is None:
            if not rows:
                raise InfeasibleParameterError("cannot infer width of an empty matrix")
            cols = len(rows[0])
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int):
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int):
        return cls(field, tuple((0,) * cols for _ in range(rows)), cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> GFVector:
        return GFVector(self.field, self.entries[i])

    def row_vectors(self) -> Iterator[GFVector]:
        for r in self.entries:
            yield GFVector(self.field, r)

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if self.field != other.field or self.cols != other.rows:
            raise InfeasibleParameterError("dimension mismatch in matrix product")
        f = self.field
        out = []
        for row in self.entries:
            acc = [0] * other.cols
            for x, orow in zip(row, other.entries):
                if x == 0:
                    continue
                for j, e in enumerate(orow):
                    if e:
                        acc[j] = f.add(acc[j], f.mul(x, e))
            out.append(tuple(acc))
        return GFMatrix(f, tuple(out), other.cols)

    def rref(self) -> tuple["GFMatrix", int, tuple[int, ...]]:
        """Reduced row-echelon form, rank, and pivot columns."""
        f = self.field
        rows = [list(r) for r in self.entries]
        nr = len(rows)
        pivots = []
        pr = 0
        for c in range(self.cols):
            piv = next((i for i in range(pr, nr) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[pr], rows[piv] = rows[piv], rows[pr]
            lead = rows[pr][c]
            if lead != 1:
                s = f.inv(lead)
                rows[pr] = [f.mul(s, e) for e in rows[pr]]
            for i in range(nr):
                if i != pr and rows[i][c] != 0:
                    s = rows[i][c]
                    rows[i] = [f.sub(e, f.mul(s, pe)) for e, pe in zip(rows[i], rows[pr])]
            pivots.append(c)
            pr += 1
            if pr == nr:
                break
        reduced = GFMatrix(f, tuple(tuple(r) for r in rows), self.cols)
        return reduced, pr, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> "GFMatrix":
        """Rows form a basis of {x : self @ x^T = 0}; row count = cols - rank."""
        f = self.field
        reduced, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free_cols = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for fc in free_cols:
            v = [0] * self.cols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(reduced.entries[i][fc])
            basis.append(tuple(v))
        return GFMatrix(f, tuple(basis), self.cols)

    def transpose(self) -> "GFMatrix":
        return GFMatrix(
            self.field,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            max(self.rows, 1),
        ) if self.rows else GFMatrix(self.field, tuple(() for _ in range(self.cols)), 1)


# ---------------------------------------------------------------------------
# Packed vector codes
# ---------------------------------------------------------------------------


class VectorCodec:
    """Vectors of GF(q)^n packed as single ints, base-q digits.

    For characteristic 2 the packed addition is a plain XOR because digit
    fields never interact; otherwise addition works digit by digit.
    """

    __slots__ = ("field", "n", "size")

    def __init__(self, field: FieldSpec, n: int):
        self.field = field
        self.n = n
        self.size = field.q**n

    def encode(self, elems: Sequence[int]) -> int:
        return _encode_digits(elems, self.field.q)

    def decode(self, code: int) -> tuple[int, ...]:
        return _decode_digits(code, self.field.q, self.n)

    def add(self, a: int, b: int) -> int:
        if self.field.p == 2:
            return a ^ b
        f = self.field
        q = f.q
        code, mult = 0, 1
        for _ in range(self.n):
            a, da = divmod(a, q)
            b, db = divmod(b, q)
            code += f.add(da, db) * mult
            mult *= q
        return code

    def neg(self, a: int) -> int:
        if self.field.p == 2:
            return a
        f = self.field
        q = f.q
        code, mult = 0, 1
        for _ in range(self.n):
            a, da = divmod(a, q)
            code += f.neg(da) * mult
            mult *= q
        return code

    def scale(self, a: int, s: int) -> int:
        f = self.field
        q = f.q
        code, mult = 0, 1
        for _ in range(self.n):
            a, da = divmod(a, q)
            code += f.mul(s, da) * mult
            mult *= q
        return code

    def weight(self, a: int) -> int:
        q = self.field.q
        if q == 2:
            return a.bit_count()
        w = 0
        while a:
            a, d = divmod(a, q)
            if d:
                w += 1
        return w

    def all_codes(self) -> range:
        return range(self.size)

    def to_vector(self, code: int) -> GFVector:
        return GFVector(self.field, self.decode(code))

    def from_vector(self, v: GFVector) -> int:
        return self.encode(v.elems)


# ---------------------------------------------------------------------------
# Matrix text format
#
#   q=<p>^<r> rows=<k> cols=<n>
#   poly=<c_0 c_1 ... c_r>          (optional, custom reduction polynomial)
#   <n element codes per row, whitespace separated, k rows>
# ---------------------------------------------------------------------------


def format_matrix(m: GFMatrix) -> str:
    f = m.field
    lines = [f"q={f.p}^{f.r} rows={m.rows} cols={m.cols}"]
    if f.r > 1:
        lines.append("poly=" + " ".join(str(c) for c in f.reduction_poly))
    width = len(str(f.q - 1))
    for row in m.entries:
        lines.append(" ".join(str(e).rjust(width) for e in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GFMatrix:
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("line 1: empty input")
    header = lines[0].split()
    fields = {}
    for tok in header:
        if "=" not in tok:
            raise MatrixFormatError(f"line 1: bad token {tok!r}")
        key, val = tok.split("=", 1)
        fields[key] = val
    for key in ("q", "rows", "cols"):
        if key not in fields:
            raise MatrixFormatError(f"line 1: missing {key}=")
    qspec = fields["q"]
    try:
        if "^" in qspec:
            p_s, r_s = qspec.split("^", 1)
            p, r = int(p_s), int(r_s)
        else:
            p, r = int(qspec), 1
        k = int(fields["rows"])
        n = int(fields["cols"])
    except ValueError as e:
        raise MatrixFormatError(f"line 1: {e}") from None

    body_start = 1
    poly = None
    if len(lines) > 1 and lines[1].startswith("poly="):
        try:
            poly = tuple(int(t) for t in lines[1][len("poly=") :].split())
        except ValueError as e:
            raise MatrixFormatError(f"line 2: {e}") from None
        body_start = 2
    try:
        field = field_make(p, r, poly)
    except InfeasibleParameterError as e:
        raise MatrixFormatError(f"line 1: {e}") from None

    rows = []
    for i, line in enumerate(lines[body_start:], start=body_start + 1):
        if not line.strip():
            continue
        try:
            row = tuple(int(t) for t in line.split())
        except ValueError as e:
            raise MatrixFormatError(f"line {i}: {e}") from None
        if len(row) != n:
            raise MatrixFormatError(f"line {i}: expected {n} entries, got {len(row)}")
        if any(not 0 <= e < field.q for e in row):
            raise MatrixFormatError(f"line {i}: element code out of range for GF({field.q})")
        rows.append(row)
    if len(rows) != k:
        raise MatrixFormatError(f"expected {k} rows, got {len(rows)}")
    return GFMatrix(field, tuple(rows), n)


def read_matrix(path) -> GFMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(m: GFMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(m))

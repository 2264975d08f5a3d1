"""Field arithmetic and exact linear algebra."""

import itertools

import pytest

from entrodist.errors import InfeasibleParameterError, MatrixFormatError
from entrodist.gf import (
    ExtensionField,
    FieldSpec,
    GFMatrix,
    GFVector,
    VectorCodec,
    field_make,
    field_of_order,
    find_irreducible,
    format_matrix,
    parse_matrix,
    poly_is_irreducible,
)

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)]


def gf4_oracle_mul(a, b):
    """Multiply in GF(4) by raw polynomial arithmetic mod x^2 + x + 1."""
    # elements are bit pairs (a0, a1) for a0 + a1 x
    a0, a1 = a & 1, a >> 1
    b0, b1 = b & 1, b >> 1
    c0 = a0 & b0
    c1 = (a0 & b1) ^ (a1 & b0)
    c2 = a1 & b1
    # x^2 = x + 1
    return (c0 ^ c2) | ((c1 ^ c2) << 1)


def test_gf4_against_polynomial_oracle():
    f = field_make(2, 2)
    assert f.reduction_poly == (1, 1, 1)  # the only irreducible quadratic over GF(2)
    for a in range(4):
        for b in range(4):
            assert f.mul(a, b) == gf4_oracle_mul(a, b)
            assert f.add(a, b) == a ^ b


def test_prime_field_basics():
    f = field_make(3)
    assert f.inv(2) == 2  # 2*2 = 4 = 1
    assert f.add(2, 2) == 1
    assert f.neg(1) == 2
    f2 = field_make(2)
    assert f2.add(1, 1) == 0


def test_non_prime_characteristic_rejected():
    with pytest.raises(InfeasibleParameterError):
        field_make(4, 1)


def test_reducible_polynomial_rejected():
    # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(InfeasibleParameterError):
        FieldSpec(2, 2, (1, 0, 1))


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        field_make(5).inv(0)


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, r):
    f = field_make(p, r)
    q = f.q
    for a in range(q):
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in range(q):
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
    trip = range(q) if q <= 9 else range(0, q, max(1, q // 9))
    for a in trip:
        for b in trip:
            for c in trip:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_default_polynomials_are_smallest_irreducible():
    # GF(8): candidates below x^3 + x + 1 are x^3, x^3+1, x^3+x; all reducible
    f8 = field_make(2, 3)
    assert f8.reduction_poly == (1, 1, 0, 1)
    f9 = field_make(3, 2)
    assert f9.reduction_poly == (1, 0, 1)  # x^2 + 1, no roots mod 3
    base = field_make(2)
    assert poly_is_irreducible(base, (1, 1, 0, 1))
    assert not poly_is_irreducible(base, (1, 0, 1))


def test_explicit_polynomial_override():
    # x^2 + 2x + 2 is also irreducible over GF(3)
    f = field_make(3, 2, (2, 2, 1))
    assert f.reduction_poly == (2, 2, 1)
    assert f.mul(3, 3) != 0  # x * x reduced, never zero in a field
    for a in range(1, 9):
        assert f.mul(a, f.inv(a)) == 1


def test_field_of_order():
    assert field_of_order(8) == field_make(2, 3)
    assert field_of_order(7) == field_make(7)
    with pytest.raises(InfeasibleParameterError):
        field_of_order(6)


def test_extension_field_relative_to_gf4():
    # GF(4^2) as a 2-dim space over GF(4); codes are base-4 digit pairs
    base = field_make(2, 2)
    ext = ExtensionField(base, 2)
    assert ext.size == 16
    seen = set()
    for a in range(1, 16):
        inv_walk = [ext.mul(a, b) for b in range(16)]
        assert 1 in inv_walk
        seen.add(a)
    # multiplication by a nonzero element permutes nonzero codes
    for a in range(1, 16):
        imgs = {ext.mul(a, b) for b in range(1, 16)}
        assert imgs == set(range(1, 16))


def test_find_irreducible_has_right_degree():
    base = field_make(2)
    for m in (2, 3, 4, 8, 10):
        poly = find_irreducible(base, m)
        assert len(poly) == m + 1 and poly[-1] == 1


# ---------------------------------------------------------------------------
# Linear algebra
# ---------------------------------------------------------------------------


def test_rref_identity():
    f = field_make(2)
    m = GFMatrix.identity(f, 3)
    red, rank, piv = m.rref()
    assert red == m and rank == 3 and piv == (0, 1, 2)


def test_rref_dependent_rows():
    # third row is the sum of the first two
    f = field_make(2)
    m = GFMatrix(f, ((1, 1, 0), (0, 1, 1), (1, 0, 1)), 3)
    _, rank, _ = m.rref()
    assert rank == 2


def test_rref_zero_matrix():
    f = field_make(3)
    m = GFMatrix.zero(f, 2, 4)
    _, rank, piv = m.rref()
    assert rank == 0 and piv == ()


def test_rref_idempotent_gf9():
    import random

    f = field_make(3, 2)
    rng = random.Random(5)
    for _ in range(20):
        m = GFMatrix(f, tuple(tuple(rng.randrange(9) for _ in range(5)) for _ in range(3)), 5)
        red, rank, _ = m.rref()
        red2, rank2, _ = red.rref()
        assert red2 == red and rank2 == rank


def test_kernel_of_identity_empty():
    f = field_make(2)
    kb = GFMatrix.identity(f, 4).kernel_basis()
    assert kb.rows == 0


def test_kernel_of_all_one_row():
    f = field_make(2)
    m = GFMatrix(f, ((1,) * 5,), 5)
    kb = m.kernel_basis()
    assert kb.rows == 4
    for row in kb.entries:
        assert sum(row) % 2 == 0  # every basis vector has even weight


def test_kernel_of_zero_row_is_full_space():
    f = field_make(3)
    m = GFMatrix.zero(f, 1, 4)
    kb = m.kernel_basis()
    assert kb.rows == 4 and kb.rank() == 4


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2)])
def test_rank_nullity(p, r):
    import random

    f = field_make(p, r)
    rng = random.Random(p * 10 + r)
    for _ in range(30):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 6)
        m = GFMatrix(
            f, tuple(tuple(rng.randrange(f.q) for _ in range(cols)) for _ in range(rows)), cols
        )
        assert m.rank() + m.kernel_basis().rows == cols
        # kernel rows really annihilate
        for kr in m.kernel_basis().entries:
            for mr in m.entries:
                acc = 0
                for a, b in zip(mr, kr):
                    acc = f.add(acc, f.mul(a, b))
                assert acc == 0


def test_vector_matrix_product():
    f = field_make(2)
    x = GFVector(f, (1, 0, 1))
    assert (x @ GFMatrix.identity(f, 3)).elems == (1, 0, 1)
    zero = GFVector(f, (0, 0, 0))
    assert (zero @ GFMatrix.identity(f, 3)).weight() == 0


def test_vector_ops():
    f = field_make(3)
    x = GFVector(f, (1, 2, 0))
    y = GFVector(f, (2, 2, 1))
    assert (x + y).elems == (0, 1, 1)
    assert (x - y).elems == (2, 0, 2)
    assert (-x).elems == (2, 1, 0)
    assert x.scale(2).elems == (2, 1, 0)
    assert x.weight() == 2


def test_matrix_product_dimension_mismatch():
    f = field_make(2)
    with pytest.raises(InfeasibleParameterError):
        GFMatrix.identity(f, 2) @ GFMatrix.identity(f, 3)


# ---------------------------------------------------------------------------
# Matrix text format
# ---------------------------------------------------------------------------


def test_matrix_text_roundtrip_prime():
    f = field_make(2)
    m = GFMatrix(f, ((1, 0, 1), (0, 1, 1)), 3)
    text = format_matrix(m)
    assert text.splitlines()[0] == "q=2^1 rows=2 cols=3"
    assert parse_matrix(text) == m


def test_matrix_text_roundtrip_extension():
    f = field_make(2, 2)
    m = GFMatrix(f, ((1, 2, 3), (0, 1, 2)), 3)
    text = format_matrix(m)
    assert "poly=1 1 1" in text
    assert parse_matrix(text) == m


def test_matrix_text_custom_poly_roundtrip():
    f = field_make(3, 2, (2, 2, 1))
    m = GFMatrix(f, ((1, 8),), 2)
    back = parse_matrix(format_matrix(m))
    assert back.field.reduction_poly == (2, 2, 1)
    assert back == m


def test_matrix_text_errors_carry_line_numbers():
    with pytest.raises(MatrixFormatError, match="line 1"):
        parse_matrix("rows=2 cols=3\n1 0 1\n0 1 1\n")
    with pytest.raises(MatrixFormatError, match="line 2"):
        parse_matrix("q=2^1 rows=1 cols=3\n1 0 x\n")
    with pytest.raises(MatrixFormatError, match="line 2"):
        parse_matrix("q=2^1 rows=1 cols=3\n1 0\n")
    with pytest.raises(MatrixFormatError, match="out of range"):
        parse_matrix("q=2^1 rows=1 cols=2\n1 5\n")


# ---------------------------------------------------------------------------
# Packed vector codes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("p,r,n", [(2, 1, 5), (3, 1, 3), (2, 2, 3)])
def test_vector_codec_roundtrip_and_add(p, r, n):
    f = field_make(p, r)
    codec = VectorCodec(f, n)
    for code in range(codec.size):
        v = codec.decode(code)
        assert codec.encode(v) == code
        assert codec.weight(code) == sum(1 for e in v if e)
    for a, b in itertools.islice(itertools.product(range(codec.size), repeat=2), 500):
        va, vb = codec.to_vector(a), codec.to_vector(b)
        assert codec.add(a, b) == codec.from_vector(va + vb)
    for a in range(codec.size):
        for s in range(f.q):
            assert codec.scale(a, s) == codec.from_vector(codec.to_vector(a).scale(s))

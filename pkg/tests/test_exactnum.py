import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamstab.exactnum import (
    I,
    OMEGA6,
    ONE,
    SQRT2,
    SQRT3,
    SQRT6,
    ZERO,
    CycMatrix,
    CycNum,
    SqrtError,
    commutator,
    gram_schmidt_real,
    nullspace,
    rank,
    sqrt_rational,
)

small_q = st.fractions(min_value=-6, max_value=6, max_denominator=7)
cycnums = st.lists(small_q, min_size=8, max_size=8).map(CycNum)
nonzero = cycnums.filter(bool)


def test_power_basis_expressions_square_correctly():
    # checked before anything else relies on them
    z = CycNum.zeta
    assert (z(3) + z(-3)) ** 2 == 2
    assert (z(2) + z(-2)) ** 2 == 3
    assert complex(SQRT2) == pytest.approx(2**0.5)
    assert complex(SQRT3) == pytest.approx(3**0.5)


def test_reduction_by_cyclotomic_polynomial():
    z4 = CycNum.zeta(4)
    assert z4 * z4 == CycNum.zeta(4) - 1
    assert CycNum.zeta(8) == CycNum.zeta(4) - ONE


def test_named_constants():
    assert I * I == -1
    assert OMEGA6**6 == 1
    assert OMEGA6**3 == -1
    assert (SQRT2 * SQRT3) ** 2 == 6
    assert SQRT2 * SQRT3 == SQRT6
    assert complex(OMEGA6) == pytest.approx(cmath.exp(1j * cmath.pi / 3))


def test_inverse_examples():
    assert ONE.inverse() == ONE
    assert CycNum.zeta(1).inverse() == CycNum.zeta(23)
    assert (1 + SQRT2).inverse() == SQRT2 - 1
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conj_examples():
    assert I.conj() == -I
    assert SQRT2.conj() == SQRT2
    assert OMEGA6.conj() == CycNum.zeta(-4)


def test_coeffs_are_canonical():
    x = CycNum([Fraction(2, 4), 0, 0, 0, 0, 0, 0, 0, 0, 1])  # z^9 reduces
    assert x == CycNum([Fraction(1, 2)]) + CycNum.zeta(9)
    assert len(x.coeffs) == 8
    assert hash(CycNum([1, 2])) == hash(CycNum([Fraction(2, 2), 2]))


@given(cycnums, cycnums, cycnums)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == ZERO


@given(nonzero)
def test_inverse_property(x):
    assert x * x.inverse() == ONE


@given(cycnums, cycnums)
def test_conj_is_automorphism(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.conj().conj() == x
    assert (x * x.conj()).is_real()
    assert complex(x.conj()) == pytest.approx(complex(x).conjugate(), abs=1e-9)


@given(cycnums, cycnums)
def test_embedding_is_a_homomorphism(x, y):
    assert complex(x * y) == pytest.approx(complex(x) * complex(y), abs=1e-7)


@pytest.mark.parametrize(
    "q, expect",
    [(2, SQRT2), (3, SQRT3), (6, SQRT6), (Fraction(9, 8), 3 / (2 * SQRT2)),
     (Fraction(3, 8), SQRT6 / 4), (Fraction(8, 3), 2 * SQRT6 / 3), (4, 2 * ONE), (0, ZERO)],
)
def test_sqrt_rational(q, expect):
    r = sqrt_rational(q)
    assert r == expect
    assert r * r == q


@pytest.mark.parametrize("q", [5, Fraction(1, 5), -1, 7])
def test_sqrt_rational_outside_field(q):
    with pytest.raises(SqrtError):
        sqrt_rational(q)


def test_nullspace_examples():
    assert len(nullspace(CycMatrix.zeros(2))) == 2
    assert nullspace(CycMatrix.identity(3)) == []


def test_gram_schmidt_examples():
    std = [(ONE, ZERO), (ZERO, ONE)]

    def dot(u, v):
        return sum((a * b.conj() for a, b in zip(u, v)), ZERO)

    assert gram_schmidt_real(std, dot) == std
    (v,) = gram_schmidt_real([(ONE, ONE)], dot)
    assert v == (1 / SQRT2, 1 / SQRT2)


def test_gram_schmidt_reference_frame():
    gram = CycMatrix.diag([Fraction(9, 8), Fraction(3, 8), Fraction(3, 8)])

    def inner(u, v):
        return sum((u[i] * gram[i, i] * v[i] for i in range(3)), ZERO)

    std = [tuple(ONE if i == j else ZERO for i in range(3)) for j in range(3)]
    ys = gram_schmidt_real(std, inner)
    assert [y[i] for i, y in enumerate(ys)] == [2 * SQRT2 / 3, 2 * SQRT2 / SQRT3, 2 * SQRT2 / SQRT3]
    assert all(inner(a, b) == (1 if i == j else 0) for i, a in enumerate(ys) for j, b in enumerate(ys))


def test_gram_schmidt_rejects_dependent():
    with pytest.raises(ValueError):
        gram_schmidt_real([(ONE,), (2 * ONE,)], lambda u, v: u[0] * v[0])


mats = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(cycnums, min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@settings(max_examples=40)
@given(mats)
def test_nullspace_property(rows):
    M = CycMatrix(rows)
    basis = nullspace(M)
    for v in basis:
        assert all(not x for x in M @ v)
    assert rank(M.rows) + len(basis) == M.shape[1]


@given(cycnums, cycnums, cycnums, cycnums)
def test_conj_transpose(a, b, c, d):
    A = CycMatrix([[a, b], [c, d]])
    B = CycMatrix([[d, a], [b, c]])
    assert A.H.H == A
    assert (A @ B).H == B.H @ A.H
    assert commutator(A, A).is_zero()

"""Irreducible representations of SU(2) on binary forms.

``rho_k`` acts on degree-k forms by (rho(g) f)(z) = f(g^-1 z).  Coordinates
are taken in the monomial basis z1^(k-j) z2^j, j = 0..k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .exactnum import (
    I,
    OMEGA6,
    ONE,
    SQRT2,
    ZERO,
    CycMatrix,
    CycNum,
    Scalar,
)


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial sum_j coeffs[j] * z1^(k-j) * z2^j."""

    coeffs: tuple[CycNum, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(CycNum.coerce(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, k: int, j: int, c: Scalar = 1) -> "BinaryForm":
        """c * z1^(k-j) * z2^j."""
        return cls(tuple(CycNum.coerce(c) if i == j else ZERO for i in range(k + 1)))

    @classmethod
    def from_exponents(cls, k: int, terms: dict[int, Scalar]) -> "BinaryForm":
        """Build from {exponent of z1: coefficient}."""
        coeffs = [ZERO] * (k + 1)
        for l, c in terms.items():
            coeffs[k - l] = coeffs[k - l] + CycNum.coerce(c)
        return cls(tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Scalar) -> "BinaryForm":
        c = CycNum.coerce(c)
        return BinaryForm(tuple(c * a for a in self.coeffs))

    def act(self, m: CycMatrix) -> "BinaryForm":
        return BinaryForm(m @ self.coeffs)

    def __str__(self):
        k = self.degree
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                s for s in (_pw("z1", k - j), _pw("z2", j)) if s
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts) or "0"


def _pw(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


# -- standard elements ----------------------------------------------------

H = CycMatrix([[I, ZERO], [ZERO, -I]])
X = CycMatrix([[0, 1], [-1, 0]])
Y = CycMatrix([[ZERO, I], [I, ZERO]])
_INV_2SQRT2 = 1 / (2 * SQRT2)
# orthonormal basis of su(2) for -B
X1 = H.scale(_INV_2SQRT2)
X2 = X.scale(_INV_2SQRT2)
X3 = Y.scale(_INV_2SQRT2)
SU2_BASIS = (X1, X2, X3)

A_GEN = CycMatrix([[OMEGA6, ZERO], [ZERO, OMEGA6.conj()]])
B_GEN = CycMatrix([[ZERO, I], [I, ZERO]])
IDENTITY2 = CycMatrix.identity(2)


def is_special_unitary(g: CycMatrix) -> bool:
    return g.shape == (2, 2) and g.det2() == ONE and g.H @ g == IDENTITY2


def is_in_su2_algebra(xi: CycMatrix) -> bool:
    return xi.shape == (2, 2) and xi.H == -xi and not xi.trace()


def check_group_element(g: CycMatrix) -> CycMatrix:
    if not is_special_unitary(g):
        raise ValueError(f"not special unitary: {g!r}")
    return g


def killing_form(xi: CycMatrix, eta: CycMatrix) -> CycNum:
    """B(xi, eta) = 4 tr(xi eta) on su(2)."""
    return (xi @ eta).trace() * 4


def _inverse2(g: CycMatrix) -> CycMatrix:
    (a, b), (c, d) = g.rows
    det = g.det2()
    return CycMatrix([[d / det, -b / det], [-c / det, a / det]])


def _poly_mul(p: Sequence[CycNum], q: Sequence[CycNum]) -> list[CycNum]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


@lru_cache(maxsize=4096)
def sym_power(g: CycMatrix, k: int) -> CycMatrix:
    """Matrix of rho_k(g) on the monomial basis."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    (al, be), (ga, de) = _inverse2(g).rows
    # z1 -> al z1 + be z2, z2 -> ga z1 + de z2, coefficients indexed by z2-exponent
    l1, l2 = [al, be], [ga, de]
    p1 = [[ONE]]
    p2 = [[ONE]]
    for _ in range(k):
        p1.append(_poly_mul(p1[-1], l1))
        p2.append(_poly_mul(p2[-1], l2))
    cols = [_poly_mul(p1[k - j], p2[j]) for j in range(k + 1)]
    return CycMatrix([[cols[j][i] for j in range(k + 1)] for i in range(k + 1)])


@lru_cache(maxsize=4096)
def algebra_action(xi: CycMatrix, k: int) -> CycMatrix:
    """Matrix of d(rho_k)(xi): first-order term of f((I - t xi) z)."""
    (x11, x12), (x21, x22) = xi.rows
    m = [[ZERO] * (k + 1) for _ in range(k + 1)]
    for j in range(k + 1):
        a, b = k - j, j
        # a z1^(a-1) z2^b * (-(x11 z1 + x12 z2)) + b z1^a z2^(b-1) * (-(x21 z1 + x22 z2))
        if a:
            m[j][j] = m[j][j] - x11 * a
            m[j + 1][j] = m[j + 1][j] - x12 * a
        if b:
            m[j - 1][j] = m[j - 1][j] - x21 * b
            m[j][j] = m[j][j] - x22 * b
    return CycMatrix(m)


def character(g: CycMatrix, k: int) -> CycNum:
    return sym_power(g, k).trace()


def invariant_form(k: int) -> CycMatrix:
    """Weights 1/binomial(k, j) of the SU(2)-invariant Hermitian form."""
    return CycMatrix.diag([Fraction(1, comb(k, j)) for j in range(k + 1)])


def weight_inner_product(lam: int, mu: int) -> Fraction:
    """(lam, mu) on t* for weights H -> i*lam, H -> i*mu, dual to -B on the torus."""
    bhh = -killing_form(H, H)
    return Fraction(lam * mu) / bhh.to_fraction()


def casimir_eigenvalue(k: int) -> Fraction:
    """(mu + 2 delta, mu) for the highest weight of rho_k; equals k/4 + k^2/8."""
    positive_root = 2  # alpha+(H) = 2i
    two_delta = positive_root
    return weight_inner_product(k + two_delta, k)


def casimir_operator(k: int) -> CycMatrix:
    """sum_i d(rho)(X_i)^2 over the -B orthonormal basis."""
    acc = CycMatrix.zeros(k + 1)
    for xi in SU2_BASIS:
        d = algebra_action(xi, k)
        acc = acc + d @ d
    return acc

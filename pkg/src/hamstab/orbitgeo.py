"""Fubini-Study geometry of the SU(2)-orbit through [p] in P(S^n C^2).

The metric on projective space is the one making the unit sphere of an
invariant Hermitian form ``h`` a Riemannian submersion onto it
(holomorphic sectional curvature 4).  Tangent vectors at [p] live in the
affine chart w_j / w_0, j = 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exactnum import (
    I,
    ONE,
    ZERO,
    CycMatrix,
    CycNum,
    gram_schmidt_real,
    inverse_matrix,
    rank,
    row_reduce,
    solve,
    sqrt_rational,
)
from .isotropy import FiniteSubgroup, adjoint_matrix
from .su2rep import SU2_BASIS, BinaryForm, algebra_action

CURVATURE = Fraction(4)


class ChartError(ValueError):
    pass


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ChartVector:
    """sum_j a_j d/dx_j + b_j d/dy_j with x_j + i y_j = w_j / w_0."""

    a: tuple[CycNum, ...]
    b: tuple[CycNum, ...]

    def __post_init__(self):
        a = tuple(CycNum.coerce(x) for x in self.a)
        b = tuple(CycNum.coerce(x) for x in self.b)
        if len(a) != len(b):
            raise ValueError("x and y components differ in length")
        if not all(x.is_real() for x in a + b):
            raise ValueError("chart components must be real")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_complex(cls, z: Sequence[CycNum]) -> "ChartVector":
        return cls(tuple(c.real_part() for c in z), tuple(c.imag_part() for c in z))

    @classmethod
    def basis(cls, n: int, which: str, j: int) -> "ChartVector":
        """Unit vector d/dx_j or d/dy_j, with j counted from 1."""
        e = tuple(ONE if t == j - 1 else ZERO for t in range(n))
        z = (ZERO,) * n
        return cls(e, z) if which == "x" else cls(z, e)

    @property
    def dim(self) -> int:
        return len(self.a)

    def complex(self) -> tuple[CycNum, ...]:
        return tuple(x + I * y for x, y in zip(self.a, self.b))

    def real_vector(self) -> tuple[CycNum, ...]:
        return self.a + self.b

    def scale(self, c) -> "ChartVector":
        c = CycNum.coerce(c)
        return ChartVector(tuple(c * x for x in self.a), tuple(c * y for y in self.b))


@dataclass(frozen=True)
class MetricModel:
    u: Fraction
    weights: tuple[Fraction, ...]
    basepoint: tuple[CycNum, ...]
    curvature: Fraction = CURVATURE

    @property
    def n(self) -> int:
        return len(self.weights) - 1


def hermitian(m: MetricModel, z: Sequence[CycNum], w: Sequence[CycNum]) -> CycNum:
    """h(z, w) = sum weight_j z_j conj(w_j)."""
    acc = ZERO
    for c, x, y in zip(m.weights, z, w):
        if x and y:
            acc = acc + x * y.conj() * c
    return acc


def _chart_normalized(p: BinaryForm) -> tuple[CycNum, ...]:
    w0 = p.coeffs[0]
    if not w0:
        raise ChartError("p lies outside the chart w_0 != 0")
    return tuple(c / w0 for c in p.coeffs)


def metric_model(p: BinaryForm, u=Fraction(1, 2)) -> MetricModel:
    """Invariant Hermitian metric u/binomial(n, j) and the lift of [p] to its unit sphere."""
    u = Fraction(u)
    if u <= 0:
        raise ValueError("Hermitian scale u must be positive")
    n = p.degree
    weights = tuple(u / comb(n, j) for j in range(n + 1))
    m = MetricModel(u, weights, ())
    q = _chart_normalized(p)
    norm2 = hermitian(m, q, q)
    s = 1 / sqrt_rational(norm2)
    lifted = tuple(s * c for c in q)
    m = MetricModel(u, weights, lifted)
    if hermitian(m, lifted, lifted) != ONE:
        raise AssertionError("basepoint lift is not on the unit sphere")
    return m


def fundamental_field(xi: CycMatrix, p: BinaryForm) -> ChartVector:
    """Velocity of t -> [rho(exp t xi) p] at t = 0 in the chart w_j / w_0."""
    q = _chart_normalized(p)
    v = algebra_action(xi, p.degree) @ q
    # d/dt (w_j / w_0) = (v_j w_0 - q_j v_0) / w_0^2 with w_0 = 1
    return ChartVector.from_complex([v[j] - q[j] * v[0] for j in range(1, p.degree + 1)])


def horizontal_lift(v: ChartVector, m: MetricModel) -> tuple[CycNum, ...]:
    """Lift of ``v`` to T C^(n+1) at the basepoint, h-orthogonal to the fibre.

    Solves d(chart)(W) = v together with h(W, p~) = 0, i.e. tangency to the
    sphere and orthogonality to the circle fibre at once.
    """
    pt = m.basepoint
    n = m.n
    p0 = pt[0]
    rows, rhs = [], []
    vc = v.complex()
    for j in range(1, n + 1):
        # (W_j p0 - p_j W_0) / p0^2 = v_j
        row = [ZERO] * (n + 1)
        row[0] = -pt[j] / (p0 * p0)
        row[j] = row[j] + 1 / p0
        rows.append(row)
        rhs.append(vc[j - 1])
    rows.append([c * x.conj() for c, x in zip(m.weights, pt)])
    rhs.append(ZERO)
    return tuple(solve(rows, rhs))


def lift_real_components(W: Sequence[CycNum]) -> tuple[CycNum, ...]:
    """(x~_0..x~_n, y~_0..y~_n) of a complex lift."""
    return tuple(w.real_part() for w in W) + tuple(w.imag_part() for w in W)


def induced_gram(frame: Sequence[ChartVector], m: MetricModel) -> CycMatrix:
    lifts = [horizontal_lift(v, m) for v in frame]
    return CycMatrix([[hermitian(m, a, b).real_part() for b in lifts] for a in lifts])


def kahler_pairings(frame: Sequence[ChartVector], m: MetricModel) -> CycMatrix:
    lifts = [horizontal_lift(v, m) for v in frame]
    return CycMatrix([[hermitian(m, a, b).imag_part() for b in lifts] for a in lifts])


@dataclass(frozen=True)
class LagrangianCertificate:
    ok: bool
    omega: CycMatrix
    rank: int
    offending: tuple[int, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def lagrangian_check(frame: Sequence[ChartVector], m: MetricModel) -> LagrangianCertificate:
    omega = kahler_pairings(frame, m)
    r = rank([v.real_vector() for v in frame])
    for i in range(len(frame)):
        for j in range(len(frame)):
            if omega[i, j]:
                return LagrangianCertificate(False, omega, r, (i, j), "Kahler form does not vanish")
    if r != m.n:
        return LagrangianCertificate(False, omega, r, None, f"frame rank {r} != {m.n}")
    return LagrangianCertificate(True, omega, r)


def orbit_frame(p: BinaryForm, basis: Sequence[CycMatrix] = SU2_BASIS) -> list[ChartVector]:
    return [fundamental_field(xi, p) for xi in basis]


@dataclass(frozen=True)
class LaplaceDecomposition:
    """Q = sum_i Y_i (x) Y_i in the X-basis, split as c_cas * I + R."""

    gram: CycMatrix
    q: CycMatrix
    c_cas: Fraction
    r: CycMatrix
    frame_coeffs: tuple[tuple[CycNum, ...], ...]


def _max_multiplicity_eigenvalue(q: CycMatrix) -> CycNum:
    n = q.shape[0]
    ident = CycMatrix.identity(n)
    if q == ident.scale(q[0, 0]):
        return q[0, 0]
    if n != 3:
        raise DecompositionError("Casimir split implemented for 3x3 only")
    # a repeated eigenvalue means a quadratic minimal polynomial Q^2 = s Q - t I
    q2 = q @ q
    eqs = [[q[i, j], -(ident[i, j])] for i in range(n) for j in range(n)]
    rhs = [q2[i, j] for i in range(n) for j in range(n)]
    aug = [e + [r] for e, r in zip(eqs, rhs)]
    red, piv = row_reduce(aug)
    if piv != [0, 1]:
        raise DecompositionError("Q has three distinct eigenvalues; no canonical Casimir split")
    s = red[0][2]
    c = q.trace() - s  # tr Q = 2c + d, c + d = s
    d = s - c
    if c == d or rank((q - ident.scale(c)).rows) != 1:
        raise DecompositionError("could not isolate a double eigenvalue of Q")
    return c


def laplace_decomposition(gram: CycMatrix, F: FiniteSubgroup) -> LaplaceDecomposition:
    n = gram.shape[0]
    if gram != gram.T:
        raise DecompositionError("Gram matrix is not symmetric")
    std = [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]

    def inner(x, y):
        return sum((x[i] * gram[i, j] * y[j] for i in range(n) for j in range(n) if gram[i, j]), ZERO)

    ys = gram_schmidt_real(std, inner)
    q = CycMatrix(
        [[sum((y[j] * y[l] for y in ys), ZERO) for l in range(n)] for j in range(n)]
    )
    c = _max_multiplicity_eigenvalue(q)
    if not c.is_rational():
        raise DecompositionError(f"Casimir coefficient {c} is not rational")
    r = q - CycMatrix.identity(n).scale(c)
    for g in F.generators:
        ad = adjoint_matrix(g)
        if ad @ r @ ad.T != r:
            raise DecompositionError(f"R is not Ad-invariant under {g!r}")
    return LaplaceDecomposition(gram, q, c.to_fraction(), r, tuple(ys))


def gram_inverse(gram: CycMatrix) -> CycMatrix:
    return inverse_matrix(gram)

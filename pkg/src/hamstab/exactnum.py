"""Exact arithmetic in the cyclotomic field Q(zeta_24) and dense linear algebra over it.

Elements are stored in the power basis 1, z, ..., z^7 with z = exp(2*pi*i/24),
reduced modulo Phi_24(x) = x^8 - x^4 + 1.  Internally a number is a tuple of
eight integer numerators over one positive common denominator, which keeps
multiplication in pure integer arithmetic.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence, Union

DEGREE = 8
ORDER = 24

Scalar = Union[int, Fraction, "CycNum"]


class SqrtError(ArithmeticError):
    """Raised when a square root does not exist in Q(zeta_24)."""


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = reduce(gcd, num, den)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


def _reduce_poly(c: list[int]) -> list[int]:
    # x^d = x^(d-4) - x^(d-8) for d >= 8
    for d in range(len(c) - 1, DEGREE - 1, -1):
        v = c[d]
        if v:
            c[d - 4] += v
            c[d - 8] -= v
    return c[:DEGREE]


class CycNum:
    """An element of Q(zeta_24)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable = (0,)):
        fr = [Fraction(c) for c in coeffs]
        fr += [Fraction(0)] * (DEGREE - len(fr))
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fr), 1)
        self._set(_reduce_poly([int(f * den) for f in fr]), den)

    def _set(self, num, den):
        self._num, self._den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "CycNum":
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def rational(cls, q) -> "CycNum":
        q = Fraction(q)
        return cls._raw([q.numerator] + [0] * (DEGREE - 1), q.denominator)

    @classmethod
    def zeta(cls, j: int = 1) -> "CycNum":
        """zeta_24 ** j for any integer j."""
        return _ZETA_POWERS[j % ORDER]

    @classmethod
    def coerce(cls, x: Scalar) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def is_real(self) -> bool:
        return self == self.conj()

    def real_part(self) -> "CycNum":
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part(self) -> "CycNum":
        return (self - self.conj()) * _HALF_NEG_I

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / ORDER)
        return sum(c * z**j for j, c in enumerate(self._num)) / self._den

    def approx(self, digits: int = 12) -> str:
        """Decimal rendering for reports only; never used in decisions."""
        z = complex(self)
        if self.is_real():
            return f"{z.real:.{digits}g}"
        return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if o._den == self._den:
            return CycNum._raw([a + b for a, b in zip(self._num, o._num)], self._den)
        d = self._den * o._den
        return CycNum._raw(
            [a * o._den + b * self._den for a, b in zip(self._num, o._num)], d
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw([-a for a in self._num], self._den)

    def __sub__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum._raw([a * q.numerator for a in self._num], self._den * q.denominator)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._num, other._num
        if not any(b[1:]):
            return CycNum._raw([x * b[0] for x in a], self._den * other._den)
        if not any(a[1:]):
            return CycNum._raw([x * a[0] for x in b], self._den * other._den)
        prod = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum._raw(_reduce_poly(prod), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CycNum":
        return cyc_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_24)")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycNum):
            return NotImplemented
        return self * cyc_inverse(other)

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * cyc_inverse(self)

    def conj(self) -> "CycNum":
        return cyc_conj(self)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"CycNum({self})"

    def __str__(self):
        if self.is_rational():
            return str(self.to_fraction())
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z^{j}")
        return " + ".join(terms)


ZERO = CycNum._raw([0] * DEGREE, 1)
ONE = CycNum._raw([1] + [0] * (DEGREE - 1), 1)


def _build_zeta_powers() -> list[CycNum]:
    powers = [ONE]
    z = CycNum._raw([0, 1] + [0] * (DEGREE - 2), 1)
    for _ in range(ORDER - 1):
        prev = powers[-1]
        shifted = [0] + list(prev._num)
        powers.append(CycNum._raw(_reduce_poly(shifted + [0] * 7), prev._den))
    assert powers[1] == z
    return powers


_ZETA_POWERS = _build_zeta_powers()
# conj(z^j) = z^(24-j); the image of each basis vector as integer rows.
_CONJ_IMAGES = [_ZETA_POWERS[(-j) % ORDER]._num for j in range(DEGREE)]


def cyc_mul(x: CycNum, y: CycNum) -> CycNum:
    return x * y


def cyc_conj(x: CycNum) -> CycNum:
    """Apply the automorphism zeta -> zeta^-1 (complex conjugation)."""
    out = [0] * DEGREE
    for j, c in enumerate(x._num):
        if c:
            for t, v in enumerate(_CONJ_IMAGES[j]):
                out[t] += c * v
    return CycNum._raw(out, x._den)


def cyc_inverse(x: CycNum) -> CycNum:
    """Inverse by solving the 8x8 rational system M_x y = 1."""
    if x.is_zero():
        raise ZeroDivisionError("division by zero in Q(zeta_24)")
    if x.is_rational():
        return CycNum.rational(1 / x.to_fraction())
    cols = [(x * _ZETA_POWERS[j]).coeffs for j in range(DEGREE)]
    mat = [[cols[j][i] for j in range(DEGREE)] for i in range(DEGREE)]
    rhs = [Fraction(1)] + [Fraction(0)] * (DEGREE - 1)
    y = solve(mat, rhs)
    return CycNum(y)


I = _ZETA_POWERS[6]
OMEGA6 = _ZETA_POWERS[4]  # exp(i*pi/3)
SQRT2 = _ZETA_POWERS[3] + _ZETA_POWERS[21]
SQRT3 = _ZETA_POWERS[2] + _ZETA_POWERS[22]
SQRT6 = SQRT2 * SQRT3
_HALF_NEG_I = -I * Fraction(1, 2)

# square roots of the squarefree parts available in the real subfield Q(sqrt2, sqrt3)
_SQRT_TABLE = {1: ONE, 2: SQRT2, 3: SQRT3, 6: SQRT6}
for _m, _r in _SQRT_TABLE.items():
    if _r * _r != _m:
        raise AssertionError(f"sqrt table entry for {_m} does not square back")


def sqrt_rational(q) -> CycNum:
    """Positive square root of a non-negative rational, if it lies in Q(zeta_24).

    A rational has a square root here iff its squarefree part divides 6.
    """
    if isinstance(q, CycNum):
        if not q.is_rational():
            raise SqrtError(f"square root of irrational element {q} is not supported")
        q = q.to_fraction()
    q = Fraction(q)
    if q < 0:
        raise SqrtError(f"negative radicand {q}")
    if q == 0:
        return ZERO
    n = q.numerator * q.denominator
    scale, free = 1, 1
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        scale *= p ** (e // 2)
        free *= p ** (e % 2)
    r = isqrt(n)
    if r * r != n:
        raise SqrtError(f"sqrt({q}) is not in Q(zeta_24)")
    return _SQRT_TABLE[free] * Fraction(scale * r, q.denominator)


# -- matrices -------------------------------------------------------------


class CycMatrix:
    """Dense immutable matrix over Q(zeta_24)."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        self.rows = tuple(tuple(CycNum.coerce(x) for x in r) for r in rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "CycMatrix":
        return cls([[ZERO] * (m if n is None else n) for _ in range(m)])

    @classmethod
    def diag(cls, entries: Sequence[Scalar]) -> "CycMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> tuple[CycNum, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return CycMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c: Scalar) -> "CycMatrix":
        c = CycNum.coerce(c)
        return CycMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, CycMatrix):
            n = other.shape[1]
            sparse = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
            out = []
            for r in self.rows:
                acc = [ZERO] * n
                for l, a in enumerate(r):
                    if a:
                        for j, b in sparse[l]:
                            acc[j] = acc[j] + a * b
                out.append(acc)
            return CycMatrix(out)
        # matrix-vector
        return tuple(
            reduce(lambda s, t: s + t, (a * b for a, b in zip(r, other) if a and b), ZERO)
            for r in self.rows
        )

    def transpose(self) -> "CycMatrix":
        return CycMatrix(zip(*self.rows)) if self.rows else self

    @property
    def T(self) -> "CycMatrix":
        return self.transpose()

    def conj(self) -> "CycMatrix":
        return CycMatrix([[a.conj() for a in r] for r in self.rows])

    @property
    def H(self) -> "CycMatrix":
        """Conjugate transpose."""
        return self.conj().transpose()

    def trace(self) -> CycNum:
        return reduce(lambda s, t: s + t, (self.rows[i][i] for i in range(len(self.rows))), ZERO)

    def det2(self) -> CycNum:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def is_diagonal(self) -> bool:
        return all(not x for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __repr__(self):
        return "CycMatrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"


def commutator(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    return a @ b - b @ a


# -- elimination over an exact field -------------------------------------
# These routines accept any elements with field arithmetic and a zero test
# via truthiness: Fraction and CycNum both qualify.


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; pivot is the first nonzero entry in column order."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def _as_rows(M) -> list:
    return list(M.rows) if isinstance(M, CycMatrix) else [list(r) for r in M]


def nullspace(M, ncols: int | None = None) -> list[tuple]:
    """Exact basis of {v : M v = 0}, one vector per free column."""
    rows = _as_rows(M)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    zero = rows[0][0] * 0
    one = zero + 1
    red, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list:
    """Unique solution of A x = b for square nonsingular A."""
    n = len(A)
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    red, pivots = row_reduce(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [red[i][n] for i in range(n)]


def inverse_matrix(M: CycMatrix) -> CycMatrix:
    n = M.shape[0]
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(M.rows)]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return CycMatrix([r[n:] for r in red])


def gram_schmidt_real(
    vectors: Sequence[Sequence[CycNum]],
    inner: Callable[[Sequence[CycNum], Sequence[CycNum]], CycNum],
) -> list[tuple[CycNum, ...]]:
    """Orthonormalize against a real-valued, positive definite inner product.

    Orthogonalization runs first on unnormalized vectors so that every
    norm squared stays in the field of the Gram entries; only the final
    rescaling takes square roots (see ``sqrt_rational``).
    """
    ortho: list[tuple[CycNum, ...]] = []
    norms: list[CycNum] = []
    for v in vectors:
        w = tuple(CycNum.coerce(x) for x in v)
        for u, nu in zip(ortho, norms):
            c = inner(w, u)
            if not c.is_real():
                raise ValueError("inner product is not real")
            if c:
                f = c / nu
                w = tuple(a - f * b for a, b in zip(w, u))
        nw = inner(w, w)
        if not nw.is_real():
            raise ValueError("inner product is not real")
        if not nw:
            raise ValueError("vectors are linearly dependent")
        ortho.append(w)
        norms.append(nw)
    out = []
    for w, nw in zip(ortho, norms):
        s = 1 / sqrt_rational(nw)
        out.append(tuple(s * a for a in w))
    return out

"""Laplace eigenvalues of SU(2)/F from spherical representations, and the stability verdict.

On matrix coefficients built from a fixed vector v in V^F, the Laplacian of
the induced metric acts as

    c_cas * Cas(k) - nu,

where nu is the eigenvalue of T = sum_jl R_jl d(rho)(X_j) d(rho)(X_l) on v.
With R supported on the X1 direction, T is a multiple of d(rho)(H)^2, so the
relevant vectors are V^F intersected with the weight spaces of H.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import CycMatrix
from .isotropy import FiniteSubgroup, fixed_in_coordinates, fixed_subspace
from .orbitgeo import CURVATURE, LaplaceDecomposition
from .su2rep import SU2_BASIS, algebra_action, casimir_eigenvalue

DEFAULT_CAP = 400


class SpectrumError(RuntimeError):
    pass


class Verdict(str, enum.Enum):
    STABLE = "HamiltonianStable"
    UNSTABLE = "Unstable"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SpectralLine:
    k: int
    d_eigenvalue: Fraction  # eigenvalue of d(rho)(H)^2, i.e. -(2l - k)^2
    laplace_eigenvalue: Fraction
    subspace_dim: int

    @property
    def multiplicity(self) -> int:
        return (self.k + 1) * self.subspace_dim


def correction_operator(r: CycMatrix, k: int) -> CycMatrix:
    """sum_jl R_jl d(rho)(X_j) d(rho)(X_l) on S^k C^2."""
    acc = CycMatrix.zeros(k + 1)
    for j, xj in enumerate(SU2_BASIS):
        for l, xl in enumerate(SU2_BASIS):
            if r[j, l]:
                acc = acc + (algebra_action(xj, k) @ algebra_action(xl, k)).scale(r[j, l])
    return acc


def _check_rank_one_along_x1(decomp: LaplaceDecomposition) -> Fraction:
    r = decomp.r
    for i in range(3):
        for j in range(3):
            if (i, j) != (0, 0) and r[i, j]:
                raise SpectrumError("correction R is not supported on X1 (x) X1")
    return r[0, 0].to_fraction()


def spectrum_for_k(k: int, decomp: LaplaceDecomposition, F: FiniteSubgroup) -> list[SpectralLine]:
    _check_rank_one_along_x1(decomp)
    m_rho = fixed_subspace(F, k).dim
    if m_rho == 0:
        return []
    cas = casimir_eigenvalue(k)
    t_op = correction_operator(decomp.r, k)
    lines = []
    total = 0
    # weight spaces of d(rho)(H)^2: monomials j and k - j share -(2j - k)^2
    for j in range(k // 2 + 1):
        cols = sorted({j, k - j})
        vecs = fixed_in_coordinates(F, k, cols)
        if not vecs:
            continue
        mu = Fraction(-((2 * j - k) ** 2))
        nu = None
        for v in vecs:
            tv = t_op @ v.coeffs
            idx = next(i for i, c in enumerate(v.coeffs) if c)
            ratio = tv[idx] / v.coeffs[idx]
            if tuple(tv) != tuple(ratio * c for c in v.coeffs):
                raise SpectrumError(f"correction operator is not scalar on V^F at k={k}, mu={mu}")
            if nu is not None and ratio != nu:
                raise SpectrumError(f"correction operator not scalar on V^F at k={k}, mu={mu}")
            nu = ratio
        lam = decomp.c_cas * cas - nu.to_fraction()
        lines.append(SpectralLine(k, mu, lam, len(vecs)))
        total += len(vecs)
    if total != m_rho:
        raise SpectrumError(f"weight-space dims sum to {total}, expected dim V^F = {m_rho} at k={k}")
    lines.sort(key=lambda ln: (ln.laplace_eigenvalue, ln.d_eigenvalue))
    return lines


def eigenvalue_lower_bound(decomp: LaplaceDecomposition, k: int) -> Fraction:
    """Lower bound on every eigenvalue from rho_k.

    nu = R_11 * mu / 8 with -k^2 <= mu <= 0, so the eigenvalue is at least
    c_cas * Cas(k) - max(0, -R_11) * k^2 / 8.  This is increasing in k as long
    as Q is positive definite.
    """
    r11 = _check_rank_one_along_x1(decomp)
    return decomp.c_cas * casimir_eigenvalue(k) - max(Fraction(0), -r11) * k * k / 8


@dataclass(frozen=True)
class SearchResult:
    lambda1: Fraction | None
    attaining_k: tuple[int, ...]
    lines: tuple[SpectralLine, ...]
    horizon: int
    stop_k: int | None
    certified: bool

    @property
    def lambda1_multiplicity(self) -> int:
        return sum(ln.multiplicity for ln in self.lines if ln.laplace_eigenvalue == self.lambda1)


def lambda1_search(
    decomp: LaplaceDecomposition,
    F: FiniteSubgroup,
    max_k: int | None = None,
    cap: int = DEFAULT_CAP,
) -> SearchResult:
    """Smallest positive eigenvalue over k >= 1.

    Without ``max_k`` the scan stops at the first k whose lower bound exceeds
    the running minimum.  With ``max_k`` every k up to it is scanned and the
    result is certified only if the bound at max_k + 1 clears the minimum.
    """
    if decomp.q[0, 0].to_fraction() <= 0:
        raise SpectrumError("Q is not positive definite")
    best: Fraction | None = None
    lines: list[SpectralLine] = []
    stop_k = None
    limit = cap if max_k is None else max_k
    horizon = 0
    for k in range(1, limit + 1):
        if stop_k is None and best is not None and eigenvalue_lower_bound(decomp, k) > best:
            stop_k = k
            if max_k is None:
                break
        horizon = k
        for ln in spectrum_for_k(k, decomp, F):
            lines.append(ln)
            if ln.laplace_eigenvalue > 0 and (best is None or ln.laplace_eigenvalue < best):
                best = ln.laplace_eigenvalue
    if best is None and max_k is None:
        raise SpectrumError(f"no spherical representation found for 1 <= k <= {limit}")
    if stop_k is None and best is not None and eigenvalue_lower_bound(decomp, horizon + 1) > best:
        stop_k = horizon + 1
    attaining = tuple(sorted({ln.k for ln in lines if ln.laplace_eigenvalue == best}))
    return SearchResult(best, attaining, tuple(lines), horizon, stop_k, stop_k is not None)


@dataclass(frozen=True)
class StabilityReport:
    lambda1: Fraction | None
    kappa: Fraction
    verdict: Verdict
    attaining_k: tuple[int, ...] = ()
    lines: tuple[SpectralLine, ...] = ()
    decomposition: LaplaceDecomposition | None = None
    ono_contradiction: bool = False
    certified: bool = True
    lambda1_multiplicity: int | None = None
    notes: tuple[str, ...] = field(default=())


def einstein_constant(c, n: int) -> Fraction:
    return Fraction(c) * (n + 1) / 2


def stability_verdict(lambda1, c, n: int, *, certified: bool = True) -> StabilityReport:
    """Apply Oh's criterion lambda1 >= kappa, flagging lambda1 > kappa against Ono's bound."""
    c = Fraction(c)
    if c <= 0 or n < 1:
        raise ValueError("need c > 0 and n >= 1")
    kappa = einstein_constant(c, n)
    notes = []
    if lambda1 is not None and not certified and Fraction(lambda1) < kappa:
        # any eigenvalue found bounds lambda1 from above, so instability is already proven
        return StabilityReport(Fraction(lambda1), kappa, Verdict.UNSTABLE, certified=False,
                               notes=("uncertified minimum, but already below kappa",))
    if lambda1 is None or not certified:
        return StabilityReport(lambda1, kappa, Verdict.INCONCLUSIVE, certified=False,
                               notes=("lambda1 not certified by the enumeration bound",))
    lambda1 = Fraction(lambda1)
    verdict = Verdict.STABLE if lambda1 >= kappa else Verdict.UNSTABLE
    ono = lambda1 > kappa
    if ono:
        notes.append(
            f"lambda1 = {lambda1} exceeds kappa = {kappa}, contradicting Ono's bound "
            "lambda1 <= kappa; the curvature must match the metric normalization (c = 4)"
        )
    return StabilityReport(lambda1, kappa, verdict, ono_contradiction=ono, notes=tuple(notes))


def build_report(search: SearchResult, decomp: LaplaceDecomposition, c, n: int) -> StabilityReport:
    base = stability_verdict(search.lambda1, c, n, certified=search.certified)
    notes = list(base.notes)
    if Fraction(c) != CURVATURE:
        notes.append("the unit-sphere submersion fixes holomorphic sectional curvature 4")
    return StabilityReport(
        lambda1=search.lambda1,
        kappa=base.kappa,
        verdict=base.verdict,
        attaining_k=search.attaining_k,
        lines=search.lines,
        decomposition=decomp,
        ono_contradiction=base.ono_contradiction,
        certified=search.certified,
        lambda1_multiplicity=search.lambda1_multiplicity if search.lambda1 is not None else None,
        notes=tuple(notes),
    )

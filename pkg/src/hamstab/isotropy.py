"""The finite isotropy group, its adjoint action, and fixed vectors in rho_k."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import ONE, ZERO, CycMatrix, CycNum, nullspace
from .su2rep import (
    A_GEN,
    B_GEN,
    IDENTITY2,
    SU2_BASIS,
    BinaryForm,
    character,
    check_group_element,
    killing_form,
    sym_power,
)


class ClosureError(RuntimeError):
    pass


class StabilizerError(RuntimeError):
    pass


class SplittingError(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteSubgroup:
    elements: tuple[CycMatrix, ...]
    generators: tuple[CycMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: CycMatrix) -> bool:
        return g in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def close_generators(gens: Sequence[CycMatrix], cap: int = 256) -> FiniteSubgroup:
    """Smallest subgroup containing ``gens``, found by breadth-first products."""
    gens = tuple(check_group_element(g) for g in gens)
    seeds = list(gens) + [g.H for g in gens]
    seen = {IDENTITY2}
    order = [IDENTITY2]
    frontier = [IDENTITY2]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seeds:
                y = x @ s
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(order) > cap:
                        raise ClosureError(f"closure exceeds cap={cap}; generators do not span a small finite group")
        frontier = nxt
    return FiniteSubgroup(tuple(order), gens)


def default_isotropy() -> FiniteSubgroup:
    return close_generators([A_GEN, B_GEN])


def projective_stabilizer_check(F: FiniteSubgroup, p: BinaryForm) -> list[CycNum]:
    """Scalars lambda_g with rho(g) p = lambda_g p, one per element of F."""
    if p.is_zero():
        raise ValueError("p must be nonzero")
    j0 = next(j for j, c in enumerate(p.coeffs) if c)
    scalars = []
    for g in F.elements:
        q = p.act(sym_power(g, p.degree))
        lam = q.coeffs[j0] / p.coeffs[j0]
        if q != p.scale(lam):
            raise StabilizerError(f"element {g!r} moves [p]")
        scalars.append(lam)
    return scalars


def adjoint_matrix(g: CycMatrix) -> CycMatrix:
    """Ad(g) in the -B orthonormal basis (X1, X2, X3); columns are images."""
    ginv = g.H
    cols = []
    for xj in SU2_BASIS:
        img = g @ xj @ ginv
        cols.append([-killing_form(img, xi) for xi in SU2_BASIS])
    return CycMatrix([[cols[j][i] for j in range(3)] for i in range(3)])


@dataclass(frozen=True)
class IsotropySplitting:
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    generator_signs_v1: tuple[CycNum, ...]
    squares_trivial_on_v1: bool
    v2_character_norm: Fraction
    v2_indicator: Fraction


def isotropy_splitting(F: FiniteSubgroup) -> IsotropySplitting:
    """Certify su(2) = span(X1) + span(X2, X3) as a sum of irreducible Ad(F)-modules.

    Irreducibility of the real plane V2 is decided from its character:
    absolutely irreducible when <chi, chi> = 1; when <chi, chi> = 2 it is
    irreducible over R iff the Frobenius-Schur sum vanishes.
    """
    v1, v2 = (0,), (1, 2)
    ads = {g: adjoint_matrix(g) for g in F.elements}
    for g, ad in ads.items():
        for i in v1:
            for j in v2:
                if ad[i, j] or ad[j, i]:
                    raise SplittingError(f"Ad({g!r}) mixes V1 and V2")
    for g, ad in ads.items():
        if ad[0, 0] * ad[0, 0] != ONE:
            raise SplittingError(f"Ad({g!r}) is not +-1 on V1")
    signs = tuple(ads[g][0, 0] for g in F.generators)
    squares_ok = all((ad @ ad)[0, 0] == ONE for ad in ads.values())
    if not squares_ok:
        raise SplittingError("some Ad(g^2) is not the identity on V1")

    chi = {g: ad[1, 1] + ad[2, 2] for g, ad in ads.items()}
    norm = sum((c * c.conj() for c in chi.values()), ZERO) / F.order
    indicator = sum((chi[g @ g] for g in F.elements), ZERO) / F.order
    norm, indicator = norm.to_fraction(), indicator.to_fraction()
    irreducible = norm == 1 or (norm == 2 and indicator == 0)
    if not irreducible:
        raise SplittingError(
            f"V2 is reducible under Ad(F) (<chi,chi>={norm}, FS sum={indicator}); "
            "F cannot be the isotropy of a 3-dimensional Lagrangian orbit"
        )
    return IsotropySplitting(v1, v2, signs, squares_ok, norm, indicator)


def adjoint_action_on(g: CycMatrix, xi: CycMatrix) -> CycMatrix:
    return g @ xi @ g.H


@dataclass(frozen=True)
class FixedSubspace:
    k: int
    basis: tuple[BinaryForm, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)


def _fixing_rows(F: FiniteSubgroup, k: int) -> list[list[CycNum]]:
    rows = []
    n = k + 1
    for g in F.generators:
        m = sym_power(g, k)
        for i in range(n):
            row = [m[i, j] - (ONE if i == j else ZERO) for j in range(n)]
            if any(row):
                rows.append(row)
    return rows


def fixed_subspace(F: FiniteSubgroup, k: int) -> FixedSubspace:
    """Basis of {v : rho_k(g) v = v for every generator g}."""
    basis = nullspace(_fixing_rows(F, k), ncols=k + 1)
    return FixedSubspace(k, tuple(BinaryForm(v) for v in basis))


def fixed_in_coordinates(F: FiniteSubgroup, k: int, cols: Sequence[int]) -> list[BinaryForm]:
    """Fixed vectors supported on the monomials listed in ``cols``."""
    rows = _fixing_rows(F, k)
    # restricting to a coordinate subspace: drop other columns from the system
    sub = [[r[j] for j in cols] for r in rows]
    sub = [r for r in sub if any(r)]
    out = []
    for v in nullspace(sub, ncols=len(cols)):
        full = [ZERO] * (k + 1)
        for j, c in zip(cols, v):
            full[j] = c
        out.append(BinaryForm(tuple(full)))
    return out


def fixed_dim_oracle(F: FiniteSubgroup, k: int) -> int:
    """dim V^F as the group average of the character of rho_k."""
    avg = sum((character(g, k) for g in F.elements), ZERO) / F.order
    if not avg.is_rational():
        raise ArithmeticError(f"averaged character {avg} is not rational")
    q = avg.to_fraction()
    if q.denominator != 1 or q < 0:
        raise ArithmeticError(f"averaged character {q} is not a non-negative integer")
    return int(q)

"""Acceptance gate: one test per criterion, summarized as PASS/FAIL lines at the end of the run."""

import random
from fractions import Fraction
from itertools import product

import pytest

from hamstab.cli import main
from hamstab.exactnum import ONE, ZERO, CycMatrix, CycNum, nullspace, rank
from hamstab.isotropy import (
    fixed_dim_oracle,
    fixed_subspace,
    default_isotropy,
    projective_stabilizer_check,
)
from hamstab.orbitgeo import (
    ChartVector,
    hermitian,
    horizontal_lift,
    induced_gram,
    lagrangian_check,
    laplace_decomposition,
    metric_model,
    orbit_frame,
)
from hamstab.pipeline import parse_q
from hamstab.spectrum import lambda1_search, spectrum_for_k
from hamstab.su2rep import (
    SU2_BASIS,
    algebra_action,
    casimir_eigenvalue,
    invariant_form,
    sym_power,
)
from hamstab.verify import REFERENCE_FORM, REFERENCE_GRAM, REFERENCE_Q, closed_form_lambda, family_generators, same_span

F = default_isotropy()


@pytest.fixture(scope="module")
def decomp():
    return laplace_decomposition(REFERENCE_GRAM, F)


@pytest.mark.criterion(1, "headline: lambda1 = 8 = kappa, HamiltonianStable at k in {4, 6}")
def test_criterion_1_headline(capsys):
    import json

    assert main(["compute", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert parse_q(d["lambda1"]) == 8
    assert parse_q(d["kappa"]) == 8
    assert d["verdict"] == "HamiltonianStable"
    assert d["attaining_k"] == [4, 6]
    assert d["certified"] and not d["ono_contradiction"]


@pytest.mark.criterion(2, "metric: gram diag(9/8, 3/8, 3/8), Q diag(8/9, 8/3, 8/3), u-independent")
def test_criterion_2_metric():
    frame = orbit_frame(REFERENCE_FORM)
    for u in (Fraction(1, 2), Fraction(1), Fraction(2)):
        gram = induced_gram(frame, metric_model(REFERENCE_FORM, u))
        assert gram == REFERENCE_GRAM
        assert laplace_decomposition(gram, F).q == REFERENCE_Q


@pytest.mark.criterion(3, "representation oracles: Casimir k <= 14, homomorphism and unitarity k <= 12")
def test_criterion_3_representations():
    for k in range(15):
        cas = sum((algebra_action(x, k) @ algebra_action(x, k) for x in SU2_BASIS), CycMatrix.zeros(k + 1))
        assert cas == CycMatrix.identity(k + 1).scale(-(Fraction(k, 4) + Fraction(k * k, 8)))
        assert casimir_eigenvalue(k) == Fraction(k, 4) + Fraction(k * k, 8)
    for k in range(13):
        W = invariant_form(k)
        for g, h in product(F.elements, repeat=2):
            assert sym_power(g @ h, k) == sym_power(g, k) @ sym_power(h, k)
        for g in F.elements:
            r = sym_power(g, k)
            assert r.H @ W @ r == W


@pytest.mark.criterion(4, "fixed spaces: dims match the character oracle k <= 40, spans match families")
def test_criterion_4_fixed_spaces():
    for k in range(41):
        assert fixed_subspace(F, k).dim == fixed_dim_oracle(F, k)
    for k in (4, 6, 8, 10, 12, 14, 16, 18):
        assert same_span(list(fixed_subspace(F, k).basis), family_generators(k))


@pytest.mark.criterion(5, "closed-form minimal eigenvalue per k, k <= 30")
def test_criterion_5_closed_forms(decomp):
    checked = 0
    for k in range(1, 31):
        expect = closed_form_lambda(k)
        if expect is None:
            continue
        assert spectrum_for_k(k, decomp, F)[0].laplace_eigenvalue == expect
        checked += 1
    assert checked == 14  # even k in 4..30, except k = 2


@pytest.mark.criterion(6, "geometry: Lagrangian, exact horizontal lifts, stabilizer scalars, |F| = 12")
def test_criterion_6_geometry():
    m = metric_model(REFERENCE_FORM)
    frame = orbit_frame(REFERENCE_FORM)
    cert = lagrangian_check(frame, m)
    assert cert.ok and cert.rank == 3 and cert.omega.is_zero()
    p = m.basepoint
    for v in frame + [ChartVector.basis(3, w, j) for w in "xy" for j in (1, 2, 3)]:
        h = hermitian(m, horizontal_lift(v, m), p)
        assert h == ZERO  # Re: sphere-tangent, Im: fibre-orthogonal
    assert F.order == 12
    for s in projective_stabilizer_check(F, REFERENCE_FORM):
        assert s**4 == ONE or s**6 == ONE


@pytest.mark.criterion(7, "termination: eigenvalues above 2k/3 + k^2/9, result stable under doubled horizon")
def test_criterion_7_termination(decomp):
    for k in range(1, 15):
        for ln in spectrum_for_k(k, decomp, F):
            assert ln.laplace_eigenvalue >= Fraction(2 * k, 3) + Fraction(k * k, 9)
    base = lambda1_search(decomp, F)
    doubled = lambda1_search(decomp, F, max_k=2 * base.horizon)
    assert base.certified and doubled.certified
    assert (base.lambda1, base.attaining_k) == (doubled.lambda1, doubled.attaining_k)


def _random_cyc(rng):
    return CycNum([Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(8)])


@pytest.mark.criterion(8, "randomized: 200 CycNum algebra cases, 50 nullspace instances")
def test_criterion_8_randomized():
    rng = random.Random(20241016)
    for _ in range(200):
        x, y, z = (_random_cyc(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x * y).conj() == x.conj() * y.conj()
        if x:
            assert x * x.inverse() == ONE
        assert complex(x * y) == pytest.approx(complex(x) * complex(y), abs=1e-6)
    for _ in range(50):
        m, n = rng.randint(1, 5), rng.randint(1, 6)
        rows = [[_random_cyc(rng) if rng.random() < 0.7 else ZERO for _ in range(n)] for _ in range(m)]
        if m > 1 and rng.random() < 0.5:  # force a dependent row
            rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % m])]
        M = CycMatrix(rows)
        basis = nullspace(M)
        for v in basis:
            assert all(not c for c in M @ v)
        assert rank(M.rows) + len(basis) == n
        if basis:
            assert rank(basis) == len(basis)

from fractions import Fraction

import pytest

from hamstab.exactnum import CycMatrix
from hamstab.isotropy import close_generators, fixed_subspace, default_isotropy
from hamstab.orbitgeo import laplace_decomposition
from hamstab.spectrum import (
    SpectrumError,
    Verdict,
    build_report,
    correction_operator,
    eigenvalue_lower_bound,
    lambda1_search,
    spectrum_for_k,
    stability_verdict,
)
from hamstab.su2rep import H, IDENTITY2, algebra_action, casimir_eigenvalue
from hamstab.verify import REFERENCE_GRAM, closed_form_lambda

F = default_isotropy()
D = laplace_decomposition(REFERENCE_GRAM, F)


def bound(k):
    return Fraction(2 * k, 3) + Fraction(k * k, 9)


@pytest.mark.parametrize(
    "k, expect",
    [
        (2, []),
        (4, [(0, 8)]),
        (6, [(-36, 8)]),
        (10, [(-36, 32)]),
        (12, [(-144, 24), (-36, 48), (0, 56)]),
    ],
)
def test_spectrum_examples(k, expect):
    lines = spectrum_for_k(k, D, F)
    assert [(ln.d_eigenvalue, ln.laplace_eigenvalue) for ln in lines] == expect


def test_spectrum_k4_fixed_vector_is_middle_monomial():
    (ln,) = spectrum_for_k(4, D, F)
    assert ln.subspace_dim == 1 and ln.multiplicity == 5


@pytest.mark.parametrize("k", range(1, 31))
def test_closed_forms(k):
    lines = spectrum_for_k(k, D, F)
    expect = closed_form_lambda(k)
    if k % 2:
        assert lines == []
    if expect is not None:
        assert lines[0].laplace_eigenvalue == expect


@pytest.mark.parametrize("k", range(1, 31))
def test_weight_partition_and_bound(k):
    lines = spectrum_for_k(k, D, F)
    assert sum(ln.subspace_dim for ln in lines) == fixed_subspace(F, k).dim
    for ln in lines:
        assert ln.laplace_eigenvalue >= bound(k) > 0
    assert eigenvalue_lower_bound(D, k) == bound(k)


def test_correction_operator_is_rank_one_shortcut():
    # R = diag(-16/9, 0, 0) and X1 = H / 2sqrt2, so T = -2/9 d(rho)(H)^2
    for k in (3, 6, 9):
        d = algebra_action(H, k)
        assert correction_operator(D.r, k) == (d @ d).scale(Fraction(-2, 9))


def test_lambda1_search_default():
    s = lambda1_search(D, F)
    assert s.lambda1 == 8
    assert s.attaining_k == (4, 6)
    assert s.stop_k == 7 and s.certified
    assert s.lambda1_multiplicity == 12


def test_horizon_invariance():
    base = lambda1_search(D, F)
    for h in (base.horizon * 2, 20):
        s = lambda1_search(D, F, max_k=h)
        assert (s.lambda1, s.attaining_k, s.certified) == (8, (4, 6), True)


def test_short_horizon_is_not_certified():
    s = lambda1_search(D, F, max_k=3)
    assert s.lambda1 is None and not s.certified
    s = lambda1_search(D, F, max_k=4)
    assert s.lambda1 == 8 and not s.certified


def test_round_metric_variant():
    # identity Gram: Laplacian is the Casimir itself; SU(2)/{+-I} starts at k = 2
    G = close_generators([-IDENTITY2])
    d = laplace_decomposition(CycMatrix.identity(3), G)
    s = lambda1_search(d, G)
    assert s.lambda1 == casimir_eigenvalue(2) == 1
    assert s.attaining_k == (2,)


def test_search_rejects_correction_off_axis():
    d = laplace_decomposition(REFERENCE_GRAM, F)
    bad = type(d)(d.gram, d.q, d.c_cas, CycMatrix.diag([0, 1, -1]), d.frame_coeffs)
    with pytest.raises(SpectrumError):
        spectrum_for_k(4, bad, F)


@pytest.mark.parametrize(
    "lam, c, verdict, ono",
    [
        (8, 4, Verdict.STABLE, False),
        (7, 4, Verdict.UNSTABLE, False),
        (9, 4, Verdict.STABLE, True),
        (8, 2, Verdict.STABLE, True),
        (3, Fraction(3, 2), Verdict.STABLE, False),
    ],
)
def test_stability_verdict(lam, c, verdict, ono):
    rep = stability_verdict(lam, c, 3)
    assert rep.verdict is verdict
    assert rep.ono_contradiction is ono
    assert bool(rep.notes) is ono


def test_verdict_uncertified():
    assert stability_verdict(None, 4, 3).verdict is Verdict.INCONCLUSIVE
    assert stability_verdict(8, 4, 3, certified=False).verdict is Verdict.INCONCLUSIVE
    assert stability_verdict(7, 4, 3, certified=False).verdict is Verdict.UNSTABLE
    with pytest.raises(ValueError):
        stability_verdict(8, 0, 3)


def test_build_report():
    rep = build_report(lambda1_search(D, F), D, 4, 3)
    assert rep.kappa == 8 and rep.verdict is Verdict.STABLE
    assert rep.lambda1_multiplicity == 12 and not rep.notes

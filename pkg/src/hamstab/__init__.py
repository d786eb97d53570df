"""Exact spectral certificate for the Lagrangian SU(2)-orbit through [z1^3 + z2^3] in CP^3."""

from .exactnum import CycMatrix, CycNum
from .isotropy import close_generators, fixed_subspace, default_isotropy
from .orbitgeo import induced_gram, laplace_decomposition, metric_model, orbit_frame
from .pipeline import RunConfig, run_pipeline
from .spectrum import Verdict, lambda1_search, spectrum_for_k, stability_verdict
from .su2rep import BinaryForm, algebra_action, casimir_eigenvalue, sym_power

__all__ = [
    "BinaryForm",
    "CycMatrix",
    "CycNum",
    "RunConfig",
    "Verdict",
    "algebra_action",
    "casimir_eigenvalue",
    "close_generators",
    "fixed_subspace",
    "induced_gram",
    "lambda1_search",
    "laplace_decomposition",
    "metric_model",
    "orbit_frame",
    "default_isotropy",
    "run_pipeline",
    "spectrum_for_k",
    "stability_verdict",
    "sym_power",
]

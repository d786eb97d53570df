"""Run configuration, the end-to-end pipeline, and report serialization."""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .exactnum import I, SQRT2, SQRT3, SQRT6, CycMatrix, CycNum, SqrtError
from .isotropy import (
    ClosureError,
    close_generators,
    isotropy_splitting,
    projective_stabilizer_check,
)
from .orbitgeo import (
    ChartError,
    induced_gram,
    lagrangian_check,
    laplace_decomposition,
    metric_model,
    orbit_frame,
)
from .spectrum import StabilityReport, build_report, lambda1_search
from .su2rep import A_GEN, B_GEN, BinaryForm, is_special_unitary

EXIT_OK, EXIT_CONFIG, EXIT_INVARIANT, EXIT_VERIFY = 0, 1, 2, 3


class ConfigError(ValueError):
    """Invalid user configuration (exit code 1)."""


class InvariantError(RuntimeError):
    """An internal invariant failed during the pipeline (exit code 2)."""


# -- cyclotomic literal grammar -------------------------------------------

_NAMES = {
    "i": I,
    "sqrt2": SQRT2,
    "sqrt3": SQRT3,
    "sqrt6": SQRT6,
    "zeta": CycNum.zeta(1),
    "zeta24": CycNum.zeta(1),
}


def parse_scalar(text: str) -> CycNum:
    """Parse e.g. ``zeta24^4``, ``1/2 + sqrt3*i/2``, ``-i``."""
    src = text.strip().replace("^", "**").replace("·", "*").replace("−", "-")
    if not src:
        raise ConfigError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ConfigError(f"cannot parse {text!r}") from exc
    return CycNum.coerce(_eval(tree.body, text))


def _eval(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = _eval(node.right, text)
            if not (isinstance(e, Fraction) and e.denominator == 1):
                raise ConfigError(f"exponent must be an integer in {text!r}")
            base = CycNum.coerce(_eval(node.left, text))
            return base ** int(e)
        a, b = _eval(node.left, text), _eval(node.right, text)
        try:
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        except ZeroDivisionError as exc:
            raise ConfigError(f"division by zero in {text!r}") from exc
    raise ConfigError(f"unsupported syntax in {text!r}")


def parse_matrix(text: str) -> CycMatrix:
    """``a,b;c,d`` -> 2x2 matrix."""
    rows = [r for r in text.split(";")]
    m = [[parse_scalar(x) for x in r.split(",")] for r in rows]
    if len(m) != 2 or any(len(r) != 2 for r in m):
        raise ConfigError(f"generator {text!r} is not a 2x2 matrix")
    return CycMatrix(m)


def parse_form(text: str) -> BinaryForm:
    return BinaryForm(tuple(parse_scalar(x) for x in text.split(",")))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not a rational number: {text!r}") from exc


# -- configuration --------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    curvature: Fraction = Fraction(4)
    form: BinaryForm = BinaryForm((1, 0, 0, 1))
    generators: tuple[CycMatrix, ...] = (A_GEN, B_GEN)
    u: Fraction = Fraction(1, 2)
    max_k: int | None = None
    output_format: str = "text"

    def validate(self) -> "RunConfig":
        if self.curvature <= 0:
            raise ConfigError("curvature must be positive")
        if self.u <= 0:
            raise ConfigError("Hermitian scale u must be positive")
        if self.form.is_zero():
            raise ConfigError("form must be nonzero")
        if not self.generators:
            raise ConfigError("at least one generator is required")
        for g in self.generators:
            if not is_special_unitary(g):
                raise ConfigError(f"generator {g!r} is not special unitary")
        if self.max_k is not None and self.max_k < 1:
            raise ConfigError("max-k must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ConfigError("format must be text or json")
        return self


# -- pipeline -------------------------------------------------------------


def run_pipeline(cfg: RunConfig) -> StabilityReport:
    cfg.validate()
    try:
        F = close_generators(cfg.generators)
    except ClosureError as exc:
        raise ConfigError(str(exc)) from exc
    try:
        projective_stabilizer_check(F, cfg.form)
        isotropy_splitting(F)
        try:
            m = metric_model(cfg.form, cfg.u)
            frame = orbit_frame(cfg.form)
        except ChartError as exc:
            raise ConfigError(str(exc)) from exc
        cert = lagrangian_check(frame, m)
        if not cert:
            raise InvariantError(f"orbit is not Lagrangian: {cert.reason} (pair {cert.offending}, rank {cert.rank})")
        gram = induced_gram(frame, m)
        decomp = laplace_decomposition(gram, F)
        search = lambda1_search(decomp, F, max_k=cfg.max_k)
        return build_report(search, decomp, cfg.curvature, m.n)
    except (ConfigError, InvariantError):
        raise
    except (RuntimeError, ArithmeticError, SqrtError, ValueError) as exc:
        raise InvariantError(f"{type(exc).__name__}: {exc}") from exc


# -- serialization --------------------------------------------------------


def fmt_q(x) -> str:
    """Exact "num/den" string; non-rational field elements list power-basis coefficients."""
    if isinstance(x, CycNum):
        if x.is_rational():
            x = x.to_fraction()
        else:
            return "cyc24(" + ",".join(fmt_q(c) for c in x.coeffs) + ")"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_q(s: str) -> Fraction:
    n, d = s.split("/")
    return Fraction(int(n), int(d))


def _approx(x) -> str:
    if isinstance(x, CycNum):
        return x.approx(12)
    return f"{float(x):.12g}"


def _matrix(m: CycMatrix) -> list[list[str]]:
    return [[fmt_q(x) for x in r] for r in m.rows]


def config_echo(cfg: RunConfig) -> dict[str, Any]:
    return {
        "curvature": fmt_q(cfg.curvature),
        "form": [fmt_q(c) for c in cfg.form.coeffs],
        "generators": [_matrix(g) for g in cfg.generators],
        "u": fmt_q(cfg.u),
        "max_k": cfg.max_k,
        "format": cfg.output_format,
    }


def report_dict(report: StabilityReport, cfg: RunConfig) -> dict[str, Any]:
    d = report.decomposition
    lam = report.lambda1
    return {
        "lambda1": None if lam is None else fmt_q(lam),
        "kappa": fmt_q(report.kappa),
        "verdict": report.verdict.value,
        "attaining_k": list(report.attaining_k),
        "lines": [
            {
                "k": ln.k,
                "d_eigenvalue": fmt_q(ln.d_eigenvalue),
                "laplace_eigenvalue": fmt_q(ln.laplace_eigenvalue),
                "subspace_dim": ln.subspace_dim,
                "multiplicity": ln.multiplicity,
            }
            for ln in report.lines
        ],
        "gram": _matrix(d.gram) if d else None,
        "q": _matrix(d.q) if d else None,
        "c_cas": fmt_q(d.c_cas) if d else None,
        "r": _matrix(d.r) if d else None,
        "config_echo": config_echo(cfg),
        "certified": report.certified,
        "ono_contradiction": report.ono_contradiction,
        "lambda1_multiplicity": report.lambda1_multiplicity,
        "notes": list(report.notes),
        "approx_non_authoritative": {
            "lambda1": None if lam is None else _approx(lam),
            "kappa": _approx(report.kappa),
        },
    }


def render_json(report: StabilityReport, cfg: RunConfig) -> str:
    return json.dumps(report_dict(report, cfg), indent=2, ensure_ascii=True) + "\n"


def render_text(report: StabilityReport, cfg: RunConfig) -> str:
    d = report.decomposition
    out = []
    lam = "n/a" if report.lambda1 is None else str(report.lambda1)
    out.append(f"lambda1      = {lam}")
    out.append(f"kappa        = {report.kappa}")
    out.append(f"verdict      = {report.verdict.value}")
    out.append(f"attaining k  = {', '.join(map(str, report.attaining_k)) or '-'}")
    out.append(f"certified    = {report.certified}")
    if report.lambda1_multiplicity is not None:
        out.append(f"multiplicity = {report.lambda1_multiplicity} (derived)")
    if d is not None:
        out.append("gram         = " + "; ".join(" ".join(map(str, r)) for r in d.gram.rows))
        out.append("Q            = " + "; ".join(" ".join(map(str, r)) for r in d.q.rows))
        out.append(f"c_cas        = {d.c_cas}")
        out.append("R            = " + "; ".join(" ".join(map(str, r)) for r in d.r.rows))
    out.append("")
    out.append(f"{'k':>4} {'mu':>8} {'eigenvalue':>12} {'dim':>4} {'mult':>5}")
    for ln in report.lines:
        out.append(
            f"{ln.k:>4} {str(ln.d_eigenvalue):>8} {str(ln.laplace_eigenvalue):>12} "
            f"{ln.subspace_dim:>4} {ln.multiplicity:>5}"
        )
    for note in report.notes:
        out.append(f"note: {note}")
    return "\n".join(out) + "\n"


def build_config(
    curvature: str | None = None,
    form: str | None = None,
    gens: Sequence[str] | None = None,
    u: str | None = None,
    max_k: int | None = None,
    output_format: str = "text",
) -> RunConfig:
    kw: dict[str, Any] = {"output_format": output_format, "max_k": max_k}
    if curvature is not None:
        kw["curvature"] = parse_rational(curvature)
    if form is not None:
        kw["form"] = parse_form(form)
    if gens:
        kw["generators"] = tuple(parse_matrix(g) for g in gens)
    if u is not None:
        kw["u"] = parse_rational(u)
    return RunConfig(**kw).validate()

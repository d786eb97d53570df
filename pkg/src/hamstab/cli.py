"""Command-line entry point: ``hamstab compute`` and ``hamstab verify-paper``."""

from __future__ import annotations

import argparse
import json
import sys

from .pipeline import (
    EXIT_CONFIG,
    EXIT_INVARIANT,
    EXIT_OK,
    EXIT_VERIFY,
    ConfigError,
    InvariantError,
    build_config,
    render_json,
    render_text,
    run_pipeline,
)
from .verify import verify_paper


class _Parser(argparse.ArgumentParser):
    # usage errors are configuration errors; exit code 2 is reserved for invariant failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamstab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="run the full pipeline and report lambda1 against kappa")
    c.add_argument("--curvature", default=None, help="holomorphic sectional curvature (rational, default 4)")
    c.add_argument("--form", default=None, help="comma-separated coefficients of z1^(n-j) z2^j (default 1,0,0,1)")
    c.add_argument("--gen", action="append", default=None, metavar="MATRIX",
                   help="isotropy generator 'a,b;c,d' over Q(zeta24); repeatable")
    c.add_argument("--u", default=None, help="Hermitian scale (rational, default 1/2)")
    c.add_argument("--max-k", type=int, default=None, help="scan horizon override")
    c.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify-paper", help="line-item reproduction of the published values")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--max-k", type=int, default=None, help="force a scan horizon (refuses if uncertified)")
    return parser


def _compute(args) -> int:
    try:
        cfg = build_config(args.curvature, args.form, args.gen, args.u, args.max_k, args.format)
        report = run_pipeline(cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    render = render_json if cfg.output_format == "json" else render_text
    sys.stdout.write(render(report, cfg))
    return EXIT_OK


def _verify(args) -> int:
    results, ok = verify_paper(max_k=args.max_k)
    if args.format == "json":
        payload = {
            "all_pass": ok,
            "checks": [{"name": r.name, "pass": r.ok, "detail": r.detail} for r in results],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            sys.stdout.write(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.detail}\n")
        sys.stdout.write(f"{sum(r.ok for r in results)}/{len(results)} checks passed\n")
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "compute":
        return _compute(args)
    return _verify(args)


if __name__ == "__main__":
    sys.exit(main())

"""tsat command line: run one job document and print a deterministic report.

Exit codes: 0 success, 1 not applicable (e.g. unit ideal), 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import InvariantError, NotApplicable
from .jobs import envelope, parse_job, run_job
from .suites import DEFAULT_SEED
from .syntax import ParseError

EXIT_OK, EXIT_NA, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


def render_text(doc, indent: int = 0) -> str:
    """Indented key: value listing with sorted keys."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, dict) and v:
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            elif isinstance(v, list) and v and any(isinstance(x, (dict, list)) for x in v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(doc)}")
    return "\n".join(lines)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    return render_text(doc) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tsat", description="Run a tsat job document.")
    p.add_argument("job", help="job file, or - for standard input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for randomized suites (default {DEFAULT_SEED})")
    p.add_argument("--degree-bound", type=int, default=None, help="default d for sat, syzygy, ebar, contract")
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    p.add_argument("--version", action="version", version=f"tsat {__version__}")
    return p


def _payload(exc):
    return exc.args[1] if len(exc.args) > 1 else None


def execute(text: str, fmt: str = "text", seed: int = DEFAULT_SEED, degree_bound=None) -> tuple[int, str, str]:
    """(exit code, report, diagnostic) for a job document."""
    try:
        job = parse_job(text)
    except ParseError as exc:
        return EXIT_INPUT, "", f"tsat: input error: {exc}"
    try:
        doc = run_job(job, seed=seed, degree_bound=degree_bound)
        return EXIT_OK, render(doc, fmt), ""
    except NotApplicable as exc:
        doc = envelope(job, _payload(exc), "not-applicable")
        doc["reason"] = str(exc.args[0])
        return EXIT_NA, render(doc, fmt), f"tsat: not applicable: {exc.args[0]}"
    except InvariantError as exc:
        payload = _payload(exc)
        out = render(envelope(job, payload, "failed"), fmt) if payload is not None else ""
        return EXIT_BUG, out, f"tsat: internal invariant violated: {exc.args[0] if exc.args else exc}"
    except ValueError as exc:
        # a valid document asking for something the library rejects (inhomogeneous input, missing d, ...)
        return EXIT_INPUT, "", f"tsat: input error: {exc}"
    except Exception as exc:  # noqa: BLE001 - any other crash is a bug
        return EXIT_BUG, "", f"tsat: internal error: {type(exc).__name__}: {exc}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.job == "-":
            text = sys.stdin.read()
        else:
            with open(args.job, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"tsat: cannot read {args.job}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    code, out, diag = execute(text, args.format, args.seed, args.degree_bound)
    if out:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    if diag:
        print(diag, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

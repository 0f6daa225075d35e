"""Command-line front end: verification reports, radii, samples, figures.

Subcommands
-----------
verify   run the constant checks, sharpness witnesses, and the randomized
         positive-derivative suite; emit a JSON report (exit 0 iff all pass)
radius   print the radius of one criterion for one section as a JSON line
sample   draw reproducible Herglotz specs and write them as a JSON file
plot     render image-of-disc boundary curves of the cube kernel as SVG
scan     run the advisory starlikeness scans (exit 3 flags a candidate
         counterexample, with the witness recorded in the report)

Machine-readable JSON goes to standard output (or ``--out``); everything
meant for humans goes to the error stream.  Exit codes: 0 success, 1
runtime or I/O failure (or failed verification), 2 usage error, 3 candidate
counterexample from ``scan``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone
from pathlib import Path

from .exceptions import SecradiusError
from .radius import Criterion, criterion_radius
from .series import TruncatedSeries, section
from .verify import (
    VerificationReport,
    classical_radius_scan,
    conjecture2_scan,
    figure1_curves,
    full_suite,
)
from .zoo import GENERATOR_NAME, HerglotzSpec, f0, half_plane, koebe, sample_specs, synthesize_F

__all__ = ["main", "build_parser"]

_SECTIONS_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


def _item_payload(item) -> dict:
    witness = None
    if item.witness is not None:
        witness = {"r": item.witness[0], "theta": item.witness[1]}
    return {
        "name": item.name,
        "expected": item.expected,
        "computed": item.computed,
        "tolerance": item.tolerance,
        "pass": item.passed,
        "witness": witness,
    }


def _report_payload(report: VerificationReport) -> dict:
    return {
        "schema_version": "1",
        "seed": report.seed,
        "generator_name": report.generator_name,
        "parameters": report.parameters,
        "items": [_item_payload(item) for item in report.items],
        "generated_at": _timestamp(),
    }


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {out}", file=sys.stderr)


def _parse_sections(parser: argparse.ArgumentParser, text: str) -> tuple[int, int]:
    match = _SECTIONS_RE.match(text)
    if match is None:
        parser.error(f"--sections expects the form a..b, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        parser.error(f"--sections range is empty: {text!r}")
    return lo, hi


def _load_spec_file(path: str, index: int) -> HerglotzSpec:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    specs = data["specs"] if isinstance(data, dict) else data
    entry = specs[index]
    atoms = [
        (w, complex(p[0], p[1])) for w, p in zip(entry["weights"], entry["points"])
    ]
    return HerglotzSpec.from_atoms(atoms, seed=entry.get("seed"))


def _section_series(args, parser: argparse.ArgumentParser) -> TruncatedSeries:
    n = args.section
    if args.function == "f0":
        return f0(n)
    if args.function == "koebe":
        return koebe(n)
    if args.function == "half-plane":
        return half_plane(n)
    if args.spec_file is None:
        parser.error("--function spec-file requires --spec-file")
    spec = _load_spec_file(args.spec_file, args.index)
    return section(synthesize_F(spec, order=max(n, 64)), n)


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    report = full_suite(
        count=args.count,
        atom_count=args.atom_count,
        n_max=args.n_max,
        seed=args.seed,
        tol=args.tol,
    )
    _emit(_report_payload(report), args.out)
    if not report.passed:
        failing = [item.name for item in report.items if not item.passed]
        print(f"failed items: {', '.join(failing)}", file=sys.stderr)
        return 1
    return 0


def _cmd_radius(args, parser: argparse.ArgumentParser) -> int:
    s = _section_series(args, parser)
    res = criterion_radius(s, Criterion(args.criterion), args.tol, args.grid)
    theta = res.witness.argmin_theta if res.witness is not None else None
    print(
        json.dumps({"radius": res.radius, "witness_theta": theta, "clamped": res.clamped})
    )
    return 0


def _cmd_sample(args, parser: argparse.ArgumentParser) -> int:
    specs = sample_specs(args.count, args.atom_count, args.seed)
    payload = {
        "schema_version": "1",
        "seed": args.seed,
        "generator_name": GENERATOR_NAME,
        "parameters": {"count": args.count, "atom_count": args.atom_count},
        "specs": [
            {
                "weights": [float(w) for w in spec.weights],
                "points": [[float(p.real), float(p.imag)] for p in spec.points],
                "seed": spec.seed,
            }
            for spec in specs
        ],
        "generated_at": _timestamp(),
    }
    _emit(payload, args.out)
    return 0


def _svg_document(points, size: int = 800, margin_frac: float = 0.05) -> str:
    """SVG 1.1 document: the curve as a polyline, axes through w = 0.

    The bounding box is the curve united with the origin, scaled uniformly
    (no aspect distortion) to fit the viewport minus a margin on each side.
    """
    xs = points.real
    ys = points.imag
    xmin, xmax = min(float(xs.min()), 0.0), max(float(xs.max()), 0.0)
    ymin, ymax = min(float(ys.min()), 0.0), max(float(ys.max()), 0.0)
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    margin = margin_frac * size
    scale = (size - 2.0 * margin) / span
    cx, cy = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)

    def px(x: float) -> float:
        return 0.5 * size + (x - cx) * scale

    def py(y: float) -> float:
        return 0.5 * size - (y - cy) * scale

    coords = " ".join(f"{px(x):.3f},{py(y):.3f}" for x, y in zip(xs, ys))
    ax, ay = px(0.0), py(0.0)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
        f'  <rect width="{size}" height="{size}" fill="white"/>\n'
        f'  <line x1="{ax:.3f}" y1="0" x2="{ax:.3f}" y2="{size}" '
        'stroke="#999999" stroke-width="1"/>\n'
        f'  <line x1="0" y1="{ay:.3f}" x2="{size}" y2="{ay:.3f}" '
        'stroke="#999999" stroke-width="1"/>\n'
        f'  <polyline points="{coords}" fill="none" stroke="#1f77b4" '
        'stroke-width="2"/>\n'
        "</svg>\n"
    )


def _cmd_plot(args, parser: argparse.ArgumentParser) -> int:
    radii = []
    for chunk in args.r.split(","):
        try:
            r = float(chunk)
        except ValueError:
            parser.error(f"--r expects comma-separated reals, got {chunk!r}")
        if not 0.0 < r < 1.0:
            parser.error(f"plot radius must lie in (0, 1), got {r}")
        radii.append(r)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for r in radii:
        curve = figure1_curves(r, args.samples)
        path = outdir / f"{args.map.replace('-', '_')}_r{r!r}.svg"
        path.write_text(_svg_document(curve), encoding="utf-8")
        written.append(str(path))
        print(f"wrote {path}", file=sys.stderr)
    print(json.dumps({"written": written}))
    return 0


def _cmd_scan(args, parser: argparse.ArgumentParser) -> int:
    if args.target == "conjecture2":
        lo, hi = _parse_sections(parser, args.sections or "2..30")
        if lo < 2:
            parser.error("conjecture2 sections start at n = 2")
        report = conjecture2_scan(
            count=args.count,
            atom_count=args.atom_count,
            n_max=hi,
            seed=args.seed,
            grid=args.grid,
            tol=args.tol,
            n_min=lo,
        )
        found = bool(report.parameters["counterexample_found"])
    else:
        lo, hi = _parse_sections(parser, args.sections or "5..40")
        if lo < 5:
            parser.error("the classical threshold is stated for n >= 5")
        report = classical_radius_scan(lo, hi)
        found = not report.passed
    _emit(_report_payload(report), args.out)
    if found:
        print("candidate counterexample found; witness in report", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secradius",
        description="Radius problems for sections of a curvature-bounded "
        "family of analytic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--out", help="report path (default: standard output)")
    p.add_argument("--tol", type=float, default=1e-9, help="bisection tolerance")
    p.add_argument("--count", type=int, default=200, help="sampled spec count")
    p.add_argument("--atom-count", type=int, default=3, help="atoms per spec")
    p.add_argument("--n-max", type=int, default=20, help="largest section order")
    p.add_argument("--seed", type=int, default=7, help="sampling seed")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("radius", help="radius of one criterion for one section")
    p.add_argument(
        "--function",
        required=True,
        choices=["f0", "koebe", "half-plane", "spec-file"],
        help="which function to truncate",
    )
    p.add_argument("--section", type=int, required=True, help="section order n")
    p.add_argument(
        "--criterion",
        required=True,
        choices=["re-deriv", "convex", "starlike"],
        help="geometric property to measure",
    )
    p.add_argument("--spec-file", help="JSON spec file (for --function spec-file)")
    p.add_argument("--index", type=int, default=0, help="spec index in the file")
    p.add_argument("--tol", type=float, default=1e-9, help="bisection tolerance")
    p.add_argument("--grid", type=int, default=2048, help="boundary grid size")
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("sample", help="draw reproducible Herglotz specs")
    p.add_argument("--count", type=int, default=10, help="number of specs")
    p.add_argument("--atom-count", type=int, default=3, help="atoms per spec")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--out", help="spec file path (default: standard output)")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("plot", help="render image-of-disc curves as SVG")
    p.add_argument(
        "--map",
        default="cube-kernel",
        choices=["cube-kernel"],
        help="which map's disc images to draw",
    )
    p.add_argument(
        "--r",
        default="0.3333333333333333,0.5,0.75,0.8",
        help="comma-separated radii in (0, 1)",
    )
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--samples", type=int, default=2048, help="points per curve")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("scan", help="advisory starlikeness scans")
    p.add_argument(
        "--target",
        required=True,
        choices=["conjecture2", "classical"],
        help="which scan to run",
    )
    p.add_argument("--count", type=int, default=500, help="sampled spec count")
    p.add_argument("--atom-count", type=int, default=3, help="atoms per spec")
    p.add_argument("--sections", help="inclusive section range a..b")
    p.add_argument("--seed", type=int, default=11, help="sampling seed")
    p.add_argument("--grid", type=int, default=512, help="boundary grid size")
    p.add_argument("--tol", type=float, default=1e-7, help="bisection tolerance")
    p.add_argument("--out", help="report path (default: standard output)")
    p.set_defaults(func=_cmd_scan)

    return parser


def _validate_common(args, parser: argparse.ArgumentParser) -> None:
    for flag in ("count", "atom_count"):
        if hasattr(args, flag) and getattr(args, flag) < 1:
            parser.error(f"--{flag.replace('_', '-')} must be at least 1")
    if getattr(args, "n_max", 2) < 2:
        parser.error("--n-max must be at least 2")
    if getattr(args, "section", 1) < 1:
        parser.error("--section must be at least 1")
    if getattr(args, "samples", 8) < 8:
        parser.error("--samples must be at least 8")
    if getattr(args, "grid", 16) < 16:
        parser.error("--grid must be at least 16")
    if getattr(args, "tol", 1e-9) < 1e-12:
        parser.error("--tol must be at least 1e-12")
    if getattr(args, "index", 0) < 0:
        parser.error("--index must be non-negative")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate_common(args, parser)
    try:
        return args.func(args, parser)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1
    except (SecradiusError, KeyError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

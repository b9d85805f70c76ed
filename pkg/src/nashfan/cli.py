"""Command line front end: ``nashfan {nash,fan,gb,nobile,hilbert}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import serialize
from .gfan import GroebnerFan, enumerate_fan, is_trivial
from .nash import NashResult, NobileReport, build_Jn, nash_fan, nobile_check
from .polyhedral import Cone, DegenerateConeError, dual_cone, hilbert_basis, rank
from .semigroup import SemigroupPresentation
from .subalgebra import (
    ReducedBasis,
    SubalgebraOrder,
    SubalgebraPoly,
    initial_ideal,
    reduced_groebner_basis,
    variable_names,
)
from .svg import render_fan

MODES = ("nash", "fan", "gb", "nobile", "hilbert")
FORMATS = ("text", "json", "svg")

EXIT_OK, EXIT_ERROR, EXIT_INCONSISTENT = 0, 1, 2


class JobError(ValueError):
    """Invalid job description; ``field`` names the offending input."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True)
class JobSpec:
    mode: str
    cone: tuple[tuple[int, ...], ...] | None = None
    semigroup: tuple[tuple[int, ...], ...] | None = None
    ideal: tuple[tuple[tuple[tuple[int, ...], Fraction], ...], ...] | None = None
    jn: int | None = None
    n: int = 1
    weight: tuple[int, ...] | None = None
    dual: bool = False
    output_format: str = "text"
    output_path: str | None = None
    threads: int | None = None


def parse_vectors(text: str, field: str) -> tuple[tuple[int, ...], ...]:
    """``"0,1;4,-3"`` -> ((0, 1), (4, -3))."""
    rows = [r.strip() for r in text.strip().strip(";").split(";")]
    if not rows or rows == [""]:
        raise JobError(field, "empty")
    out = []
    for r in rows:
        try:
            out.append(tuple(int(x) for x in r.split(",")))
        except ValueError:
            raise JobError(field, f"non-integer entry in {r!r}") from None
    d = len(out[0])
    if any(len(v) != d for v in out):
        raise JobError(field, "dimension mismatch between vectors")
    return tuple(out)


def _parse_ideal_file(path: str) -> tuple:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise JobError("ideal", f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise JobError("ideal", f"invalid JSON: {e.msg}") from None
    gens = data["generators"] if isinstance(data, dict) else data
    out = []
    try:
        for poly in gens:
            out.append(tuple((tuple(int(x) for x in t["exp"]), Fraction(str(t["coeff"]))) for t in poly))
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        raise JobError("ideal", "each generator must be a list of {coeff, exp} terms") from None
    if not out:
        raise JobError("ideal", "no generators")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nashfan", description="Groebner fans in monomial subalgebras and higher Nash blowups of toric varieties.")
    sub = p.add_subparsers(dest="mode", required=True)

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
        sp.add_argument("-o", "--output", dest="output_path", help="write here instead of stdout")
        sp.add_argument("--threads", type=int, help="worker threads (default: NASHFAN_THREADS or cores)")

    for mode in ("nash", "nobile"):
        sp = sub.add_parser(mode, help=f"{mode} pipeline for a cone sigma")
        sp.add_argument("--cone", required=True, help='rays, e.g. "0,1;4,-3"')
        sp.add_argument("-n", type=int, default=1, help="order of the Nash blowup (default 1)")
        common(sp)

    for mode in ("fan", "gb"):
        sp = sub.add_parser(mode, help="Groebner fan" if mode == "fan" else "reduced Groebner basis")
        sp.add_argument("--semigroup", required=True, help='generators, e.g. "1,0;1,1;2,3"')
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--ideal", help="JSON file with generators as term lists")
        src.add_argument("--jn", type=int, metavar="N", help="use J_N of the semigroup")
        if mode == "gb":
            sp.add_argument("-w", "--weight", required=True, help='weight, e.g. "1,1"')
        else:
            sp.add_argument("--cone", help="sigma (default: dual of the semigroup cone)")
        common(sp)

    sp = sub.add_parser("hilbert", help="Hilbert basis of a cone or of its dual")
    sp.add_argument("--cone", required=True)
    sp.add_argument("--dual", action="store_true", help="use the dual cone")
    common(sp)
    return p


def parse_job(argv: Sequence[str]) -> JobSpec:
    args = build_parser().parse_args(list(argv))
    kw: dict = {"mode": args.mode, "output_format": args.output_format,
                "output_path": args.output_path, "threads": args.threads}
    if getattr(args, "cone", None):
        rays = parse_vectors(args.cone, "cone")
        d = len(rays[0])
        if args.mode != "fan" and rank(rays, d) < d:
            raise JobError("cone", f"cone must span dimension {d}")
        kw["cone"] = rays
    if args.mode in ("nash", "nobile"):
        if args.n < 0:
            raise JobError("n", "must be non-negative")
        if args.mode == "nobile" and args.n < 1:
            raise JobError("n", "the Nobile check needs n >= 1")
        kw["n"] = args.n
    if args.mode in ("fan", "gb"):
        kw["semigroup"] = parse_vectors(args.semigroup, "semigroup")
        d = len(kw["semigroup"][0])
        if args.jn is not None:
            if args.jn < 0:
                raise JobError("jn", "must be non-negative")
            kw["jn"] = args.jn
        else:
            kw["ideal"] = _parse_ideal_file(args.ideal)
            for poly in kw["ideal"]:
                if any(len(e) != d for e, _ in poly):
                    raise JobError("ideal", "exponent length does not match the semigroup")
        if kw.get("cone") and len(kw["cone"][0]) != d:
            raise JobError("cone", "dimension mismatch with the semigroup")
    if args.mode == "gb":
        (w,) = parse_vectors(args.weight, "weight") or (None,)
        if len(w) != len(kw["semigroup"][0]):
            raise JobError("weight", "dimension mismatch with the semigroup")
        kw["weight"] = w
    if args.mode == "hilbert":
        kw["dual"] = args.dual
    if args.output_format == "svg" and args.mode in ("gb", "hilbert"):
        raise JobError("format", f"svg output is not available for mode {args.mode}")
    return JobSpec(**kw)


# --- rendering -----------------------------------------------------------------

def _fan_text(fan: GroebnerFan) -> list[str]:
    names = variable_names(fan.base.ambient_dim)
    lines = [f"{len(fan.maximal_cones)} maximal cone(s){'' if fan.complete else ' (best effort)'}"]
    for i, gc in enumerate(fan.maximal_cones, 1):
        lines.append(f"cone {i}: {gc.closure}  witness {gc.witness_weight}")
        for g in gc.basis.elements:
            lines.append(f"    {g.to_string(gc.basis.order, names)}")
    return lines


def _render(job: JobSpec, payload: dict, text: list[str], fan: GroebnerFan | None) -> bytes:
    if job.output_format == "json":
        return serialize.emit_json(payload)
    if job.output_format == "svg":
        assert fan is not None
        return render_fan(fan.cones, title=f"nashfan {job.mode}")
    return ("\n".join(text) + "\n").encode("utf-8")


def _ideal(job: JobSpec, A: SemigroupPresentation) -> list[SubalgebraPoly]:
    if job.jn is not None:
        return build_Jn(A, job.jn)
    try:
        return [SubalgebraPoly(dict(p), A) for p in job.ideal]
    except ValueError as e:
        raise JobError("ideal", str(e)) from None


def _presentation(job: JobSpec) -> SemigroupPresentation:
    try:
        return SemigroupPresentation(job.semigroup)
    except ValueError as e:
        raise JobError("semigroup", str(e)) from None


def execute(job: JobSpec) -> tuple[int, bytes]:
    """Run a validated job; returns (exit status, output bytes)."""
    status = EXIT_OK
    fan = None
    if job.mode in ("nash", "nobile"):
        sigma = Cone.from_rays(job.cone)
        report: NobileReport | None = None
        if job.mode == "nobile":
            report, result = nobile_check(sigma, job.n, threads=job.threads)
        else:
            result = nash_fan(sigma, job.n, threads=job.threads)
        fan = result.fan
        text = _nash_text(result)
        if report is not None:
            text.append(f"nobile: {report.describe()}")
            if not report.consistent:
                status = EXIT_INCONSISTENT
        payload = serialize.nash_to_dict(result, report)
    elif job.mode == "fan":
        A = _presentation(job)
        ideal = _ideal(job, A)
        sigma = Cone.from_rays(job.cone) if job.cone else dual_cone(Cone.from_rays(A.generators))
        fan = enumerate_fan(ideal, sigma, threads=job.threads)
        trivial = is_trivial(fan)
        text = _fan_text(fan) + [f"trivial: {str(trivial).lower()}"]
        payload = serialize.fan_to_dict(fan, ideal, trivial)
    elif job.mode == "gb":
        A = _presentation(job)
        ideal = _ideal(job, A)
        order = SubalgebraOrder.from_weight(job.weight)
        try:
            order.check(A)
        except ValueError as e:
            raise JobError("weight", str(e)) from None
        basis: ReducedBasis = reduced_groebner_basis(ideal, order)
        init = initial_ideal(basis)
        names = variable_names(A.ambient_dim)
        text = [g.to_string(order, names) for g in basis.elements]
        payload = serialize.basis_to_dict(basis, ideal, init)
    else:
        c = Cone.from_rays(job.cone)
        target = dual_cone(c) if job.dual else c
        hb = hilbert_basis(target)
        text = [",".join(str(x) for x in v) for v in hb]
        payload = {"mode": "hilbert", "cone": serialize.cone_to_json(c), "dual": job.dual,
                   "hilbert_basis": [list(v) for v in hb]}
    return status, _render(job, payload, text, fan)


def _nash_text(result: NashResult) -> list[str]:
    lines = [
        f"sigma: {result.sigma}",
        "semigroup: " + " ".join(str(g) for g in result.presentation.generators),
        f"n: {result.n}",
    ]
    if result.normalization:
        lines.append(f"normalization: {result.normalization}")
    lines += _fan_text(result.fan)
    lines.append(f"smooth: {str(result.smooth).lower()}")
    lines.append(f"nash_isomorphism: {str(result.nash_isomorphism).lower()}")
    return lines


def run(job: JobSpec) -> int:
    try:
        status, out = execute(job)
    except (JobError, DegenerateConeError, ValueError, RuntimeError) as e:
        print(f"nashfan: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    if job.output_path:
        Path(job.output_path).write_bytes(out)
    else:
        sys.stdout.buffer.write(out)
        sys.stdout.flush()
    return status


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="nashfan: %(levelname)s: %(message)s")
    try:
        job = parse_job(sys.argv[1:] if argv is None else argv)
    except JobError as e:
        print(f"nashfan: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except SystemExit as e:
        # argparse usage errors
        return EXIT_ERROR if e.code else EXIT_OK
    return run(job)


if __name__ == "__main__":
    sys.exit(main())

"""JSON encoding of results.

Polynomials are lists of ``{"coeff": "p/q", "exp": [...]}`` terms sorted from
the largest term down under the order that produced them.  Output uses sorted
keys and is byte-identical across runs.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .gfan import GroebnerCone, GroebnerFan
from .nash import NashResult, NobileReport
from .polyhedral import Cone
from .semigroup import SemigroupPresentation
from .subalgebra import ReducedBasis, SubalgebraOrder, SubalgebraPoly


def coeff_to_str(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_json(f: SubalgebraPoly, order: SubalgebraOrder | None = None) -> list[dict]:
    return [{"coeff": coeff_to_str(c), "exp": list(e)} for e, c in f.sorted_terms(order)]


def poly_from_json(terms: Sequence[dict], A: SemigroupPresentation) -> SubalgebraPoly:
    out: dict[tuple, Fraction] = {}
    for t in terms:
        e = tuple(int(x) for x in t["exp"])
        out[e] = out.get(e, 0) + Fraction(str(t["coeff"]))
    return SubalgebraPoly(out, A)


def _vecs(vs) -> list[list[int]]:
    return [list(v) for v in vs]


def cone_to_json(c: Cone) -> dict:
    return {"rays": _vecs(c.rays)}


def groebner_cone_to_json(gc: GroebnerCone) -> dict:
    order = gc.basis.order
    return {
        "rays": _vecs(gc.closure.rays),
        "inequalities": _vecs(gc.closure.inequalities),
        "defining_inequalities": _vecs(gc.defining_inequalities()),
        "witness": list(gc.witness_weight),
        "order_weight": list(order.weight),
        "reduced_basis": [poly_to_json(g, order) for g in gc.basis.elements],
        "initial_ideal": [poly_to_json(g, order) for g in gc.initial_ideal],
    }


def fan_to_json(fan: GroebnerFan) -> list[dict]:
    return [groebner_cone_to_json(gc) for gc in fan.maximal_cones]


def nash_to_dict(result: NashResult, report: NobileReport | None = None) -> dict:
    out: dict[str, Any] = {
        "mode": "nobile" if report is not None else "nash",
        "sigma": cone_to_json(result.sigma),
        "semigroup": {"generators": _vecs(result.presentation.generators)},
        "n": result.n,
        "normalization": _vecs(result.normalization) if result.normalization else None,
        "fan": fan_to_json(result.fan),
        "smooth": result.smooth,
        "nash_isomorphism": result.nash_isomorphism,
        "traversal": "complete" if result.fan.complete else "best effort",
    }
    if report is not None:
        out["consistent"] = report.consistent
    return out


def fan_to_dict(fan: GroebnerFan, ideal: Sequence[SubalgebraPoly], trivial: bool) -> dict:
    A = ideal[0].presentation
    return {
        "mode": "fan",
        "sigma": cone_to_json(fan.base),
        "semigroup": {"generators": _vecs(A.generators)},
        "ideal": [poly_to_json(f) for f in ideal],
        "fan": fan_to_json(fan),
        "trivial": trivial,
        "traversal": "complete" if fan.complete else "best effort",
    }


def basis_to_dict(basis: ReducedBasis, ideal: Sequence[SubalgebraPoly], initial: Sequence[SubalgebraPoly]) -> dict:
    return {
        "mode": "gb",
        "semigroup": {"generators": _vecs(basis.presentation.generators)},
        "ideal": [poly_to_json(f) for f in ideal],
        "weight": list(basis.order.weight),
        "reduced_basis": [poly_to_json(g, basis.order) for g in basis.elements],
        "initial_ideal": [poly_to_json(g, basis.order) for g in initial],
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_json(obj: dict) -> bytes:
    return dumps(obj).encode("utf-8")


# --- decoding ------------------------------------------------------------------

def _cone(rays, d: int) -> Cone:
    return Cone.from_rays([tuple(r) for r in rays], d)


def fan_from_json(entries: Sequence[dict], sigma: Cone, A: SemigroupPresentation, complete: bool) -> GroebnerFan:
    cones = []
    for e in entries:
        w = tuple(e["witness"])
        order = SubalgebraOrder.from_weight(e.get("order_weight", w))
        basis = ReducedBasis(tuple(poly_from_json(g, A) for g in e["reduced_basis"]), order)
        initial = tuple(poly_from_json(g, A) for g in e["initial_ideal"])
        cones.append(GroebnerCone(_cone(e["rays"], sigma.ambient_dim), w, basis, initial))
    return GroebnerFan(sigma, tuple(cones), complete)


def nash_from_dict(data: dict) -> NashResult:
    d = len(data["sigma"]["rays"][0])
    sigma = _cone(data["sigma"]["rays"], d)
    A = SemigroupPresentation(tuple(tuple(g) for g in data["semigroup"]["generators"]))
    norm = data.get("normalization")
    fan = fan_from_json(data["fan"], sigma, A, data.get("traversal", "complete") == "complete")
    return NashResult(
        sigma, A, data["n"], fan, data["smooth"], data["nash_isomorphism"],
        tuple(tuple(r) for r in norm) if norm else None,
    )


def loads(text: str | bytes) -> NashResult | GroebnerFan | ReducedBasis:
    """Rebuild the result object from emitted JSON."""
    data = json.loads(text)
    mode = data.get("mode")
    if mode in ("nash", "nobile"):
        return nash_from_dict(data)
    A = SemigroupPresentation(tuple(tuple(g) for g in data["semigroup"]["generators"]))
    if mode == "fan":
        sigma = _cone(data["sigma"]["rays"], A.ambient_dim)
        return fan_from_json(data["fan"], sigma, A, data.get("traversal", "complete") == "complete")
    if mode == "gb":
        order = SubalgebraOrder.from_weight(data["weight"])
        return ReducedBasis(tuple(poly_from_json(g, A) for g in data["reduced_basis"]), order)
    raise ValueError(f"cannot rebuild a result of mode {mode!r}")

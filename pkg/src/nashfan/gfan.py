"""Groebner cones and breadth-first enumeration of the Groebner fan over sigma."""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .polyhedral import Cone, IntVector, facets, primitive, relative_interior_point
from .subalgebra import (
    ReducedBasis,
    SubalgebraOrder,
    SubalgebraPoly,
    initial_form,
    leading_data,
    reduced_groebner_basis,
)

log = logging.getLogger(__name__)

THREADS_ENV = "NASHFAN_THREADS"


class NoNeighborError(ValueError):
    pass


@dataclass(frozen=True)
class GroebnerCone:
    closure: Cone
    witness_weight: IntVector
    basis: ReducedBasis
    initial_ideal: tuple[SubalgebraPoly, ...]

    def defining_inequalities(self) -> list[IntVector]:
        """Primitive normals lm(g) - u over all basis elements g and tail exponents u."""
        out = set()
        for g, lm in zip(self.basis.elements, self.basis.leading_exponents()):
            for e in g.terms:
                if e != lm:
                    out.add(primitive(a - b for a, b in zip(lm, e)))
        return sorted(out)


@dataclass(frozen=True)
class GroebnerFan:
    base: Cone
    maximal_cones: tuple[GroebnerCone, ...]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.maximal_cones)

    @property
    def cones(self) -> list[Cone]:
        return [c.closure for c in self.maximal_cones]


def _difference_constraints(basis: ReducedBasis, w: Sequence[int]) -> tuple[list, list]:
    eqs, ineqs = set(), set()
    for g in basis.elements:
        init = initial_form(g, w).terms
        head = sorted(init)
        for e in head[1:]:
            eqs.add(primitive(a - b for a, b in zip(head[0], e)))
        for e in g.terms:
            if e not in init:
                ineqs.add(primitive(a - b for a, b in zip(head[0], e)))
    return sorted(eqs), sorted(ineqs)


def cone_of(basis: ReducedBasis, sigma: Cone) -> Cone:
    """Closure of C[w] for the basis' weight w, from initial forms at w."""
    eqs, ineqs = _difference_constraints(basis, basis.order.weight)
    return Cone.from_constraints(
        list(sigma.equalities) + eqs, list(sigma.inequalities) + ineqs, sigma.ambient_dim)


def maximal_cone_of(basis: ReducedBasis, sigma: Cone) -> Cone:
    """Closed cone of weights in sigma whose initial forms contain every leading term."""
    ineqs = set()
    for g, lm in zip(basis.elements, basis.leading_exponents()):
        for e in g.terms:
            if e != lm:
                ineqs.add(primitive(a - b for a, b in zip(lm, e)))
    return Cone.from_constraints(
        sigma.equalities, list(sigma.inequalities) + sorted(ineqs), sigma.ambient_dim)


def facet_flip_order(cone: Cone, facet_normal: Sequence[int], facet_point: Sequence[int],
                     sigma: Cone) -> SubalgebraOrder:
    """Order refining the facet point by the outward normal: selects the neighbor across the facet."""
    if not sigma.contains_strictly(facet_point):
        raise NoNeighborError("no neighbor: facet lies on the boundary of sigma")
    return SubalgebraOrder((tuple(facet_point), tuple(-x for x in facet_normal)))


def groebner_cone_at(gens: Sequence[SubalgebraPoly], w: Sequence[int], sigma: Cone) -> Cone:
    """Maximal cone selected by the order (w, lex)."""
    basis = reduced_groebner_basis(gens, SubalgebraOrder.from_weight(w))
    return maximal_cone_of(basis, sigma)


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", THREADS_ENV, env)
    return os.cpu_count() or 1


def _on_boundary(facet: Cone, sigma: Cone) -> bool:
    return not sigma.contains_strictly(relative_interior_point(facet))


def enumerate_fan(gens: Sequence[SubalgebraPoly], sigma: Cone, threads: int | None = None) -> GroebnerFan:
    """Breadth-first traversal of the maximal Groebner cones of <gens> inside sigma."""
    gens = list(gens)
    A = gens[0].presentation
    if not sigma.is_full_dimensional:
        raise ValueError("sigma must be full-dimensional")
    for r in sigma.rays:
        if any(sum(x * y for x, y in zip(r, a)) < 0 for a in A.generators):
            raise ValueError("sigma is not contained in the dual of the semigroup cone")

    def visit(order: SubalgebraOrder) -> tuple[Cone, ReducedBasis]:
        basis = reduced_groebner_basis(gens, order)
        c = maximal_cone_of(basis, sigma)
        if not c.is_full_dimensional:
            raise RuntimeError(f"Groebner cone {c} of a refined order is not full-dimensional")
        return c, basis

    start = SubalgebraOrder.from_weight(relative_interior_point(sigma))
    first, first_basis = visit(start)
    found: dict[Cone, ReducedBasis] = {first: first_basis}
    frontier = [first]
    workers = _thread_count(threads)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        while frontier:
            jobs = []
            for c in frontier:
                for facet, normal in facets(c):
                    if _on_boundary(facet, sigma):
                        continue
                    jobs.append(facet_flip_order(c, normal, relative_interior_point(facet), sigma))
            results = list(pool.map(visit, jobs)) if workers > 1 else [visit(o) for o in jobs]
            frontier = []
            for c, basis in results:
                if c not in found:
                    found[c] = basis
                    frontier.append(c)
            frontier.sort(key=lambda k: k.rays)

    maximal = []
    for c in sorted(found, key=lambda k: k.rays):
        maximal.append(_materialize(c, found[c]))
    complete = sigma.ambient_dim <= 3
    if not complete:
        log.warning("fan traversal in dimension %d is best effort", sigma.ambient_dim)
    return GroebnerFan(sigma, tuple(maximal), complete)


def _materialize(c: Cone, basis: ReducedBasis) -> GroebnerCone:
    # the reduced basis is constant on the open cone, so re-sorting under the
    # witness order is enough; no recomputation needed
    w = relative_interior_point(c)
    order = SubalgebraOrder.from_weight(w)
    elements = sorted(basis.elements, key=lambda g: order.key(leading_data(g, order)[0]))
    b = ReducedBasis(tuple(elements), order)
    if b.leading_exponents() != [leading_data(g, basis.order)[0] for g in elements]:
        raise RuntimeError("witness weight does not reproduce the cone's leading terms")
    return GroebnerCone(c, w, b, tuple(initial_form(g, w) for g in elements))


def is_trivial(fan: GroebnerFan) -> bool:
    return len(fan.maximal_cones) == 1 and fan.maximal_cones[0].closure == fan.base

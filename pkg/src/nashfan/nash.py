"""Fan of the normalized higher Nash blowup of an affine normal toric variety.

For sigma with dual semigroup generators a_1, ..., a_s the fan is the Groebner
fan of J_n = <x^{a_1} - 1, ..., x^{a_s} - 1>^{n+1} in k[A].  The Nobile check
compares triviality of that fan with smoothness of sigma.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .gfan import GroebnerCone, GroebnerFan, enumerate_fan, is_trivial
from .polyhedral import (
    Cone,
    DegenerateConeError,
    dual_cone,
    hilbert_basis,
    is_smooth,
    normalize_to_orthant,
    transpose_apply,
)
from .semigroup import SemigroupPresentation
from .subalgebra import SubalgebraPoly

log = logging.getLogger(__name__)


def compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative ints summing to ``total``, lex-descending."""
    # stars and bars
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars + (total + parts - 1,):
            out.append(b - prev - 1)
            prev = b
        yield tuple(out)


def build_Jn(A: SemigroupPresentation, n: int) -> list[SubalgebraPoly]:
    """Products (x^{a_1}-1)^{t_1} ... (x^{a_s}-1)^{t_s} over all t with |t| = n + 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    binomials = [SubalgebraPoly.generator(i, A) - 1 for i in range(A.size)]
    powers = [[SubalgebraPoly.constant(1, A)] for _ in binomials]
    for i, b in enumerate(binomials):
        for _ in range(n + 1):
            powers[i].append(powers[i][-1] * b)
    out = []
    for t in compositions(n + 1, A.size):
        f = SubalgebraPoly.constant(1, A)
        for i, k in enumerate(t):
            if k:
                f = f * powers[i][k]
        out.append(f)
    assert len(out) == comb(n + A.size, A.size - 1)
    return out


@dataclass(frozen=True)
class NashResult:
    """Outcome of the pipeline.

    ``fan`` subdivides the user's sigma.  When the dual generators had to be
    moved into the orthant, ``normalization`` is the unimodular U used and
    the reduced bases of the fan are written in the exponents U.u.
    """

    sigma: Cone
    presentation: SemigroupPresentation
    n: int
    fan: GroebnerFan
    smooth: bool
    nash_isomorphism: bool
    normalization: tuple[tuple[int, ...], ...] | None = None


def semigroup_of(sigma: Cone) -> tuple[SemigroupPresentation, tuple | None]:
    """Minimal generators of the dual semigroup, moved into N^d if needed."""
    if not sigma.rays or not sigma.is_full_dimensional:
        raise DegenerateConeError("degenerate cone: sigma must be full-dimensional and strictly convex")
    hb = hilbert_basis(dual_cone(sigma))
    U, gens = normalize_to_orthant(hb)
    identity = all(U[i][j] == int(i == j) for i in range(len(U)) for j in range(len(U)))
    return SemigroupPresentation(tuple(gens)), (None if identity else U)


def _pull_back(fan: GroebnerFan, U, sigma: Cone) -> GroebnerFan:
    cones = []
    for gc in fan.maximal_cones:
        closure = Cone.from_rays([transpose_apply(U, r) for r in gc.closure.rays], sigma.ambient_dim)
        cones.append(GroebnerCone(closure, transpose_apply(U, gc.witness_weight), gc.basis, gc.initial_ideal))
    cones.sort(key=lambda c: c.closure.rays)
    return GroebnerFan(sigma, tuple(cones), fan.complete)


def nash_fan(sigma: Cone, n: int, threads: int | None = None) -> NashResult:
    if n < 0:
        raise ValueError("n must be non-negative")
    A, U = semigroup_of(sigma)
    local_sigma = sigma if U is None else dual_cone(Cone.from_rays(A.generators))
    fan = enumerate_fan(build_Jn(A, n), local_sigma, threads=threads)
    if U is not None:
        fan = _pull_back(fan, U, sigma)
    smooth = is_smooth(sigma)
    trivial = is_trivial(fan)
    if n >= 1 and smooth != trivial:
        log.error("Nobile equivalence violated for %s, n=%d: smooth=%s, trivial fan=%s",
                  sigma, n, smooth, trivial)
    return NashResult(sigma, A, n, fan, smooth, trivial, U)


@dataclass(frozen=True)
class NobileReport:
    smooth: bool
    nash_isomorphism: bool

    @property
    def consistent(self) -> bool:
        return self.smooth == self.nash_isomorphism

    def describe(self) -> str:
        text = "({}, fan {})".format("smooth" if self.smooth else "singular",
                                     "trivial" if self.nash_isomorphism else "non-trivial")
        if not self.consistent:
            text += " INCONSISTENT: implementation bug"
        return text


def nobile_check(sigma: Cone, n: int, threads: int | None = None) -> tuple[NobileReport, NashResult]:
    if n < 1:
        raise ValueError("the Nobile check needs n >= 1 (J_0 always gives the trivial fan)")
    result = nash_fan(sigma, n, threads=threads)
    return NobileReport(result.smooth, result.nash_isomorphism), result

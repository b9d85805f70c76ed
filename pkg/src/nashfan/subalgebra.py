"""Polynomials in a monomial subalgebra k[A] = k[x^{a_1}, ..., x^{a_s}].

Monomials are indexed by their ambient exponents in N^d.  Orders are integer
weights refined by lex on ambient exponents.  Reduced Groebner bases are
computed extrinsically: lift to k[y_1, ..., y_s], add the toric ideal, run
Buchberger under an order that compares images first, then map back and
auto-reduce inside k[A].
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import polyring
from .polyhedral import IntVector, dot
from .semigroup import NotInSemigroupError, SemigroupPresentation, contains, member

Exponent = tuple[int, ...]

_NAMES = {1: ["x"], 2: ["x", "y"], 3: ["x", "y", "z"]}


def variable_names(d: int) -> list[str]:
    return _NAMES.get(d) or [f"x{i + 1}" for i in range(d)]


@dataclass(frozen=True, eq=False)
class SubalgebraPoly:
    terms: Mapping[Exponent, Fraction]
    presentation: SemigroupPresentation

    def __post_init__(self) -> None:
        d = self.presentation.ambient_dim
        clean: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != d:
                raise ValueError(f"exponent {e} does not have {d} entries")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c}
        for e in clean:
            if not contains(e, self.presentation):
                raise NotInSemigroupError(f"exponent {e} is not in the semigroup")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _trusted(cls, terms: dict[Exponent, Fraction], A: SemigroupPresentation) -> SubalgebraPoly:
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", {e: c for e, c in terms.items() if c})
        object.__setattr__(obj, "presentation", A)
        return obj

    @classmethod
    def monomial(cls, u: Sequence[int], A: SemigroupPresentation, coeff=1) -> SubalgebraPoly:
        return cls({tuple(u): Fraction(coeff)}, A)

    @classmethod
    def constant(cls, c, A: SemigroupPresentation) -> SubalgebraPoly:
        return cls({(0,) * A.ambient_dim: Fraction(c)}, A)

    @classmethod
    def generator(cls, i: int, A: SemigroupPresentation) -> SubalgebraPoly:
        """x^{a_i} (0-based)."""
        return cls.monomial(A.generators[i], A)

    def _coerce(self, other) -> SubalgebraPoly:
        if isinstance(other, SubalgebraPoly):
            if other.presentation != self.presentation:
                raise ValueError("polynomials live in different subalgebras")
            return other
        return SubalgebraPoly._trusted({(0,) * self.presentation.ambient_dim: Fraction(other)}, self.presentation)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (isinstance(other, SubalgebraPoly) and self.presentation == other.presentation
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> SubalgebraPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SubalgebraPoly._trusted(out, self.presentation)

    __radd__ = __add__

    def __neg__(self) -> SubalgebraPoly:
        return SubalgebraPoly._trusted({e: -c for e, c in self.terms.items()}, self.presentation)

    def __sub__(self, other) -> SubalgebraPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> SubalgebraPoly:
        return (-self) + other

    def __mul__(self, other) -> SubalgebraPoly:
        if not isinstance(other, SubalgebraPoly):
            c = Fraction(other)
            return SubalgebraPoly._trusted({e: v * c for e, v in self.terms.items()}, self.presentation)
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SubalgebraPoly._trusted(out, self.presentation)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SubalgebraPoly:
        out = SubalgebraPoly.constant(1, self.presentation)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self, order: SubalgebraOrder | None = None) -> list[tuple[Exponent, Fraction]]:
        """Terms from largest to smallest (lex on exponents when no order is given)."""
        key = order.key if order is not None else (lambda e: e)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def to_string(self, order: SubalgebraOrder | None = None, names: Sequence[str] | None = None) -> str:
        names = names or variable_names(self.presentation.ambient_dim)
        return polyring.format_terms(self.sorted_terms(order), names)

    def __str__(self) -> str:
        return self.to_string()

    __repr__ = __str__


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class SubalgebraOrder:
    """x^u > x^v iff (w_1.u, w_2.u, ..., u) > (w_1.v, w_2.v, ..., v) lexicographically.

    Usually a single weight; the facet flips of fan traversal add a second
    row.  The lex tie-break on ambient exponents is fixed.
    """

    weights: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        ws = tuple(tuple(int(x) for x in w) for w in self.weights)
        if not ws:
            raise ValueError("an order needs at least one weight")
        if any(len(w) != len(ws[0]) for w in ws):
            raise ValueError("weights must share one dimension")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def from_weight(cls, w: Sequence[int]) -> SubalgebraOrder:
        return cls((tuple(w),))

    @property
    def weight(self) -> IntVector:
        return self.weights[0]

    def key(self, u: Exponent) -> tuple:
        return tuple(dot(w, u) for w in self.weights) + tuple(u)

    def check(self, A: SemigroupPresentation) -> None:
        """Raise unless this is a monomial order on k[A] (every x^{a_i} > 1)."""
        if len(self.weight) != A.ambient_dim:
            raise ValueError(f"weight must have {A.ambient_dim} entries")
        if any(dot(self.weight, a) < 0 for a in A.generators):
            raise ValueError(f"weight {self.weight} is not in sigma")
        zero = self.key((0,) * A.ambient_dim)
        if any(self.key(a) <= zero for a in A.generators):
            raise ValueError("order is not a monomial order on k[A]")

    def lifted(self, A: SemigroupPresentation) -> polyring.TermOrder:
        """Term order on k[y] comparing images x^{A e} first, then lex on y."""
        gens = A.generators
        rows = [tuple(dot(w, a) for a in gens) for w in self.weights]
        rows += [tuple(a[k] for a in gens) for k in range(A.ambient_dim)]
        return polyring.TermOrder(tuple(rows), "lex")


def compare(u: Sequence[int], v: Sequence[int], order: SubalgebraOrder, A: SemigroupPresentation) -> Comparison:
    for e in (u, v):
        if not contains(e, A):
            raise NotInSemigroupError(f"exponent {tuple(e)} is not in the semigroup")
    ku, kv = order.key(tuple(u)), order.key(tuple(v))
    return Comparison((ku > kv) - (ku < kv))


def initial_form(f: SubalgebraPoly, w: Sequence[int]) -> SubalgebraPoly:
    """Sum of the terms of f whose exponent maximizes w.u."""
    if not f:
        return f
    top = max(dot(w, e) for e in f.terms)
    return SubalgebraPoly._trusted({e: c for e, c in f.terms.items() if dot(w, e) == top}, f.presentation)


def leading_data(f: SubalgebraPoly, order: SubalgebraOrder) -> tuple[Exponent | None, Fraction, SubalgebraPoly]:
    """(lm, lc, lt); the zero polynomial gives (None, 0, 0)."""
    if not f:
        return None, Fraction(0), f
    lm = max(f.terms, key=order.key)
    lc = f.terms[lm]
    return lm, lc, SubalgebraPoly._trusted({lm: lc}, f.presentation)


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _a_divides(u: Exponent, v: Exponent, A: SemigroupPresentation) -> bool:
    diff = _sub(v, u)
    return all(x >= 0 for x in diff) and contains(diff, A)


def divide(
    f: SubalgebraPoly,
    divisors: Sequence[SubalgebraPoly],
    order: SubalgebraOrder,
) -> tuple[list[SubalgebraPoly], SubalgebraPoly]:
    """Division algorithm in k[A]: f = sum q_i d_i + r, no term of r divisible by any lt(d_i)."""
    A = f.presentation
    if any(not d for d in divisors):
        raise ValueError("cannot divide by zero")
    leads = [leading_data(d, order)[:2] for d in divisors]
    quotients: list[dict[Exponent, Fraction]] = [{} for _ in divisors]
    p = dict(f.terms)
    rem: dict[Exponent, Fraction] = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc) in enumerate(leads):
            if _a_divides(lm, m, A):
                q = _sub(m, lm)
                factor = c / lc
                quotients[i][q] = quotients[i].get(q, 0) + factor
                for e, v in divisors[i].terms.items():
                    e2 = tuple(x + y for x, y in zip(e, q))
                    nv = p.get(e2, 0) - factor * v
                    if nv:
                        p[e2] = nv
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[m] = c
            del p[m]
    return ([SubalgebraPoly._trusted(q, A) for q in quotients], SubalgebraPoly._trusted(rem, A))


@dataclass(frozen=True)
class ReducedBasis:
    elements: tuple[SubalgebraPoly, ...]
    order: SubalgebraOrder

    @property
    def presentation(self) -> SemigroupPresentation:
        return self.elements[0].presentation

    def leading_exponents(self) -> list[Exponent]:
        return [leading_data(g, self.order)[0] for g in self.elements]

    def is_reduced(self) -> bool:
        """Monic, and no monomial of g_i is A-divisible by lt(g_j), j != i."""
        A = self.presentation
        leads = self.leading_exponents()
        for i, g in enumerate(self.elements):
            if leading_data(g, self.order)[1] != 1:
                return False
            for j, lm in enumerate(leads):
                if j != i and any(_a_divides(lm, e, A) for e in g.terms):
                    return False
        return True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(g.to_string(self.order) for g in self.elements) + "}"


def lift(f: SubalgebraPoly) -> polyring.RingPoly:
    """Rewrite each x^u as y^lambda with the lex-smallest membership witness."""
    A = f.presentation
    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        lam = member(e, A)
        if lam is None:
            raise NotInSemigroupError(f"exponent {e} is not in the semigroup")
        out[lam] = out.get(lam, 0) + c
    return polyring.RingPoly(out, A.size)


def push(F: polyring.RingPoly, A: SemigroupPresentation) -> SubalgebraPoly:
    """Image under y_i -> x^{a_i}."""
    return SubalgebraPoly._trusted(polyring.image_under(F, A.generators), A)


def _monic(g: SubalgebraPoly, order: SubalgebraOrder) -> SubalgebraPoly:
    return g * (1 / leading_data(g, order)[1])


def reduced_groebner_basis(gens: Sequence[SubalgebraPoly], order: SubalgebraOrder) -> ReducedBasis:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    A = gens[0].presentation
    order.check(A)
    nonzero = [g for g in gens if g]
    if not nonzero:
        raise ValueError("the zero ideal has no reduced Groebner basis")

    lifted = [lift(g) for g in nonzero] + polyring.toric_ideal(A.generators)
    big = polyring.buchberger_reduced(lifted, order.lifted(A))
    images = [push(F, A) for F in big]
    images = [_monic(g, order) for g in images if g]

    one = SubalgebraPoly.constant(1, A)
    if any(leading_data(g, order)[0] == (0,) * A.ambient_dim for g in images):
        return ReducedBasis((one,), order)

    # minimalize by A-divisibility of leading exponents
    images.sort(key=lambda g: order.key(leading_data(g, order)[0]))
    minimal: list[SubalgebraPoly] = []
    for g in images:
        lm = leading_data(g, order)[0]
        if not any(_a_divides(leading_data(h, order)[0], lm, A) for h in minimal):
            minimal.append(g)

    # tail reduction; leading exponents are fixed, so this stabilizes
    cap = 10 * len(minimal)
    for _ in range(cap):
        changed = False
        for i, g in enumerate(minimal):
            lm, lc, lt = leading_data(g, order)
            others = minimal[:i] + minimal[i + 1:]
            if not others:
                continue
            _, r = divide(g - lt, others, order)
            new = lt + r
            if new != g:
                minimal[i] = new
                changed = True
        if not changed:
            break
    else:
        raise RuntimeError("intrinsic auto-reduction did not stabilize")
    return ReducedBasis(tuple(minimal), order)


def normal_form(f: SubalgebraPoly, basis: ReducedBasis) -> SubalgebraPoly:
    return divide(f, basis.elements, basis.order)[1]


def in_closed_cone(basis: ReducedBasis, w: Sequence[int]) -> bool:
    """Is w in the closed Groebner cone of the basis (intersected with sigma)?"""
    A = basis.presentation
    if any(dot(w, a) < 0 for a in A.generators):
        return False
    for g, lm in zip(basis.elements, basis.leading_exponents()):
        top = dot(w, lm)
        if any(dot(w, e) > top for e in g.terms):
            return False
    return True


def initial_ideal(basis: ReducedBasis, w: Sequence[int] | None = None) -> list[SubalgebraPoly]:
    """Generators {in_w(g)} of in_w(I); w defaults to the basis' own weight."""
    w = tuple(w) if w is not None else basis.order.weight
    if not in_closed_cone(basis, w):
        raise ValueError("weight not in cone")
    return [initial_form(g, w) for g in basis.elements]


def poly_from_terms(terms: Iterable[tuple[Sequence[int], object]], A: SemigroupPresentation) -> SubalgebraPoly:
    out: dict[Exponent, Fraction] = {}
    for e, c in terms:
        e = tuple(e)
        out[e] = out.get(e, 0) + Fraction(c)
    return SubalgebraPoly(out, A)

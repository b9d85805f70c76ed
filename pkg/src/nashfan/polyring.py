"""Multivariate polynomials over Q and a Buchberger engine.

Polynomials are sparse maps from exponent tuples to non-zero ``Fraction``
coefficients.  Term orders are matrix orders: a list of integer weight rows
compared in sequence, then a lex or revlex tie-break.  Buchberger runs
fraction-free on integer coefficients and only goes back to Q to make the
final basis monic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class TermOrder:
    """Matrix term order.

    ``weight_rows`` are compared first, in order; remaining ties are broken by
    lex (x_1 > x_2 > ...) or revlex.  ``block`` optionally records the size of
    a leading variable block to eliminate; it is informational, the weight
    rows carry the actual elimination property.
    """

    weight_rows: tuple[tuple[int, ...], ...] = ()
    final_tiebreak: str = "lex"
    block: int | None = None

    def __post_init__(self) -> None:
        if self.final_tiebreak not in ("lex", "revlex"):
            raise ValueError("final_tiebreak must be 'lex' or 'revlex'")
        object.__setattr__(self, "weight_rows", tuple(tuple(r) for r in self.weight_rows))

    def key(self, e: Exponent) -> tuple:
        w = tuple(sum(a * b for a, b in zip(row, e)) for row in self.weight_rows)
        if self.final_tiebreak == "lex":
            return w + e
        return w + tuple(-x for x in reversed(e))

    @classmethod
    def lex(cls) -> TermOrder:
        return cls()

    @classmethod
    def grevlex(cls, nvars: int) -> TermOrder:
        return cls(((1,) * nvars,), "revlex")

    @classmethod
    def elimination(cls, nvars: int, block: int) -> TermOrder:
        """First ``block`` variables dominate the rest; lex tie-break."""
        row = (1,) * block + (0,) * (nvars - block)
        return cls((row,), "lex", block)


@dataclass(frozen=True, eq=False)
class RingPoly:
    terms: Mapping[Exponent, Fraction]
    nvars: int

    def __post_init__(self) -> None:
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} does not have {self.nvars} entries")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent {e}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def monomial(cls, e: Sequence[int], coeff=1) -> RingPoly:
        return cls({tuple(e): Fraction(coeff)}, len(e))

    @classmethod
    def constant(cls, c, nvars: int) -> RingPoly:
        return cls({(0,) * nvars: Fraction(c)}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> RingPoly:
        return cls.monomial(tuple(int(j == i) for j in range(nvars)))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RingPoly.constant(other, self.nvars)
        return isinstance(other, RingPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: RingPoly | int | Fraction) -> RingPoly:
        if not isinstance(other, RingPoly):
            other = RingPoly.constant(other, self.nvars)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return RingPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> RingPoly:
        return RingPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: RingPoly | int | Fraction) -> RingPoly:
        if not isinstance(other, RingPoly):
            other = RingPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> RingPoly:
        return (-self) + other

    def __mul__(self, other: RingPoly | int | Fraction) -> RingPoly:
        if not isinstance(other, RingPoly):
            return RingPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return RingPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RingPoly:
        out = RingPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def leading_monomial(self, order: TermOrder) -> Exponent:
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: TermOrder) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: TermOrder) -> RingPoly:
        return self * (1 / self.leading_coefficient(order))

    def substitute(self, images: Sequence[Exponent], target_nvars: int) -> dict[Exponent, Fraction]:
        """Apply the monomial map y_i -> x^{images[i]}; returns raw terms (may cancel)."""
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            x = tuple(sum(k * img[j] for k, img in zip(e, images)) for j in range(target_nvars))
            out[x] = out.get(x, 0) + c
        return {x: c for x, c in out.items() if c}

    def __str__(self) -> str:
        return format_terms(sorted(self.terms.items(), reverse=True), [f"y{i + 1}" for i in range(self.nvars)])

    __repr__ = __str__


def format_terms(terms: Iterable[tuple[Exponent, Fraction]], names: Sequence[str]) -> str:
    parts = []
    for e, c in terms:
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


# --- fraction-free internals ---------------------------------------------------

def _content(p: dict[Exponent, int]) -> int:
    return reduce(gcd, p.values(), 0)


def _primitive_int(p: dict[Exponent, int], lead_sign: int = 1) -> dict[Exponent, int]:
    g = _content(p)
    if g > 1 or lead_sign < 0:
        g = g * lead_sign
        return {e: c // g for e, c in p.items()}
    return p


def _to_int_poly(f: RingPoly) -> dict[Exponent, int]:
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in f.terms.values()), 1)
    return _primitive_int({e: int(c * den) for e, c in f.terms.items()})


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Engine:
    """State for one Buchberger run: cached order keys and integer polynomials."""

    def __init__(self, order: TermOrder):
        self.order = order
        self._keys: dict[Exponent, tuple] = {}

    def key(self, e: Exponent) -> tuple:
        k = self._keys.get(e)
        if k is None:
            k = self.order.key(e)
            self._keys[e] = k
        return k

    def lm(self, p: dict[Exponent, int]) -> Exponent:
        return max(p, key=self.key)

    def reduce(self, f: dict[Exponent, int], basis: list[tuple[Exponent, dict[Exponent, int]]],
               full: bool = True) -> dict[Exponent, int]:
        """Integer normal form of f (up to a positive... rational scalar) modulo basis."""
        f = dict(f)
        rem: dict[Exponent, int] = {}
        key = self.key
        while f:
            m = max(f, key=key)
            c = f[m]
            for lm_g, g in basis:
                if _divides(lm_g, m):
                    a = g[lm_g]
                    q = tuple(x - y for x, y in zip(m, lm_g))
                    h = gcd(a, c)
                    fa, fc = a // h, c // h
                    if fa != 1:
                        f = {e: v * fa for e, v in f.items()}
                        rem = {e: v * fa for e, v in rem.items()}
                    for e, v in g.items():
                        e2 = tuple(x + y for x, y in zip(e, q))
                        nv = f.get(e2, 0) - fc * v
                        if nv:
                            f[e2] = nv
                        else:
                            f.pop(e2, None)
                    if fa != 1:
                        g2 = reduce(gcd, f.values(), _content(rem))
                        if g2 > 1:
                            f = {e: v // g2 for e, v in f.items()}
                            rem = {e: v // g2 for e, v in rem.items()}
                    break
            else:
                if not full:
                    rem.update(f)
                    return rem
                rem[m] = c
                del f[m]
        return rem


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f: dict, lf: Exponent, g: dict, lg: Exponent) -> dict[Exponent, int]:
    L = _lcm(lf, lg)
    cf, cg = f[lf], g[lg]
    h = gcd(cf, cg)
    mf, mg = cg // h, cf // h
    qf = tuple(x - y for x, y in zip(L, lf))
    qg = tuple(x - y for x, y in zip(L, lg))
    out: dict[Exponent, int] = {}
    for e, v in f.items():
        e2 = tuple(x + y for x, y in zip(e, qf))
        out[e2] = out.get(e2, 0) + mf * v
    for e, v in g.items():
        e2 = tuple(x + y for x, y in zip(e, qg))
        out[e2] = out.get(e2, 0) - mg * v
    return {e: v for e, v in out.items() if v}


def buchberger_reduced(gens: Iterable[RingPoly], order: TermOrder) -> list[RingPoly]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are picked by the normal strategy (smallest lcm under ``order``,
    then pair index); the coprime and Gebauer-Moeller chain criteria prune
    pairs.  The result is monic, auto-reduced and sorted by ascending leading
    monomial.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    nvars = gens[0].nvars
    eng = _Engine(order)

    polys: list[dict[Exponent, int]] = []
    leads: list[Exponent] = []
    G: list[int] = []
    pairs: list[tuple[int, int]] = []

    def update(h: int) -> None:
        nonlocal G, pairs
        lh = leads[h]
        cands = list(G)
        keep = []
        for idx, g in enumerate(cands):
            lg = leads[g]
            L = _lcm(lh, lg)
            if all(a == 0 or b == 0 for a, b in zip(lh, lg)):
                keep.append((g, True))
                continue
            redundant = any(
                _divides(_lcm(lh, leads[g2]), L)
                for g2 in cands[idx + 1:]
            ) or any(
                _divides(_lcm(lh, leads[g2]), L) for g2, _ in keep
            )
            if not redundant:
                keep.append((g, False))
        new_pairs = [(g, h) for g, coprime in keep if not coprime]
        kept_old = []
        for a, b in pairs:
            L = _lcm(leads[a], leads[b])
            if (_divides(lh, L) and _lcm(leads[a], lh) != L and _lcm(lh, leads[b]) != L):
                continue
            kept_old.append((a, b))
        pairs = kept_old + new_pairs
        G = [g for g in G if not _divides(lh, leads[g])] + [h]

    def add(p: dict[Exponent, int]) -> None:
        lm = eng.lm(p)
        if p[lm] < 0:
            p = {e: -v for e, v in p.items()}
        polys.append(p)
        leads.append(lm)
        update(len(polys) - 1)

    # divisors tried smallest leading monomial first
    basis_view = lambda: sorted(((leads[g], polys[g]) for g in G), key=lambda t: eng.key(t[0]))  # noqa: E731

    # interreduce the input one by one so G stays minimal
    for f in sorted((_to_int_poly(g) for g in gens), key=lambda p: eng.key(eng.lm(p))):
        r = eng.reduce(f, basis_view())
        if r:
            add(_primitive_int(r))

    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda i: (eng.key(_lcm(leads[pairs[i][0]], leads[pairs[i][1]])), pairs[i]),
        )
        a, b = pairs.pop(best)
        s = _spoly(polys[a], leads[a], polys[b], leads[b])
        if not s:
            continue
        r = eng.reduce(s, basis_view())
        if r:
            add(_primitive_int(r))

    # auto-reduce over Q: G is minimal, so leading terms survive tail reduction
    qpolys = {g: {e: Fraction(v, polys[g][leads[g]]) for e, v in polys[g].items()} for g in G}
    final = []
    for g in G:
        others = [(leads[h], qpolys[h]) for h in G if h != g]
        lm = leads[g]
        tail = {e: v for e, v in qpolys[g].items() if e != lm}
        out = _normal_form_q(tail, others, eng)
        out[lm] = Fraction(1)
        final.append(RingPoly(out, nvars))
    if any(not any(leads[g]) for g in G):
        return [RingPoly.constant(1, nvars)]
    final.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return final


def _normal_form_q(f: Mapping[Exponent, Fraction], basis, eng: _Engine) -> dict[Exponent, Fraction]:
    f = dict(f)
    rem: dict[Exponent, Fraction] = {}
    key = eng.key
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm_g, g in basis:
            if _divides(lm_g, m):
                q = tuple(x - y for x, y in zip(m, lm_g))
                factor = c / g[lm_g]
                for e, v in g.items():
                    e2 = tuple(x + y for x, y in zip(e, q))
                    nv = f.get(e2, 0) - factor * v
                    if nv:
                        f[e2] = nv
                    else:
                        f.pop(e2, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def normal_form(f: RingPoly, basis: Sequence[RingPoly], order: TermOrder) -> RingPoly:
    """Remainder of f on division by a Groebner basis; zero iff f is in the ideal."""
    eng = _Engine(order)
    b = [(g.leading_monomial(order), dict(g.terms)) for g in basis if g]
    return RingPoly(_normal_form_q(f.terms, b, eng), f.nvars)


def is_groebner_basis(basis: Sequence[RingPoly], order: TermOrder) -> bool:
    """Every S-polynomial reduces to zero."""
    b = [g for g in basis if g]
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            li, lj = b[i].leading_monomial(order), b[j].leading_monomial(order)
            L = _lcm(li, lj)
            s = (b[i] * RingPoly.monomial(tuple(x - y for x, y in zip(L, li)), 1 / b[i].terms[li])
                 - b[j] * RingPoly.monomial(tuple(x - y for x, y in zip(L, lj)), 1 / b[j].terms[lj]))
            if normal_form(s, b, order):
                return False
    return True


@lru_cache(maxsize=256)
def _toric_ideal_cached(generators: tuple[Exponent, ...]) -> tuple[RingPoly, ...]:
    s, d = len(generators), len(generators[0])
    n = d + s
    gens = []
    for i, a in enumerate(generators):
        y = (0,) * d + tuple(int(j == i) for j in range(s))
        gens.append(RingPoly({y: Fraction(1), tuple(a) + (0,) * s: Fraction(-1)}, n))
    gb = buchberger_reduced(gens, TermOrder.elimination(n, d))
    out = []
    for g in gb:
        if all(not any(e[:d]) for e in g.terms):
            out.append(RingPoly({e[d:]: c for e, c in g.terms.items()}, s))
    lex = TermOrder.lex()
    out.sort(key=lambda p: lex.key(p.leading_monomial(lex)))
    return tuple(out)


def toric_ideal(generators: Sequence[Sequence[int]]) -> list[RingPoly]:
    """Reduced lex Groebner basis of the kernel of y_i -> x^{a_i}."""
    return list(_toric_ideal_cached(tuple(tuple(int(x) for x in a) for a in generators)))


def image_under(f: RingPoly, generators: Sequence[Sequence[int]]) -> dict[Exponent, Fraction]:
    """Terms of f after substituting y_i -> x^{a_i}."""
    return f.substitute([tuple(a) for a in generators], len(generators[0]))


OrderKey = Callable[[Exponent], tuple]

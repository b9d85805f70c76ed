"""The affine semigroup A = Z_{>=0}(a_1, ..., a_s) inside N^d."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Sequence

from .polyhedral import Cone, IntVector


class NotInSemigroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SemigroupPresentation:
    """Generators a_1, ..., a_s of an affine semigroup in N^d.

    Generator order is kept as given: it fixes the variable order y_1, ..., y_s
    of the lifted polynomial ring.  ``edge_count`` is the number of generators
    that are primitive points on extreme rays of the cone they span.
    """

    generators: tuple[IntVector, ...]
    _memo: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self) -> None:
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a semigroup presentation needs at least one generator")
        d = len(gens[0])
        for g in gens:
            if len(g) != d:
                raise ValueError(f"generator {g} has the wrong dimension (expected {d})")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative entry; normalize to the orthant first")
            if not any(g):
                raise ValueError("the zero vector cannot be a generator")
        if len(set(gens)) != len(gens):
            raise ValueError("generators must be pairwise distinct")

    @classmethod
    def sorted(cls, generators: Sequence[Sequence[int]]) -> SemigroupPresentation:
        return cls(tuple(sorted(tuple(g) for g in generators)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SemigroupPresentation) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @property
    def ambient_dim(self) -> int:
        return len(self.generators[0])

    @property
    def size(self) -> int:
        return len(self.generators)

    @property
    def edge_generators(self) -> tuple[IntVector, ...]:
        rays = set(Cone.from_rays(self.generators).rays)
        return tuple(g for g in self.generators if g in rays)

    @property
    def edge_count(self) -> int:
        return len(self.edge_generators)

    def image(self, lam: Sequence[int]) -> IntVector:
        """sum lam_i a_i."""
        return tuple(sum(l * g[k] for l, g in zip(lam, self.generators)) for k in range(self.ambient_dim))


def member(u: Sequence[int], A: SemigroupPresentation) -> tuple[int, ...] | None:
    """Lexicographically smallest lambda >= 0 with sum lambda_i a_i = u, or None."""
    u = tuple(u)
    if len(u) != A.ambient_dim:
        raise ValueError(f"vector {u} does not have dimension {A.ambient_dim}")
    memo = A._memo
    hit = memo.get(u, memo)
    if hit is not memo:
        return hit
    lam = _search(u, 0, A.generators, {})
    with A._lock:
        memo[u] = lam
    return lam


def _search(r: IntVector, i: int, gens: tuple[IntVector, ...], seen: dict) -> tuple[int, ...] | None:
    if not any(r):
        return (0,) * (len(gens) - i)
    if i == len(gens):
        return None
    key = (r, i)
    if key in seen:
        return seen[key]
    g = gens[i]
    out = None
    c = 0
    while True:
        if any(x < 0 for x in r):
            break
        sub = _search(r, i + 1, gens, seen)
        if sub is not None:
            out = (c,) + sub
            break
        r = tuple(x - y for x, y in zip(r, g))
        c += 1
    seen[key] = out
    return out


def contains(u: Sequence[int], A: SemigroupPresentation) -> bool:
    return member(u, A) is not None


def divides(u: Sequence[int], v: Sequence[int], A: SemigroupPresentation) -> bool:
    """Does x^u divide x^v in k[A], i.e. is v - u in A?"""
    if not contains(u, A) or not contains(v, A):
        raise NotInSemigroupError("not a monomial of k[A]")
    diff = tuple(b - a for a, b in zip(u, v))
    if any(x < 0 for x in diff):
        return False
    return contains(diff, A)


def is_minimal_generating(A: SemigroupPresentation) -> bool:
    gens = A.generators
    for i, g in enumerate(gens):
        rest = SemigroupPresentation(gens[:i] + gens[i + 1:]) if len(gens) > 1 else None
        if rest is not None and contains(g, rest):
            return False
    return True

"""Exact rational polyhedral cones.

Every cone here is pointed and lives in Z^d.  Vectors are tuples of Python
ints; no floating point is ever used.  H-to-V conversion goes through the
double description method, with a lineality pre-pass so that the starting
cone can be the whole space.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]


class DegenerateConeError(ValueError):
    pass


# --- small exact linear algebra -------------------------------------------

def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Iterable[int]) -> IntVector:
    """Divide ``v`` by the gcd of its entries.  The zero vector is returned as is."""
    v = tuple(int(x) for x in v)
    g = reduce(gcd, v, 0)
    if g <= 1:
        return v
    return tuple(x // g for x in v)


def _rational_primitive(v: Sequence[Fraction]) -> IntVector:
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in v), 1)
    return primitive(int(Fraction(x) * den) for x in v)


def rref(rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(rref(rows, ncols)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVector]:
    """Canonical primitive integer basis of {x : row . x = 0 for all rows}."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(_rational_primitive(v))
    return basis


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    m = [list(map(int, r)) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _project_onto_span(v: IntVector, basis: Sequence[IntVector]) -> IntVector:
    """Orthogonal projection of ``v`` onto span(basis), scaled to a primitive integer vector."""
    k = len(basis)
    gram = [[Fraction(dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(dot(basis[i], v)) for i in range(k)]
    # solve gram . c = rhs by Gauss-Jordan on the augmented matrix
    aug = [gram[i] + [rhs[i]] for i in range(k)]
    for c in range(k):
        p = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    coeffs = [aug[i][k] for i in range(k)]
    proj = [sum(coeffs[i] * basis[i][j] for i in range(k)) for j in range(len(v))]
    return _rational_primitive(proj)


# --- double description ----------------------------------------------------

def double_description(
    inequalities: Sequence[Sequence[int]],
    equalities: Sequence[Sequence[int]],
    dim: int,
) -> tuple[list[IntVector], list[IntVector]]:
    """Generators of {x : e.x = 0, h.x >= 0}.

    Returns ``(lineality, rays)``: the cone is span(lineality) + cone(rays).
    The rays are the extreme rays modulo the lineality space.
    """
    constraints = [(tuple(e), True) for e in equalities] + [(tuple(h), False) for h in inequalities]
    lineality: list[IntVector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    # each ray carries the set of processed constraint indices it makes tight
    rays: list[tuple[IntVector, frozenset[int]]] = []
    processed: set[int] = set()

    for idx, (h, is_eq) in enumerate(constraints):
        if not any(h):
            processed.add(idx)
            continue
        pivot = next((l for l in lineality if dot(h, l) != 0), None)
        if pivot is not None:
            hp = dot(h, pivot)
            sgn = 1 if hp > 0 else -1
            lineality = [
                primitive(a * hp - b * dot(h, l) for a, b in zip(l, pivot))
                for l in lineality if l is not pivot
            ]
            lineality = [l for l in lineality if any(l)]
            rays = [
                (primitive(a * abs(hp) - b * sgn * dot(h, r) for a, b in zip(r, pivot)), z | {idx})
                for r, z in rays
            ]
            if not is_eq:
                rays.append((primitive(sgn * x for x in pivot), frozenset(processed)))
        else:
            pos, zero, neg = [], [], []
            for i, (r, z) in enumerate(rays):
                s = dot(h, r)
                (pos if s > 0 else neg if s < 0 else zero).append((i, s))
            new = [(rays[i][0], rays[i][1] | {idx}) for i, _ in zero]
            if not is_eq:
                new.extend(rays[i] for i, _ in pos)
            for i, sp in pos:
                p, zp = rays[i]
                for j, sn in neg:
                    n, zn = rays[j]
                    common = zp & zn
                    adjacent = not any(
                        k != i and k != j and common <= z for k, (_, z) in enumerate(rays))
                    if adjacent:
                        c = primitive(sp * b - sn * a for a, b in zip(p, n))
                        new.append((c, common | {idx}))
            rays = new
        processed.add(idx)

    uniq = sorted({r for r, _ in rays if any(r)})
    return lineality, uniq


# --- cones -------------------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """A pointed rational polyhedral cone in canonical form.

    ``inequalities`` h mean h.x >= 0 and ``equalities`` e mean e.x = 0.  Rays
    are primitive and sorted lexicographically; normals are primitive, sorted,
    and (for lower-dimensional cones) lie in the linear span of the cone.
    """

    rays: tuple[IntVector, ...]
    inequalities: tuple[IntVector, ...]
    equalities: tuple[IntVector, ...]
    ambient_dim: int

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence[int]], ambient_dim: int | None = None) -> Cone:
        gens = sorted({primitive(r) for r in rays if any(r)})
        if ambient_dim is None:
            if not gens:
                raise DegenerateConeError("degenerate cone")
            ambient_dim = len(gens[0])
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError(f"rays must have {ambient_dim} entries")
        equalities = nullspace(gens, ambient_dim) if gens else [
            tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim)]
        if not gens:
            return cls((), (), tuple(equalities), ambient_dim)
        lin, normals = double_description(gens, [], ambient_dim)
        # lin spans the orthogonal complement of the cone; canonical normals live in its span
        span = nullspace(lin, ambient_dim) if lin else [
            tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim)]
        if lin:
            normals = sorted({_project_onto_span(n, span) for n in normals})
        lin2, extreme = double_description(normals, equalities, ambient_dim)
        if lin2:
            raise DegenerateConeError("cone is not pointed")
        return cls(tuple(extreme), tuple(sorted(normals)), tuple(sorted(equalities)), ambient_dim)

    @classmethod
    def from_constraints(
        cls,
        equalities: Iterable[Sequence[int]],
        inequalities: Iterable[Sequence[int]],
        ambient_dim: int,
    ) -> Cone:
        eqs = [tuple(e) for e in equalities]
        ineqs = [tuple(h) for h in inequalities]
        for v in eqs + ineqs:
            if len(v) != ambient_dim:
                raise ValueError(f"constraint {v} must have {ambient_dim} entries")
        lin, rays = double_description(ineqs, eqs, ambient_dim)
        if lin:
            raise DegenerateConeError("cone is not pointed")
        return cls.from_rays(rays, ambient_dim)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equalities)

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equalities

    def contains(self, v: Sequence[int]) -> bool:
        return all(dot(e, v) == 0 for e in self.equalities) and all(
            dot(h, v) >= 0 for h in self.inequalities)

    def contains_strictly(self, v: Sequence[int]) -> bool:
        """True for points of the relative interior."""
        return all(dot(e, v) == 0 for e in self.equalities) and all(
            dot(h, v) > 0 for h in self.inequalities)

    def __str__(self) -> str:
        return "cone(" + ", ".join(str(r) for r in self.rays) + ")"


def cone(*rays: Sequence[int]) -> Cone:
    """Shorthand: ``cone((0, 1), (4, -3))``."""
    return Cone.from_rays(rays)


def orthant(d: int) -> Cone:
    return Cone.from_rays([tuple(int(i == j) for j in range(d)) for i in range(d)])


def dual_cone(c: Cone) -> Cone:
    """{u : u.v >= 0 for all v in c}."""
    if not c.rays:
        raise DegenerateConeError("degenerate cone")
    if not c.is_full_dimensional:
        raise DegenerateConeError("dual of a lower-dimensional cone is not pointed")
    return Cone.from_rays(c.inequalities, c.ambient_dim)


def is_smooth(c: Cone) -> bool:
    if len(c.rays) != c.ambient_dim:
        return False
    return abs(determinant(c.rays)) == 1


def facets(c: Cone) -> list[tuple[Cone, IntVector]]:
    """Facets of a full-dimensional cone with their primitive inward normals."""
    if not c.is_full_dimensional:
        raise DegenerateConeError("facets() needs a full-dimensional cone")
    out = []
    for h in c.inequalities:
        out.append((Cone.from_rays([r for r in c.rays if dot(h, r) == 0], c.ambient_dim), h))
    return out


def relative_interior_point(c: Cone) -> IntVector:
    if not c.rays:
        raise DegenerateConeError("degenerate cone")
    return primitive(map(sum, zip(*c.rays)))


def cone_from_constraints(
    eqs: Iterable[Sequence[int]],
    ineqs: Iterable[Sequence[int]],
    ambient: Cone,
) -> Cone:
    """Closed cone cut out of ``ambient`` by extra equalities and inequalities."""
    return Cone.from_constraints(
        list(ambient.equalities) + list(eqs),
        list(ambient.inequalities) + list(ineqs),
        ambient.ambient_dim,
    )


# --- Hilbert bases -----------------------------------------------------------

def _hilbert_basis_2d(r1: IntVector, r2: IntVector) -> list[IntVector]:
    # staircase along the boundary of conv(cone lattice points \ 0): consecutive
    # basis elements h, h' satisfy det(h, h') = 1
    if r1[0] * r2[1] - r1[1] * r2[0] < 0:
        r1, r2 = r2, r1
    out = [r1]
    h = r1
    while h != r2:
        # any v0 with det(h, v0) = 1, via extended Euclid on h
        a, b = h
        g, s, t = _ext_gcd(a, b)  # s*a + t*b = 1
        v0 = (-t, s)  # det(h, v0) = a*s + b*t = 1
        # points v0 + k h; inside the cone iff det(v, r2) >= 0
        num = -(v0[0] * r2[1] - v0[1] * r2[0])
        den = h[0] * r2[1] - h[1] * r2[0]
        k = -((-num) // den)  # ceil(num / den), den > 0
        h = (v0[0] + k * h[0], v0[1] + k * h[1])
        out.append(h)
    return sorted(out)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _hilbert_basis_sieve(c: Cone) -> list[IntVector]:
    # every Hilbert basis element lies in the zonotope sum [0,1] r_i; sieve its
    # bounding box in order of a positive grading
    d = c.ambient_dim
    lo = [sum(min(r[i], 0) for r in c.rays) for i in range(d)]
    hi = [sum(max(r[i], 0) for r in c.rays) for i in range(d)]
    grading = tuple(map(sum, zip(*c.inequalities)))
    cands = [
        p for p in product(*(range(lo[i], hi[i] + 1) for i in range(d)))
        if any(p) and c.contains(p)
    ]
    cands.sort(key=lambda p: (dot(grading, p), p))
    basis: list[IntVector] = []
    for p in cands:
        if not any(c.contains(tuple(x - y for x, y in zip(p, b))) for b in basis):
            basis.append(p)
    return sorted(basis)


def hilbert_basis(c: Cone) -> list[IntVector]:
    """Minimal generating set of the semigroup c ∩ Z^d, sorted."""
    if not c.is_full_dimensional or not c.rays:
        raise DegenerateConeError("hilbert_basis needs a full-dimensional strictly convex cone")
    if c.ambient_dim == 1:
        return list(c.rays)
    if c.ambient_dim == 2:
        return _hilbert_basis_2d(c.rays[0], c.rays[1])
    return _hilbert_basis_sieve(c)


# --- unimodular normalization ---------------------------------------------------

def _unimodular_completion(v: IntVector) -> list[list[int]]:
    """A unimodular integer matrix whose first row is the primitive vector ``v``."""
    d = len(v)
    vec = list(v)
    m_inv = [[int(i == j) for j in range(d)] for i in range(d)]

    def add_row(i: int, j: int, k: int) -> None:
        # row_i += k row_j on the reducing matrix, i.e. col_j -= k col_i on its inverse
        vec[i] += k * vec[j]
        for row in m_inv:
            row[j] -= k * row[i]

    def swap(i: int, j: int) -> None:
        vec[i], vec[j] = vec[j], vec[i]
        for row in m_inv:
            row[i], row[j] = row[j], row[i]

    while True:
        nz = [i for i in range(d) if vec[i] != 0]
        if len(nz) == 1:
            break
        i = min(nz, key=lambda k: (abs(vec[k]), k))
        for j in nz:
            if j != i:
                add_row(j, i, -(vec[j] // vec[i]))
    i = nz[0]
    if i != 0:
        swap(0, i)
    if vec[0] < 0:
        vec[0] = -vec[0]
        for row in m_inv:
            row[0] = -row[0]
    assert vec[0] == 1, "vector is not primitive"
    # m_inv has first column v; its transpose has first row v
    return [list(col) for col in zip(*m_inv)]


def normalize_to_orthant(gens: Sequence[Sequence[int]]) -> tuple[tuple[IntVector, ...], list[IntVector]]:
    """Find U in GL_d(Z) with U.g >= 0 for all generators.

    Returns ``(U, [U.g for g in gens])`` with U as a tuple of rows.
    """
    gens = [tuple(g) for g in gens]
    d = len(gens[0])
    identity = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    c = Cone.from_rays(gens, d)
    if not c.is_full_dimensional:
        raise DegenerateConeError("generators must span a full-dimensional strictly convex cone")
    if all(x >= 0 for g in gens for x in g):
        return identity, list(gens)
    w1 = relative_interior_point(dual_cone(c))
    rows = _unimodular_completion(w1)
    for i in range(1, d):
        shift = 0
        for g in gens:
            a, b = dot(rows[i], g), dot(w1, g)
            if a < 0:
                shift = max(shift, -(a // b))  # ceil(-a / b)
        rows[i] = [x + shift * y for x, y in zip(rows[i], w1)]
    u = tuple(tuple(r) for r in rows)
    return u, [tuple(dot(r, g) for r in u) for g in gens]


def transpose_apply(u: Sequence[Sequence[int]], w: Sequence[int]) -> IntVector:
    """U^T w, the weight-space companion of the exponent map u -> U u."""
    d = len(u)
    return tuple(sum(u[i][j] * w[i] for i in range(d)) for j in range(len(u[0])))

"""Brute-force reference implementations used only by the tests.

None of these share code with the package; they enumerate lattice points in
boxes and compare by definition.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def in_dual(u, rays):
    return all(dot(u, r) >= 0 for r in rays)


def det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def box(d, bound):
    return product(range(-bound, bound + 1), repeat=d)


def dual_points(rays, bound):
    d = len(rays[0])
    return [u for u in box(d, bound) if any(u) and in_dual(u, rays)]


def hilbert_basis_brute(rays, bound):
    """Irreducible nonzero lattice points of the dual of cone(rays) inside a box."""
    pts = dual_points(rays, bound)
    s = set(pts)
    out = []
    for u in pts:
        if not any(tuple(a - b for a, b in zip(u, v)) in s for v in pts if v != u):
            out.append(u)
    return sorted(out)


def member_brute(u, gens, limit=12):
    """Is u a non-negative integer combination of gens (coefficients <= limit)."""
    for lam in product(range(limit + 1), repeat=len(gens)):
        if all(sum(l * g[i] for l, g in zip(lam, gens)) == u[i] for i in range(len(u))):
            return True
    return False


def is_smooth_det(rays):
    """2D regularity: |det| of the primitive ray generators equals 1."""
    return abs(det2(rays[0], rays[1])) == 1


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def sweep_directions(r1, r2, count=720):
    """count integer directions strictly inside cone(r1, r2), ordered by angle."""
    return [tuple((count + 1 - k) * a + k * b for a, b in zip(r1, r2)) for k in range(1, count + 1)]


def weight_leading(terms, w):
    """Exponent of the (w, lex)-largest term."""
    return max(terms, key=lambda e: (dot(w, e), e))


def eval_poly(terms, point):
    """Exact evaluation of {exp: coeff} at a rational point."""
    total = Fraction(0)
    for e, c in terms.items():
        v = Fraction(c)
        for x, k in zip(point, e):
            v *= Fraction(x) ** k
        total += v
    return total


def in_power_of_unit_point(terms, n):
    """Membership of sum c_e x^e in m^{n+1}, m the ideal of (1, ..., 1).

    The point lies in the torus, so this is vanishing of every Taylor
    coefficient of order <= n there: sum_e c_e prod_i C(e_i, k_i) = 0.
    """
    if not terms:
        return True
    d = len(next(iter(terms)))
    for k in product(range(n + 1), repeat=d):
        if sum(k) > n:
            continue
        s = Fraction(0)
        for e, c in terms.items():
            t = Fraction(c)
            for ei, ki in zip(e, k):
                t *= comb(ei, ki)
            s += t
        if s:
            return False
    return True


def planar_closed_cone(normals, sigma_rays):
    """Extreme rays of {w in cone(sigma_rays) : h.w >= 0 for h in normals}, d = 2.

    Candidates are the rays of sigma and the two directions perpendicular to
    each normal; the survivors' angular extremes are the answer.
    """
    cands = set()
    for r in sigma_rays:
        cands.add(primitive(r))
    for h in normals:
        cands.add(primitive((-h[1], h[0])))
        cands.add(primitive((h[1], -h[0])))
    r1, r2 = sigma_rays
    if det2(r1, r2) < 0:
        r1, r2 = r2, r1

    def inside(v):
        return det2(r1, v) >= 0 and det2(v, r2) >= 0 and all(dot(h, v) >= 0 for h in normals)

    good = [v for v in cands if any(v) and inside(v)]
    lo = [v for v in good if all(det2(v, u) >= 0 for u in good)]
    hi = [v for v in good if all(det2(u, v) >= 0 for u in good)]
    return tuple(sorted({lo[0], hi[0]}))


def sweep_cones(gens, sigma_rays, basis_at, count=720):
    """Distinct closed cones met by an angular sweep of interior directions.

    basis_at(w) returns (elements, leading exponents) of the reduced basis
    for the order (w, lex).
    """
    out = set()
    for w in sweep_directions(sigma_rays[0], sigma_rays[1], count):
        elements, leads = basis_at(w)
        normals = {primitive(tuple(a - b for a, b in zip(lm, e)))
                   for g, lm in zip(elements, leads) for e in g.terms if e != lm}
        out.add(planar_closed_cone(sorted(normals), sigma_rays))
    return out

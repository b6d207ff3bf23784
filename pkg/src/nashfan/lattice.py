"""Exact 2-D lattice geometry: rational cones, duals, Hilbert bases, fans.

All vectors are plain ``(int, int)`` tuples; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Tuple

Vec = Tuple[int, int]


class NotFullDimensional(ValueError):
    """Feasible region of a cone construction has empty interior."""


def vadd(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def vsub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def vscale(k: int, a: Vec) -> Vec:
    return (k * a[0], k * a[1])


def vdot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1]


def cross(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def rot_ccw(a: Vec) -> Vec:
    return (-a[1], a[0])


def rot_cw(a: Vec) -> Vec:
    return (a[1], -a[0])


def primitive(v: Vec) -> Vec:
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class Cone2:
    """Strongly convex full-dimensional rational cone in R^2.

    Rays are stored primitive with det(ray1; ray2) > 0, so equality is
    syntactic and order of construction arguments does not matter.
    """

    ray1: Vec
    ray2: Vec

    def __post_init__(self):
        r1, r2 = primitive(self.ray1), primitive(self.ray2)
        d = cross(r1, r2)
        if d == 0:
            raise ValueError(f"rays {r1}, {r2} are linearly dependent")
        if d < 0:
            r1, r2 = r2, r1
        object.__setattr__(self, "ray1", r1)
        object.__setattr__(self, "ray2", r2)

    def to_json(self) -> dict:
        return {"rays": [list(self.ray1), list(self.ray2)]}

    @classmethod
    def from_json(cls, data: dict) -> "Cone2":
        r1, r2 = data["rays"]
        return cls(tuple(r1), tuple(r2))


def dual_cone(c: Cone2) -> Cone2:
    """The cone {u : u.v >= 0 for all v in c}."""
    return Cone2(rot_ccw(c.ray1), rot_cw(c.ray2))


def contains(c: Cone2, p: Vec) -> bool:
    """True iff p is a nonnegative combination of the rays of c."""
    return cross(p, c.ray2) >= 0 and cross(c.ray1, p) >= 0


def multiplicity(c: Cone2) -> int:
    """Index of the ray-generated sublattice; 1 iff the cone is regular."""
    return cross(c.ray1, c.ray2)


def hilbert_basis(c: Cone2) -> set:
    """Minimal generating set of c intersected with Z^2.

    Every irreducible element lies in the fundamental parallelogram of the
    primitive rays, so a box scan over that parallelogram is exhaustive.
    """
    d = cross(c.ray1, c.ray2)
    corners = [(0, 0), c.ray1, c.ray2, vadd(c.ray1, c.ray2)]
    xs = [p[0] for p in corners]
    ys = [p[1] for p in corners]
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if p == (0, 0):
                continue
            a, b = cross(p, c.ray2), cross(c.ray1, p)
            if 0 <= a <= d and 0 <= b <= d:
                pts.append(p)
    basis = set()
    for p in pts:
        reducible = any(
            q != p and vsub(p, q) != (0, 0) and contains(c, vsub(p, q))
            for q in pts
        )
        if not reducible:
            basis.add(p)
    return basis


def _angular_cmp(a: Vec, b: Vec) -> int:
    # valid as a total order only for rays inside a common salient cone
    return -cross(a, b)


def cone_from_inequalities(normals: Iterable[Vec], support: Cone2) -> Cone2:
    """Intersect the half-planes {w : w.n >= 0} with the support cone.

    Raises NotFullDimensional if the feasible set has empty interior.
    """
    ns = {primitive(n) for n in normals if n != (0, 0)}
    candidates = {support.ray1, support.ray2}
    for n in ns:
        candidates.add(primitive(rot_ccw(n)))
        candidates.add(primitive(rot_cw(n)))
    feasible = [
        c for c in candidates
        if contains(support, c) and all(vdot(c, n) >= 0 for n in ns)
    ]
    if len(feasible) < 2:
        raise NotFullDimensional(f"feasible region inside {support} is not 2-dimensional")
    feasible.sort(key=cmp_to_key(_angular_cmp))
    lo, hi = feasible[0], feasible[-1]
    if cross(lo, hi) <= 0:
        raise NotFullDimensional(f"feasible region inside {support} is not 2-dimensional")
    return Cone2(lo, hi)


@dataclass(frozen=True)
class Fan2:
    """A fan of full-dimensional cones tiling a support cone."""

    cones: tuple
    support: Cone2

    def to_json(self) -> dict:
        ordered = sorted(self.cones, key=cmp_to_key(lambda a, b: _angular_cmp(a.ray1, b.ray1)))
        return {"support": self.support.to_json(), "cones": [c.to_json() for c in ordered]}


def validate_fan(f: Fan2) -> bool:
    """True iff the cones tile the support face-to-face."""
    if not f.cones:
        return False
    cones = sorted(f.cones, key=cmp_to_key(lambda a, b: _angular_cmp(a.ray1, b.ray1)))
    if cones[0].ray1 != f.support.ray1 or cones[-1].ray2 != f.support.ray2:
        return False
    for a, b in zip(cones, cones[1:]):
        if a.ray2 != b.ray1:
            return False
    return all(
        contains(f.support, c.ray1) and contains(f.support, c.ray2)
        for c in cones
    )

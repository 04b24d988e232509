"""Points and lines of the Euclidean geometry EG(m, q).

Points are the elements of F_{q^m}, labelled by their field reps. The n =
q^m - 1 non-origin points carry coordinates: coordinate j is alpha^j.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from egqldpc.binmat import BinMatrix
from egqldpc.field import FieldTable, build_field, prime_power, subfield_elements


@dataclass(frozen=True)
class Line:
    points: tuple[int, ...]
    through_origin: bool

    @classmethod
    def of(cls, points) -> Line:
        pts = tuple(sorted(set(points)))
        return cls(pts, 0 in pts)

    def __contains__(self, point: int) -> bool:
        return point in self.points


@dataclass(frozen=True)
class CyclicClass:
    representative: Line
    orbit_size: int
    members: tuple[Line, ...]


@dataclass(frozen=True, eq=False)
class Geometry:
    m: int
    q: int
    field: FieldTable
    subfield: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.q**self.m - 1

    @property
    def point_count(self) -> int:
        return self.q**self.m

    @property
    def points(self) -> range:
        return range(self.point_count)

    @cached_property
    def lines(self) -> tuple[Line, ...]:
        return tuple(_all_lines(self))

    @cached_property
    def classes(self) -> tuple[CyclicClass, ...]:
        return tuple(_cyclic_classes(self))

    def coordinate(self, point: int) -> int:
        """Coordinate index j of the non-origin point alpha^j."""
        if point == 0:
            raise ValueError("the origin has no coordinate")
        return self.field.log[point]

    def scale(self, line: Line, power: int = 1) -> Line:
        """The line alpha^power * L."""
        a = self.field.alpha_pow(power)
        return Line.of(self.field.mul(a, x) for x in line.points)


def build_geometry(q: int, m: int) -> Geometry:
    if m < 1:
        raise ValueError("dimension m must be >= 1")
    p, s = prime_power(q)
    big = build_field(p, s * m)
    return Geometry(m, q, big, tuple(subfield_elements(big, q)))


def line_through(g: Geometry, a: int, b: int) -> Line:
    """The unique line {a + gamma (b - a) : gamma in F_q}."""
    if a == b:
        raise ValueError("a line needs two distinct points")
    f = g.field
    d = f.sub(b, a)
    return Line.of(f.add(a, f.mul(gamma, d)) for gamma in g.subfield)


def _all_lines(g: Geometry) -> list[Line]:
    f = g.field
    # each direction class {gamma d} has exactly one member with log < step
    step = g.n // (g.q - 1)
    lines = []
    for i in range(step):
        d = f.antilog[i]
        span = [f.mul(gamma, d) for gamma in g.subfield]
        covered = set()
        for a in g.points:
            if a in covered:
                continue
            line = Line.of(f.add(a, s) for s in span)
            covered.update(line.points)
            lines.append(line)
    lines.sort(key=lambda L: L.points)
    return lines


def enumerate_lines(g: Geometry, filter: str = "all", point: int | None = None) -> list[Line]:
    """Lines of EG(m, q): ``all``, ``not_origin`` or ``through_point``."""
    if filter == "all":
        return list(g.lines)
    if filter == "not_origin":
        return [L for L in g.lines if not L.through_origin]
    if filter == "through_point":
        if point is None or not 0 <= point < g.point_count:
            raise ValueError("through_point needs a valid point")
        return [L for L in g.lines if point in L]
    raise ValueError(f"unknown filter {filter!r}")


def incidence_vector(g: Geometry, line: Line) -> np.ndarray:
    if line.through_origin:
        raise ValueError("lines through the origin have no incidence vector")
    v = np.zeros(g.n, dtype=np.uint8)
    for x in line.points:
        v[g.coordinate(x)] = 1
    return v


def _lex_key(v: np.ndarray) -> tuple[int, ...]:
    return tuple(int(b) for b in v)


def _cyclic_classes(g: Geometry) -> list[CyclicClass]:
    remaining = set(enumerate_lines(g, "not_origin"))
    classes = []
    while remaining:
        start = min(remaining, key=lambda L: L.points)
        orbit = [start]
        nxt = g.scale(start)
        while nxt != start:
            orbit.append(nxt)
            nxt = g.scale(nxt)
        remaining.difference_update(orbit)
        rep = min(orbit, key=lambda L: _lex_key(incidence_vector(g, L)))
        if len(orbit) < g.n:
            warnings.warn(
                f"EG({g.m},{g.q}): cyclic class of {rep.points} has short orbit {len(orbit)} < {g.n}",
                stacklevel=3,
            )
        classes.append(CyclicClass(rep, len(orbit), tuple(orbit)))
    classes.sort(key=lambda c: _lex_key(incidence_vector(g, c.representative)))
    return classes


def cyclic_classes(g: Geometry) -> list[CyclicClass]:
    """Orbits of the non-origin lines under multiplication by alpha.

    Classes are ordered by their representatives, which are the lexicographically
    smallest incidence vectors of each orbit.
    """
    return list(g.classes)


def full_incidence_matrix(g: Geometry) -> BinMatrix:
    """Line-by-point incidence over every line and every point, origin included."""
    dense = np.zeros((len(g.lines), g.point_count), dtype=np.uint8)
    for i, line in enumerate(g.lines):
        dense[i, list(line.points)] = 1
    return BinMatrix.from_dense(dense)

"""Weight expansion of rational concave toric domains.

A domain is the region under a convex, nonincreasing, piecewise-linear
function f on [0, a] with f(0) = b and f(a) = 0.  Its weight expansion is
built by carving off the largest triangle {x + y <= w}, mapping the two
leftover pieces back to the same shape by integral shears, and recursing.
All arithmetic here is exact (Fraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .capacity import CapacitySequence, union_capacities
from .errors import ConsistencyError, DomainError, ResourceError, UsageError

DEFAULT_MAX_DEPTH = 64

Point = tuple  # (Fraction, Fraction)


def _frac(v) -> Fraction:
    if isinstance(v, float):
        # floats enter only through explicit rounding in callers
        raise DomainError(f"exact coordinates required, got float {v!r}")
    return Fraction(v)


@dataclass(frozen=True)
class ConcaveDomain:
    vertices: tuple

    def __post_init__(self):
        pts = tuple((_frac(x), _frac(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", pts)
        if len(pts) < 2:
            raise DomainError("a domain needs at least two vertices")
        (x0, b), (a, yn) = pts[0], pts[-1]
        if x0 != 0 or yn != 0:
            raise DomainError("boundary must run from (0, b) to (a, 0)")
        if b <= 0 or a <= 0:
            raise DomainError("need a > 0 and b > 0")
        prev = None
        for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
            if x2 <= x1:
                raise DomainError("vertex x-coordinates must strictly increase")
            if y1 < 0 or y2 < 0:
                raise DomainError("coordinates must be nonnegative")
            s = (y2 - y1) / (x2 - x1)
            if s > 0:
                raise DomainError("boundary must be nonincreasing")
            if prev is not None and s < prev:
                raise DomainError("boundary must be convex (slopes nondecreasing)")
            prev = s

    @classmethod
    def parse(cls, text: str) -> "ConcaveDomain":
        """Parse ``"0,2;1,1;3,0"``; coordinates may be fractions like ``1/3``."""
        try:
            pts = []
            for chunk in text.strip().split(";"):
                xs, ys = chunk.split(",")
                pts.append((Fraction(xs.strip()), Fraction(ys.strip())))
        except ValueError as exc:
            raise UsageError(f"cannot parse vertex list {text!r}: {exc}") from None
        return cls(tuple(pts))

    @classmethod
    def ellipsoid(cls, a, b) -> "ConcaveDomain":
        return cls(((0, b), (a, 0)))

    @property
    def a(self) -> Fraction:
        return self.vertices[-1][0]

    @property
    def b(self) -> Fraction:
        return self.vertices[0][1]

    def scaled(self, r) -> "ConcaveDomain":
        r = Fraction(r)
        return ConcaveDomain(tuple((r * x, r * y) for x, y in self.vertices))

    def __str__(self):
        return ";".join(f"{x},{y}" for x, y in self.vertices)


@dataclass(frozen=True)
class PortionWeight:
    index: str
    value: Fraction


def domain_area(d: ConcaveDomain) -> Fraction:
    pts = d.vertices
    return sum(((x2 - x1) * (y1 + y2) / 2 for (x1, y1), (x2, y2) in zip(pts, pts[1:])), Fraction(0))


def first_triangle(d: ConcaveDomain) -> tuple[Fraction, Point]:
    """Largest w with {x, y >= 0, x + y <= w} inside the domain, and a vertex
    where the line x + y = w touches the boundary (smallest x on ties)."""
    best = None
    for x, y in d.vertices:
        if best is None or x + y < best[0]:
            best = (x + y, (x, y))
    return best


def _normalize(points: Sequence[Point]) -> ConcaveDomain | None:
    """Turn a sheared boundary chain back into a domain, or None if it has no area."""
    pts = list(points)
    # a slope -1 run out of the tangent vertex collapses onto the y-axis
    while len(pts) >= 2 and pts[1][0] == 0:
        pts.pop(0)
    while len(pts) >= 2 and pts[-2][1] == 0:
        pts.pop()
    if len(pts) < 2 or pts[0][1] == 0 or pts[-1][0] == 0:
        return None
    # drop collinear interior vertices
    out = [pts[0]]
    for p, q in zip(pts[1:], pts[2:]):
        o = out[-1]
        if (p[0] - o[0]) * (q[1] - o[1]) != (p[1] - o[1]) * (q[0] - o[0]):
            out.append(p)
    out.append(pts[-1])
    return ConcaveDomain(tuple(out))


def split_portions(d: ConcaveDomain, a, t: Point):
    """The two pieces of ``d`` left after removing the triangle x + y <= a.

    upper: the part with x <= t_x, sheared by (x, y) -> (x, x + y - a).
    lower: the part with x >= t_x, sheared by (x, y) -> (x + y - a, y).
    Both shears are in SL(2, Z), so areas are preserved.  Empty pieces are None.
    """
    a = Fraction(a)
    t = (Fraction(t[0]), Fraction(t[1]))
    if t not in d.vertices or t[0] + t[1] != a:
        raise UsageError("(a, t) is not a tangent triangle of this domain")
    if any(x + y < a for x, y in d.vertices):
        raise UsageError(f"triangle of size {a} does not fit in the domain")
    upper = [(x, x + y - a) for x, y in d.vertices if x <= t[0]]
    lower = [(x + y - a, y) for x, y in d.vertices if x >= t[0]]
    return _normalize(upper), _normalize(lower)


def weight_expansion(d: ConcaveDomain, max_depth: int = DEFAULT_MAX_DEPTH) -> list[PortionWeight]:
    """Labelled weights of ``d``; the root triangle is ``"1"``, the upper piece
    of a portion appends ``"1"`` and the lower piece appends ``"0"``."""
    out = []
    stack = [("1", d)]
    while stack:
        idx, dom = stack.pop()
        if len(idx) > max_depth:
            raise ResourceError(f"weight expansion exceeded depth {max_depth}")
        a, t = first_triangle(dom)
        out.append(PortionWeight(idx, a))
        upper, lower = split_portions(dom, a, t)
        rest = sum((domain_area(p) for p in (upper, lower) if p is not None), Fraction(0))
        if a * a / 2 + rest != domain_area(dom):
            raise ConsistencyError(f"area not conserved at portion {idx}")
        if lower is not None:
            stack.append((idx + "0", lower))
        if upper is not None:
            stack.append((idx + "1", upper))
    out.sort(key=lambda p: (len(p.index), p.index))
    return out


def order_weights(weights: Iterable) -> list:
    """Weights from largest to smallest, each distinct value repeated by its
    multiplicity; zero weights (empty portions) are dropped.

    Accepts plain numbers or :class:`PortionWeight` items and returns the same kind.
    """
    val = lambda w: w.value if isinstance(w, PortionWeight) else w  # noqa: E731
    # sorted() is stable under reverse=True, so ties keep their input order
    return sorted((w for w in weights if val(w) != 0), key=val, reverse=True)


def ctd_capacities(d: ConcaveDomain, K: int, exact: bool = True) -> CapacitySequence:
    ws = [p.value for p in weight_expansion(d)]
    seq = union_capacities(order_weights(ws), K, exact=exact)
    return CapacitySequence(seq.values, "domain")

"""Stern-Brocot addressing, the slope tree of the Kepler domain, and the
energies at which each resonance slope first touches the domain.

Tree addresses are strings over ``{"0", "1"}`` starting with ``"1"``; the
root is ``"1"``, appending ``"1"`` moves right and ``"0"`` moves left.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Iterator, Union

from .errors import DomainError, UsageError

DEFAULT_DEPTH_CAP = 16

#: slope value of the root node; every other slope is a finite Fraction
INFINITY = math.inf

Slope = Union[Fraction, float]


def validate_index(index: str) -> str:
    if not isinstance(index, str) or not index:
        raise UsageError(f"invalid tree index {index!r}: must be a nonempty bit string")
    if index[0] != "1":
        raise UsageError(f"invalid tree index {index!r}: must start with '1'")
    if set(index) - {"0", "1"}:
        raise UsageError(f"invalid tree index {index!r}: only '0' and '1' allowed")
    return index


def indices(depth: int, cap: int = DEFAULT_DEPTH_CAP) -> Iterator[str]:
    """All addresses of length 1..depth, breadth first, left to right."""
    if depth < 1:
        raise UsageError("depth must be >= 1")
    if depth > cap:
        raise UsageError(f"depth {depth} exceeds cap {cap}")
    for n in range(depth):
        for tail in product("01", repeat=n):
            yield "1" + "".join(tail)


def sb_pair(index: str) -> tuple[int, int]:
    """(k, l) with k/l the Stern-Brocot node at ``index``, in lowest terms."""
    validate_index(index)
    lo_n, lo_d = 0, 1
    hi_n, hi_d = 1, 0
    k, l = 1, 1
    for bit in index[1:]:
        if bit == "1":
            lo_n, lo_d = k, l
        else:
            hi_n, hi_d = k, l
        k, l = lo_n + hi_n, lo_d + hi_d
    return k, l


def sb_value(index: str) -> Fraction:
    k, l = sb_pair(index)
    return Fraction(k, l)


def new_tree_slope(index: str) -> Slope:
    """Slope (k+l)/(l-k) attached to ``index``; the root maps to infinity."""
    k, l = sb_pair(index)
    if k == l:
        return INFINITY
    return Fraction(k + l, l - k)


def format_slope(s: Slope) -> str:
    if s == INFINITY:
        return "inf"
    s = Fraction(s)
    return f"{s.numerator}/{s.denominator}"


def critical_energy(k: int, l: int) -> float:
    """Energy at which the torus T_{k,l} first appears: -(1/2 + l/k)(k/l)^(2/3)."""
    if k <= 0 or l <= 0:
        raise DomainError(f"critical_energy needs positive k, l (got {k}, {l})")
    return -(0.5 + l / k) * (k / l) ** (2.0 / 3.0)


def _negative_slope(slope) -> float:
    s = float(slope)
    if not s < 0:
        raise DomainError(f"slope must be negative (got {slope})")
    return s


def tangency_mu1(slope) -> float:
    """mu_1 where the boundary curve has the given slope: -1/(8 mu^3) = slope."""
    s = _negative_slope(slope)
    return (-1.0 / (8.0 * s)) ** (1.0 / 3.0)


def entry_energy(slope) -> float:
    """Energy at which the tangency point of ``slope`` reaches the line y = -x.

    For c at or above this value the tangency point lies inside the domain.
    """
    mu = tangency_mu1(slope)
    return -(16.0 * mu**3 + 1.0) / (8.0 * mu * mu)


def tree_nodes(depth: int) -> list[dict]:
    """Both trees side by side, as rows for the ``tree`` subcommand."""
    rows = []
    for idx in indices(depth):
        k, l = sb_pair(idx)
        rows.append({"index": idx, "sb": f"{k}/{l}", "slope": format_slope(new_tree_slope(idx))})
    return rows

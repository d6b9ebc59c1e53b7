"""ECH capacity sequences of balls, ellipsoids and disjoint unions of balls,
and the embedding obstructions read off from them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real
from typing import Iterable, Sequence

from . import _backend
from .errors import ConsistencyError, DomainError, ResourceError, UsageError

#: entries closer than this compare as equal in obstruction verdicts
COMPARE_TOL = 1e-9

PROVENANCES = ("ball", "ellipsoid", "union", "domain")

BRUTE_FORCE_MAX_BALLS = 6
BRUTE_FORCE_MAX_K = 15


@dataclass(frozen=True)
class CapacitySequence:
    """c_0 <= c_1 <= ... <= c_K with c_0 = 0, tagged with where it came from."""

    values: tuple
    provenance: str = "union"

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if self.provenance not in PROVENANCES:
            raise UsageError(f"unknown provenance {self.provenance!r}")
        if not vals:
            raise ConsistencyError("empty capacity sequence")
        if vals[0] != 0:
            raise ConsistencyError(f"c_0 must be 0, got {vals[0]}")
        for k in range(1, len(vals)):
            if vals[k] < vals[k - 1]:
                raise ConsistencyError(f"sequence decreases at k={k}: {vals[k - 1]} > {vals[k]}")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    @property
    def kmax(self) -> int:
        return len(self.values) - 1

    def scaled(self, r) -> "CapacitySequence":
        return CapacitySequence(tuple(r * v for v in self.values), self.provenance)


@dataclass(frozen=True)
class Verdict:
    """Result of comparing two capacity sequences entrywise.

    ``dominates`` is True when A_k <= B_k (+ tolerance) for every checked k.
    Otherwise ``first_violation`` is the smallest offending index.
    """

    dominates: bool
    first_violation: int | None
    checked_up_to: int
    lhs: float | None = None
    rhs: float | None = None
    note: str = field(default="")

    def to_dict(self) -> dict:
        d = {
            "status": "no-obstruction" if self.dominates else "obstructed",
            "checked_up_to": self.checked_up_to,
            "first_violation": self.first_violation,
        }
        if not self.dominates:
            d["lhs"] = self.lhs
            d["rhs"] = self.rhs
        if self.note:
            d["note"] = self.note
        return d


def _check_kmax(K):
    if not isinstance(K, int) or K < 0:
        raise UsageError(f"kmax must be a nonnegative integer (got {K!r})")


def _positive(name, x):
    if not isinstance(x, Real) or not x > 0 or (isinstance(x, float) and not math.isfinite(x)):
        raise DomainError(f"{name} must be a positive finite number (got {x!r})")
    return x


def ball_capacity(a, k: int):
    """c_k(B(a)) = a*d where d is the unique integer with d^2+d <= 2k <= d^2+3d."""
    _positive("ball size", a)
    if not isinstance(k, int) or k < 0:
        raise UsageError(f"capacity index must be a nonnegative integer (got {k!r})")
    return a * _backend.python_kernels.ball_index(k)


def ball_sequence(a, K: int) -> CapacitySequence:
    _positive("ball size", a)
    _check_kmax(K)
    return CapacitySequence(_backend.python_kernels.ball_sequence(a, K), "ball")


def ellipsoid_sequence(a, b, K: int) -> CapacitySequence:
    """First K+1 terms of N(a, b): all m*a + n*b (m, n >= 0), sorted, with multiplicity.

    Exact when ``a`` and ``b`` are ints or Fractions.
    """
    _positive("ellipsoid axis a", a)
    _positive("ellipsoid axis b", b)
    _check_kmax(K)
    bound = max(a, b)
    while True:
        vals = []
        m = 0
        while m * a <= bound:
            base = m * a
            n = 0
            while base + n * b <= bound:
                vals.append(base + n * b)
                n += 1
            m += 1
        if len(vals) >= K + 1:
            vals.sort()
            return CapacitySequence(tuple(vals[: K + 1]), "ellipsoid")
        bound = 2 * bound


def _weights(weights: Iterable) -> list:
    ws = list(weights)
    if not ws:
        raise DomainError("weight list is empty")
    for w in ws:
        _positive("weight", w)
    return ws


def union_capacities(weights: Sequence, K: int, exact: bool = False) -> CapacitySequence:
    """Capacities of a disjoint union of balls by iterated max-plus convolution.

    With ``exact=True`` the weights keep their own numeric type (e.g. Fraction)
    and the pure-Python kernel is used; otherwise everything is float and the
    compiled kernel runs when available.
    """
    ws = _weights(weights)
    _check_kmax(K)
    if exact:
        kern = _backend.python_kernels
    else:
        kern = _backend.kernels
        ws = [float(w) for w in ws]
    if len(ws) > K:
        # at most K balls get a positive index, and larger balls dominate
        keep = sorted(range(len(ws)), key=lambda i: ws[i], reverse=True)[:K] if K else [0]
        ws = [ws[i] for i in sorted(keep)]
    acc = kern.ball_sequence(ws[0], K)
    for w in ws[1:]:
        acc = kern.maxplus_convolve(acc, kern.ball_sequence(w, K))
    return CapacitySequence(tuple(acc), "union")


def _compositions(k, n):
    if n == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, n - 1):
            yield (first,) + rest


def brute_force_union(weights: Sequence, K: int, max_balls: int = BRUTE_FORCE_MAX_BALLS,
                      max_k: int = BRUTE_FORCE_MAX_K) -> CapacitySequence:
    """Same quantity as :func:`union_capacities`, by enumerating every
    composition k_1 + ... + k_n = k.  Exponential; guarded by ``max_balls``
    and ``max_k``."""
    ws = [float(w) for w in _weights(weights)]
    _check_kmax(K)
    if len(ws) > max_balls or K > max_k:
        raise ResourceError(f"brute force limited to {max_balls} balls and K <= {max_k}")
    ball = [[w * _backend.python_kernels.ball_index(k) for k in range(K + 1)] for w in ws]
    out = []
    for k in range(K + 1):
        best = None
        for comp in _compositions(k, len(ws)):
            total = ball[0][comp[0]]
            for i in range(1, len(ws)):
                total = total + ball[i][comp[i]]
            if best is None or total > best:
                best = total
        out.append(best)
    return CapacitySequence(tuple(out), "union")


def sequence_dominates(A, B, tol: float = COMPARE_TOL) -> Verdict:
    """Whether A_k <= B_k for all k, as an embedding-obstruction report."""
    a, b = list(A), list(B)
    if len(a) != len(b):
        raise UsageError(f"sequence lengths differ ({len(a)} vs {len(b)})")
    for k, (x, y) in enumerate(zip(a, b)):
        if x > y + tol:
            return Verdict(False, k, len(a) - 1, float(x), float(y))
    return Verdict(True, None, len(a) - 1)


def embed_ellipsoid_check(a, b, a2, b2, K: int) -> Verdict:
    """Compare N(a,b) against N(a2,b2) up to index K.

    An interior embedding E(a,b) -> E(a2,b2) exists iff every term is
    dominated; a finite K can only certify the obstruction, never its absence.
    """
    for name, x in (("a", a), ("b", b), ("a2", a2), ("b2", b2)):
        _positive(f"ellipsoid axis {name}", x)
    if not isinstance(K, int) or K < 1:
        raise UsageError("kmax must be >= 1")
    v = sequence_dominates(ellipsoid_sequence(a, b, K), ellipsoid_sequence(a2, b2, K))
    if v.dominates:
        note = f"no obstruction up to k={K}; sufficiency only holds in the limit of all k"
    else:
        note = f"embedding obstructed at k={v.first_violation}"
    return Verdict(v.dominates, v.first_violation, K, v.lhs, v.rhs, note)

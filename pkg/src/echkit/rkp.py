"""The rotating Kepler problem's special concave toric domain.

In momentum coordinates (mu1, mu2) the domain at energy c <= -3/2 is bounded
by the lines mu2 = mu1, mu2 = -mu1 and the curve mu2 = 1/(16 mu1^2) + c/2.
The curve meets the diagonal at r1 and the anti-diagonal at r2.  This module
evaluates the closed-form weights W1..W5 of that domain, its areas, and a
polygonal approximation that can be fed to :mod:`echkit.ctd` as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import tree
from .capacity import CapacitySequence, union_capacities
from .ctd import ConcaveDomain, order_weights, weight_expansion
from .errors import ConsistencyError, DomainError

CRITICAL_ENERGY = -1.5
SQRT2 = math.sqrt(2.0)
ROOT_RESIDUAL_TOL = 1e-10

# slopes of the portions carrying W2..W5 (tree addresses 11, 111, 110, 1100)
SLOPE_W2 = -3
SLOPE_W3 = -2
SLOPE_W4 = -5
SLOPE_W5 = -7

WEIGHT_LABELS = ("W1", "W2", "W3", "W4", "W5")
PORTIONS = {"W1": "1", "W2": "11", "W3": "111", "W4": "110", "W5": "1100"}

DEFAULT_SAMPLES = 512
DEFAULT_MAX_DENOMINATOR = 10**6


def check_energy(c) -> float:
    c = float(c)
    if not math.isfinite(c) or c > CRITICAL_ENERGY:
        raise DomainError(f"energy must satisfy c <= -3/2 (got {c})")
    return c


def curve_mu2(mu1, c) -> float:
    if not mu1 > 0:
        raise DomainError(f"mu1 must be positive (got {mu1})")
    return 1.0 / (16.0 * mu1 * mu1) + c / 2.0


@dataclass(frozen=True)
class RkpRoots:
    r1: float
    r2: float
    r3: float


def _r1_trig(c):
    arg = 1.0 + 27.0 / (4.0 * c**3)
    arg = max(-1.0, min(1.0, arg))
    return (c / 3.0) * math.cos(math.acos(arg) / 3.0 + 2.0 * math.pi / 3.0) + c / 6.0


def _polish(r, c):
    # Newton on -16x^3 + 8cx^2 + 1; the trig branch loses digits near c = -3/2
    for _ in range(4):
        f = -16.0 * r**3 + 8.0 * c * r * r + 1.0
        df = -48.0 * r * r + 16.0 * c * r
        step = f / df
        r -= step
        if abs(step) <= 1e-17:
            break
    return r


def roots(c) -> RkpRoots:
    """r1 on the diagonal, and r2 <= r3 in closed form from r1.

    r2 is where the curve crosses mu2 = -mu1.
    """
    c = check_energy(c)
    r1 = _polish(_r1_trig(c), c)
    # 1 - 64 r1^3 factored to keep digits as r1 -> 1/4
    disc = (1.0 - 4.0 * r1) * (1.0 + 4.0 * r1 + 16.0 * r1 * r1)
    if disc < 0:
        if disc > -1e-15:
            disc = 0.0
        else:
            raise ConsistencyError(f"negative discriminant {disc} at c={c}")
    sq = math.sqrt(disc)
    r2 = (1.0 - sq) / (32.0 * r1 * r1)
    r3 = (1.0 + sq) / (32.0 * r1 * r1)
    res = -16.0 * r1**3 + 8.0 * c * r1 * r1 + 1.0
    if abs(res) > ROOT_RESIDUAL_TOL:
        raise ConsistencyError(f"root residual {res} at c={c}")
    return RkpRoots(r1, r2, r3)


def energy_from_r1(r1) -> float:
    if not 0 < r1 <= 0.25:
        raise DomainError(f"r1 must lie in (0, 1/4] (got {r1})")
    return (16.0 * r1**3 - 1.0) / (8.0 * r1 * r1)


def tangency_point(slope, c) -> tuple[float, float]:
    mu1 = tree.tangency_mu1(slope)
    return mu1, curve_mu2(mu1, c)


def antidiagonal_hit(slope, c) -> float:
    """mu1 where the tangent line of the given slope meets mu2 = -mu1."""
    s = -float(slope)
    mu1, mu2 = tangency_point(slope, c)
    return (mu2 + s * mu1) / (s - 1.0)


def diagonal_gap_hit(slope, c, r1) -> float:
    """mu2 where the tangent line of the given slope meets mu1 = r1."""
    mu1, mu2 = tangency_point(slope, c)
    return mu2 + float(slope) * (r1 - mu1)


@dataclass(frozen=True)
class RkpWeights:
    energy: float
    values: tuple
    cases: dict = field(default_factory=dict)

    def __getitem__(self, label):
        return self.values[WEIGHT_LABELS.index(label)]

    def as_dict(self) -> dict:
        return dict(zip(WEIGHT_LABELS, self.values))


def _present(slope, c, rts) -> bool:
    mu1 = tree.tangency_mu1(slope)
    return c >= tree.entry_energy(slope) and rts.r1 <= mu1 <= rts.r2


def evaluate_weights(c) -> RkpWeights:
    """W1..W5 at energy c, with the branch each one took.

    Every branch switch happens at the entry energy of that portion's slope.
    """
    c = check_energy(c)
    rts = roots(c)
    r1, r2 = rts.r1, rts.r2
    cases = {}

    w1 = SQRT2 * r1
    cases["W1"] = "diagonal"

    if c >= tree.entry_energy(SLOPE_W2):
        w2 = SQRT2 * (antidiagonal_hit(SLOPE_W2, c) - r1)
        cases["W2"] = "tangent"
    else:
        w2 = SQRT2 * (r2 - r1)
        cases["W2"] = "corner"

    if c >= tree.entry_energy(SLOPE_W3):
        w3 = SQRT2 * antidiagonal_hit(SLOPE_W3, c) - (w2 + w1)
        cases["W3"] = "tangent"
    elif c >= tree.entry_energy(SLOPE_W2):
        w3 = SQRT2 * r2 - w2 - w1
        cases["W3"] = "corner"
    else:
        w3 = 0.0
        cases["W3"] = "absent"

    if _present(SLOPE_W4, c, rts):
        w4 = (r1 + diagonal_gap_hit(SLOPE_W4, c, r1)) - w2
        cases["W4"] = "tangent"
    else:
        w4 = 0.0
        cases["W4"] = "absent"

    if _present(SLOPE_W5, c, rts):
        w5 = r1 + diagonal_gap_hit(SLOPE_W5, c, r1) - (w2 + w4)
        cases["W5"] = "tangent"
    else:
        w5 = 0.0
        cases["W5"] = "absent"

    return RkpWeights(c, (w1, w2, w3, w4, w5), cases)


def weight_w1(c) -> float:
    return SQRT2 * roots(c).r1


def weight_w2(c) -> float:
    return evaluate_weights(c)["W2"]


def weight_w3(c) -> float:
    return evaluate_weights(c)["W3"]


def weight_w4(c) -> float:
    return evaluate_weights(c)["W4"]


def weight_w5(c) -> float:
    return evaluate_weights(c)["W5"]


def weights_all(c) -> tuple[RkpWeights, list[tuple[str, float]]]:
    """All five weights and the nonzero ones as (label, value), largest first."""
    w = evaluate_weights(c)
    by_value = {}
    for label, v in zip(WEIGHT_LABELS, w.values):
        by_value.setdefault(v, []).append(label)
    ordered = []
    for v in order_weights(list(w.values)):
        ordered.append((by_value[v].pop(0), v))
    return w, ordered


def area_omega1(r1) -> float:
    if not r1 > 0:
        raise DomainError(f"r1 must be positive (got {r1})")
    return r1 * r1


def _r2_from_r1(r1):
    disc = max(0.0, (1.0 - 4.0 * r1) * (1.0 + 4.0 * r1 + 16.0 * r1 * r1))
    return (1.0 - math.sqrt(disc)) / (32.0 * r1 * r1)


def area_rest(r1, method: str = "closed") -> float:
    """Area between mu1 = r1, the curve and mu2 = -mu1.

    ``method="quad"`` integrates numerically instead of using the antiderivative.
    """
    c = energy_from_r1(r1)
    r2 = _r2_from_r1(r1)
    if method == "closed":
        def prim(m):
            return -1.0 / (16.0 * m) + c * m / 2.0 + m * m / 2.0

        return prim(r2) - prim(r1)
    if method == "quad":
        from scipy.integrate import quad

        val, _ = quad(lambda m: curve_mu2(m, c) + m, r1, r2, epsabs=1e-14, epsrel=1e-13)
        return val
    raise ValueError(f"unknown method {method!r}")


def ratio_F(r1) -> float:
    """Area of the remainder over the area of the first triangle; at most 1/2."""
    return area_rest(r1) / area_omega1(r1)


def total_area(c) -> float:
    r1 = roots(c).r1
    return area_omega1(r1) + area_rest(r1)


@dataclass(frozen=True)
class TorusPoint:
    slope: float
    mu1: float
    mu2: float
    present: bool


def torus_critical_point(slope, c) -> TorusPoint:
    """Tangency point of ``slope`` on the curve, and whether it lies in [r1, r2]."""
    c = check_energy(c)
    mu1, mu2 = tangency_point(slope, c)
    rts = roots(c)
    tol = 1e-12
    return TorusPoint(float(slope), mu1, mu2, rts.r1 - tol <= mu1 <= rts.r2 + tol)


def sctd_to_ctd(c, n: int = DEFAULT_SAMPLES, max_denominator: int = DEFAULT_MAX_DENOMINATOR) -> ConcaveDomain:
    """Polygon through n curve samples, rotated so the domain sits on the axes.

    (x, y) -> ((x - y)/sqrt2, (x + y)/sqrt2) sends mu2 = mu1 to the vertical
    axis and mu2 = -mu1 to the horizontal one.  Coordinates are rounded to
    rationals; the chords lie above the convex boundary, so the polygon
    slightly contains the true region.
    """
    c = check_energy(c)
    if n < 2:
        raise DomainError("need at least two samples")
    rts = roots(c)
    r1, r2 = rts.r1, rts.r2
    pts = []
    for i in range(n):
        x = r1 + (r2 - r1) * i / (n - 1)
        y = curve_mu2(x, c)
        u, v = (x - y) / SQRT2, (x + y) / SQRT2
        if i == 0:
            u = 0.0
        if i == n - 1:
            v = 0.0
        pts.append((Fraction(u).limit_denominator(max_denominator), Fraction(v).limit_denominator(max_denominator)))
    dedup = [pts[0]]
    for p in pts[1:]:
        if p[0] > dedup[-1][0]:
            dedup.append(p)
    try:
        return ConcaveDomain(tuple(dedup))
    except DomainError as exc:
        raise DomainError(f"discretization failed ({exc}); raise n or the denominator bound") from None


def oracle_weights(c, n: int = DEFAULT_SAMPLES, max_denominator: int = DEFAULT_MAX_DENOMINATOR,
                   max_depth: int = 10**7) -> list[float]:
    """Weights of the polygonal approximation, largest first (floats)."""
    d = sctd_to_ctd(c, n, max_denominator)
    return [float(p.value) for p in order_weights(weight_expansion(d, max_depth=max_depth))]


def rkp_capacities(c, K: int) -> CapacitySequence:
    _, ordered = weights_all(c)
    seq = union_capacities([v for _, v in ordered], K)
    return CapacitySequence(seq.values, "domain")


def area_diagnostic(c) -> dict:
    """Compare sum(W_i^2)/2 of the closed-form weights with the domain area.

    A genuine ball decomposition would make these equal; the report does not
    assume it.
    """
    w = evaluate_weights(c)
    ball_area = sum(v * v / 2.0 for v in w.values)
    area = total_area(c)
    return {"energy": w.energy, "sum_w2_half": ball_area, "domain_area": area, "excess": ball_area - area}


def threshold_jump(label: str, slope, eps: float = 1e-9) -> dict:
    """Size of the jump of a weight across the entry energy of ``slope``."""
    e = tree.entry_energy(slope)
    below = evaluate_weights(e - eps)[label]
    above = evaluate_weights(min(e + eps, CRITICAL_ENERGY))[label]
    return {"weight": label, "slope": float(slope), "energy": e, "below": below, "above": above,
            "jump": above - below}

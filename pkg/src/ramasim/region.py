"""Achievable-rate-region tracing and Pareto-frontier utilities."""

from dataclasses import dataclass

import numpy as np

from .channel import LinkBudget
from .rates import (
    RatePair,
    Scheme,
    noma_pair_ordered,
    oma_rate,
    rama1_rate,
    rama2_rate,
)


@dataclass(frozen=True)
class RateRegion:
    """Pareto frontier of one scheme's achievable (R1, R2) pairs."""

    scheme: Scheme
    frontier: tuple[RatePair, ...]
    grid_resolution: int

    def __post_init__(self):
        if not self.frontier:
            raise ValueError("frontier must be nonempty")
        r1s = [pt.r1 for pt in self.frontier]
        r2s = [pt.r2 for pt in self.frontier]
        if any(b <= a for a, b in zip(r1s, r1s[1:])):
            raise ValueError("frontier r1 values must be strictly increasing")
        if any(b > a for a, b in zip(r2s, r2s[1:])):
            raise ValueError("frontier r2 values must be nonincreasing")

    def r1_values(self) -> np.ndarray:
        return np.array([pt.r1 for pt in self.frontier])

    def r2_values(self) -> np.ndarray:
        return np.array([pt.r2 for pt in self.frontier])

    @property
    def max_r1(self) -> float:
        return self.frontier[-1].r1

    @property
    def max_r2(self) -> float:
        return self.frontier[0].r2


def _pareto_mask(r1: np.ndarray, r2: np.ndarray) -> np.ndarray:
    """Mask of points not dominated (>= in both coordinates, > in one).

    Exact duplicates do not dominate each other, so they all survive.
    """
    n = r1.size
    order = np.lexsort((-r2, -r1))  # r1 descending, r2 descending within ties
    s1 = r1[order]
    s2 = r2[order]
    new_group = np.empty(n, dtype=bool)
    new_group[0] = True
    np.not_equal(s1[1:], s1[:-1], out=new_group[1:])
    group_id = np.cumsum(new_group) - 1
    group_max = s2[new_group]  # first point of each r1 group has that group's max r2
    best_before = np.concatenate(([-np.inf], np.maximum.accumulate(group_max)[:-1]))
    keep = (s2 == group_max[group_id]) & (group_max[group_id] > best_before[group_id])
    mask = np.zeros(n, dtype=bool)
    mask[order[keep]] = True
    return mask


def pareto_filter(points) -> list[RatePair]:
    """Drop dominated rate pairs; survivors come back stably sorted by r1."""
    pts = list(points)
    if not pts:
        return []
    r1 = np.array([pt.r1 for pt in pts])
    r2 = np.array([pt.r2 for pt in pts])
    mask = _pareto_mask(r1, r2)
    survivors = [i for i in range(len(pts)) if mask[i]]
    survivors.sort(key=lambda i: pts[i].r1)  # stable: ties keep input order
    return [pts[i] for i in survivors]


def _frontier(scheme: Scheme, r1: np.ndarray, r2: np.ndarray, n: int) -> RateRegion:
    mask = _pareto_mask(r1, r2)
    f1 = r1[mask]
    f2 = r2[mask]
    order = np.argsort(f1, kind="stable")
    f1 = f1[order]
    f2 = f2[order]
    keep = np.empty(f1.size, dtype=bool)
    keep[0] = True
    np.not_equal(f1[1:], f1[:-1], out=keep[1:])  # collapse exact duplicates
    points = tuple(
        RatePair(float(a), float(b), scheme) for a, b in zip(f1[keep], f2[keep])
    )
    return RateRegion(scheme, points, n)


def trace_region(scheme, lb: LinkBudget, n: int = 1000) -> RateRegion:
    """Frontier from an n-point sweep of the scheme's allocation parameters.

    NOMA and RAMA-II sweep the power split p1/p over [0, 1] (endpoints
    included); OMA sweeps the (bandwidth share, power split) product grid
    and Pareto-filters it; RAMA-I has no free parameter and collapses to a
    single point. NOMA decoding order follows the stronger user.
    """
    scheme = Scheme(scheme)
    if n < 2:
        raise ValueError("grid resolution n must be >= 2")
    p, g1, g2 = lb.p, lb.gamma1, lb.gamma2
    t = np.linspace(0.0, 1.0, n)
    if scheme is Scheme.NOMA:
        r1, r2 = noma_pair_ordered(t * p, (1.0 - t) * p, g1, g2)
    elif scheme is Scheme.RAMA2:
        r1 = rama2_rate(t * p, g1)
        r2 = rama2_rate((1.0 - t) * p, g2)
    elif scheme is Scheme.RAMA1:
        r1 = np.array([float(rama1_rate(p, g1))])
        r2 = np.array([float(rama1_rate(p, g2))])
    elif scheme is Scheme.OMA:
        band, frac = np.meshgrid(t, t, indexing="ij")
        r1 = oma_rate(frac * p, g1, band).ravel()
        r2 = oma_rate((1.0 - frac) * p, g2, 1.0 - band).ravel()
    else:
        raise ValueError(f"region tracing is not defined for scheme {scheme.value!r}")
    return _frontier(scheme, np.atleast_1d(np.asarray(r1, dtype=float)),
                     np.atleast_1d(np.asarray(r2, dtype=float)), n)


def r2_at_r1(region: RateRegion, r1_target: float) -> float:
    """Frontier height at a target r1 by linear interpolation.

    Targets below the first frontier point fall back to the maximum r2
    (any rate below the frontier is achievable); targets beyond the
    frontier's reach are an error.
    """
    f1 = region.r1_values()
    f2 = region.r2_values()
    if r1_target < 0.0 or r1_target > f1[-1]:
        raise ValueError(
            f"r1_target {r1_target!r} outside the frontier range [0, {f1[-1]!r}]"
        )
    if r1_target <= f1[0]:
        return float(f2[0])
    return float(np.interp(r1_target, f1, f2))

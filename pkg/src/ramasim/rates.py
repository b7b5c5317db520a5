"""Closed-form achievable rates for every supported scheme.

Two layers. The bare formula helpers broadcast over numpy arrays and are
what the region and sweep grids evaluate; the scalar API wraps them with
the typed config objects and returns `RatePair`. Everything works in the
linear power domain; dB conversions stay at the edges (`from_db`).
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .channel import LinkBudget
from .transceiver import PowerAllocation


class Scheme(str, enum.Enum):
    NOMA = "noma"
    RECONFIG_NOMA = "reconfig-noma"
    RAMA1 = "rama1"
    RAMA2 = "rama2"
    OMA = "oma"


@dataclass(frozen=True)
class RatePair:
    """Per-user rates in bits/s/Hz for one scheme evaluation."""

    r1: float
    r2: float
    scheme: Scheme

    def __post_init__(self):
        for name, r in (("r1", self.r1), ("r2", self.r2)):
            if not (math.isfinite(r) and r >= 0.0):
                raise ValueError(f"{name} must be finite and nonnegative, got {r!r}")

    @property
    def sum_rate(self) -> float:
        return self.r1 + self.r2


# --- formula layer ---------------------------------------------------------
# Arguments are linear-domain powers and normalized gains; all helpers accept
# scalars or broadcastable numpy arrays.


def noma_strong_rate(p_self, g_self):
    """Interference-free rate after successive cancellation: log2(1 + p*g)."""
    return np.log2(1.0 + p_self * g_self)


def noma_weak_rate(p_strong, p_weak, g_weak):
    """Rate with the strong user's superposed signal treated as noise."""
    return np.log2(1.0 + p_weak * g_weak / (p_strong * g_weak + 1.0))


def reconfig_strong_rate(p_self, g_self, beam_share):
    return np.log2(1.0 + beam_share * p_self * g_self)


def reconfig_weak_rate(p_strong, p_weak, g_weak, beam_share):
    scaled = beam_share * g_weak
    return np.log2(1.0 + p_weak * scaled / (p_strong * scaled + 1.0))


def rama1_rate(p, g):
    """Interference-free rate under the fixed equal split: log2(1 + p*g/2)."""
    return np.log2(1.0 + 0.5 * p * g)


def rama2_rate(p_self, g_self):
    return np.log2(1.0 + p_self * g_self)


def oma_rate(p_self, g_self, bandwidth):
    """bandwidth * log2(1 + p*g/bandwidth); a zero share carries zero rate."""
    band = np.asarray(bandwidth, dtype=float)
    safe = np.where(band > 0.0, band, 1.0)
    return np.where(band > 0.0, band * np.log2(1.0 + p_self * g_self / safe), 0.0)


def noma_pair_ordered(p1, p2, g1, g2):
    """(R1, R2) with the SIC order set by channel quality, ties favor user 1."""
    strong1 = np.asarray(g1) >= np.asarray(g2)
    r1 = np.where(strong1, noma_strong_rate(p1, g1), noma_weak_rate(p2, p1, g1))
    r2 = np.where(strong1, noma_weak_rate(p1, p2, g2), noma_strong_rate(p2, g2))
    return r1, r2


def reconfig_pair_ordered(p1, p2, g1, g2, alpha):
    """Beam-divided NOMA pair; user 1 rides the alpha beam, user 2 the rest."""
    strong1 = np.asarray(g1) >= np.asarray(g2)
    a1, a2 = alpha, 1.0 - alpha
    r1 = np.where(
        strong1, reconfig_strong_rate(p1, g1, a1), reconfig_weak_rate(p2, p1, g1, a1)
    )
    r2 = np.where(
        strong1, reconfig_weak_rate(p1, p2, g2, a2), reconfig_strong_rate(p2, g2, a2)
    )
    return r1, r2


# --- scalar API ------------------------------------------------------------


def noma_rates(alloc: PowerAllocation, lb: LinkBudget) -> RatePair:
    """Superposition-coding rates in user-1-strong form.

    Callers are responsible for the decoding order: apply this only when
    gamma1 >= gamma2 (see `noma_pair_ordered` for the order-aware variant).
    """
    r1 = float(noma_strong_rate(alloc.p1, lb.gamma1))
    r2 = float(noma_weak_rate(alloc.p1, alloc.p2, lb.gamma2))
    return RatePair(r1, r2, Scheme.NOMA)


def reconfig_noma_rates(alloc: PowerAllocation, lb: LinkBudget, alpha: float) -> RatePair:
    """Superposition coding with the waveform split alpha/(1-alpha) across beams."""
    if not 0.0 < alpha < 1.0:
        raise ValueError("power-division factor alpha must lie strictly inside (0, 1)")
    r1 = float(reconfig_strong_rate(alloc.p1, lb.gamma1, alpha))
    r2 = float(reconfig_weak_rate(alloc.p1, alloc.p2, lb.gamma2, 1.0 - alpha))
    return RatePair(r1, r2, Scheme.RECONFIG_NOMA)


def rama1_rates(p: float, lb: LinkBudget) -> RatePair:
    """Both users interference-free at half the total power each."""
    return RatePair(
        float(rama1_rate(p, lb.gamma1)),
        float(rama1_rate(p, lb.gamma2)),
        Scheme.RAMA1,
    )


def rama2_rates(alloc: PowerAllocation, lb: LinkBudget) -> RatePair:
    """Both users interference-free at their allocated powers."""
    return RatePair(
        float(rama2_rate(alloc.p1, lb.gamma1)),
        float(rama2_rate(alloc.p2, lb.gamma2)),
        Scheme.RAMA2,
    )


def oma_rates(alloc: PowerAllocation, lb: LinkBudget, beta: float) -> RatePair:
    """Orthogonal baseline: user 1 gets bandwidth share beta, user 2 the rest."""
    if not 0.0 <= beta <= 1.0:
        raise ValueError("bandwidth share beta must lie in [0, 1]")
    r1 = float(oma_rate(alloc.p1, lb.gamma1, beta))
    r2 = float(oma_rate(alloc.p2, lb.gamma2, 1.0 - beta))
    return RatePair(r1, r2, Scheme.OMA)


def noma_sum_symmetric(p_gamma: float) -> float:
    """NOMA sum rate at equal per-user SNR; the split telescopes away."""
    if p_gamma < 0.0:
        raise ValueError("p_gamma must be nonnegative")
    return math.log2(1.0 + p_gamma)


def rama1_sum_symmetric(p_gamma: float) -> float:
    """Equal-split interference-free sum rate at equal per-user SNR."""
    if p_gamma < 0.0:
        raise ValueError("p_gamma must be nonnegative")
    return math.log2(1.0 + p_gamma + 0.25 * p_gamma * p_gamma)


def case2_holds(alloc: PowerAllocation, lb: LinkBudget) -> bool:
    """Exact asymmetric-channel dominance test for the equal-split chain.

    Compares the interference-free NOMA product bound against the equal
    split: (1 + p1*g1)(1 + p2*g2) <= (1 + p*g1/2)(1 + p*g2/2).
    """
    if lb.gamma1 < lb.gamma2:
        raise ValueError("asymmetric ordering violated: gamma1 >= gamma2 required")
    lhs = (1.0 + alloc.p1 * lb.gamma1) * (1.0 + alloc.p2 * lb.gamma2)
    rhs = (1.0 + 0.5 * alloc.p * lb.gamma1) * (1.0 + 0.5 * alloc.p * lb.gamma2)
    return lhs <= rhs


def case2_sufficient(alloc: PowerAllocation) -> bool:
    """Sufficient condition for `case2_holds`: at most half the power to user 1."""
    return alloc.p1 <= 0.5 * alloc.p

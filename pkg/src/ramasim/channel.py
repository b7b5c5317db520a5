"""Channel state, dB link budgets, and seeded Rayleigh fading.

Randomness contract: uniform draws come from numpy's PCG64 stream and
Gaussian draws from an explicit Box-Muller transform over those uniforms,
so a (algorithm, seed, call order) triple pins down every sample. The
algorithm identifier written into CSV metadata is `RNG_ALGORITHM`.
Parallel consumers must not share a stream; derive one per worker with
``RngState.derive(worker_index)`` (base seed + index, mod 2^64).
"""

import math
from dataclasses import dataclass

import numpy as np

RNG_ALGORITHM = "pcg64+box-muller"

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ChannelState:
    """Per-user complex gains and noise powers for one realization."""

    h1: complex
    h2: complex
    sigma1_sq: float
    sigma2_sq: float

    def __post_init__(self):
        if self.sigma1_sq <= 0.0 or self.sigma2_sq <= 0.0:
            raise ValueError("noise powers must be positive")

    @property
    def gamma1(self) -> float:
        """Normalized gain |h1|^2 / sigma1^2 of user 1."""
        return abs(self.h1) ** 2 / self.sigma1_sq

    @property
    def gamma2(self) -> float:
        return abs(self.h2) ** 2 / self.sigma2_sq


@dataclass(frozen=True)
class LinkBudget:
    """Total power plus normalized per-user gains.

    Rates depend only on the products p*gamma_i, so budgets built from dB
    levels normalize p to 1 and fold everything into the gains.
    """

    p: float
    gamma1: float
    gamma2: float

    def __post_init__(self):
        if not self.p > 0.0:
            raise ValueError("total power p must be positive")
        for name in ("gamma1", "gamma2"):
            g = getattr(self, name)
            if not (math.isfinite(g) and g >= 0.0):
                raise ValueError(f"{name} must be finite and nonnegative")

    @property
    def pg1(self) -> float:
        return self.p * self.gamma1

    @property
    def pg2(self) -> float:
        return self.p * self.gamma2

    def symmetric(self) -> bool:
        """True when the normalized gains agree to 1e-9 relative."""
        return math.isclose(self.gamma1, self.gamma2, rel_tol=1e-9, abs_tol=0.0)


def from_db(p_gamma1_db: float, p_gamma2_db: float) -> LinkBudget:
    """Budget from per-user p*|h|^2/sigma^2 levels given in dB."""
    return LinkBudget(1.0, 10.0 ** (p_gamma1_db / 10.0), 10.0 ** (p_gamma2_db / 10.0))


class RngState:
    """Deterministic random stream: PCG64 uniforms, Box-Muller gaussians."""

    def __init__(self, seed: int):
        self.seed = int(seed) % 2**64
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def derive(self, offset: int) -> "RngState":
        """Stream for a worker or grid index: (seed + offset) mod 2^64."""
        return RngState((self.seed + int(offset)) % 2**64)

    def uniform(self, size=None):
        """Uniform samples on [0, 1)."""
        return self._gen.random(size)

    def standard_normal(self, size: int) -> np.ndarray:
        """N(0, 1) samples via Box-Muller.

        Each uniform pair (u1, u2) yields the consecutive pair
        (r*cos(2*pi*u2), r*sin(2*pi*u2)) with r = sqrt(-2*ln(1 - u1)).
        """
        n = int(size)
        if n < 0:
            raise ValueError("size must be nonnegative")
        pairs = (n + 1) // 2
        u1 = 1.0 - self._gen.random(pairs)  # shift onto (0, 1] so the log stays finite
        u2 = self._gen.random(pairs)
        radius = np.sqrt(-2.0 * np.log(u1))
        z = np.empty(2 * pairs)
        z[0::2] = radius * np.cos(_TWO_PI * u2)
        z[1::2] = radius * np.sin(_TWO_PI * u2)
        return z[:n]


def rayleigh_fades(rng: RngState, mean_gain: float, size: int) -> np.ndarray:
    """Circularly-symmetric complex gains with E[|h|^2] = mean_gain."""
    if mean_gain <= 0.0:
        raise ValueError("mean_gain must be positive")
    z = rng.standard_normal(2 * int(size))
    scale = math.sqrt(mean_gain / 2.0)
    return scale * (z[0::2] + 1j * z[1::2])


def sample_rayleigh(
    rng: RngState, mean_gain1: float, mean_gain2: float, sigma_sq: float
) -> ChannelState:
    """One independent fading realization per user, equal noise power."""
    if sigma_sq <= 0.0:
        raise ValueError("sigma_sq must be positive")
    h1 = complex(rayleigh_fades(rng, mean_gain1, 1)[0])
    h2 = complex(rayleigh_fades(rng, mean_gain2, 1)[0])
    return ChannelState(h1, h2, float(sigma_sq), float(sigma_sq))


def order_users(ch: ChannelState) -> tuple[int, int]:
    """User indices as (strong, weak) by normalized gain; ties keep user 1 strong."""
    return (1, 2) if ch.gamma1 >= ch.gamma2 else (2, 1)

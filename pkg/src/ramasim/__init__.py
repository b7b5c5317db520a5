"""Two-user downlink multiple-access simulator.

Rate formulas, symbol-level transmit chains, achievable-rate-region
tracing, and sum-rate sweeps for five schemes: superposition-coded NOMA,
reconfigurable-antenna NOMA (power divided across two beams), RAMA-I
(partial CSI, equal split plus per-beam phase rotation), RAMA-II (full
CSI, per-user powers plus amplitude scaling), and an OFDMA baseline.
"""

__version__ = "0.1.0"

from .channel import (
    RNG_ALGORITHM,
    ChannelState,
    LinkBudget,
    RngState,
    from_db,
    order_users,
    rayleigh_fades,
    sample_rayleigh,
)
from .constellations import Constellation, SymbolRelation, make_psk, make_qam, relate
from .rates import (
    RatePair,
    Scheme,
    case2_holds,
    case2_sufficient,
    noma_rates,
    noma_sum_symmetric,
    oma_rates,
    rama1_rates,
    rama1_sum_symmetric,
    rama2_rates,
    reconfig_noma_rates,
)
from .region import RateRegion, pareto_filter, r2_at_r1, trace_region
from .sweep import (
    FadingConfig,
    SweepConfig,
    SweepResult,
    SweepRow,
    default_grid,
    run_sweep,
)
from .transceiver import (
    PowerAllocation,
    TxSignal,
    rama1_transmit,
    rama2_presplit,
    rama2_transmit,
    receive,
    reconfig_noma_split,
    superpose,
)

__all__ = [
    "RNG_ALGORITHM",
    "ChannelState",
    "Constellation",
    "FadingConfig",
    "LinkBudget",
    "PowerAllocation",
    "RatePair",
    "RateRegion",
    "RngState",
    "Scheme",
    "SweepConfig",
    "SweepResult",
    "SweepRow",
    "SymbolRelation",
    "TxSignal",
    "case2_holds",
    "case2_sufficient",
    "default_grid",
    "from_db",
    "make_psk",
    "make_qam",
    "noma_rates",
    "noma_sum_symmetric",
    "oma_rates",
    "order_users",
    "pareto_filter",
    "r2_at_r1",
    "rama1_rates",
    "rama1_sum_symmetric",
    "rama1_transmit",
    "rama2_presplit",
    "rama2_rates",
    "rama2_transmit",
    "rayleigh_fades",
    "receive",
    "reconfig_noma_rates",
    "reconfig_noma_split",
    "relate",
    "run_sweep",
    "sample_rayleigh",
    "superpose",
    "trace_region",
]

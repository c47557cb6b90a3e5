"""Exact stratification of the moduli of canonical threefolds on the Noether line."""

from .errors import (
    DTooSmall,
    EmptyModuli,
    IntegerOverflow,
    NoetherLineError,
    OutOfRange,
    PGTooSmall,
    RangeInvalid,
)
from .fibration import FibrationType, validate
from .moduli import (
    component_bounds,
    delta,
    delta_profile,
    moduli_dimension,
    moduli_summary,
    stratum_status,
)
from .oracle import verify_range

__version__ = "0.1.0"

"""Banded ladder Hamiltonians, exact weak-coupling perturbation series and
transition-strength distributions."""
from .exact import DEFAULT_ORDER_CAP, USeries, rat, series_eval, series_mul
from .model import ALLV, PENTA, TRI, ModelSpec, build_hamiltonian, split
from .rspt import (LeadingTerm, SeriesState, band_distances, path_leading,
                   rs_series, table4_row)
from .spectral import ConvergenceError, EigenSystem, decompose, ground_state
from .strength import (LeadingStrength, SeriesMode, StrengthRecord, TransitionKind,
                       ZeroStrengthError, fit_power, strength_numeric,
                       strength_profile, strength_series, table3)

__version__ = "0.1.0"

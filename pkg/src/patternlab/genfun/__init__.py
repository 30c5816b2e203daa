from .engine import FTEngine, default_engine, engine_key, ft_series
from .closed import (
    FAMILIES, UnsupportedClosedForm, decreasing_closed, family_closed,
    family_pattern, kiT1i_closed, kT1_closed, layered_closed,
)
from .occurrence import OccurrenceSpec, occurrence_corollary, occurrence_gf, solutions
from .contfrac import (
    CFSpec, avoid_decreasing_cf, cf_series, default_depth, fixed_points_cf,
    inversions_cf, lambda_cf, lrmax_cf, multivariate_tau_check, specialize,
    total_decreasing_cf,
)

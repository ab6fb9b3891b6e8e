"""Numerical toolkit for alpha-stationary surfaces of the Lorentz-Minkowski space."""

from .errors import *  # noqa: F401,F403
from .minkowski import CausalClass, ConeRegion, causal_class, cone_region, inversion, lorentz_cross, mink_dot
from .surface import Chart, SymbolicChart, PositionChart, fit_alpha, mean_curvature, stationarity_residual

__version__ = "0.1.0"

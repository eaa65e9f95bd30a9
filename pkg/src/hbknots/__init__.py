"""Knots in genus two handlebodies built from a pair of arc patterns on
3-punctured spheres, with mechanical checks of the combinatorics."""

from .construction import ConstructionParams, ParameterError, generate_pattern
from .pants import ArcLabel, GluedSurface, PantsPattern, trace_curves
from .twobridge import TwoBridgeFraction

__all__ = [
    "ArcLabel", "ConstructionParams", "GluedSurface", "PantsPattern", "ParameterError",
    "TwoBridgeFraction", "generate_pattern", "trace_curves",
]

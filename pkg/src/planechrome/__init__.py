"""Exact unit-distance graph checks for five-chromatic plane constructions."""

__version__ = "0.1.0"

from .field import FieldElement  # noqa: E402
from .geometry import Point, point_from_abcd  # noqa: E402
from .graphs import UnitDistanceGraph, catalog  # noqa: E402

__all__ = ["FieldElement", "Point", "point_from_abcd", "UnitDistanceGraph", "catalog", "__version__"]

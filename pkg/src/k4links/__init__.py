"""Exact enumeration of K4-minor-free links and link-diagrams."""

from .series import FixpointDivergence, SeriesError, TruncSeries

__all__ = ["TruncSeries", "SeriesError", "FixpointDivergence"]
__version__ = "0.1.0"

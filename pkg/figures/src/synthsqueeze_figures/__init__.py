"""Figure rendering for the synthsqueeze sweep CSVs."""

from .render import FIGURE_SCHEMAS, FigureSpec, SchemaError, build_figure, read_records, render

__version__ = "0.1.0"

__all__ = [
    "FIGURE_SCHEMAS",
    "FigureSpec",
    "SchemaError",
    "build_figure",
    "read_records",
    "render",
]

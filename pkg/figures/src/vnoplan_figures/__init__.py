"""Render the sweep sensitivity figure from a vnoplan CSV file."""

__version__ = "0.1.0"

from .render import SchemaError, read_sweep_csv, render_figure

__all__ = ["SchemaError", "read_sweep_csv", "render_figure", "__version__"]

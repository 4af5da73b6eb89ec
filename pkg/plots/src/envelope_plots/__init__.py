"""Figure rendering for envgft pipeline CSVs."""

from .render import render
from .schemas import KINDS, FigureJob, SchemaError, validate_header

__version__ = "0.1.0"

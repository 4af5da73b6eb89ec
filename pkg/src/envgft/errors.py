"""Exception types shared across the package."""


class EdgeListError(ValueError):
    """Malformed edge-list input (message carries the line number)."""


class MultiEdgeError(ValueError):
    """An added edge collides with an existing one and multi-edges are disabled."""


class InadmissibleError(ValueError):
    """An operation requiring an admissible digraph was given something else."""


class NumericalError(RuntimeError):
    """A numerical routine failed (non-convergence, singular result, ...)."""

"""hyplab: exact discrete hypergroups, weights, and operator-algebra diagnostics."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .measures import SparseMeasure, add, pushforward, scale, total_mass, weighted_mass

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "SparseMeasure",
    "total_mass",
    "weighted_mass",
    "scale",
    "add",
    "pushforward",
    "__version__",
]

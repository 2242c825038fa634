"""Exact computations on varieties of reductions Red(n) of gl_n."""
from .lie import LieSubspace
from .orbits4 import classify_orbit, representative

__all__ = ["LieSubspace", "classify_orbit", "representative", "__version__"]
__version__ = "0.1.0"

"""finslerlab: numerical curvature engine for Kropina-type Finsler metrics."""

from . import jets
from .jets import backend_name, set_backend

__version__ = "0.1.0"

__all__ = ["jets", "backend_name", "set_backend", "__version__"]

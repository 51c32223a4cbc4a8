"""Exact and sampled-numeric verification engine for q-deformed SU(2)
coherent-state identities on the quantum 2-sphere."""

__version__ = "0.1.0"

from .scalars import NumericConfig, RadicalScalar, Scalar, qint_scalar

__all__ = ["NumericConfig", "RadicalScalar", "Scalar", "qint_scalar", "__version__"]

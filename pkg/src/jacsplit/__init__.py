"""Hyperelliptic Jacobian splitting checks over finite fields."""

from .fields import FieldDesc, FieldElem, make_field
from .poly import Poly
from .tables import GuardExceeded

__version__ = "0.1.0"

__all__ = ["FieldDesc", "FieldElem", "GuardExceeded", "Poly", "make_field", "__version__"]

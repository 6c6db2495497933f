"""wsh: an exact-arithmetic workbench for a deformed W-algebra of
differential operators on symmetric functions, its shuffle realization,
and machine verification of its generators-and-relations presentation on
finite truncation windows.
"""

from ._poly import BACKEND as POLY_BACKEND
from .field import FieldElem, RationalFunctionField, SpecializedField

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "RationalFunctionField",
    "SpecializedField",
    "POLY_BACKEND",
]

"""Exact computations with smooth and rough modules over non-unital algebras."""

from __future__ import annotations

from .algebra import Algebra, AxiomError, Module
from .balanced import DescentError, balanced_hom, balanced_tensor
from .category import TypeMismatch
from .examples import NotDegenerate, PairingSpec, build_pairing_algebra, standard_corpus
from .linalg import Matrix
from .report import Report
from .smooth_rough import (
    NotSelfInduced, is_rough, is_smooth, multiplier_left, multiplier_right, roughen, smoothen,
    theorem_check,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra", "AxiomError", "DescentError", "Matrix", "Module", "NotDegenerate", "NotSelfInduced",
    "PairingSpec", "Report", "TypeMismatch", "balanced_hom", "balanced_tensor", "build_pairing_algebra",
    "is_rough", "is_smooth", "multiplier_left", "multiplier_right", "roughen", "smoothen",
    "standard_corpus", "theorem_check",
]

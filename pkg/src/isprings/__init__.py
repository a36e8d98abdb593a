"""Exhaustive factorization-property classifier for finite commutative rings."""

from .classify import PROPERTIES, Verdict, classify
from .ring import FiniteRing, make_zmod

__all__ = ["PROPERTIES", "Verdict", "classify", "FiniteRing", "make_zmod"]

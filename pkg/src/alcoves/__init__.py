"""Exact conjugacy computations in 2D and 3D affine Coxeter groups."""

from __future__ import annotations

from functools import lru_cache

from .conjugacy import (
    BoxedFamily,
    CosetFamily,
    CosetPart,
    MoveSet,
    centralizer,
    coconjugation_set,
    conjugacy_class,
    fix_lattice,
    mod_set,
    move_set,
    spherical_coconjugation,
    translation_compatible,
)
from .lattice import Sublattice
from .rootdata import TYPE_TAGS, RootDatum, root_datum
from .words import AffineElement, AffineWeylGroup, FiniteWeylElement, ParseError

__version__ = "1.0.0"


@lru_cache(maxsize=None)
def group(tag: str) -> AffineWeylGroup:
    """The affine Weyl group of one of the eight supported types."""
    return AffineWeylGroup(root_datum(tag))


__all__ = [
    "AffineElement",
    "AffineWeylGroup",
    "BoxedFamily",
    "CosetFamily",
    "CosetPart",
    "FiniteWeylElement",
    "MoveSet",
    "ParseError",
    "RootDatum",
    "Sublattice",
    "TYPE_TAGS",
    "centralizer",
    "coconjugation_set",
    "conjugacy_class",
    "fix_lattice",
    "group",
    "mod_set",
    "move_set",
    "root_datum",
    "spherical_coconjugation",
    "translation_compatible",
]

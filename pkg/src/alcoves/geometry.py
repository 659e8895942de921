"""Euclidean realization: alcove polytopes, tessellations, lattice marks.

Vertices stay exact rationals (in the ambient Bourbaki realization) until an
exporter converts them to floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattice import mat_vec, vec_add
from .rootdata import FracVec
from .words import AffineElement, AffineWeylGroup


@dataclass(frozen=True)
class Alcove:
    element: AffineElement
    vertices: tuple[FracVec, ...]
    barycenter: FracVec


@dataclass(frozen=True)
class Decorations:
    dots: tuple[FracVec, ...]
    arrows: tuple[tuple[FracVec, FracVec, str], ...]


def alcove_of(group: AffineWeylGroup, x: AffineElement) -> Alcove:
    """The alcove of x: the fundamental alcove mapped by p -> lam + w p."""
    group._check(x)
    datum = group.datum
    coroot_vertices = [
        vec_add(x.lam, mat_vec(x.w.matrix, v)) for v in datum.alcove_vertices_coroot
    ]
    vertices = tuple(datum.embed(v) for v in coroot_vertices)
    bary = datum.embed(vec_add(x.lam, mat_vec(x.w.matrix, datum.barycenter)))
    return Alcove(x, vertices, bary)


def box_vectors(rank: int, bound: int):
    """All integer vectors with max-norm <= bound, in lexicographic order."""
    axis = range(-bound, bound + 1)
    return itertools.product(*([axis] * rank))


def tessellation(group: AffineWeylGroup, bound: int) -> list[Alcove]:
    """Alcoves of every t^lam w with w in W0 and max_i |lam_i| <= bound."""
    if not 1 <= bound <= 15:
        raise ValueError(f"bound must be in 1..15, got {bound}")
    return [
        alcove_of(group, AffineElement(lam, w))
        for w in group.finite_elements()
        for lam in box_vectors(group.rank, bound)
    ]


def lattice_decorations(group: AffineWeylGroup, bound: int) -> Decorations:
    """Coroot-lattice dots plus the two coroot arrows; rank 2 only."""
    datum = group.datum
    if datum.rank != 2:
        raise ValueError("coroot-lattice decorations are drawn in dimension 2 only")
    dots = tuple(datum.embed(lam) for lam in box_vectors(2, bound))
    origin = datum.embed((0, 0))
    arrows = (
        (origin, datum.embed((1, 0)), "red"),
        (origin, datum.embed((0, 1)), "blue"),
    )
    return Decorations(dots, arrows)


def contains_point(group: AffineWeylGroup, alcove: Alcove, p_coroot) -> bool:
    """Exact closed-alcove membership of a coroot-coordinate point."""
    datum = group.datum
    inv = group.inverse(alcove.element)
    q = vec_add(inv.lam, mat_vec(inv.w.matrix, p_coroot))
    return all(
        datum.wall_pairing(i, q) >= 0 for i in range(datum.num_generators)
    )

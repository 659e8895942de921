"""Static exact data for the eight rank-2 and rank-3 affine Coxeter types.

Each type is backed by a versioned plain-text table in data/<tag>.json that
records the Coxeter matrix, Cartan pairings, a Bourbaki-style rational
Euclidean realization of the simple coroots, and one reflection record per
generator.  Everything else (reflection matrices, generator translations,
the alcove barycenter) is derived here, exactly.

All group computation happens in coroot coordinates, which are always
rational; the Euclidean realization only enters when a picture is exported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .lattice import (
    Mat,
    Vec,
    mat_identity,
    mat_outer,
    mat_sub,
    vec_dot,
    vec_scale,
    vec_sub,
)

TYPE_TAGS = ("A1xA1", "A2", "B2", "C2", "G2", "A3", "B3", "C3")

FracVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class Generator:
    """One generating reflection, as an affine map on coroot coordinates.

    The wall is {p : root_row . p == offset} (offset 1 for the affine wall,
    0 for a linear one) and the reflection is p -> p - (root_row . p - offset)
    * coroot.
    """

    root_row: Vec
    offset: int
    coroot: Vec
    matrix: Mat
    translation: Vec


@dataclass(frozen=True)
class RootDatum:
    tag: str
    rank: int
    ambient_dim: int
    coxeter_matrix: Mat          # 0 encodes an infinite order (A1xA1 only)
    cartan: Mat
    coroot_euclid: tuple[FracVec, ...]
    generators: tuple[Generator, ...]
    finite_generators: Vec       # indices of the generators fixing the origin
    alcove_vertices_coroot: tuple[FracVec, ...]
    barycenter: FracVec          # coroot coordinates, interior to the alcove
    version: int

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def highest_root_pairing(self) -> Vec:
        return self.generators[0].root_row

    @property
    def s0_translation(self) -> Vec:
        return self.generators[0].coroot

    @property
    def simple_reflection_matrices(self) -> tuple[Mat, ...]:
        return tuple(self.generators[i].matrix for i in self.finite_generators)

    def embed(self, p) -> FracVec:
        """Euclidean coordinates of a coroot-coordinate point."""
        out = [Fraction(0)] * self.ambient_dim
        for c, basis_vec in zip(p, self.coroot_euclid, strict=True):
            for k, e in enumerate(basis_vec):
                out[k] += c * e
        return tuple(out)

    @property
    def fundamental_alcove(self) -> tuple[FracVec, ...]:
        """Euclidean vertices of the fundamental alcove."""
        return tuple(self.embed(v) for v in self.alcove_vertices_coroot)

    def wall_pairing(self, i: int, p) -> Fraction:
        """Affine functional of wall i at a coroot-coordinate point.

        Positive exactly when p lies on the fundamental-alcove side.
        """
        g = self.generators[i]
        value = vec_dot(g.root_row, p)
        return (g.offset - value) if g.offset else value

    def reflect(self, i: int, p) -> tuple:
        """Apply generator i to a coroot-coordinate point."""
        g = self.generators[i]
        factor = vec_dot(g.root_row, p) - g.offset
        return vec_sub(p, vec_scale(factor, g.coroot))


def _frac_vec(entries) -> FracVec:
    return tuple(Fraction(e) for e in entries)


def _build_generator(record: dict, rank: int) -> Generator:
    row = tuple(int(x) for x in record["root_row"])
    offset = int(record["offset"])
    coroot = tuple(int(x) for x in record["coroot"])
    if vec_dot(row, coroot) != 2:
        raise ValueError("reflection record is ill-formed: <root, coroot> != 2")
    matrix = mat_sub(mat_identity(rank), mat_outer(coroot, row))
    translation = vec_scale(offset, coroot)
    return Generator(row, offset, coroot, matrix, translation)


@lru_cache(maxsize=None)
def root_datum(tag: str) -> RootDatum:
    """Load the exact datum for one of the eight supported type tags."""
    if tag not in TYPE_TAGS:
        raise ValueError(f"unknown type {tag!r}; expected one of {', '.join(TYPE_TAGS)}")
    raw = json.loads(resources.files("alcoves.data").joinpath(f"{tag}.json").read_text())
    rank = int(raw["rank"])
    generators = tuple(_build_generator(g, rank) for g in raw["generators"])
    finite = tuple(int(i) for i in raw["finite_generators"])
    cartan = tuple(tuple(int(x) for x in row) for row in raw["cartan"])
    for pos, i in enumerate(finite):
        if generators[i].root_row != cartan[pos]:
            raise ValueError(f"{tag}: generator {i} disagrees with Cartan row {pos}")
        if generators[i].offset != 0:
            raise ValueError(f"{tag}: finite generator {i} must fix the origin")
    vertices = tuple(_frac_vec(v) for v in raw["alcove_vertices"])
    barycenter = tuple(sum(col, Fraction(0)) / len(vertices) for col in zip(*vertices))
    coroot_euclid = tuple(_frac_vec(v) for v in raw["coroot_euclid"])
    return RootDatum(
        tag=tag,
        rank=rank,
        ambient_dim=len(coroot_euclid[0]),
        coxeter_matrix=tuple(tuple(int(x) for x in row) for row in raw["coxeter_matrix"]),
        cartan=cartan,
        coroot_euclid=coroot_euclid,
        generators=generators,
        finite_generators=finite,
        alcove_vertices_coroot=vertices,
        barycenter=barycenter,
        version=int(raw["version"]),
    )

"""Closed-form conjugacy classes, coconjugation sets and centralizers.

A conjugacy class of x = t^lam w is the union over u in W0 of the coset
families t^{u(lam + Mod(w))} u w u^{-1}, where the mod-set Mod(w) = (w-I)L
is spanned by the images of the simple coroots.  A coconjugation set from
x to x' is a disjoint union of translates of Fix(w') \\cap L, one for each
translation-compatible spherical conjugator u.  Everything below evaluates
these descriptions exactly and then truncates to a bounding box.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    Sublattice,
    Vec,
    contains,
    enumerate_coset_in_box,
    hnf,
    index_in,
    kernel_lattice,
    mat_identity,
    mat_mul,
    mat_sub,
    mat_transpose,
    mat_vec,
    reduce_mod,
    saturate,
    solve_integer,
    vec_sub,
)
from .words import AffineElement, AffineWeylGroup, FiniteWeylElement

MAX_BOUND = 15

CONJUGACY_CLASS = "conjugacy_class"
COCONJUGATION = "coconjugation"
CENTRALIZER = "centralizer"


@dataclass(frozen=True)
class CosetPart:
    """The translations base + lattice, attached to one spherical direction."""

    base: Vec
    lattice: Sublattice
    direction: FiniteWeylElement


@dataclass(frozen=True)
class CosetFamily:
    kind: str
    parts: tuple[CosetPart, ...]


@dataclass(frozen=True)
class BoxedFamily:
    """A coset family together with its members inside a bounding box."""

    family: CosetFamily
    bound: int
    elements: tuple[AffineElement, ...]


@dataclass(frozen=True)
class MoveSet:
    """base + span of range(w - I); the lattice is its integer saturation."""

    base: Vec
    lattice: Sublattice
    rank: int


def _check_bound(bound: int) -> int:
    if not 1 <= bound <= MAX_BOUND:
        raise ValueError(f"bound must be in 1..{MAX_BOUND}, got {bound}")
    return bound


def mod_set(group: AffineWeylGroup, w: FiniteWeylElement) -> Sublattice:
    """Mod(w) = (w - I)L, spanned by the columns (w - I) alpha_i^vee."""
    n = group.rank
    delta = mat_sub(w.matrix, mat_identity(n))
    return hnf(mat_transpose(delta), ambient=n)


def move_set(group: AffineWeylGroup, x: AffineElement) -> MoveSet:
    """Mov(x) = lam + Mov(w), carried by the integer points of Mov(w)."""
    lat = saturate(mod_set(group, x.w))
    return MoveSet(x.lam, lat, lat.rank)


def fix_lattice(group: AffineWeylGroup, w: FiniteWeylElement) -> Sublattice:
    """Fix(w) \\cap L = the integer kernel of w - I."""
    n = group.rank
    return kernel_lattice(mat_sub(w.matrix, mat_identity(n)), n)


def _sorted_elements(parts, bound: int) -> tuple[AffineElement, ...]:
    members = {
        AffineElement(lam, part.direction)
        for part in parts
        for lam in enumerate_coset_in_box(part.base, part.lattice, bound)
    }
    return tuple(sorted(members, key=lambda m: (m.w.id, m.lam)))


def conjugacy_class(group: AffineWeylGroup, x: AffineElement, bound: int) -> BoxedFamily:
    """The conjugacy class of x, truncated to the box max_i |lam_i| <= bound."""
    _check_bound(bound)
    group._check(x)
    base_mod = mod_set(group, x.w)
    parts: dict[tuple, CosetPart] = {}
    for u in group.finite_elements():
        lattice = hnf(
            [mat_vec(u.matrix, row) for row in base_mod.basis], ambient=group.rank
        )
        base = reduce_mod(lattice, mat_vec(u.matrix, x.lam))
        direction = group.weyl(
            mat_mul(mat_mul(u.matrix, x.w.matrix), group.weyl_inverse(u).matrix)
        )
        key = (direction.id, lattice.basis, base)
        parts.setdefault(key, CosetPart(base, lattice, direction))
    ordered = tuple(parts[k] for k in sorted(parts))
    family = CosetFamily(CONJUGACY_CLASS, ordered)
    return BoxedFamily(family, bound, _sorted_elements(ordered, bound))


def spherical_coconjugation(
    group: AffineWeylGroup, w: FiniteWeylElement, w2: FiniteWeylElement
) -> tuple[FiniteWeylElement, ...]:
    """All u in W0 with u w u^{-1} = w2 (direct search, |W0| <= 48)."""
    group._check_weyl(w), group._check_weyl(w2)
    return tuple(
        u
        for u in group.finite_elements()
        if mat_mul(u.matrix, w.matrix) == mat_mul(w2.matrix, u.matrix)
    )


def translation_compatible(
    group: AffineWeylGroup,
    lam: Vec,
    lam2: Vec,
    w: FiniteWeylElement,
    w2: FiniteWeylElement,
) -> tuple[FiniteWeylElement, ...]:
    """The u with u w u^{-1} = w2 whose lam2 - u lam lies in Mod(w2)."""
    target = mod_set(group, w2)
    return tuple(
        u
        for u in spherical_coconjugation(group, w, w2)
        if contains(target, vec_sub(lam2, mat_vec(u.matrix, lam)))
    )


def coconjugation_set(
    group: AffineWeylGroup, x: AffineElement, x2: AffineElement, bound: int, kind: str = COCONJUGATION
) -> BoxedFamily:
    """All z with z x z^{-1} = x2, truncated to |translation part| <= bound.

    For each translation-compatible u, the conjugators with direction u are
    t^{eta_u + Fix(w2) \\cap L} u where eta_u solves (I - w2) eta = lam2 - u lam;
    the right-hand side lies in Mod(w2) = (I - w2)L, so a solution exists.
    """
    _check_bound(bound)
    group._check(x), group._check(x2)
    n = group.rank
    fix = fix_lattice(group, x2.w)
    shape = mat_sub(mat_identity(n), x2.w.matrix)
    parts = []
    for u in translation_compatible(group, x.lam, x2.lam, x.w, x2.w):
        rhs = vec_sub(x2.lam, mat_vec(u.matrix, x.lam))
        eta = solve_integer(shape, rhs)
        assert eta is not None, "translation-compatible u must admit a solution"
        parts.append(CosetPart(reduce_mod(fix, eta), fix, u))
    assert len({p.direction.id for p in parts}) == len(parts), "directions must be disjoint"
    ordered = tuple(sorted(parts, key=lambda p: p.direction.id))
    family = CosetFamily(kind, ordered)
    elements = _sorted_elements(ordered, bound)
    for z in elements:
        assert group.conjugate(z, x) == x2
    return BoxedFamily(family, bound, elements)


def centralizer(group: AffineWeylGroup, x: AffineElement, bound: int) -> BoxedFamily:
    """Cent(x) = Coconj(x -> x)."""
    return coconjugation_set(group, x, x, bound, kind=CENTRALIZER)


def mod_move_index(group: AffineWeylGroup, w: FiniteWeylElement) -> int | float:
    """[Mov(w) \\cap L : Mod(w)]; finite for every w."""
    mod = mod_set(group, w)
    return index_in(mod, saturate(mod))

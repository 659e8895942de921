"""Exact integer linear algebra over the coroot lattice.

Everything here runs on Python's unbounded integers.  Sublattices are kept
in row Hermite normal form (positive pivots, entries above each pivot
reduced into [0, pivot)), which is canonical: two sublattices are equal
iff their basis matrices are identical tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


# ---------------------------------------------------------------------------
# small dense helpers (rank <= 3 throughout, entries exact)

def vec_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def vec_scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def vec_dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b, strict=True))


def mat_identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def mat_vec(m: Mat, v: Sequence) -> tuple:
    """Apply m to a column vector; v entries may be ints or Fractions."""
    return tuple(vec_dot(row, v) for row in m)


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(vec_sub(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def mat_outer(col: Sequence[int], row: Sequence[int]) -> Mat:
    return tuple(tuple(c * r for r in row) for c in col)


def mat_det(m: Mat) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    raise ValueError("determinant implemented for n <= 3 only")


def mat_inverse_unimodular(m: Mat) -> Mat:
    """Inverse of an integer matrix with determinant +-1 (adjugate method)."""
    n = len(m)
    d = mat_det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    if n == 1:
        return ((d,),)
    if n == 2:
        a, b = m[0]
        c, e = m[1]
        adj = ((e, -b), (-c, a))
    elif n == 3:
        def cof(i: int, j: int) -> int:
            rows = [r for k, r in enumerate(m) if k != i]
            minor = [[x for l, x in enumerate(r) if l != j] for r in rows]
            s = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
            return s if (i + j) % 2 == 0 else -s
        adj = tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))
    else:
        raise ValueError("inverse implemented for n <= 3 only")
    return tuple(tuple(x * d for x in row) for row in adj)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# Hermite normal form

def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF with its unimodular transform.

    Returns (H, U) with U * rows == H, U unimodular.  H is in row echelon
    form with positive pivots and entries above each pivot reduced into
    [0, pivot); its zero rows sit at the bottom.
    """
    m = len(rows)
    H = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    if m == 0:
        return H, U
    n = len(H[0])
    pivot = 0
    for col in range(n):
        nz = [i for i in range(pivot, m) if H[i][col] != 0]
        if not nz:
            continue
        i0 = nz[0]
        if i0 != pivot:
            H[pivot], H[i0] = H[i0], H[pivot]
            U[pivot], U[i0] = U[i0], U[pivot]
        for i in range(pivot + 1, m):
            if H[i][col] == 0:
                continue
            a, b = H[pivot][col], H[i][col]
            g, x, y = _xgcd(a, b)
            # unimodular 2x2 op: det(x*(a//g) - y*(-(b//g))) = (xa + yb)/g = 1
            pa, pb = a // g, b // g
            rp = [x * p + y * q for p, q in zip(H[pivot], H[i])]
            ri = [-pb * p + pa * q for p, q in zip(H[pivot], H[i])]
            H[pivot], H[i] = rp, ri
            up = [x * p + y * q for p, q in zip(U[pivot], U[i])]
            ui = [-pb * p + pa * q for p, q in zip(U[pivot], U[i])]
            U[pivot], U[i] = up, ui
        if H[pivot][col] < 0:
            H[pivot] = [-v for v in H[pivot]]
            U[pivot] = [-v for v in U[pivot]]
        p = H[pivot][col]
        for i in range(pivot):
            q = H[i][col] // p
            if q != 0:
                H[i] = [v - q * w for v, w in zip(H[i], H[pivot])]
                U[i] = [v - q * w for v, w in zip(U[i], U[pivot])]
        pivot += 1
        if pivot == m:
            break
    return H, U


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^ambient, basis rows in canonical row HNF.

    rank 0 (empty basis) encodes the zero lattice.
    """

    ambient: int
    basis: Mat

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @classmethod
    def zero(cls, ambient: int) -> "Sublattice":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Sublattice":
        return cls(ambient, mat_identity(ambient))


def hnf(rows: Iterable[Sequence[int]], ambient: Optional[int] = None) -> Sublattice:
    """Canonical HNF sublattice spanned by the given integer row vectors."""
    rows = [tuple(int(x) for x in r) for r in rows]
    if rows:
        ambient = len(rows[0])
        if any(len(r) != ambient for r in rows):
            raise ValueError("rows must share a common length")
    elif ambient is None:
        raise ValueError("ambient dimension required for an empty generating set")
    H, _ = hnf_with_transform(rows)
    basis = tuple(tuple(r) for r in H if any(r))
    return Sublattice(ambient, basis)


def coefficients_in_basis(lat: Sublattice, v: Sequence[int]) -> Optional[Vec]:
    """Integer coefficients expressing v over lat.basis, or None.

    Back-substitution on the triangular basis; works because every row's
    entries left of its pivot vanish.
    """
    if len(v) != lat.ambient:
        raise ValueError("vector length does not match the ambient rank")
    residual = [int(x) for x in v]
    coeffs = []
    for row in lat.basis:
        p = next(i for i, x in enumerate(row) if x != 0)
        if residual[p] % row[p] != 0:
            return None
        q = residual[p] // row[p]
        coeffs.append(q)
        if q != 0:
            residual = [a - q * b for a, b in zip(residual, row)]
    if any(residual):
        return None
    return tuple(coeffs)


def contains(lat: Sublattice, v: Sequence[int]) -> bool:
    """Whether v is an integer combination of the basis rows."""
    return coefficients_in_basis(lat, v) is not None


def left_kernel(rows: Sequence[Sequence[int]], ambient: int) -> Sublattice:
    """The full integer lattice {x : x * rows == 0}.

    `ambient` is len(rows); taken from the transform rows of the HNF, so the
    result is automatically saturated.
    """
    if not rows:
        return Sublattice.full(ambient)
    H, U = hnf_with_transform(rows)
    kernel_rows = [tuple(U[i]) for i in range(len(rows)) if not any(H[i])]
    return hnf(kernel_rows, ambient=ambient)


def kernel_lattice(m: Sequence[Sequence[int]], ambient: int) -> Sublattice:
    """The full integer lattice {v in Z^ambient : m @ v == 0}."""
    if not m:
        return Sublattice.full(ambient)
    if len(m[0]) != ambient:
        raise ValueError("matrix width does not match the ambient rank")
    return left_kernel(mat_transpose(tuple(tuple(r) for r in m)), ambient)


def solve_integer(m: Mat, rhs: Sequence[int]) -> Optional[Vec]:
    """Some integer solution of m @ x == rhs, or None when there is none."""
    rows = mat_transpose(m)              # solve x * m^T == rhs in row form
    n = len(rows)
    if n == 0:
        return () if not any(rhs) else None
    H, U = hnf_with_transform(rows)
    image = Sublattice(len(rhs), tuple(tuple(r) for r in H if any(r)))
    coeffs = coefficients_in_basis(image, rhs)
    if coeffs is None:
        return None
    x = [0] * n
    it = iter(coeffs)
    for i in range(n):
        if any(H[i]):
            c = next(it)
            if c != 0:
                x = [a + c * b for a, b in zip(x, U[i])]
    return tuple(x)


def index_in(sub: Sublattice, sup: Sublattice) -> int | float:
    """[sup : sub]; math.inf when sub has strictly smaller rank.

    Raises ValueError unless sub is contained in sup.
    """
    if sub.ambient != sup.ambient:
        raise ValueError("ambient ranks differ")
    change = []
    for row in sub.basis:
        coeffs = coefficients_in_basis(sup, row)
        if coeffs is None:
            raise ValueError("first lattice is not contained in the second")
    if sub.rank < sup.rank:
        return math.inf
    if sub.rank > sup.rank:
        raise ValueError("first lattice is not contained in the second")
    for row in sub.basis:
        change.append(coefficients_in_basis(sup, row))
    return abs(mat_det(tuple(change)))


def saturate(lat: Sublattice) -> Sublattice:
    """The lattice of all integer points of the rational span of lat.

    Computed as the kernel of the kernel: v lies in span_Q(basis) iff it is
    orthogonal to every integer vector annihilated by the basis.
    """
    if lat.is_zero:
        return lat
    perp = kernel_lattice(lat.basis, lat.ambient)
    return kernel_lattice(perp.basis, lat.ambient)


def reduce_mod(lat: Sublattice, v: Sequence[int]) -> Vec:
    """Canonical representative of v + lat (unique per coset).

    Pivot coordinates are reduced into [0, pivot); the reduction order makes
    the representative independent of the incoming v.
    """
    residual = [int(x) for x in v]
    for row in lat.basis:
        p = next(i for i, x in enumerate(row) if x != 0)
        q = residual[p] // row[p]
        if q != 0:
            residual = [a - q * b for a, b in zip(residual, row)]
    return tuple(residual)


def enumerate_coset_in_box(offset: Sequence[int], lat: Sublattice, bound: int) -> list[Vec]:
    """All v in offset + lat with max_i |v_i| <= bound, sorted lexicographically.

    Bounded triangular search: basis rows are processed in pivot order, and a
    row's pivot coordinate receives no further contributions from later rows,
    so each coefficient range is pinned exactly before recursing.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    offset = tuple(int(x) for x in offset)
    if len(offset) != lat.ambient:
        raise ValueError("offset length does not match the ambient rank")
    pivots = [next(i for i, x in enumerate(row) if x != 0) for row in lat.basis]
    out: list[Vec] = []

    def descend(depth: int, partial: tuple) -> None:
        if depth == len(lat.basis):
            if all(abs(c) <= bound for c in partial):
                out.append(partial)
            return
        row = lat.basis[depth]
        p = pivots[depth]
        t, step = partial[p], row[p]
        lo = math.ceil((-bound - t) / step)
        hi = math.floor((bound - t) / step)
        for c in range(lo, hi + 1):
            descend(depth + 1, vec_add(partial, vec_scale(c, row)))

    descend(0, offset)
    out.sort()
    return out

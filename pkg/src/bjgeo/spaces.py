"""Finite-dimensional normed spaces with exact polyhedral unit balls.

Four kinds are supported: sup norm (linf), taxicab norm (l1), the smooth
l_p family for 1 < p < infinity, and general polyhedral norms given by a
symmetric vertex or facet description of the unit ball.  All linf/l1/poly
arithmetic is exact over Fraction; l_p uses float64 under the tolerance
policy in :mod:`bjgeo.config`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    AsymmetricBall,
    BadExponent,
    DegenerateBall,
    DimensionMismatch,
    SingularOperator,
    UnsupportedSpace,
    ZeroVector,
)
from .linalg import (
    Coords,
    determinant,
    dot,
    float_vector,
    inverse_matrix,
    is_zero,
    rank,
    rat,
    rat_vector,
    solve_square,
)

LINF = "linf"
L1 = "l1"
LP = "lp"
POLY = "poly"

_RATIONAL_KINDS = (LINF, L1, POLY)


@dataclass(frozen=True)
class NormedSpace:
    """A normed space on R^dim.

    For the rational kinds both the vertex set and the irredundant facet
    set of the unit ball are materialized: ``norm(x) = max_f f(x)`` over
    `facets` and ``dual_norm(f) = max_v f(v)`` over `vertices`.  Facets
    are stored as dual-ball vertices, so both tuples are closed under
    negation and carry only extreme points.
    """

    kind: str
    dim: int
    p: Fraction | None = None
    vertices: tuple[Coords, ...] | None = None
    facets: tuple[Coords, ...] | None = None

    @property
    def rational(self) -> bool:
        return self.kind in _RATIONAL_KINDS

    def coerce_vector(self, values: Iterable) -> Coords:
        vec = rat_vector(values) if self.rational else float_vector(values)
        if len(vec) != self.dim:
            raise DimensionMismatch(f"expected dimension {self.dim}, got {len(vec)}")
        return vec


@dataclass(frozen=True)
class LinearOperator:
    """A matrix acting by rows: (T x)_i = sum_j rows[i][j] * x_j.

    The operator is kind-agnostic; operations that need norms receive the
    domain and codomain spaces explicitly.
    """

    rows: tuple[Coords, ...]

    @property
    def dim_out(self) -> int:
        return len(self.rows)

    @property
    def dim_in(self) -> int:
        return len(self.rows[0])

    def apply(self, x: Sequence) -> Coords:
        if len(x) != self.dim_in:
            raise DimensionMismatch(
                f"operator expects dimension {self.dim_in}, got {len(x)}")
        return tuple(dot(row, x) for row in self.rows)

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if other.dim_out != self.dim_in:
            raise DimensionMismatch("inner dimensions do not match")
        cols = list(zip(*other.rows))
        return LinearOperator(tuple(
            tuple(dot(row, col) for col in cols) for row in self.rows))

    def determinant(self) -> Fraction:
        if self.dim_in != self.dim_out:
            raise DimensionMismatch("determinant requires a square operator")
        return determinant(self.rows)

    def inverse(self) -> "LinearOperator":
        if self.dim_in != self.dim_out:
            raise DimensionMismatch("inverse requires a square operator")
        inv = inverse_matrix(self.rows)
        if inv is None:
            raise SingularOperator("operator has zero determinant")
        return LinearOperator(inv)

    def transpose_apply(self, f: Sequence) -> Coords:
        """Pullback of a functional: (T* f)(x) = f(T x)."""
        if len(f) != self.dim_out:
            raise DimensionMismatch(
                f"functional expects dimension {self.dim_out}, got {len(f)}")
        return tuple(dot(f, col) for col in zip(*self.rows))


def make_operator(rows: Sequence[Sequence], exact: bool = True) -> LinearOperator:
    conv = rat_vector if exact else float_vector
    mat = tuple(conv(row) for row in rows)
    if any(len(r) != len(mat[0]) for r in mat):
        raise DimensionMismatch("ragged operator rows")
    return LinearOperator(mat)


def _sign_patterns(dim: int) -> list[Coords]:
    return [tuple(Fraction(s) for s in signs)
            for signs in itertools.product((1, -1), repeat=dim)]


def _unit_vectors(dim: int) -> list[Coords]:
    out = []
    for i in range(dim):
        for s in (1, -1):
            out.append(tuple(Fraction(s if j == i else 0) for j in range(dim)))
    return out


def dualize(points: Sequence[Sequence], dim: int | None = None) -> tuple[Coords, ...]:
    """Polar dual of a symmetric point configuration.

    Given the vertex set of a symmetric full-dimensional unit ball this
    returns the irredundant facet functionals; given the facet set it
    returns the vertex set.  Both directions are the same computation:
    the vertices of {f : f(v) <= 1 for every input point v}.  Non-extreme
    input points only contribute redundant inequalities and do not affect
    the result.  Brute force over dim-subsets; intended for desk scale
    (dim <= 6, a few dozen points).
    """
    pts = [rat_vector(p) for p in points]
    if not pts:
        raise DegenerateBall("empty point set")
    if dim is None:
        dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    pts = sorted(set(pts))
    if any(tuple(-c for c in p) not in set(pts) for p in pts):
        raise AsymmetricBall("point set is not closed under negation")
    if rank(pts) < dim:
        raise DegenerateBall("points do not span the space")
    found: set[Coords] = set()
    ones = tuple(Fraction(1) for _ in range(dim))
    for subset in itertools.combinations(pts, dim):
        f = solve_square(subset, ones)
        if f is None or f in found:
            continue
        if all(dot(v, f) <= 1 for v in pts):
            found.add(f)
    if not found:
        raise DegenerateBall("polar has no vertices")
    return tuple(sorted(found))


def make_space(kind: str, dim: int, p=None,
               vertices: Sequence[Sequence] | None = None,
               facets: Sequence[Sequence] | None = None) -> NormedSpace:
    """Construct and validate a normed space.

    linf/l1 populate vertex and facet data by the cube/cross-polytope
    duality; poly requires exactly one of `vertices`/`facets` (symmetric,
    full-dimensional) and derives the other by `dualize`, keeping only
    genuine extreme points in both descriptions.
    """
    if dim < 2:
        raise DimensionMismatch("spaces of dimension >= 2 only")
    if kind == LINF:
        return NormedSpace(LINF, dim,
                           vertices=tuple(_sign_patterns(dim)),
                           facets=tuple(sorted(_unit_vectors(dim))))
    if kind == L1:
        return NormedSpace(L1, dim,
                           vertices=tuple(sorted(_unit_vectors(dim))),
                           facets=tuple(_sign_patterns(dim)))
    if kind == LP:
        if p is None:
            raise BadExponent("lp spaces need an exponent p")
        p = rat(p)
        if not 1 < p:
            raise BadExponent(f"p must satisfy 1 < p < oo, got {p}")
        return NormedSpace(LP, dim, p=p)
    if kind == POLY:
        if (vertices is None) == (facets is None):
            raise DegenerateBall("supply exactly one of vertices/facets")
        if vertices is not None:
            facet_set = dualize(vertices, dim)
            vertex_set = dualize(facet_set, dim)
            given = {rat_vector(v) for v in vertices}
            if not set(vertex_set) <= given:
                raise DegenerateBall("vertex canonicalization escaped the input hull")
        else:
            vertex_set = dualize(facets, dim)
            facet_set = dualize(vertex_set, dim)
            given = {rat_vector(f) for f in facets}
            if not set(facet_set) <= given:
                raise DegenerateBall("facet canonicalization escaped the input")
        return NormedSpace(POLY, dim, vertices=vertex_set, facets=facet_set)
    raise UnsupportedSpace(f"unknown space kind {kind!r}")


def norm(space: NormedSpace, x: Sequence):
    """The norm of x; exact Fraction for rational kinds, float for lp."""
    v = space.coerce_vector(x)
    if space.kind == LINF:
        return max(abs(c) for c in v)
    if space.kind == L1:
        return sum(abs(c) for c in v)
    if space.kind == POLY:
        return max(dot(f, v) for f in space.facets)
    pf = float(space.p)
    return sum(abs(c) ** pf for c in v) ** (1.0 / pf)


def dual_norm(space: NormedSpace, f: Sequence):
    """Norm of a functional in the dual space."""
    v = space.coerce_vector(f)
    if space.kind == LINF:
        return sum(abs(c) for c in v)
    if space.kind == L1:
        return max(abs(c) for c in v)
    if space.kind == POLY:
        return max(dot(v, w) for w in space.vertices)
    pf = float(space.p)
    qf = pf / (pf - 1.0)
    return sum(abs(c) ** qf for c in v) ** (1.0 / qf)


def require_nonzero(space: NormedSpace, x: Sequence) -> Coords:
    v = space.coerce_vector(x)
    if is_zero(v):
        raise ZeroVector("operation requires a non-zero vector")
    return v

"""Support functionals, smoothness order and associated cones.

For rational kinds the extreme support functionals at x are exactly the
unit-ball facets active at x; for l_p the support functional is unique
and given in closed form.  The associated cone of x for an ordered pair
(f_i, f_j) of extreme support functionals is
``{y : f_i(y) >= 0 and f_j(y) <= 0}``; the family of all of them covers
x-perp exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import FUNCTIONAL_TOL
from .errors import DimensionMismatch
from .linalg import Coords, dot, float_rank, rank
from .spaces import LP, NormedSpace, norm, require_nonzero


@dataclass(frozen=True)
class SupportFace:
    """The face of the dual ball supporting x.

    `extreme_functionals` are the extreme points of the set of norm-one
    functionals attaining the norm at `base_point`, sorted
    lexicographically; `smoothness_order` is the dimension of their span.
    """

    base_point: Coords
    extreme_functionals: tuple[Coords, ...]
    smoothness_order: int


@dataclass(frozen=True)
class AssociatedCone:
    """Cone {y : i_functional(y) >= 0 and j_functional(y) <= 0}."""

    i_functional: Coords
    j_functional: Coords


def support_face(space: NormedSpace, x: Sequence) -> SupportFace:
    """All extreme support functionals at non-zero x, with their span dimension."""
    v = require_nonzero(space, x)
    if space.kind == LP:
        nx = norm(space, v)
        pf = float(space.p)
        f = tuple((1.0 if c > 0 else -1.0) * abs(c) ** (pf - 1.0) / nx ** (pf - 1.0)
                  for c in v)
        return SupportFace(v, (f,), 1)
    nx = norm(space, v)
    active = tuple(sorted(f for f in space.facets if dot(f, v) == nx))
    return SupportFace(v, active, rank(active))


def smoothness_order(space: NormedSpace, x: Sequence) -> int:
    """dim span of the support functionals at x (1 = smooth point)."""
    face = support_face(space, x)
    if space.kind == LP:
        return 1
    return face.smoothness_order


def _canonical_ray(f: Coords) -> Coords:
    """Scale a functional by a positive factor so the leading entry is +-1.

    Cones are invariant under positive scaling of their defining
    functionals; this gives a comparable key.
    """
    lead = next((c for c in f if c != 0), None)
    if lead is None:
        return f
    scale = abs(lead)
    return tuple(c / scale for c in f)


def associated_cones(space: NormedSpace, x: Sequence) -> list[AssociatedCone]:
    """All associated cones of x over ordered pairs of extreme functionals.

    Pairs with identical membership predicates collapse to one cone; the
    diagonal pairs stay (they encode the kernels).  Smooth points yield a
    single cone, the kernel of the unique support functional.
    """
    face = support_face(space, x)
    cones: list[AssociatedCone] = []
    seen = set()
    for fi in face.extreme_functionals:
        for fj in face.extreme_functionals:
            key = (_canonical_ray(fi), _canonical_ray(fj))
            if key in seen:
                continue
            seen.add(key)
            cones.append(AssociatedCone(fi, fj))
    return cones


def cone_contains(cone: AssociatedCone, y: Sequence) -> bool:
    """Exact sign test for membership (tolerance only on float data)."""
    if len(y) != len(cone.i_functional):
        raise DimensionMismatch("vector and cone dimensions differ")
    vi = dot(cone.i_functional, y)
    vj = dot(cone.j_functional, y)
    if isinstance(vi, float) or isinstance(vj, float):
        return vi >= -FUNCTIONAL_TOL and vj <= FUNCTIONAL_TOL
    return vi >= 0 and vj <= 0


def cone_lineality_dim(cone: AssociatedCone, dim: int) -> int:
    """Dimension of ker f_i intersect ker f_j (float data uses tolerance rank)."""
    mat = [cone.i_functional, cone.j_functional]
    if any(isinstance(c, float) for c in cone.i_functional):
        return dim - float_rank(mat)
    return dim - rank(mat)

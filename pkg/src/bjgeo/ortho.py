"""Birkhoff-James orthogonality: decision, certificates and oracle.

``x`` is Birkhoff-James orthogonal to ``y`` when ``|x + t y| >= |x|``
for every scalar t.  On the rational kinds the decision reduces to an
exact sign interval over the extreme support functionals; the oracle
re-derives the answer by minimizing the piecewise-affine map
``t -> |x + t y|`` over its breakpoints, fully independently of the
support-face route.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import FUNCTIONAL_TOL, ORACLE_REL_TOL, TERNARY_REL_WIDTH
from .errors import BadExponent, DimensionMismatch, ZeroVector
from .linalg import Coords, dot, is_zero, rat, vec_add, vec_scale
from .spaces import LP, NormedSpace, dual_norm, norm, require_nonzero
from .support import associated_cones, cone_contains, support_face


@dataclass(frozen=True)
class OrthoCertificate:
    """Witness that x is orthogonal to y.

    Either a single norm-one functional supporting x with f(y) = 0, or a
    pair of extreme support functionals whose values at y straddle zero
    together with the convex weight alpha solving
    (1 - alpha) f1(y) + alpha f2(y) = 0.
    """

    x: Coords
    y: Coords
    variant: str  # "single" | "pair"
    functional: Coords | None = None
    pair: tuple[Coords, Coords] | None = None
    alpha: Fraction | float | None = None

    @property
    def orthogonal(self) -> bool:
        return True

    def check(self, space: NormedSpace) -> bool:
        """Recompute the defining equations from scratch."""
        nx = norm(space, self.x)
        if self.variant == "single":
            f = self.functional
            ok_support = _close(space, dual_norm(space, f), 1) and \
                _close(space, dot(f, self.x), nx)
            return ok_support and _close(space, dot(f, self.y), 0)
        f1, f2 = self.pair
        a = self.alpha
        if not (0 <= a <= 1):
            return False
        for f in (f1, f2):
            if not (_close(space, dual_norm(space, f), 1)
                    and _close(space, dot(f, self.x), nx)):
                return False
        combo = (1 - a) * dot(f1, self.y) + a * dot(f2, self.y)
        return _close(space, combo, 0)


@dataclass(frozen=True)
class OrthoRefutation:
    """Witness that x is not orthogonal to y: a scalar that shrinks the norm."""

    x: Coords
    y: Coords
    lambda_star: Fraction | float
    achieved_norm: Fraction | float

    @property
    def orthogonal(self) -> bool:
        return False

    def check(self, space: NormedSpace) -> bool:
        z = vec_add(self.x, vec_scale(self.lambda_star, self.y))
        nz = norm(space, z)
        nx = norm(space, self.x)
        if space.rational:
            return nz == self.achieved_norm and nz < nx
        return abs(nz - self.achieved_norm) <= 1e-9 and nz < nx


@dataclass(frozen=True)
class OracleResult:
    orthogonal: bool
    lambda_star: Fraction | float
    achieved_norm: Fraction | float
    base_norm: Fraction | float


def _close(space: NormedSpace, a, b) -> bool:
    if space.rational:
        return a == b
    return abs(a - b) <= FUNCTIONAL_TOL * max(1.0, abs(b))


def semi_inner_product_lp(u: Sequence, v: Sequence, p) -> float:
    """The unique semi-inner product compatible with the l_p norm.

    [u, v] = sum_i u_i sgn(v_i) |v_i|^(p-1) / |v|_p^(p-2), and 0 when
    v = 0.  In l_p, u is orthogonal to v exactly when [v, u] = 0.
    """
    pf = float(rat(p))
    if pf <= 1:
        raise BadExponent(f"p must exceed 1, got {p}")
    if len(u) != len(v):
        raise DimensionMismatch("vectors of different dimension")
    vv = [float(c) for c in v]
    uu = [float(c) for c in u]
    if all(c == 0 for c in vv):
        return 0.0
    nv = sum(abs(c) ** pf for c in vv) ** (1.0 / pf)
    num = sum(a * (1.0 if b > 0 else -1.0) * abs(b) ** (pf - 1.0)
              for a, b in zip(uu, vv) if b != 0)
    return num / nv ** (pf - 2.0)


def _interval_bound(space: NormedSpace, x: Coords, y: Coords):
    return 2 * norm(space, x) / norm(space, y)


def oracle_is_orthogonal(space: NormedSpace, x: Sequence, y: Sequence) -> OracleResult:
    """Decide orthogonality by minimizing t -> |x + t y| directly.

    The minimum over all scalars lies in [-2|x|/|y|, 2|x|/|y|]: outside,
    the reverse triangle inequality already forces |x + t y| > |x|.  On
    rational kinds the map is the maximum of the affine maps
    t -> f(x) + t f(y) over the facets, so the exact minimum sits at a
    crossing of a non-increasing and a non-decreasing line (or at an
    endpoint).  On l_p a ternary search closes the bracket instead.
    """
    xv = require_nonzero(space, x)
    yv = space.coerce_vector(y)
    if is_zero(yv):
        raise ZeroVector("oracle requires a non-zero direction")
    bound = _interval_bound(space, xv, yv)
    nx = norm(space, xv)

    if space.kind == LP:
        lo, hi = -bound, bound
        width_goal = TERNARY_REL_WIDTH * max(1.0, hi - lo)
        phi = lambda t: norm(space, vec_add(xv, vec_scale(t, yv)))
        while hi - lo > width_goal:
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if phi(m1) <= phi(m2):
                hi = m2
            else:
                lo = m1
        t_star = (lo + hi) / 2.0
        achieved = phi(t_star)
        ortho = achieved >= nx * (1.0 - ORACLE_REL_TOL)
        if ortho:
            t_star, achieved = 0.0, nx
        return OracleResult(ortho, t_star, achieved, nx)

    lines = [(dot(f, xv), dot(f, yv)) for f in space.facets]
    candidates = {Fraction(0), -bound, bound}
    down = [(a, b) for a, b in lines if b <= 0]
    up = [(a, b) for a, b in lines if b >= 0]
    for a1, b1 in down:
        for a2, b2 in up:
            if b1 == b2:
                continue
            t = (a2 - a1) / (b1 - b2)
            if -bound <= t <= bound:
                candidates.add(t)
    best_t = Fraction(0)
    best_val = nx
    for t in sorted(candidates):
        val = max(a + t * b for a, b in lines)
        if val < best_val:
            best_t, best_val = t, val
    return OracleResult(best_val >= nx, best_t, best_val, nx)


def is_orthogonal(space: NormedSpace, x: Sequence, y: Sequence):
    """Decide x orthogonal-to y; returns OrthoCertificate or OrthoRefutation.

    Rational kinds: orthogonal iff the values f(y) over the extreme
    support functionals at x straddle zero; the certificate is the exact
    killing functional or straddling pair.  l_p: orthogonal iff the
    semi-inner product [y, x] vanishes within tolerance.
    """
    xv = require_nonzero(space, x)
    yv = space.coerce_vector(y)

    if space.kind == LP:
        face = support_face(space, xv)
        f = face.extreme_functionals[0]
        if abs(dot(f, yv)) <= FUNCTIONAL_TOL * max(1.0, norm(space, yv)):
            return OrthoCertificate(xv, yv, "single", functional=f)
        res = oracle_is_orthogonal(space, xv, yv)
        return OrthoRefutation(xv, yv, res.lambda_star, res.achieved_norm)

    face = support_face(space, xv)
    values = [(dot(f, yv), f) for f in face.extreme_functionals]
    min_val = min(v for v, _ in values)
    max_val = max(v for v, _ in values)
    if min_val <= 0 <= max_val:
        zeros = sorted(f for v, f in values if v == 0)
        if zeros:
            return OrthoCertificate(xv, yv, "single", functional=zeros[0])
        f1 = min(f for v, f in values if v == min_val)
        f2 = min(f for v, f in values if v == max_val)
        a1, a2 = dot(f1, yv), dot(f2, yv)
        alpha = -a1 / (a2 - a1)
        return OrthoCertificate(xv, yv, "pair", pair=(f1, f2), alpha=alpha)
    res = oracle_is_orthogonal(space, xv, yv)
    return OrthoRefutation(xv, yv, res.lambda_star, res.achieved_norm)


def in_x_plus(space: NormedSpace, x: Sequence, y: Sequence):
    """Whether |x + t y| >= |x| for all t >= 0, with a witness functional."""
    return _half_membership(space, x, y, plus=True)


def in_x_minus(space: NormedSpace, x: Sequence, y: Sequence):
    """Whether |x + t y| >= |x| for all t <= 0, with a witness functional."""
    return _half_membership(space, x, y, plus=False)


def _half_membership(space: NormedSpace, x: Sequence, y: Sequence, plus: bool):
    xv = require_nonzero(space, x)
    yv = space.coerce_vector(y)
    face = support_face(space, xv)
    values = [(dot(f, yv), f) for f in face.extreme_functionals]
    if plus:
        target = max(v for v, _ in values)
        member = target >= 0 if space.rational else target >= -FUNCTIONAL_TOL
        witness = min(f for v, f in values if v == target)
    else:
        target = min(v for v, _ in values)
        member = target <= 0 if space.rational else target <= FUNCTIONAL_TOL
        witness = min(f for v, f in values if v == target)
    return (member, witness if member else None)


@dataclass(frozen=True)
class CoverReport:
    """Result of sampling the cover of x-perp by the associated cones."""

    total: int
    agreements: int
    mismatches: int
    counterexample: Coords | None


def ortho_set_cover(space: NormedSpace, x: Sequence, samples: int = 1000,
                    seed: int = 0) -> CoverReport:
    """Sample y and check: orthogonal iff some associated cone contains y."""
    xv = require_nonzero(space, x)
    cones = associated_cones(space, xv)
    rng = random.Random(seed)
    agree = 0
    mismatch = 0
    bad = None
    for _ in range(samples):
        if space.rational:
            yv = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 5))
                       for _ in range(space.dim))
        else:
            yv = tuple(rng.uniform(-10, 10) for _ in range(space.dim))
        ortho = is_orthogonal(space, xv, yv).orthogonal if not is_zero(yv) else True
        in_cone = any(cone_contains(c, yv) for c in cones)
        if ortho == in_cone:
            agree += 1
        else:
            mismatch += 1
            if bad is None:
                bad = yv
    return CoverReport(samples, agree, mismatch, bad)

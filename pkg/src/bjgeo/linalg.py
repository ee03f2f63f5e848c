"""Exact linear algebra over rationals, plus small float helpers.

Vectors and functionals are plain tuples; matrices are tuples of row
tuples.  The exact routines use fractions.Fraction end to end and never
touch floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Coords = tuple  # tuple of Fraction (rational kinds) or float (lp kind)


def rat(value) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("boolean is not a scalar")
    return Fraction(value)


def rat_vector(values: Iterable) -> Coords:
    return tuple(rat(v) for v in values)


def float_vector(values: Iterable) -> Coords:
    return tuple(float(v) for v in values)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vec_add(a: Sequence, b: Sequence) -> Coords:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence, b: Sequence) -> Coords:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Sequence) -> Coords:
    return tuple(c * x for x in a)


def vec_neg(a: Sequence) -> Coords:
    return tuple(-x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def _forward_eliminate(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place fraction-free-ish Gaussian elimination; returns echelon rows."""
    if not rows:
        return rows
    n_cols = len(rows[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return rows


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [[rat(x) for x in row] for row in matrix]
    rows = _forward_eliminate(rows)
    return sum(1 for row in rows if any(x != 0 for x in row))


def solve_square(matrix: Sequence[Sequence], rhs: Sequence) -> Coords | None:
    """Solve A x = b for square rational A; None when A is singular."""
    n = len(matrix)
    aug = [[rat(x) for x in row] + [rat(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def nullspace(matrix: Sequence[Sequence], dim: int) -> list[Coords]:
    """Basis of {x : A x = 0} for a rational matrix with `dim` columns."""
    rows = [[rat(x) for x in row] for row in matrix if any(rat(x) != 0 for x in row)]
    if not rows:
        return [tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)]
    rows = _forward_eliminate(rows)
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        lead = next((c for c, v in enumerate(row) if v != 0), None)
        if lead is not None:
            pivots[lead] = [v / row[lead] for v in row]
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * dim
        vec[fc] = Fraction(1)
        for pc in sorted(pivots, reverse=True):
            row = pivots[pc]
            vec[pc] = -sum(row[c] * vec[c] for c in range(pc + 1, dim))
        basis.append(tuple(vec))
    return basis


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    rows = [[rat(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        pv = rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return det


def inverse_matrix(matrix: Sequence[Sequence]) -> tuple[Coords, ...] | None:
    """Exact inverse of a square rational matrix; None when singular."""
    n = len(matrix)
    aug = [[rat(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def span_contains(basis: Sequence[Sequence], vector: Sequence) -> bool:
    """True when `vector` lies in the rational span of `basis`."""
    if is_zero(vector):
        return True
    base_rank = rank(basis) if basis else 0
    return rank(list(basis) + [vector]) == base_rank


def same_span(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> bool:
    ra = rank(basis_a) if basis_a else 0
    rb = rank(basis_b) if basis_b else 0
    if ra != rb:
        return False
    return rank(list(basis_a) + list(basis_b)) == ra


def float_rank(matrix: Sequence[Sequence], tol: float = 1e-9) -> int:
    """Rank of a small float matrix by elimination with partial pivoting."""
    rows = [[float(x) for x in row] for row in matrix]
    if not rows:
        return 0
    n_cols = len(rows[0])
    r = 0
    for c in range(n_cols):
        pivot = max(range(r, len(rows)), key=lambda i: abs(rows[i][c]), default=None)
        if pivot is None or abs(rows[pivot][c]) <= tol:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def float_nullspace(matrix: Sequence[Sequence], dim: int, tol: float = 1e-9) -> list[Coords]:
    """Approximate nullspace basis of a small float matrix."""
    rows = [[float(x) for x in row] for row in matrix]
    pivots: dict[int, list[float]] = {}
    r = 0
    work = [row[:] for row in rows]
    for c in range(dim):
        pivot = max(range(r, len(work)), key=lambda i: abs(work[i][c]), default=None)
        if pivot is None or abs(work[pivot][c]) <= tol:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][c]
        work[r] = [a / pv for a in work[r]]
        for i in range(len(work)):
            if i != r:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots[c] = work[r]
        r += 1
        if r == len(work):
            break
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0.0] * dim
        vec[fc] = 1.0
        for pc, row in pivots.items():
            vec[pc] = -sum(row[c] * vec[c] for c in free)
        basis.append(tuple(vec))
    return basis

"""Dense exact integer matrices and unitriangular solves.

Matrices are tuples of row tuples of Python ``int``; rational results use
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotUnitriangular, ShapeError

IntMat = tuple[tuple[int, ...], ...]
RatVec = tuple[Fraction, ...]


def shape(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ShapeError("ragged matrix")
    return rows, cols


def identity(n: int) -> IntMat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence[int]]) -> IntMat:
    shape(m)
    return tuple(zip(*m)) if m else ()


def matvec_exact(m: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    rows, cols = shape(m)
    if len(v) != cols:
        raise ShapeError(f"cannot multiply {rows}x{cols} matrix by vector of length {len(v)}")
    return tuple(sum(a * b for a, b in zip(row, v) if a) for row in m)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMat:
    ar, ac = shape(a)
    br, bc = shape(b)
    if ac != br:
        raise ShapeError(f"cannot multiply {ar}x{ac} by {br}x{bc}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col) if x) for col in bt) for row in a)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ShapeError("length mismatch")
    return sum(a * b for a, b in zip(u, v))


def unitriangular_solve(
    v: Sequence[Sequence[int]], b: Sequence[int], order: Sequence[int]
) -> RatVec:
    """Solve ``v x = b`` exactly.

    ``order`` is a permutation of the indices under which ``v`` becomes lower
    triangular with unit diagonal.  The answer is returned in the original
    index order.
    """
    rows, cols = shape(v)
    if rows != cols:
        raise ShapeError(f"matrix is {rows}x{cols}, not square")
    if len(b) != rows:
        raise ShapeError(f"right-hand side has length {len(b)}, expected {rows}")
    if sorted(order) != list(range(rows)):
        raise ShapeError("order is not a permutation of the indices")
    x: list[Fraction | None] = [None] * rows
    for pos, i in enumerate(order):
        row = v[i]
        if row[i] != 1:
            raise NotUnitriangular(f"diagonal entry at {i} is {row[i]}")
        for j in order[pos + 1 :]:
            if row[j]:
                raise NotUnitriangular(f"entry ({i},{j}) lies above the diagonal")
        acc = Fraction(b[i])
        for j in order[:pos]:
            if row[j]:
                acc -= row[j] * x[j]
        x[i] = acc
    return tuple(x)

"""Restriction multiplicities and regular exact Borel subalgebras.

Every function here takes a validated :class:`~qhborel.model.QhData` and is a
pure function of it.  The central object is the matrix ``V`` whose row ``i``
records the composition factors of the restriction of the simple ``L_i`` to a
regular exact Borel subalgebra ``B``:

    v_i = e_i + sum_{k <= j < i} [Nabla_j : L_k] dim Hom(Delta_j, Delta_i) v_k
              - sum_{j < i} [Delta_i : L_j] v_j

evaluated upwards along a linear extension.  The same sums with every
immediate predecessor of ``i`` dropped (the "pruned" form) give the same
vectors for genuine data; both are computed and compared unless
``cross_check=False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DivisibilityError, NonPositiveK, NotRealizable, ShapeError
from .exactla import (
    IntMat,
    RatVec,
    dot,
    identity,
    matmul,
    matvec_exact,
    transpose,
    unitriangular_solve,
)
from .model import QhData, require_valid
from .poset import height


@dataclass(frozen=True)
class VMatrix:
    labels: tuple[str, ...]
    entries: IntMat

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def is_identity(self) -> bool:
        return self.entries == identity(len(self.labels))


@dataclass(frozen=True)
class LSequence:
    labels: tuple[str, ...]
    values: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Good:
    """The class representative at hand has a regular exact Borel subalgebra."""

    k: tuple[int, ...]

    good = True


@dataclass(frozen=True)
class NotGood:
    witness: RatVec
    failing_indices: frozenset[str]

    good = False


BorelVerdict = Union[Good, NotGood]


def _disagree(what: str, a, b) -> AssertionError:
    return AssertionError(f"{what}: {a!r} != {b!r}")


def _coefficients(data: QhData, i: int, pruned: bool) -> dict[int, int]:
    """Coefficient of each earlier ``v_k`` in the recursion for ``v_i``."""
    p = data.poset
    skip = p.ipred[i] if pruned else frozenset()
    coeff: dict[int, int] = {}
    for j in p.below(i):
        h = data.hom[j][i]
        if h:
            row = data.nabla[j]
            for k in p.at_or_below(j):
                if row[k] and k not in skip:
                    coeff[k] = coeff.get(k, 0) + row[k] * h
        d = data.delta[i][j]
        if d and j not in skip:
            coeff[j] = coeff.get(j, 0) - d
    return coeff


def _restriction_vectors(data: QhData, pruned: bool) -> list[list[int]]:
    n = len(data)
    rows: list[list[int]] = [[] for _ in range(n)]
    for i in data.poset.linext:
        v = [0] * n
        v[i] = 1
        for k, c in _coefficients(data, i, pruned).items():
            if c:
                for t, x in enumerate(rows[k]):
                    if x:
                        v[t] += c * x
        rows[i] = v
    return rows


def _length_recursion(data: QhData, pruned: bool) -> list[int]:
    lengths = [0] * len(data)
    for i in data.poset.linext:
        lengths[i] = 1 + sum(c * lengths[k] for k, c in _coefficients(data, i, pruned).items())
    return lengths


def _check_realizable(data: QhData, rows: Sequence[Sequence[int]]) -> None:
    p = data.poset
    lab = p.labels
    for i in p.linext:
        for j, x in enumerate(rows[i]):
            if x < 0:
                raise NotRealizable(f"v[{lab[i]}][{lab[j]}] = {x} is negative")
        for j in p.ipred[i]:
            if rows[i][j]:
                raise NotRealizable(
                    f"v[{lab[i]}][{lab[j]}] = {rows[i][j]} at an immediate predecessor"
                )


def _check_immediate_predecessors(data: QhData) -> None:
    # full minus pruned recursion is sum over j in ipred(i) of
    # (hom[j][i] - delta[i][j]) v_j, so this is the full form's verdict there
    p = data.poset
    for i in p.linext:
        for j in p.ipred[i]:
            gap = data.hom[j][i] - data.delta[i][j]
            if gap:
                raise NotRealizable(
                    f"v[{p.labels[i]}][{p.labels[j]}] = {gap} at an immediate predecessor"
                )


def compute_V(data: QhData, *, cross_check: bool = True) -> VMatrix:
    require_valid(data)
    pruned = _restriction_vectors(data, pruned=True)
    if cross_check:
        full = _restriction_vectors(data, pruned=False)
        _check_realizable(data, full)
        if full != pruned:
            raise _disagree("full and pruned recursions", full, pruned)
    else:
        _check_immediate_predecessors(data)
    _check_realizable(data, pruned)
    return VMatrix(data.labels, tuple(tuple(r) for r in pruned))


def compute_l(data: QhData, *, cross_check: bool = True) -> LSequence:
    v = compute_V(data, cross_check=cross_check)
    sums = list(v.row_sums())
    direct = _length_recursion(data, pruned=True)
    if direct != sums:
        raise _disagree("length recursion and row sums", direct, sums)
    if cross_check:
        full = _length_recursion(data, pruned=False)
        if full != sums:
            raise _disagree("full length recursion and row sums", full, sums)
    if min(sums) < 1:
        raise NotRealizable(f"restricted simple of length {min(sums)}")
    return LSequence(data.labels, tuple(sums))


def check_k(data: QhData, k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if len(k) != len(data):
        raise ShapeError(f"k has length {len(k)}, expected {len(data)}")
    bad = [data.labels[i] for i, x in enumerate(k) if x < 1]
    if bad:
        raise NonPositiveK(f"k must be positive; fails at {', '.join(bad)}")
    return k


def borel_existence(data: QhData, *, cross_check: bool = True) -> BorelVerdict:
    """Decide whether this algebra has a regular exact Borel subalgebra.

    Solves ``V x = simple_dims``; the answer is :class:`Good` exactly when
    every coordinate of ``x`` is a positive integer, in which case ``x`` holds
    the dimensions of the simple modules over the Borel subalgebra.
    """
    v = compute_V(data, cross_check=cross_check)
    x = unitriangular_solve(v.entries, data.simple_dims, data.poset.linext)
    failing = frozenset(
        data.labels[i] for i, xi in enumerate(x) if xi.denominator != 1 or xi < 1
    )
    if failing:
        return NotGood(x, failing)
    return Good(tuple(int(xi) for xi in x))


def representative_multiplicities(
    data: QhData, k: Sequence[int], *, cross_check: bool = True
) -> tuple[int, ...]:
    """Multiplicities ``m = V k`` of the projectives in the good representative.

    ``End(P_1^m_1 + ... + P_n^m_n)^op`` is the algebra of the class containing
    a regular exact Borel subalgebra whose simples have dimensions ``k``.
    With ``k`` all ones this is the minimal good representative.
    """
    k = check_k(data, k)
    return matvec_exact(compute_V(data, cross_check=cross_check).entries, k)


def representative_name(labels: Sequence[str], m: Sequence[int]) -> str:
    parts = [f"P_{lab}" if x == 1 else f"P_{lab}^{x}" for lab, x in zip(labels, m)]
    return "End(" + " + ".join(parts) + ")^op"


@dataclass(frozen=True)
class BorelDimensions:
    k: tuple[int, ...]
    cartan_bop: IntMat
    cartan_b: IntMat
    len_q: tuple[int, ...]
    len_p: tuple[int, ...]
    dim_q: tuple[int, ...]
    dim_p: tuple[int, ...]
    dim_b: int


@dataclass(frozen=True)
class BorelProfile(BorelDimensions):
    n_table: IntMat
    dim_w: int


def borel_dimensions(
    data: QhData, k: Sequence[int], *, cross_check: bool = True
) -> BorelDimensions:
    """Cartan data, lengths and dimensions of a regular exact Borel subalgebra.

    ``cartan_bop[i][j] = [Q_i^B : L_j^B]`` and ``cartan_b[j][i] = [P_j^B : L_i^B]``.
    These depend only on the class; dimensions additionally use ``k``.
    """
    k = check_k(data, k)
    p = data.poset
    n = len(data)
    v = compute_V(data, cross_check=cross_check).entries
    lengths = [sum(row) for row in v]
    nabla = data.nabla

    cartan_bop = matmul(nabla, v)
    cartan_b = transpose(cartan_bop)

    len_q = tuple(sum(nabla[i][j] * lengths[j] for j in p.at_or_below(i)) for i in range(n))
    delta_lengths = [sum(row) for row in transpose(nabla)]  # length of a Delta-flag of P_k
    len_p = tuple(
        sum(delta_lengths[c] * v[c][i] for c in range(n) if p.le(i, c)) for i in range(n)
    )
    if cross_check:
        if len_q != tuple(sum(r) for r in cartan_bop):
            raise _disagree("len_q", len_q, cartan_bop)
        if len_p != tuple(sum(r) for r in cartan_b):
            raise _disagree("len_p", len_p, cartan_b)

    dim_q = matvec_exact(cartan_bop, k)
    dim_p = matvec_exact(cartan_b, k)
    dim_b = dot(dim_q, k)
    other = dot(dim_p, k)
    if dim_b != other:
        raise _disagree("dim B via Q and via P", dim_b, other)
    return BorelDimensions(k, cartan_bop, cartan_b, len_q, len_p, dim_q, dim_p, dim_b)


def borel_profile(data: QhData, k: Sequence[int], *, cross_check: bool = True) -> BorelProfile:
    """Full profile of the regular exact Borel subalgebra with simple dimensions ``k``.

    Adds the bimodule multiplicities ``n_table[i][j] = hom[j][i] / k[j]`` for
    ``j < i`` and ``dim W`` of the associated bocs.  Raises
    :class:`DivisibilityError` when some ``k[j]`` does not divide ``hom[j][i]``.
    """
    dims = borel_dimensions(data, k, cross_check=cross_check)
    p = data.poset
    n = len(data)
    k = dims.k
    table = [[0] * n for _ in range(n)]
    extra = 0
    for i in range(n):
        for j in p.below(i):
            h = data.hom[j][i]
            if not h:
                continue
            q, r = divmod(h, k[j])
            if r:
                raise DivisibilityError(p.labels[i], p.labels[j], h, k[j])
            table[i][j] = q
            extra += q * dims.dim_p[i] * dims.dim_q[j]
    return BorelProfile(
        **vars(dims),
        n_table=tuple(tuple(r) for r in table),
        dim_w=dims.dim_b + extra,
    )


@dataclass(frozen=True)
class ClassFlags:
    all_good: bool
    v_is_identity: bool
    minimal_good_here: bool
    height_shortcut: bool


def class_flags(data: QhData, *, cross_check: bool = True) -> ClassFlags:
    v = compute_V(data, cross_check=cross_check)
    l = compute_l(data, cross_check=cross_check)
    all_good = all(x == 1 for x in l)
    is_id = v.is_identity()
    if all_good != is_id:
        raise _disagree("l == 1 versus V == I", all_good, is_id)
    short = height(data.poset) <= 2
    if short and not is_id:
        raise AssertionError("poset of height <= 2 but V is not the identity")
    return ClassFlags(
        all_good=all_good,
        v_is_identity=is_id,
        minimal_good_here=tuple(data.simple_dims) == l.values,
        height_shortcut=short,
    )


def witness_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

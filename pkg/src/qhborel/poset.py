"""Finite labelled partial orders.

A :class:`Poset` is built from a list of labels and a list of generating
relations ``(a, b)`` meaning ``a <= b``.  The closure is stored as one integer
bitmask per element, which keeps the Warshall pass cheap for a few hundred
labels.  Everything downstream indexes by position in ``labels``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CycleError, InputError, UnknownLabel


@dataclass(frozen=True)
class PosetSpec:
    labels: tuple[str, ...]
    relations: tuple[tuple[str, str], ...] = ()

    def __init__(self, labels: Iterable, relations: Iterable = ()):
        object.__setattr__(self, "labels", tuple(str(x) for x in labels))
        object.__setattr__(
            self, "relations", tuple((str(a), str(b)) for a, b in relations)
        )


@dataclass(frozen=True)
class Poset:
    """Reflexive-transitive closure of a :class:`PosetSpec`.

    ``down[i]`` is the bitmask of ``{j : j <= i}``; ``leq``/``lt`` expose the
    same relation as boolean matrices.  ``ipred[i]`` holds the indices of the
    immediate predecessors of ``i`` and ``linext`` a linear extension that
    breaks ties by input order.
    """

    labels: tuple[str, ...]
    down: tuple[int, ...]
    ipred: tuple[frozenset[int], ...] = field(compare=False)
    linext: tuple[int, ...] = field(compare=False)
    index: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.labels)

    def le(self, j: int, i: int) -> bool:
        """``j <= i`` on indices."""
        return bool(self.down[i] >> j & 1)

    def lt(self, j: int, i: int) -> bool:
        return j != i and bool(self.down[i] >> j & 1)

    @property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        n = len(self.labels)
        return tuple(tuple(self.le(i, j) for j in range(n)) for i in range(n))

    @property
    def lt_matrix(self) -> tuple[tuple[bool, ...], ...]:
        n = len(self.labels)
        return tuple(tuple(self.lt(i, j) for j in range(n)) for i in range(n))

    def below(self, i: int) -> list[int]:
        """Indices strictly below ``i``, in linear-extension order."""
        mask = self.down[i] & ~(1 << i)
        return [j for j in self.linext if mask >> j & 1]

    def at_or_below(self, i: int) -> list[int]:
        mask = self.down[i]
        return [j for j in self.linext if mask >> j & 1]

    def idx(self, label) -> int:
        try:
            return self.index[str(label)]
        except KeyError:
            raise UnknownLabel(f"unknown label {label!r}") from None

    def covers(self) -> list[tuple[str, str]]:
        """Hasse-diagram edges ``(j, i)`` with ``j`` an immediate predecessor of ``i``."""
        return [
            (self.labels[j], self.labels[i])
            for i in range(len(self.labels))
            for j in sorted(self.ipred[i])
        ]

    def opposite(self) -> "Poset":
        return build_poset(
            PosetSpec(self.labels, [(b, a) for a, b in self.covers()])
        )


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_poset(spec: PosetSpec) -> Poset:
    labels = spec.labels
    if not labels:
        raise InputError("a poset needs at least one label")
    index = {lab: n for n, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise InputError("labels must be pairwise distinct")
    n = len(labels)
    down = [1 << i for i in range(n)]
    for a, b in spec.relations:
        if a not in index:
            raise UnknownLabel(f"relation endpoint {a!r} is not a label")
        if b not in index:
            raise UnknownLabel(f"relation endpoint {b!r} is not a label")
        down[index[b]] |= 1 << index[a]
    # Warshall on bitmasks: down[i] collects every j with j <= i
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for i in range(n):
            if down[i] & bit:
                down[i] |= dk
    for i in range(n):
        for j in _bits(down[i] & ~(1 << i)):
            if down[j] >> i & 1:
                raise CycleError(
                    f"{labels[j]!r} <= {labels[i]!r} <= {labels[j]!r} violates antisymmetry"
                )

    ipred = []
    for i in range(n):
        strict = down[i] & ~(1 << i)
        covered = 0
        for j in _bits(strict):
            covered |= down[j] & ~(1 << j)
        ipred.append(frozenset(_bits(strict & ~covered)))

    return Poset(
        labels=tuple(labels),
        down=tuple(down),
        ipred=tuple(ipred),
        linext=tuple(_topological(n, down)),
        index=index,
    )


def _topological(n: int, down: Sequence[int]) -> list[int]:
    # Kahn's algorithm; the heap keeps ties in input order
    indegree = [bin(down[i]).count("1") - 1 for i in range(n)]
    above: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in _bits(down[i] & ~(1 << i)):
            above[j].append(i)
    ready = [i for i in range(n) if indegree[i] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        j = heapq.heappop(ready)
        order.append(j)
        for i in above[j]:
            indegree[i] -= 1
            if indegree[i] == 0:
                heapq.heappush(ready, i)
    return order


def immediate_predecessors(p: Poset, i) -> set[str]:
    """Labels of the maximal elements strictly below ``i``."""
    return {p.labels[j] for j in p.ipred[p.idx(i)]}


def linear_extension(p: Poset) -> list[int]:
    return list(p.linext)


@dataclass(frozen=True)
class PosetStats:
    height: int
    minimal: frozenset[str]
    is_tree: bool


def height(p: Poset) -> int:
    longest = [0] * len(p)
    for i in p.linext:
        longest[i] = 1 + max((longest[j] for j in p.ipred[i]), default=0)
    return max(longest)


def is_tree(p: Poset) -> bool:
    """True when every principal down-set is a chain."""
    for i in range(len(p)):
        members = list(_bits(p.down[i]))
        for a in members:
            for b in members:
                if not (p.le(a, b) or p.le(b, a)):
                    return False
    return True


def poset_stats(p: Poset) -> PosetStats:
    return PosetStats(
        height=height(p),
        minimal=frozenset(p.labels[i] for i in range(len(p)) if not p.ipred[i]),
        is_tree=is_tree(p),
    )


def chain(labels: Sequence) -> PosetSpec:
    labels = [str(x) for x in labels]
    return PosetSpec(labels, zip(labels, labels[1:]))


def antichain(labels: Sequence) -> PosetSpec:
    return PosetSpec(labels)

"""Generators for concrete families of quasihereditary data.

The multiplicities are read off the Loewy diagrams of the projective modules
of each family; the diagram each generator encodes is reproduced in its
docstring.  Labels are ``"1" .. "n"`` unless stated otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .engine import check_k, compute_V
from .errors import InvalidSpec, NotATree
from .exactla import IntMat, identity, matvec_exact
from .model import QhData, require_valid
from .poset import Poset, PosetSpec, antichain, build_poset, chain, is_tree

FAMILIES = ("example_a4", "semisimple", "erdmann", "dual_extension_linear", "ringel_dual_tree")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: Optional[int] = None
    tree: Optional[PosetSpec] = None
    chain: bool = False  # semisimple only: chain instead of antichain


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def _from_rows(n: int, supports: Sequence[Sequence[int]]) -> list[list[int]]:
    """1-based support lists to a 0/1 matrix."""
    m = [[0] * n for _ in range(n)]
    for i, row in enumerate(supports):
        for j in row:
            m[i][j - 1] += 1
    return m


def example_a4() -> QhData:
    """Path algebra of ``1 -> 2 <- 3 -> 4`` with the natural order.

    Projectives ``P_1 = 1/2``, ``P_2 = 2``, ``P_3 = 3/(2 + 4)``, ``P_4 = 4``;
    the standard modules are ``1``, ``2``, ``3/2`` and ``4``.
    """
    n = 4
    delta = _from_rows(n, [[1], [2], [2, 3], [4]])
    nabla = _from_rows(n, [[1], [1, 2], [3], [3, 4]])
    hom = [list(r) for r in identity(n)]
    hom[1][2] = 1  # Delta_2 is the socle of Delta_3
    return QhData(build_poset(chain(_labels(n))), delta, nabla, hom, [1] * n)


def semisimple(n: int, *, on_chain: bool = False) -> QhData:
    labels = _labels(n)
    spec = chain(labels) if on_chain else antichain(labels)
    eye = identity(n)
    return QhData(build_poset(spec), eye, eye, eye, [1] * n)


def erdmann(n: int) -> QhData:
    """Finite-type Schur algebra blocks (Erdmann's algebra), natural order.

    ``P_1 = 1/2/1``, ``P_i = i/((i-1) + (i+1))/i`` for ``1 < i < n`` and
    ``P_n = n/(n-1)``; the standard modules are ``Delta_1 = 1`` and
    ``Delta_i = i/(i-1)``.  The algebra has a simple preserving duality, so the
    costandard modules have the same factors, and ``Delta_{i-1}`` maps onto
    the socle of ``Delta_i``.
    """
    delta = _from_rows(n, [[1]] + [[i - 1, i] for i in range(2, n + 1)])
    hom = [list(r) for r in identity(n)]
    for i in range(1, n):
        hom[i - 1][i] = 1
    return QhData(build_poset(chain(_labels(n))), delta, delta, hom, [1] * n)


def dual_extension_linear(n: int) -> QhData:
    """Dual extension of the linearly oriented ``A_n`` quiver, natural order.

    The standard modules are uniserial with ``Delta_i = i/(i-1)/.../1`` and
    ``Delta_j`` is the radical power of ``Delta_i`` of length ``j``, so every
    ``Hom(Delta_j, Delta_i)`` with ``j <= i`` is one-dimensional.  The Auslander
    algebra of ``K[x]/(x^n)`` shares all of these numbers.
    """
    delta = [[int(j <= i) for j in range(n)] for i in range(n)]
    hom = [[int(j <= i) for i in range(n)] for j in range(n)]
    return QhData(build_poset(chain(_labels(n))), delta, delta, hom, [1] * n)


@dataclass(frozen=True)
class TiltingMultiplicities:
    """``t[k][j] = (T_k : Delta_j)``, indexed by the tree's labels."""

    labels: tuple[str, ...]
    t: IntMat


def tilting_delta_multiplicities(tree: Poset) -> TiltingMultiplicities:
    """Standard-filtration multiplicities of the tilting modules of a tree's dual extension.

    Each ``T_k`` is an extension of ``Delta_k`` by the sum of all ``T_l`` with
    ``l < k``, hence ``t[k][j] = [j == k] + sum_{l < k} t[l][j]``.
    """
    if not is_tree(tree):
        raise NotATree("tilting recursion needs a tree poset")
    n = len(tree)
    t = [[0] * n for _ in range(n)]
    for c in tree.linext:
        row = t[c]
        row[c] = 1
        for l in tree.below(c):
            for j, x in enumerate(t[l]):
                row[j] += x
    return TiltingMultiplicities(tree.labels, tuple(tuple(r) for r in t))


def ringel_dual_tree(tree: PosetSpec | Poset) -> QhData:
    """Ringel dual of the dual extension algebra of a tree.

    Quasihereditary for the opposite order.  ``[Delta'_j : L'_c]`` and
    ``[Nabla'_j : L'_c]`` both equal ``(T_c : Delta_j)`` (the dual extension
    carries a simple preserving duality) and ``Hom(Delta'_a, Delta'_b)`` is
    one-dimensional exactly when ``b <= a`` in the tree.
    """
    p = tree if isinstance(tree, Poset) else build_poset(tree)
    if not is_tree(p):
        raise NotATree("ringel_dual_tree needs a tree poset")
    n = len(p)
    t = tilting_delta_multiplicities(p).t
    dec = [[t[c][j] for c in range(n)] for j in range(n)]
    hom = [[int(p.le(b, a)) for b in range(n)] for a in range(n)]
    return QhData(p.opposite(), dec, dec, hom, [1] * n)


def generate(spec: FamilySpec) -> QhData:
    name = spec.name
    if name not in FAMILIES:
        raise InvalidSpec(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    if name == "example_a4":
        return example_a4()
    if name == "ringel_dual_tree":
        if spec.tree is None:
            raise InvalidSpec("ringel_dual_tree needs a tree")
        return ringel_dual_tree(spec.tree)
    if spec.n is None or spec.n < 1:
        raise InvalidSpec(f"{name} needs n >= 1")
    if name == "semisimple":
        return semisimple(spec.n, on_chain=spec.chain)
    if name == "erdmann":
        return erdmann(spec.n)
    return dual_extension_linear(spec.n)


def morita_twist(data: QhData, k: Sequence[int]) -> QhData:
    """Same class, with simple dimensions ``V k``.

    The result is the representative whose regular exact Borel subalgebra has
    simples of dimensions ``k``.
    """
    require_valid(data)
    k = check_k(data, k)
    dims = matvec_exact(compute_V(data).entries, k)
    return data.replace(simple_dims=dims)


# -- random instances ---------------------------------------------------------


def random_tree(n: int, rng: random.Random) -> PosetSpec:
    """Uniform attachment: node ``i`` hangs below a uniformly chosen earlier node."""
    labels = [f"t{i}" for i in range(n)]
    relations = [(labels[rng.randrange(i)], labels[i]) for i in range(1, n)]
    return PosetSpec(labels, relations)


def random_height_two(n: int, rng: random.Random, *, max_mult: int = 3) -> QhData:
    """Valid data on a random poset of height at most two.

    Minimal elements are drawn first; each maximal element sits above a random
    subset of them.  Multiplicities on comparable pairs are random, and the
    Hom-dimensions from an immediate predecessor ``j`` to ``i`` are set to
    ``[Delta_i : L_j]``, which is forced for data coming from an algebra.
    """
    labels = [f"x{i}" for i in range(n)]
    n_min = rng.randint(1, n)
    lower, upper = labels[:n_min], labels[n_min:]
    relations = [(a, b) for b in upper for a in lower if rng.random() < 0.5]
    p = build_poset(PosetSpec(labels, relations))
    delta = [list(r) for r in identity(n)]
    nabla = [list(r) for r in identity(n)]
    hom = [list(r) for r in identity(n)]
    for i in range(n):
        for j in p.below(i):
            delta[i][j] = rng.randint(0, max_mult)
            nabla[i][j] = rng.randint(0, max_mult)
            hom[j][i] = delta[i][j]
    dims = [rng.randint(1, 5) for _ in range(n)]
    return QhData(p, delta, nabla, hom, dims)

import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import restriction_vectors
from qhborel import catalog
from qhborel.engine import (
    Good,
    NotGood,
    borel_dimensions,
    borel_existence,
    borel_profile,
    class_flags,
    compute_l,
    compute_V,
    representative_multiplicities,
    representative_name,
)
from qhborel.errors import DivisibilityError, InvalidData, NonPositiveK, NotRealizable, ShapeError
from qhborel.model import QhData, to_json, validate
from qhborel.poset import PosetSpec, build_poset, chain

A4_V = ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1))


def oracle_V(data: QhData):
    relations = [tuple(pair) for pair in to_json(data)["order"]]
    return restriction_vectors(list(data.labels), relations, data.delta, data.nabla, data.hom)


def erdmann_V(n):
    return tuple(tuple(int(j <= i and (i - j) % 2 == 0) for j in range(n)) for i in range(n))


def dual_extension_V(n):
    def entry(i, j):
        if i == j:
            return 1
        return 2 ** (i - j - 2) if j <= i - 2 else 0

    return tuple(tuple(entry(i, j) for j in range(n)) for i in range(n))


# -- worked examples ----------------------------------------------------------


@pytest.mark.parametrize("cross_check", [True, False])
def test_example_a4(cross_check):
    d = catalog.example_a4()
    assert compute_V(d, cross_check=cross_check).entries == A4_V
    assert compute_l(d, cross_check=cross_check).values == (1, 1, 2, 1)
    verdict = borel_existence(d, cross_check=cross_check)
    assert isinstance(verdict, NotGood) and not verdict.good
    assert verdict.witness == (1, 1, 0, 1)
    assert verdict.failing_indices == {"3"}


def test_example_a4_representative():
    d = catalog.example_a4()
    m = representative_multiplicities(d, [1, 1, 1, 1])
    assert m == (1, 1, 2, 1)
    assert representative_name(d.labels, m) == "End(P_1 + P_2 + P_3^2 + P_4)^op"


@pytest.mark.parametrize("n", range(1, 9))
def test_semisimple_identity(n):
    for on_chain in (False, True):
        d = catalog.semisimple(n, on_chain=on_chain)
        assert compute_V(d).is_identity()
        assert borel_existence(d) == Good((1,) * n)
        k = tuple(range(1, n + 1))
        assert representative_multiplicities(d, k) == k
        prof = borel_profile(d, k)
        assert prof.dim_w == prof.dim_b == sum(x * x for x in k)


@pytest.mark.parametrize("n", range(1, 16))
def test_erdmann_closed_form_and_oracle(n):
    d = catalog.erdmann(n)
    v = compute_V(d).entries
    assert v == erdmann_V(n)
    assert [list(r) for r in v] == oracle_V(d)
    assert compute_l(d).values == tuple((i + 1) // 2 for i in range(1, n + 1))


def test_erdmann6_l():
    assert compute_l(catalog.erdmann(6)).values == (1, 1, 2, 2, 3, 3)


@pytest.mark.parametrize("n", range(1, 16))
def test_dual_extension_closed_form_and_oracle(n):
    d = catalog.dual_extension_linear(n)
    v = compute_V(d).entries
    assert v == dual_extension_V(n)
    assert [list(r) for r in v] == oracle_V(d)


def test_dual_extension_values():
    assert compute_l(catalog.dual_extension_linear(5)).values == (1, 1, 2, 4, 8)
    m = representative_multiplicities(catalog.dual_extension_linear(6), [1] * 6)
    assert m == (1, 1, 2, 4, 8, 16)


def test_erdmann4_basic_borel():
    d = catalog.erdmann(4).replace(simple_dims=[1, 1, 2, 2])
    assert borel_existence(d) == Good((1, 1, 1, 1))


# -- profile ------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 7, 12])
def test_erdmann_profile(n):
    prof = borel_profile(catalog.erdmann(n), [1] * n)
    assert all(prof.cartan_bop[i][j] == int(j <= i) for i in range(n) for j in range(n))
    assert prof.len_q == tuple(range(1, n + 1))
    assert prof.len_p == tuple(n - i for i in range(n))
    assert prof.dim_b == n * (n + 1) // 2
    assert prof.dim_w == n * (n + 1) * (n + 2) // 6


@pytest.mark.parametrize("n", [1, 2, 3, 6, 10])
def test_dual_extension_profile(n):
    prof = borel_profile(catalog.dual_extension_linear(n), [1] * n)
    for i, j in itertools.product(range(n), repeat=2):
        expected = 2 ** (i - j - 1) if i > j else int(i == j)
        assert prof.cartan_b[j][i] == expected
    assert prof.dim_p == tuple(2 ** (n - j - 1) for j in range(n))
    assert prof.dim_b == 2**n - 1


def test_dim_w_brute_force():
    # 7 + (1*2*1 + 1*1*1 + 1*1*2), one term per strict pair j < i
    prof = borel_profile(catalog.dual_extension_linear(3), [1, 1, 1])
    assert prof.dim_b == 7
    assert prof.dim_p == (4, 2, 1) and prof.dim_q == (1, 2, 4)
    terms = [
        prof.n_table[i][j] * prof.dim_p[i] * prof.dim_q[j] for i in range(3) for j in range(i)
    ]
    assert sorted(terms) == [1, 2, 2]
    assert prof.dim_w == 12


def test_divisibility_error():
    d = catalog.erdmann(3)
    with pytest.raises(DivisibilityError):
        borel_profile(d, [2, 1, 1])
    dims = borel_dimensions(d, [2, 1, 1])
    assert dims.dim_b == sum(a * b for a, b in zip(dims.dim_q, dims.k))


def test_bad_k():
    d = catalog.erdmann(3)
    with pytest.raises(NonPositiveK):
        representative_multiplicities(d, [1, 0, 1])
    with pytest.raises(ShapeError):
        borel_profile(d, [1, 1])


# -- unrealizable data --------------------------------------------------------


@pytest.mark.parametrize("cross_check", [True, False])
def test_immediate_predecessor_hom_gap(cross_check):
    d = catalog.erdmann(3)
    hom = [list(r) for r in d.hom]
    hom[0][1] = 0
    with pytest.raises(NotRealizable):
        compute_V(d.replace(hom=hom), cross_check=cross_check)


@pytest.mark.parametrize("cross_check", [True, False])
def test_negative_entry(cross_check):
    p = build_poset(chain(["1", "2", "3"]))
    delta = [[1, 0, 0], [0, 1, 0], [1, 0, 1]]
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    d = QhData(p, delta, eye, eye, [1, 1, 1])
    assert validate(d) == []
    assert oracle_V(d)[2] == [-1, 0, 1]
    with pytest.raises(NotRealizable):
        compute_V(d, cross_check=cross_check)


def test_invalid_data_refused():
    d = catalog.example_a4().replace(simple_dims=[0, 1, 1, 1])
    with pytest.raises(InvalidData):
        compute_V(d)


# -- flags --------------------------------------------------------------------


def test_flags_examples():
    f = class_flags(catalog.semisimple(5))
    assert f.all_good and f.minimal_good_here and f.height_shortcut
    f = class_flags(catalog.example_a4())
    assert not f.all_good and not f.minimal_good_here and not f.v_is_identity
    f = class_flags(catalog.morita_twist(catalog.example_a4(), [1, 1, 1, 1]))
    assert f.minimal_good_here


def test_flags_ringel_dual():
    rng = random.Random(5)
    for n in range(1, 10):
        f = class_flags(catalog.ringel_dual_tree(catalog.random_tree(n, rng)))
        assert f.all_good and f.v_is_identity and f.minimal_good_here


# -- properties ---------------------------------------------------------------


@st.composite
def random_data(draw, max_n=7, max_mult=3):
    """Valid data on a random poset; hom is arbitrary below the delta bound."""
    n = draw(st.integers(1, max_n))
    labels = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=8)) if pairs else []
    rel = [(labels[a], labels[b]) for a, b in chosen]
    p = build_poset(PosetSpec(labels, rel))
    mult = st.integers(0, max_mult)
    delta = [[int(i == j) for j in range(n)] for i in range(n)]
    nabla = [row[:] for row in delta]
    hom = [row[:] for row in delta]
    for i in range(n):
        for j in p.below(i):
            delta[i][j] = draw(mult)
            nabla[i][j] = draw(mult)
            hom[j][i] = draw(st.integers(0, delta[i][j]))
    dims = draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))
    return QhData(p, delta, nabla, hom, dims)


def _forces_unrealizable(data, full):
    g = nx.DiGraph()
    g.add_nodes_from(data.labels)
    g.add_edges_from(tuple(e) for e in to_json(data)["order"])
    idx = {lab: n for n, lab in enumerate(data.labels)}
    for i, lab in enumerate(data.labels):
        if any(x < 0 for x in full[i]):
            return True
        if any(full[i][idx[j]] for j in g.predecessors(lab)):
            return True
    return False


@settings(max_examples=300, deadline=None)
@given(random_data())
def test_engine_agrees_with_oracle(data):
    full = oracle_V(data)
    try:
        v = compute_V(data)
    except NotRealizable:
        assert _forces_unrealizable(data, full)
        with pytest.raises(NotRealizable):
            compute_V(data, cross_check=False)
        return
    assert not _forces_unrealizable(data, full)
    assert [list(r) for r in v.entries] == full
    assert compute_V(data, cross_check=False) == v
    assert compute_l(data).values == tuple(sum(r) for r in full)


def _realizable(data):
    try:
        compute_V(data)
    except NotRealizable:
        return False
    return True


k_vectors = st.lists(st.integers(1, 9), min_size=7, max_size=7)


@settings(max_examples=200, deadline=None)
@given(random_data(), k_vectors)
def test_morita_round_trip(data, k):
    assume(_realizable(data))
    k = tuple(k[: len(data)])
    twisted = catalog.morita_twist(data, k)
    assert validate(twisted) == []
    assert borel_existence(twisted) == Good(k)
    assert representative_multiplicities(data, k) == twisted.simple_dims


@settings(max_examples=200, deadline=None)
@given(random_data(), k_vectors, k_vectors)
def test_injective_on_k(data, k1, k2):
    assume(_realizable(data))
    n = len(data)
    k1, k2 = k1[:n], k2[:n]
    assume(k1 != k2)
    assert representative_multiplicities(data, k1) != representative_multiplicities(data, k2)


@settings(max_examples=200, deadline=None)
@given(random_data())
def test_basic_dichotomy(data):
    data = data.replace(simple_dims=[1] * len(data))
    assume(_realizable(data))
    good = isinstance(borel_existence(data), Good)
    assert good == all(x == 1 for x in compute_l(data))


@settings(max_examples=200, deadline=None)
@given(random_data())
def test_solve_consistency(data):
    assume(_realizable(data))
    verdict = borel_existence(data)
    v = compute_V(data).entries
    # residual is identically zero
    recon = [sum(Fraction(a) * x for a, x in zip(row, verdict.witness if not verdict.good else verdict.k)) for row in v]
    assert recon == list(data.simple_dims)
    if verdict.good:
        assert representative_multiplicities(data, verdict.k) == data.simple_dims
    else:
        assert all(x.denominator == 1 for x in verdict.witness)
        assert verdict.failing_indices == {
            data.labels[i] for i, x in enumerate(verdict.witness) if x < 1
        }


@settings(max_examples=150, deadline=None)
@given(random_data(), k_vectors)
def test_profile_consistency(data, k):
    assume(_realizable(data))
    k = k[: len(data)]
    dims = borel_dimensions(data, k)
    l = compute_l(data).values
    assert dims.dim_q == tuple(sum(c * x for c, x in zip(row, k)) for row in dims.cartan_bop)
    assert dims.dim_b == sum(a * b for a, b in zip(dims.dim_q, k))
    assert dims.dim_b == sum(a * b for a, b in zip(dims.dim_p, k))
    assert dims.len_q == tuple(sum(r) for r in dims.cartan_bop)
    n = len(data)
    assert dims.len_q == tuple(sum(data.nabla[i][j] * l[j] for j in range(n)) for i in range(n))
    if all(x == 1 for x in k):
        prof = borel_profile(data, k)
        assert prof.dim_w >= prof.dim_b


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 12))
def test_height_two_identity(seed, n):
    d = catalog.random_height_two(n, random.Random(seed))
    assert compute_V(d).is_identity()
    assert class_flags(d).height_shortcut

import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy.utilities.iterables import partitions as sympy_partitions

from nilorbits import linalg
from nilorbits.centralizers import sl2_through
from nilorbits.chevalley import AlgebraElement, ad_matrix, generic_element, root_span
from nilorbits.orbits import (
    LabelError,
    OrbitError,
    Partition,
    WeightedDynkinDiagram,
    _lagrangian_parity,
    build_catalog,
    classical_label,
    closure_leq,
    dense_orbit,
    dual_partition,
    enumerate_wdds,
    grading_data,
    identify_orbit,
    induce,
    orbit_dimension,
    partition_from_ranks,
    polarisations,
    richardson_orbit,
)
from nilorbits.rootsys import SimpleType, build_root_system, levi_components

CLASSICAL = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5"]


def oracle_orbit_count(t: SimpleType) -> int:
    """Partition-count oracle (sympy) with the standard parity rules."""
    n = t.rank
    N = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t.family]
    count = 0
    for p in sympy_partitions(N):
        p = dict(p)
        if t.family == "C" and any(m % 2 for k, m in p.items() if k % 2):
            continue
        if t.family in "BD" and any(m % 2 for k, m in p.items() if k % 2 == 0):
            continue
        very_even = t.family == "D" and all(k % 2 == 0 for k in p)
        count += 2 if very_even else 1
    return count


@pytest.mark.parametrize("name", CLASSICAL)
def test_classical_orbit_counts(name):
    cat = build_catalog(name)
    assert len(cat) == oracle_orbit_count(cat.type)


@pytest.mark.parametrize("name,count", [("G2", 5), ("F4", 16)])
def test_exceptional_orbit_counts(name, count):
    assert len(enumerate_wdds(build_root_system(name))) == count
    assert len(build_catalog(name)) == count


@pytest.mark.parametrize("name", CLASSICAL + ["G2", "F4"])
def test_dimensions_match_adjoint_rank(name):
    cat = build_catalog(name)
    sc = cat.sc
    for e in cat:
        if e.dim == 0:
            continue
        rank = linalg.rank_exact(ad_matrix(sc, e.representative))
        assert e.dim == rank
        if e.label.partition is not None:
            assert orbit_dimension(e.label) == rank


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_dimension_parity_and_bounds(name):
    cat = build_catalog(name)
    rs = cat.rs
    dims = [e.dim for e in cat]
    assert all(d % 2 == 0 for d in dims)
    assert max(dims) == rs.dim - rs.rank == cat.principal.dim
    assert cat.minimal.dim == min(d for d in dims if d)


def test_known_exceptional_dims_and_names():
    g2 = build_catalog("G2")
    assert {e.label.name: e.dim for e in g2} == {"0": 0, "A1": 6, "Ã1": 8, "G2(a1)": 10, "G2": 12}
    f4 = build_catalog("F4")
    assert f4.by_wdd((1, 0, 1, 2)).label.name == "C3"
    assert f4.by_wdd((1, 0, 1, 2)).dim == 42
    # standard table, Bourbaki numbering (α1, α2 long)
    known = {
        "0": ("0000", 0), "A1": ("1000", 16), "Ã1": ("0001", 22), "A1+Ã1": ("0100", 28),
        "A2": ("2000", 30), "Ã2": ("0002", 30), "A2+Ã1": ("0010", 34), "B2": ("2001", 36),
        "Ã2+A1": ("0101", 36), "C3(a1)": ("1010", 38), "F4(a3)": ("0200", 40), "B3": ("2200", 42),
        "C3": ("1012", 42), "F4(a2)": ("0202", 44), "F4(a1)": ("2202", 46), "F4": ("2222", 48),
    }
    assert {e.label.name: (str(e.label.wdd), e.dim) for e in f4} == known


@pytest.mark.parametrize("name", ["B3", "C3", "D4", "G2", "F4"])
def test_sl2_triples_recover_diagram(name):
    cat = build_catalog(name)
    sc = cat.sc
    for e in cat.entries[1:]:
        tr = sl2_through(sc, e.representative)
        assert tr.check(sc)
        # eigenvalue multiplicities of ad h equal the grading dimensions
        H = ad_matrix(sc, tr.h)
        for k, m in e.grading.dim_by_degree.items():
            shifted = [[H[i][j] - (k if i == j else 0) for j in range(sc.dim)] for i in range(sc.dim)]
            assert sc.dim - linalg.rank_exact(shifted) == m


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "D5"])
def test_closure_order_matches_rank_sequences(name):
    cat = build_catalog(name)
    real = cat.realization
    seqs = {}
    for e in cat:
        M = real.matrix(e.representative)
        seqs[e.label] = [linalg.rank_exact(M)] + linalg.power_ranks(M) if e.dim else [0]
    for a in cat.labels():
        for b in cat.labels():
            if a.partition == b.partition:
                continue
            ra, rb = seqs[a], seqs[b]
            L = max(len(ra), len(rb))
            ra, rb = ra + [0] * (L - len(ra)), rb + [0] * (L - len(rb))
            assert closure_leq(a, b) == all(x <= y for x, y in zip(ra, rb))
            if closure_leq(a, b):
                assert cat.dim(a) < cat.dim(b)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_richardson_in_sl_is_dual_of_block_sizes(n):
    """Ind from the zero orbit of a Levi with blocks (a_1, ..., a_k) in sl_{n+1}
    has Jordan type dual to sorted(a_i)."""
    cat = build_catalog(SimpleType("A", n))
    for S in [frozenset(), frozenset({0}), frozenset({1, 2}), frozenset(range(n)), frozenset({n - 1})]:
        blocks, prev = [], -1
        for i in sorted(S) + [n]:
            blocks.append(i - prev)
            prev = i
        assert richardson_orbit(cat, S).partition == dual_partition(Partition.of(blocks))


@pytest.mark.parametrize("name", ["B3", "C3", "D4", "G2", "F4"])
def test_even_orbits_are_richardson(name):
    cat = build_catalog(name)
    for e in cat:
        if e.grading.is_even:
            S = frozenset(i for i, x in enumerate(e.label.wdd.labels) if x)
            assert S in polarisations(cat, e.label)


def test_induction_dimension_formula():
    cat = build_catalog("C3")
    S = frozenset({0})  # Levi sp4 x gl1
    comps = levi_components(cat.rs, S)
    assert len(comps) == 1 and comps[0][0].rank == 2 and comps[0][0].family in "BC"
    sub = build_catalog(comps[0][0])
    for lab in sub.labels():
        out = induce(cat, S, (lab,))
        nil = 2 * 5  # dim p^nil for S = {α1} in sp6 is 5
        assert cat.dim(out) == sub.dim(lab) + nil


def test_identify_random_elements_exceptional():
    cat = build_catalog("G2")
    sc = cat.sc
    rng = random.Random(3)
    for _ in range(25):
        idx = rng.sample(range(sc.n_pos), rng.randint(1, 3))
        e = generic_element(root_span(sc, idx), rng.randrange(10**6))
        lab = identify_orbit(cat, e)
        assert cat.dim(lab) == linalg.rank_exact(ad_matrix(sc, e))


def test_identify_rejects_non_nilpotent():
    cat = build_catalog("B2")
    h = AlgebraElement({cat.sc.h(0): 1}, cat.sc.dim)
    with pytest.raises((OrbitError, ValueError)):
        identify_orbit(cat, h)


def test_very_even_families_swapped_by_outer_reflection():
    """Conjugating by an orthogonal reflection of determinant -1 swaps I and II."""
    cat = build_catalog("D4")
    real = cat.realization
    N = real.size
    # swap e_n and e_{n+1}: preserves the antidiagonal form, determinant -1
    P = [[int(j == i) for j in range(N)] for i in range(N)]
    n = N // 2
    P[n - 1][n - 1] = P[n][n] = 0
    P[n - 1][n] = P[n][n - 1] = 1
    for parts in [(2, 2, 2, 2), (4, 4)]:
        p = Partition(parts)
        for fam in ("I", "II"):
            M = real.matrix(cat.by_partition(p, fam).representative)
            conj = linalg.matmul(linalg.matmul(P, M), P)
            assert _lagrangian_parity(real, conj) != _lagrangian_parity(real, M)
        assert cat.family_parity[p][_lagrangian_parity(real, real.matrix(cat.by_partition(p, "I").representative))] == "I"


def test_very_even_diagrams_follow_fork_convention():
    t = SimpleType("D", 4)
    one = classical_label(t, (2, 2, 2, 2), "I")
    two = classical_label(t, (2, 2, 2, 2), "II")
    assert one.wdd.labels[2] == 2 and one.wdd.labels[3] == 0
    assert two.wdd.labels == one.wdd.labels[:2] + (one.wdd.labels[3], one.wdd.labels[2])


def test_label_validation():
    with pytest.raises(LabelError):
        classical_label(SimpleType("C", 2), (3, 1))
    with pytest.raises(LabelError):
        classical_label(SimpleType("D", 4), (2, 2, 2, 2))
    with pytest.raises(LabelError):
        classical_label(SimpleType("B", 3), (3, 3, 1), "I")
    with pytest.raises(LabelError):
        WeightedDynkinDiagram((3, 0))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=6))
def test_partition_from_ranks_roundtrip(parts):
    p = Partition.of(parts)
    N = p.size
    # block-diagonal nilpotent Jordan matrix
    M = [[0] * N for _ in range(N)]
    off = 0
    for k in p.parts:
        for i in range(k - 1):
            M[off + i][off + i + 1] = 1
        off += k
    ranks = linalg.power_ranks(M) if any(any(r) for r in M) else []
    assert partition_from_ranks(N, ranks) == p
    assert dual_partition(dual_partition(p)) == p


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["B3", "C3", "D4", "F4"]), st.data())
def test_grading_data_consistency(name, data):
    rs = build_root_system(name)
    labels = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    g = grading_data(rs, labels)
    assert sum(g.dim_by_degree.values()) == rs.dim
    assert all(g.dim(i) == g.dim(-i) for i in g.dim_by_degree)
    assert g.orbit_dim == rs.dim - g.dim(0) - g.dim(1)
    assert g.d_dy == sum(m for i, m in g.dim_by_degree.items() if i >= 2)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A3", "C3", "B3"]), st.data())
def test_dense_orbit_monotone(name, data):
    """Enlarging a root span can only move the dense orbit up in the closure order."""
    cat = build_catalog(name)
    n = cat.sc.n_pos
    small = data.draw(st.sets(st.integers(0, n - 1), max_size=4))
    big = small | data.draw(st.sets(st.integers(0, n - 1), max_size=3))
    a, b = dense_orbit(cat, small), dense_orbit(cat, big)
    assert closure_leq(a, b)

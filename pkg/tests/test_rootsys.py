import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nilorbits.rootsys import (
    RootSystemError,
    SimpleType,
    build_root_system,
    levi_components,
    nilradical_roots,
    positive_root_count,
    root_leq,
)

TYPES = ["A1", "A4", "B2", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]

# |Δ+| from the standard tables
KNOWN_COUNTS = {"A1": 1, "A4": 10, "B2": 4, "B4": 16, "C3": 9, "D4": 12, "D5": 20, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}
KNOWN_HIGHEST = {
    "A4": (1, 1, 1, 1),
    "B4": (1, 2, 2, 2),
    "C3": (2, 2, 1),
    "D5": (1, 2, 2, 1, 1),
    "G2": (3, 2),
    "F4": (2, 3, 4, 2),
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
}


def _epsilon_roots(t: SimpleType) -> set:
    """Positive roots of a classical type in simple-root coordinates, built
    from the epsilon description (independent of the reflection closure)."""
    n = t.rank

    def eps_range(i, j):  # ε_i − ε_j = α_i + ... + α_{j-1} (0-based, i < j)
        v = [0] * n
        for k in range(i, j):
            v[k] = 1
        return v

    out = set()
    if t.family == "A":
        for i, j in itertools.combinations(range(n + 1), 2):
            out.add(tuple(eps_range(i, j)))
        return out
    for i, j in itertools.combinations(range(n), 2):
        out.add(tuple(eps_range(i, j)))
    if t.family == "B":  # ε_i = α_i + ... + α_n, ε_i + ε_j
        eps = [tuple(1 if k >= i else 0 for k in range(n)) for i in range(n)]
        out |= set(eps)
        for i, j in itertools.combinations(range(n), 2):
            out.add(tuple(a + b for a, b in zip(eps[i], eps[j])))
    elif t.family == "C":  # 2ε_n = α_n, ε_i = α_i + ... + α_{n-1} + ½α_n
        twice = [tuple((2 if k < n - 1 else 1) if k >= i else 0 for k in range(n)) for i in range(n)]
        out |= set(twice)
        for i, j in itertools.combinations(range(n), 2):
            out.add(tuple((a + b) // 2 for a, b in zip(twice[i], twice[j])))
    elif t.family == "D":  # ε_i + ε_j, with ε_{n-1} + ε_n = α_n
        for i, j in itertools.combinations(range(n), 2):
            v = [0] * n
            for k in range(i, n - 2):
                v[k] += 1
            for k in range(j, n - 2):
                v[k] += 1
            v[n - 1] += 1
            if j <= n - 2:
                v[n - 2] += 1
            out.add(tuple(v))
    return out


@pytest.mark.parametrize("name", TYPES)
def test_positive_root_counts(name):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == KNOWN_COUNTS[name] == positive_root_count(rs.type)


@pytest.mark.parametrize("name", list(KNOWN_HIGHEST))
def test_highest_root(name):
    assert build_root_system(name).highest_root.coords == KNOWN_HIGHEST[name]


@pytest.mark.parametrize("name", ["A3", "A5", "B3", "B4", "C3", "C4", "D4", "D5", "D6"])
def test_classical_roots_match_epsilon_description(name):
    rs = build_root_system(name)
    assert {r.coords for r in rs.positive_roots} == _epsilon_roots(rs.type)


@pytest.mark.parametrize("name", TYPES)
def test_canonical_order_by_height(name):
    rs = build_root_system(name)
    heights = [r.height for r in rs.positive_roots]
    assert heights == sorted(heights)
    assert [r.coords for r in rs.simple_roots] == [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]


@pytest.mark.parametrize("name", ["G2", "F4", "B3", "C3"])
def test_short_roots_have_length_two(name):
    rs = build_root_system(name)
    lengths = {rs.inner(r.coords, r.coords) for r in rs.positive_roots}
    assert min(lengths) == 2
    for r in rs.positive_roots:
        assert r.is_long == (rs.inner(r.coords, r.coords) == max(lengths))


def test_cartan_matrices_bourbaki():
    b3, c3 = build_root_system("B3"), build_root_system("C3")
    # B_n: α_n short; C_n: α_n long
    assert [b3.inner(a.coords, a.coords) for a in b3.simple_roots] == [4, 4, 2]
    assert [c3.inner(a.coords, a.coords) for a in c3.simple_roots] == [2, 2, 4]
    assert b3.cartan_matrix != c3.cartan_matrix
    assert [list(r) for r in b3.cartan_matrix] == [list(r) for r in zip(*c3.cartan_matrix)]
    g2 = build_root_system("G2").cartan_matrix
    assert sorted([g2[0][1], g2[1][0]]) == [-3, -1]
    f4 = build_root_system("F4")
    # α1, α2 long; α3, α4 short
    assert [f4.inner(a.coords, a.coords) for a in f4.simple_roots] == [4, 4, 2, 2]


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4"])
def test_simple_reflections_permute_roots(name):
    rs = build_root_system(name)
    allroots = {r.coords for r in rs.positive_roots} | {tuple(-c for c in r.coords) for r in rs.positive_roots}
    for i in range(rs.rank):
        for r in allroots:
            p = rs.pairing(r, i)
            img = tuple(c - p * (j == i) for j, c in enumerate(r))
            assert img in allroots


def test_bad_types():
    for bad in (("B", 1), ("D", 3), ("E", 5), ("G", 3), ("Q", 2)):
        with pytest.raises(RootSystemError):
            SimpleType(*bad)
    with pytest.raises(RootSystemError):
        SimpleType.parse("A")


def test_levi_components():
    rs = build_root_system("E6")
    comps = levi_components(rs, {3})  # removing the branch node
    assert sorted(str(c) for c, _ in comps) == ["A1", "A2", "A2"]
    rs = build_root_system("F4")
    assert sorted(str(c) for c, _ in levi_components(rs, {0})) == ["C3"]
    assert sorted(str(c) for c, _ in levi_components(rs, {3})) == ["B3"]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["B4", "C4", "D5", "F4", "E6"]), st.data())
def test_root_order_is_partial_order(name, data):
    rs = build_root_system(name)
    n = len(rs.positive_roots)
    a, b, c = (rs.positive_roots[data.draw(st.integers(0, n - 1))] for _ in range(3))
    assert root_leq(rs, a, a)
    if root_leq(rs, a, b) and root_leq(rs, b, a):
        assert a == b
    if root_leq(rs, a, b) and root_leq(rs, b, c):
        assert root_leq(rs, a, c)
    assert root_leq(rs, a, rs.highest_root)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A4", "B3", "C4", "D5", "G2", "F4"]), st.data())
def test_nilradical_is_upper_set(name, data):
    rs = build_root_system(name)
    S = data.draw(st.sets(st.integers(0, rs.rank - 1)))
    nil = nilradical_roots(rs, S)
    for k, r in enumerate(rs.positive_roots):
        if k in nil:
            for m, q in enumerate(rs.positive_roots):
                if root_leq(rs, r, q):
                    assert m in nil

"""Centralizer invariants of nilpotent orbits and constructive sl2-triples."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .rootsys import RootSystem
from .chevalley import (
    AlgebraElement,
    StructureConstants,
    SubspaceBasis,
    ad_matrix,
    bracket,
    centralizer_in,
    generic_element,
    root_span,
    sample_generic,
)
from .orbits import (
    CatalogEntry,
    GradingData,
    WeightedDynkinDiagram,
    OrbitCatalog,
    OrbitError,
    OrbitLabel,
    degree_zero_basis,
    identify_orbit,
)


class CentralizerError(RuntimeError):
    pass


@dataclass(frozen=True)
class CentralizerData:
    orbit: OrbitLabel
    dim_ge: int
    dim_ge_red: int
    rk_ge: int
    dim_ge_u: int
    dim_b_ge: int
    d_min: int


@dataclass(frozen=True)
class Sl2Triple:
    e: AlgebraElement
    h: AlgebraElement
    f: AlgebraElement

    def check(self, sc: StructureConstants) -> bool:
        e, h, f = self.e, self.h, self.f
        return bracket(sc, h, e) == e * 2 and bracket(sc, e, f) == h and bracket(sc, h, f) == f * -2


def _reductive_rank(sc: StructureConstants, s: SubspaceBasis, seed: int) -> int:
    """Rank of a reductive subalgebra = dim of a generic centralizer in it."""
    if not s.generators:
        return 0
    return len(centralizer_in(sc, s, generic_element(s, seed)))


def grading_centralizer(sc: StructureConstants, g: GradingData, seed: int) -> tuple[int, int]:
    """(dim g(h;0)_e, rank of g(h;0)_e) for generic e in g(h;2)."""
    if g.d_dy == 0:
        return sc.dim, sc.rs.rank
    g0 = SubspaceBasis(tuple(degree_zero_basis(sc, g)), sc.dim)
    span = root_span(sc, g.roots_of_degree(2))

    def sample(s):
        e = generic_element(span, s)
        red = centralizer_in(sc, g0, e)
        return len(red), _reductive_rank(sc, red, s + 1)

    # generic points minimise both kernel dimensions
    return sample_generic(sample, seed, key=lambda v: (-v[0], -v[1]), tag=("centralizer", g.wdd.labels))


def centralizer_data(cat: OrbitCatalog, entry: CatalogEntry | OrbitLabel) -> CentralizerData:
    if isinstance(entry, OrbitLabel):
        entry = cat.entry(entry)
    g = entry.grading
    dim_red, rk = grading_centralizer(cat.sc, g, cat.seed)
    data = _assemble(cat.rs, entry.label, g, dim_red, rk)
    if data.dim_ge != entry.signature.centralizer_dim:
        raise CentralizerError(
            f"{entry.label}: dim g_e = {entry.signature.centralizer_dim} but reductive+unipotent = {data.dim_ge}"
        )
    return data


def _assemble(rs, label, g: GradingData, dim_red: int, rk: int) -> CentralizerData:
    dim_b = len(rs.positive_roots) + rs.rank
    dim_u = g.dim(1) + g.dim(2) if g.d_dy else 0
    if (dim_red + rk) % 2:
        raise CentralizerError(f"{label}: reductive part has odd dim+rank")
    dim_bge = (dim_red + rk) // 2 + dim_u
    return CentralizerData(label, dim_red + dim_u, dim_red, rk, dim_u, dim_bge, dim_b - dim_bge)


def centralizer_data_from_grading(rs, sc: StructureConstants, g: GradingData, seed: int) -> CentralizerData:
    """Same numbers without a catalog (used for the large exceptional types)."""
    dim_red, rk = grading_centralizer(sc, g, seed)
    return _assemble(rs, None, g, dim_red, rk)


def weight_two_independent(cat: OrbitCatalog, entry: CatalogEntry) -> bool:
    two = entry.grading.roots_of_degree(2)
    vecs = [list(cat.rs.positive_roots[k].coords) for k in two]
    return linalg.rank_exact(vecs) == len(two) if vecs else True


def derived_action_trivial(cat: OrbitCatalog, entry: CatalogEntry) -> bool:
    """No root of degree 0 moves a degree-2 root to another root."""
    rs, w = cat.rs, entry.grading.weights
    zero = [rs.positive_roots[k].coords for k in range(len(w)) if w[k] == 0]
    zero += [tuple(-c for c in r) for r in zero]
    for k in range(len(w)):
        if w[k] != 2:
            continue
        g = rs.positive_roots[k].coords
        for a in zero:
            if rs.is_root(tuple(x + y for x, y in zip(g, a))):
                return False
    return True


def is_extreme(cat: OrbitCatalog, entry: CatalogEntry | OrbitLabel, data: CentralizerData | None = None) -> bool:
    if isinstance(entry, OrbitLabel):
        entry = cat.entry(entry)
    data = data or centralizer_data(cat, entry)
    a = weight_two_independent(cat, entry)
    b = entry.grading.dim(2) + data.rk_ge == cat.rs.rank
    c = derived_action_trivial(cat, entry)
    if not (a == b == c):
        raise CentralizerError(f"extreme criteria disagree for {entry.label}: independence={a}, rank={b}, derived={c}")
    return a


def _fundamental_node(rs: RootSystem) -> int:
    theta = rs.highest_root.coords
    touching = [i for i in range(rs.rank) if rs.inner(theta, rs.simple_roots[i].coords) != 0]
    if len(touching) != 1 or rs.pairing(theta, touching[0]) != 1:
        raise CentralizerError(f"highest root of {rs.type} is not fundamental")
    return touching[0]


def dominant_labels(rs: RootSystem, values: list[int]) -> tuple[int, ...]:
    """Move simple-root values alpha_i(h) into the dominant chamber."""
    v = list(values)
    cm = rs.cartan_matrix
    while True:
        i = next((i for i in range(rs.rank) if v[i] < 0), None)
        if i is None:
            return tuple(v)
        c = v[i]
        # alpha_j(s_i h) = alpha_j(h) - <alpha_j, alpha_i^vee> alpha_i(h)
        v = [v[j] - cm[i][j] * c for j in range(rs.rank)]


def intermediate_wdd(rs: RootSystem) -> WeightedDynkinDiagram:
    """Diagram of the principal nilpotent of the Levi orthogonal to theta.

    Its characteristic is the sum of the positive coroots of that Levi,
    conjugated into the dominant chamber; only root data are needed.
    """
    beta = _fundamental_node(rs)
    levi = [k for k, r in enumerate(rs.positive_roots) if r.coords[beta] == 0]
    vals = []
    for i in range(rs.rank):
        a = rs.simple_roots[i].coords
        vals.append(sum(2 * rs.inner(a, rs.positive_roots[k].coords) // rs.inner(rs.positive_roots[k].coords, rs.positive_roots[k].coords) for k in levi))
    return WeightedDynkinDiagram(dominant_labels(rs, vals))


def intermediate_orbit(cat: OrbitCatalog) -> OrbitLabel:
    rs = cat.rs
    beta = _fundamental_node(rs)
    e = AlgebraElement({cat.sc.x(i): 1 for i in range(rs.rank) if i != beta}, cat.sc.dim)
    lab = identify_orbit(cat, e)
    data = centralizer_data(cat, lab)
    if data.rk_ge != 1:
        raise CentralizerError(f"intermediate orbit {lab} has rk G_e = {data.rk_ge}")
    if lab.wdd != intermediate_wdd(rs):
        raise CentralizerError(f"intermediate orbit {lab} disagrees with its root-data diagram")
    return lab


def sl2_through(sc: StructureConstants, e: AlgebraElement) -> Sl2Triple:
    if e.is_zero():
        raise CentralizerError("sl2_through needs a nonzero element")
    A = ad_matrix(sc, e)
    A2 = linalg.matmul(A, A)
    z = linalg.solve(A2, [-2 * x for x in e.dense()])
    if z is None:
        raise CentralizerError("no sl2-triple: element is not nilpotent")
    h = bracket(sc, e, AlgebraElement.from_dense(z, sc.dim))
    H = ad_matrix(sc, h)
    hd = h.dense()
    dim = sc.dim
    rows = [list(r) for r in A] + [[H[i][j] + (2 if i == j else 0) for j in range(dim)] for i in range(dim)]
    f = linalg.solve(rows, hd + [0] * dim)
    if f is None:
        raise CentralizerError("no sl2-triple: element is not nilpotent")
    tr = Sl2Triple(e, h, AlgebraElement.from_dense(f, dim))
    if not tr.check(sc):
        raise OrbitError("constructed triple fails the sl2 relations")
    return tr

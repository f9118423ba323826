"""Nilpotent orbit catalogs: labels, gradings, identification and induction.

Every orbit is keyed by its weighted Dynkin diagram.  Classical orbits also
carry a partition (and an I/II tag for very even partitions in type D);
their diagrams come from the partition, while exceptional diagrams are
found by scanning all labelings with a density test.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .chevalley import (
    DEFAULT_SEED,
    AlgebraElement,
    MatrixRealization,
    StructureConstants,
    UnsupportedOperation,
    ad_matrix,
    build_realization,
    build_structure_constants,
    defining_rank_sequence,
    derive_seed,
    generic_element,
    root_span,
    sample_generic,
)
from .rootsys import (
    RootSystem,
    SimpleType,
    build_root_system,
    cocharacter_weight,
    levi_components,
    nilradical_roots,
)


class OrbitError(RuntimeError):
    """Identification or bookkeeping failure; indicates a bug, not bad input."""


class LabelError(ValueError):
    pass


# --- labels -----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise LabelError(f"not a partition: {p}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted((int(x) for x in parts if x), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class WeightedDynkinDiagram:
    labels: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (0, 1, 2) for x in self.labels):
            raise LabelError(f"diagram labels must lie in {{0,1,2}}: {self.labels}")

    def __str__(self):
        return "".join(map(str, self.labels))


@dataclass(frozen=True)
class OrbitLabel:
    type: SimpleType
    wdd: WeightedDynkinDiagram
    partition: Partition | None = None
    family: str | None = None
    name: str | None = field(default=None, compare=False)

    @property
    def is_classical(self) -> bool:
        return self.partition is not None

    def __str__(self):
        if self.partition is not None:
            return f"{self.partition}{self.family or ''}"
        if self.name:
            return f"{self.name} [{self.wdd}]"
        return f"[{self.wdd}]"

    def sort_key(self):
        return (self.partition.parts if self.partition else (), self.family or "", self.wdd.labels)


def defining_size(t: SimpleType) -> int:
    n = t.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t.family]


def is_valid_partition(t: SimpleType, p: Partition) -> bool:
    if not t.is_classical or p.size != defining_size(t):
        return False
    if t.family == "C":
        return all(p.multiplicity(k) % 2 == 0 for k in set(p.parts) if k % 2 == 1)
    if t.family in "BD":
        return all(p.multiplicity(k) % 2 == 0 for k in set(p.parts) if k % 2 == 0)
    return True


def is_very_even(t: SimpleType, p: Partition) -> bool:
    return t.family == "D" and all(k % 2 == 0 for k in p.parts)


def _partition_wdd(t: SimpleType, p: Partition, family: str | None) -> WeightedDynkinDiagram:
    eig = sorted((lam - 1 - 2 * j for lam in p.parts for j in range(lam)), reverse=True)
    n = t.rank
    if t.family == "A":
        return WeightedDynkinDiagram(tuple(eig[i] - eig[i + 1] for i in range(n)))
    top = eig[:n]
    lab = [top[i] - top[i + 1] for i in range(n - 1)]
    if t.family == "B":
        lab.append(top[n - 1])
    elif t.family == "C":
        lab.append(2 * top[n - 1])
    else:
        lab.append(top[n - 2] + top[n - 1])
        if family == "I":
            lab[n - 2], lab[n - 1] = lab[n - 1], lab[n - 2]
    return WeightedDynkinDiagram(tuple(lab))


def classical_label(t: SimpleType, parts: Iterable[int] | Partition, family: str | None = None) -> OrbitLabel:
    if not t.is_classical:
        raise UnsupportedOperation(f"partition labels need a classical type, got {t}")
    p = parts if isinstance(parts, Partition) else Partition.of(parts)
    if not is_valid_partition(t, p):
        raise LabelError(f"{p} is not a valid partition for {t}")
    if is_very_even(t, p):
        if family not in ("I", "II"):
            raise LabelError(f"very even partition {p} needs family I or II")
    elif family is not None:
        raise LabelError("family tag only applies to very even partitions in type D")
    return OrbitLabel(t, _partition_wdd(t, p, family), p, family)


def exceptional_label(t: SimpleType, labels: Sequence[int]) -> OrbitLabel:
    w = WeightedDynkinDiagram(tuple(int(x) for x in labels))
    if len(w.labels) != t.rank:
        raise LabelError(f"{t} needs {t.rank} labels")
    return OrbitLabel(t, w, name=orbit_name(t, w))


def wdd_from_partition(label: OrbitLabel) -> WeightedDynkinDiagram:
    if label.partition is None:
        raise UnsupportedOperation("wdd_from_partition needs a classical label")
    return _partition_wdd(label.type, label.partition, label.family)


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest or n), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def classical_orbits(t: SimpleType) -> list[OrbitLabel]:
    if not t.is_classical:
        raise UnsupportedOperation(f"{t} is exceptional; use enumerate_wdds")
    out = []
    for parts in _partitions(defining_size(t)):
        p = Partition(parts)
        if not is_valid_partition(t, p):
            continue
        if is_very_even(t, p):
            out += [classical_label(t, p, "I"), classical_label(t, p, "II")]
        else:
            out.append(classical_label(t, p))
    return out


def dual_partition(p: Partition | Sequence[int]) -> Partition:
    parts = tuple(p)
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in parts if x > j) for j in range(parts[0])))


def orbit_dimension(label: OrbitLabel) -> int:
    t = label.type
    if label.partition is None:
        return grading_data(build_root_system(t), label.wdd).orbit_dim
    p = label.partition
    c2 = sum(c * c for c in dual_partition(p))
    odd = sum(1 for x in p if x % 2)
    N = defining_size(t)
    if t.family == "A":
        return N * N - c2
    if t.family == "C":
        return (N * (N + 1) - c2 - odd) // 2
    return (N * (N - 1) - c2 + odd) // 2


def closure_leq(a: OrbitLabel, b: OrbitLabel) -> bool:
    if a.type != b.type:
        raise LabelError(f"cannot compare orbits of {a.type} and {b.type}")
    if a.partition is None or b.partition is None:
        raise UnsupportedOperation("closure order is only available for classical types")
    if a.partition == b.partition:
        return a.family == b.family
    sa = sb = 0
    pa, pb = a.partition.parts, b.partition.parts
    for k in range(max(len(pa), len(pb))):
        sa += pa[k] if k < len(pa) else 0
        sb += pb[k] if k < len(pb) else 0
        if sa > sb:
            return False
    return True


def partition_from_ranks(size: int, ranks: Sequence[int]) -> Partition:
    """Jordan type from [rank M, rank M^2, ...]."""
    r = [size] + list(ranks) + [0]
    ge = [r[k - 1] - r[k] for k in range(1, len(r))]  # ge[k-1] = #blocks of size >= k
    ge.append(0)
    parts: list[int] = []
    for k in range(len(ge) - 1, 0, -1):
        parts += [k] * (ge[k - 1] - ge[k])
    return Partition(tuple(parts))


# --- gradings ---------------------------------------------------------------------


@dataclass(frozen=True)
class GradingData:
    wdd: WeightedDynkinDiagram
    dim_by_degree: dict
    orbit_dim: int
    d_dy: int
    dynkin_roots: frozenset
    is_even: bool
    weights: tuple = field(repr=False, compare=False)  # cocharacter weight per positive root

    def dim(self, i: int) -> int:
        return self.dim_by_degree.get(i, 0)

    def roots_of_degree(self, i: int) -> list[int]:
        return [k for k, w in enumerate(self.weights) if w == i]


def grading_data(rs: RootSystem, wdd: WeightedDynkinDiagram | Sequence[int]) -> GradingData:
    labels = wdd.labels if isinstance(wdd, WeightedDynkinDiagram) else tuple(wdd)
    if len(labels) != rs.rank:
        raise LabelError(f"{rs.type} needs {rs.rank} labels")
    w = tuple(cocharacter_weight(r, labels) for r in rs.positive_roots)
    by = {0: rs.rank}
    for x in w:
        by[x] = by.get(x, 0) + 1
        if x:
            by[-x] = by.get(-x, 0) + 1
        else:
            by[0] += 1
    orbit_dim = rs.dim - by[0] - by.get(1, 0)
    dyn = frozenset(k for k, x in enumerate(w) if x >= 2)
    return GradingData(
        wdd=WeightedDynkinDiagram(labels),
        dim_by_degree=dict(sorted(by.items())),
        orbit_dim=orbit_dim,
        d_dy=len(dyn),
        dynkin_roots=dyn,
        is_even=all(x % 2 == 0 for x in w),
        weights=w,
    )


def degree_zero_basis(sc: StructureConstants, g: GradingData) -> list[AlgebraElement]:
    z = g.roots_of_degree(0)
    idx = [sc.x(k) for k in z] + [sc.y(k) for k in z] + [sc.h(i) for i in range(sc.rs.rank)]
    return [sc.basis_vector(k) for k in sorted(idx)]


def cartan_element(sc: StructureConstants, labels: Sequence[int]) -> AlgebraElement:
    """h in the Cartan with alpha_j(h) = labels[j]."""
    r = sc.rs.rank
    cm = sc.rs.cartan_matrix
    # [h_i, x_j] = cm[i][j] x_j, so alpha_j(sum c_i h_i) = sum_i c_i cm[i][j]
    c = linalg.solve([[cm[i][j] for i in range(r)] for j in range(r)], list(labels))
    return AlgebraElement({sc.h(i): c[i] for i in range(r)}, sc.dim)


def _wdd_test(sc: StructureConstants, g: GradingData, seed: int) -> bool:
    """Labels are a weighted Dynkin diagram iff, for generic e in g(h;2),
    [g(h;0), e] = g(h;2) and h lies in [e, g(h;-2)] (h is then the
    characteristic of e)."""
    two = g.roots_of_degree(2)
    if not two:
        return not any(g.wdd.labels)
    g0 = degree_zero_basis(sc, g)
    gm2 = [sc.basis_vector(sc.y(k)) for k in two]
    span = root_span(sc, two)
    h = cartan_element(sc, g.wdd.labels).dense()

    def sample(s):
        e = generic_element(span, s)
        dense_rank = linalg.rank_exact(ad_matrix(sc, e, g0))
        A = ad_matrix(sc, e, gm2)
        hit = linalg.rank_exact([row + [hv] for row, hv in zip(A, h)]) == linalg.rank_exact(A)
        return dense_rank, hit

    r0, hit = sample_generic(sample, seed, tag=("wdd", g.wdd.labels))
    return r0 == len(two) and hit


def enumerate_wdds(rs: RootSystem, sc: StructureConstants | None = None, seed: int = DEFAULT_SEED) -> list[WeightedDynkinDiagram]:
    sc = sc or build_structure_constants(rs)
    out = []
    for labels in itertools.product((0, 1, 2), repeat=rs.rank):
        g = grading_data(rs, labels)
        if g.orbit_dim % 2:
            continue
        if _wdd_test(sc, g, seed):
            out.append(g.wdd)
    return out


# --- exceptional names (annotations only) ----------------------------------------

_NAMES = {
    "G2": {"00": "0", "01": "A1", "10": "Ã1", "02": "G2(a1)", "22": "G2"},
    "F4": {
        "0000": "0", "1000": "A1", "0001": "Ã1", "0100": "A1+Ã1", "2000": "A2",
        "0002": "Ã2", "0010": "A2+Ã1", "2001": "B2", "0101": "Ã2+A1", "1010": "C3(a1)",
        "0200": "F4(a3)", "2200": "B3", "1012": "C3", "0202": "F4(a2)", "2202": "F4(a1)",
        "2222": "F4",
    },
}


def orbit_name(t: SimpleType, w: WeightedDynkinDiagram) -> str | None:
    key = str(w)
    if str(t) in _NAMES:
        return _NAMES[str(t)].get(key)
    if not any(w.labels):
        return "0"
    if all(x == 2 for x in w.labels):
        return str(t)
    rs = build_root_system(t)
    theta = rs.highest_root.coords
    if w.labels == tuple(rs.pairing(theta, i) for i in range(rs.rank)):
        return "A1"
    return None


# --- catalog ----------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitSignature:
    adjoint_ranks: tuple[int, ...]
    centralizer_dim: int
    defining_ranks: tuple[int, ...] | None = None

    @property
    def key(self):
        return (self.adjoint_ranks, self.centralizer_dim)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    label: OrbitLabel
    grading: GradingData
    signature: OrbitSignature
    representative: AlgebraElement = field(repr=False)

    @property
    def dim(self) -> int:
        return self.grading.orbit_dim


@dataclass(eq=False)
class OrbitCatalog:
    type: SimpleType
    rs: RootSystem
    sc: StructureConstants
    seed: int
    entries: tuple[CatalogEntry, ...]
    closure_covers: tuple[tuple[int, int], ...] | None
    collided: frozenset = frozenset()
    realization: MatrixRealization | None = None
    family_parity: dict = field(default_factory=dict, repr=False)
    _richardson: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_label = {e.label: e for e in self.entries}
        self._by_wdd = {e.label.wdd: e for e in self.entries}
        self._by_sig: dict = {}
        for e in self.entries:
            self._by_sig.setdefault(e.signature.key, []).append(e)
        self._by_partition = {(e.label.partition, e.label.family): e for e in self.entries if e.label.partition}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def labels(self) -> list[OrbitLabel]:
        return [e.label for e in self.entries]

    def entry(self, label: OrbitLabel) -> CatalogEntry:
        try:
            return self._by_label[label]
        except KeyError:
            raise LabelError(f"{label} is not an orbit of {self.type}") from None

    def by_wdd(self, w: WeightedDynkinDiagram | Sequence[int]) -> CatalogEntry:
        w = w if isinstance(w, WeightedDynkinDiagram) else WeightedDynkinDiagram(tuple(w))
        try:
            return self._by_wdd[w]
        except KeyError:
            raise LabelError(f"{w} is not a weighted Dynkin diagram of {self.type}") from None

    def by_partition(self, p: Partition, family: str | None = None) -> CatalogEntry:
        try:
            return self._by_partition[(p, family)]
        except KeyError:
            raise LabelError(f"{p}{family or ''} is not an orbit of {self.type}") from None

    def dim(self, label: OrbitLabel) -> int:
        return self.entry(label).dim

    @property
    def zero(self) -> CatalogEntry:
        return self.entries[0]

    @property
    def principal(self) -> CatalogEntry:
        return self.by_wdd((2,) * self.rs.rank)

    @property
    def minimal(self) -> CatalogEntry:
        # labels are <alpha_i, theta^vee>
        rs = self.rs
        theta = rs.highest_root.coords
        tt = rs.inner(theta, theta)
        return self.by_wdd(tuple(2 * rs.inner(rs.simple_roots[i].coords, theta) // tt for i in range(rs.rank)))


def build_catalog(t: SimpleType | str, seed: int = DEFAULT_SEED) -> OrbitCatalog:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return _build_catalog(t, seed)


@lru_cache(maxsize=None)
def _build_catalog(t: SimpleType, seed: int) -> OrbitCatalog:
    rs = build_root_system(t)
    sc = build_structure_constants(rs)
    real = build_realization(sc) if t.is_classical else None
    if t.is_classical:
        labels = classical_orbits(t)
    else:
        labels = [exceptional_label(t, w.labels) for w in enumerate_wdds(rs, sc, seed)]

    def adjoint_sig(e):
        ranks = tuple(linalg.power_ranks(ad_matrix(sc, e)))
        return ranks, sc.dim - (ranks[0] if ranks else 0)

    raw = []
    for lab in labels:
        g = grading_data(rs, lab.wdd)
        two = g.roots_of_degree(2)
        if not two:
            raw.append((lab, g, OrbitSignature((), sc.dim, () if real else None), AlgebraElement({}, sc.dim)))
            continue
        span = root_span(sc, two)

        def sample(s, span=span):
            e = generic_element(span, s)
            ranks, cdim = adjoint_sig(e)
            dranks = tuple(defining_rank_sequence(real, e)) if real else None
            return ranks, cdim, dranks

        tag = ("rep", lab.wdd.labels)
        sig = sample_generic(sample, seed, tag=tag)
        rep = None
        for k in range(7):
            cand = generic_element(span, derive_seed(seed, tag, k))
            if sample(derive_seed(seed, tag, k)) == sig:
                rep = cand
                break
        if rep is None:
            raise OrbitError(f"no generic representative found for {lab}")
        signature = OrbitSignature(sig[0], sig[1], sig[2])
        if signature.centralizer_dim != g.dim(0) + g.dim(1):
            raise OrbitError(f"{lab}: centralizer dimension disagrees with the grading")
        if real is not None:
            got = partition_from_ranks(real.size, sig[2])
            if got != lab.partition:
                raise OrbitError(f"{lab}: representative has Jordan type {got}")
        raw.append((lab, g, signature, rep))

    raw.sort(key=lambda r: (r[1].orbit_dim, r[0].sort_key()))
    entries = tuple(CatalogEntry(*r) for r in raw)

    family_parity: dict = {}
    if t.family == "D":
        for e in entries:
            if e.label.family:
                par = _lagrangian_parity(real, real.matrix(e.representative))
                family_parity.setdefault(e.label.partition, {})[par] = e.label.family
        for p, m in family_parity.items():
            if len(m) != 2:
                raise OrbitError(f"families of {p} are not separated by the Lagrangian test")

    covers = None
    if t.is_classical:
        labs = [e.label for e in entries]
        n = len(labs)
        leq = [[closure_leq(labs[i], labs[j]) for j in range(n)] for i in range(n)]
        covers = tuple(
            (i, j)
            for i in range(n)
            for j in range(n)
            if i != j and leq[i][j] and not any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n))
        )

    keys: dict = {}
    for e in entries:
        keys.setdefault(e.signature.key, []).append(e.label)
    collided = frozenset(lab for labs in keys.values() if len(labs) > 1 for lab in labs)
    return OrbitCatalog(t, rs, sc, seed, entries, covers, collided, real, family_parity)


def _lagrangian_parity(real: MatrixRealization, M: list[list]) -> int:
    """dim(L ∩ L0) mod 2 for the intrinsic Lagrangian L = Σ_k M^k ker M^{2k}.

    L is isotropic because (M^k u, M^j w) = ±(u, M^{j+k} w) vanishes for
    u ∈ ker M^{2k}, w ∈ ker M^{2j}; its family is an SO-invariant.
    """
    N = real.size
    n = N // 2
    vecs: list = []
    k = 1
    Pk = M
    while True:
        P2k = linalg.matmul(Pk, Pk)
        ker = linalg.nullspace(P2k, ncols=N)
        vecs += [[sum(Pk[i][j] * v[j] for j in range(N)) for i in range(N)] for v in ker]
        if not any(any(r) for r in P2k):
            break
        k += 1
        Pk = linalg.matmul(Pk, M)
    L = linalg.row_basis([v for v in vecs if any(v)])
    if len(L) != n:
        raise OrbitError("intrinsic subspace is not Lagrangian; partition is not very even")
    L0 = [[int(i == j) for j in range(N)] for i in range(n)]
    inter = 2 * n - linalg.rank_exact(L + L0)
    return inter % 2


# --- identification ---------------------------------------------------------------


def identify_orbit(cat: OrbitCatalog, e: AlgebraElement) -> OrbitLabel:
    if e.is_zero():
        return cat.zero.label
    if cat.realization is not None:
        M = cat.realization.matrix(e)
        ranks = linalg.power_ranks(M)
        p = partition_from_ranks(cat.realization.size, ranks)
        fam = None
        if is_very_even(cat.type, p):
            fam = cat.family_parity[p][_lagrangian_parity(cat.realization, M)]
        try:
            return cat.by_partition(p, fam).label
        except LabelError:
            raise OrbitError(f"Jordan type {p} is not an orbit of {cat.type}") from None
    ranks = tuple(linalg.power_ranks(ad_matrix(cat.sc, e)))
    key = (ranks, cat.sc.dim - ranks[0])
    cands = cat._by_sig.get(key)
    if not cands:
        raise OrbitError(f"no orbit of {cat.type} has adjoint signature {key}")
    if len(cands) == 1:
        return cands[0].label
    return _escalate(cat, e, cands)


def _escalate(cat: OrbitCatalog, e: AlgebraElement, cands: list[CatalogEntry]) -> OrbitLabel:
    from .centralizers import sl2_through

    tr = sl2_through(cat.sc, e)
    H = ad_matrix(cat.sc, tr.h)
    dim = cat.sc.dim
    mult = {}
    for k in range(-2 * 30, 2 * 30 + 1):
        shifted = [[H[i][j] - (k if i == j else 0) for j in range(dim)] for i in range(dim)]
        m = dim - linalg.rank_exact(shifted)
        if m:
            mult[k] = m
        if sum(mult.values()) == dim:
            break
    hits = [c for c in cands if c.grading.dim_by_degree == mult]
    if len(hits) != 1:
        raise OrbitError(f"unresolved signature collision among {[str(c.label) for c in cands]}")
    return hits[0].label


def dense_orbit(cat: OrbitCatalog, root_indices: Iterable[int], seed: int = DEFAULT_SEED) -> OrbitLabel:
    """Orbit whose closure is G·span{x_γ : γ in root_indices}."""
    idx = tuple(sorted(root_indices))
    if not idx:
        return cat.zero.label
    span = root_span(cat.sc, [cat.sc.x(k) for k in idx])
    return sample_generic(
        lambda s: identify_orbit(cat, generic_element(span, s)),
        seed,
        key=lambda lab: cat.dim(lab),
        tag=("span", idx),
    )


def richardson_orbit(cat: OrbitCatalog, S: Iterable[int]) -> OrbitLabel:
    """Dense orbit in G·p{S}^nil; ``S`` holds 0-based simple-root indices."""
    S = frozenset(S)
    if S not in cat._richardson:
        nil = nilradical_roots(cat.rs, S)
        lab = dense_orbit(cat, nil, cat.seed)
        if cat.dim(lab) != 2 * len(nil):
            raise OrbitError(f"Richardson orbit for S={sorted(S)} has dim {cat.dim(lab)} != 2*{len(nil)}")
        cat._richardson[S] = lab
    return cat._richardson[S]


def all_simple_subsets(rank: int) -> list[frozenset]:
    return [frozenset(c) for k in range(rank + 1) for c in itertools.combinations(range(rank), k)]


def polarisations(cat: OrbitCatalog, label: OrbitLabel) -> list[frozenset]:
    return [S for S in all_simple_subsets(cat.rs.rank) if richardson_orbit(cat, S) == label]


def embed_levi_roots(rs: RootSystem, nodes: Sequence[int], sub: RootSystem, roots: Iterable[int]) -> set[int]:
    out = set()
    for k in roots:
        v = [0] * rs.rank
        for j, c in enumerate(sub.positive_roots[k].coords):
            v[nodes[j]] += c
        out.add(rs.index[tuple(v)])
    return out


def induce(cat: OrbitCatalog, S: Iterable[int], inner: OrbitLabel | Sequence[OrbitLabel] = ()) -> OrbitLabel:
    """Ind from l{S} of ``inner`` (one label per Levi factor, ordered as
    ``levi_components``); an empty ``inner`` means the zero orbit."""
    S = frozenset(S)
    comps = levi_components(cat.rs, S)
    if isinstance(inner, OrbitLabel):
        inner = (inner,)
    inner = tuple(inner)
    if not inner:
        return richardson_orbit(cat, S)
    if len(inner) != len(comps):
        raise LabelError(f"l{{S}} has {len(comps)} simple factors, got {len(inner)} labels")
    nil = nilradical_roots(cat.rs, S)
    roots = set(nil)
    inner_dim = 0
    for (ct, nodes), lab in zip(comps, inner):
        if lab.type != ct:
            raise LabelError(f"label {lab} is for {lab.type}, factor is {ct}")
        sub = build_catalog(ct, cat.seed)
        g = sub.entry(lab).grading
        inner_dim += g.orbit_dim
        roots |= embed_levi_roots(cat.rs, nodes, sub.rs, g.dynkin_roots)
    out = dense_orbit(cat, roots, cat.seed)
    if cat.dim(out) != inner_dim + 2 * len(nil):
        raise OrbitError(f"induction dimension check failed for S={sorted(S)}, inner={[str(x) for x in inner]}")
    return out


def inductions(cat: OrbitCatalog, S: Iterable[int]):
    """All (inner, induced) pairs for the Levi l{S}."""
    S = frozenset(S)
    comps = levi_components(cat.rs, S)
    subs = [build_catalog(ct, cat.seed).labels() for ct, _ in comps]
    for inner in itertools.product(*subs):
        yield inner, induce(cat, S, inner) if inner else richardson_orbit(cat, S)

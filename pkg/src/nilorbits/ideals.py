"""Ad-nilpotent ideals of a Borel subalgebra, grouped by associated orbit.

An ideal is an upper set of the positive-root poset, stored as a bitmask over
the canonical root order.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .chevalley import DEFAULT_SEED, derive_seed
from .orbits import (
    GradingData,
    OrbitCatalog,
    OrbitLabel,
    all_simple_subsets,
    build_catalog,
    dense_orbit,
    inductions,
    polarisations,
)
from .rootsys import RootSystem, SimpleType, levi_components, nilradical_roots

log = logging.getLogger(__name__)

LARGE_TYPES = {SimpleType("E", 7), SimpleType("E", 8)}


class ClassificationError(RuntimeError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


@lru_cache(maxsize=None)
def _lower_covers(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    low: list[list[int]] = [[] for _ in rs.positive_roots]
    for k, ups in enumerate(rs.covers):
        for u in ups:
            low[u].append(k)
    return tuple(tuple(x) for x in low)


@dataclass(frozen=True)
class AdNilpotentIdeal:
    members: int
    generators: tuple[int, ...]
    dim: int

    @classmethod
    def from_members(cls, rs: RootSystem, members: int | Iterable[int]) -> "AdNilpotentIdeal":
        if not isinstance(members, int):
            m = 0
            for k in members:
                m |= 1 << k
            members = m
        low = _lower_covers(rs)
        idx = _bits(members)
        for k in idx:
            if any(not (members >> u) & 1 for u in rs.covers[k]):
                raise ClassificationError(f"root set {idx} is not upward closed")
        gens = tuple(k for k in idx if not any((members >> j) & 1 for j in low[k]))
        return cls(members, gens, len(idx))

    @classmethod
    def from_generators(cls, rs: RootSystem, gens: Iterable[int]) -> "AdNilpotentIdeal":
        m = 0
        stack = list(gens)
        while stack:
            k = stack.pop()
            if not (m >> k) & 1:
                m |= 1 << k
                stack.extend(rs.covers[k])
        return cls.from_members(rs, m)

    def roots(self) -> list[int]:
        return _bits(self.members)

    def __contains__(self, k: int) -> bool:
        return bool((self.members >> k) & 1)

    def issubset(self, other: "AdNilpotentIdeal") -> bool:
        return self.members & ~other.members == 0


def enumerate_ideals(rs: RootSystem) -> list[AdNilpotentIdeal]:
    """All upper sets, built by deciding roots from the top of the order down."""
    masks = [0]
    for k in range(len(rs.positive_roots) - 1, -1, -1):
        need = 0
        for u in rs.covers[k]:
            need |= 1 << u
        bit = 1 << k
        masks += [m | bit for m in masks if m & need == need]
    masks.sort(key=lambda m: (bin(m).count("1"), _bits(m)))
    return [AdNilpotentIdeal.from_members(rs, m) for m in masks]


def generalized_catalan(t: SimpleType) -> int:
    """prod (h + e_i + 1)/(e_i + 1) over the exponents."""
    n = t.rank
    exps = {
        "A": list(range(1, n + 1)),
        "B": list(range(1, 2 * n, 2)),
        "C": list(range(1, 2 * n, 2)),
        "D": list(range(1, 2 * n - 2, 2)) + [n - 1],
        "E": {6: [1, 4, 5, 7, 8, 11], 7: [1, 5, 7, 9, 11, 13, 17], 8: [1, 7, 11, 13, 17, 19, 23, 29]}.get(n),
        "F": [1, 5, 7, 11],
        "G": [1, 5],
    }[t.family]
    h = max(exps) + 1
    num = den = 1
    for e in exps:
        num *= h + e + 1
        den *= e + 1
    return num // den


def dynkin_ideal(rs: RootSystem, g: GradingData) -> AdNilpotentIdeal:
    return AdNilpotentIdeal.from_members(rs, g.dynkin_roots)


def associated_orbit(cat: OrbitCatalog, ideal: AdNilpotentIdeal, seed: int = DEFAULT_SEED) -> OrbitLabel:
    return dense_orbit(cat, ideal.roots(), seed)


def derived_ideal(rs: RootSystem) -> AdNilpotentIdeal:
    """[u,u] = roots of height at least 2."""
    return AdNilpotentIdeal.from_members(rs, (k for k, r in enumerate(rs.positive_roots) if r.height >= 2))


def detect_induced_via_simple_roots(rs: RootSystem, ideal: AdNilpotentIdeal) -> frozenset | None:
    S = frozenset(i for i in range(rs.rank) if i in ideal)
    return S or None


# --- classification ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IdealClass:
    orbit: OrbitLabel
    ideals: tuple[AdNilpotentIdeal, ...]
    d_min_observed: int
    d_max: int
    dynkin_ideal: AdNilpotentIdeal
    maximal_elements: tuple[AdNilpotentIdeal, ...]
    minimal_elements: tuple[AdNilpotentIdeal, ...]
    hasse_connected: bool

    @property
    def dims(self) -> list[int]:
        return sorted(i.dim for i in self.ideals)

    def __len__(self):
        return len(self.ideals)


@dataclass(eq=False)
class ClassificationReport:
    type: SimpleType
    classes: tuple[IdealClass, ...]
    total: int
    seed: int
    findings: "ConjectureFindings | None" = None
    _by_orbit: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_orbit = {c.orbit: c for c in self.classes}

    def cls(self, orbit: OrbitLabel) -> IdealClass:
        try:
            return self._by_orbit[orbit]
        except KeyError:
            raise ClassificationError(f"no class for {orbit}") from None


def _connected(ideals: Sequence[AdNilpotentIdeal]) -> bool:
    n = len(ideals)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            a, b = ideals[i], ideals[j]
            if a.issubset(b) or b.issubset(a):
                parent[find(i)] = find(j)
    return len({find(i) for i in range(n)}) <= 1


def build_class(cat: OrbitCatalog, orbit: OrbitLabel, members: Sequence[AdNilpotentIdeal]) -> IdealClass:
    if not members:
        raise ClassificationError(f"class of {orbit} is empty")
    dyn = dynkin_ideal(cat.rs, cat.entry(orbit).grading)
    if all(m.members != dyn.members for m in members):
        raise ClassificationError(f"class of {orbit} misses its Dynkin ideal")
    maxi = tuple(a for a in members if not any(a is not b and a.issubset(b) for b in members))
    mini = tuple(a for a in members if not any(a is not b and b.issubset(a) for b in members))
    return IdealClass(
        orbit=orbit,
        ideals=tuple(members),
        d_min_observed=min(m.dim for m in members),
        d_max=max(m.dim for m in members),
        dynkin_ideal=dyn,
        maximal_elements=maxi,
        minimal_elements=mini,
        hasse_connected=_connected(members),
    )


def _worker_init(t: str, seed: int):
    build_catalog(t, seed)


def _worker_chunk(args):
    t, cat_seed, seed, chunk = args
    cat = build_catalog(t, cat_seed)
    out = []
    for idx, mask in chunk:
        out.append((idx, dense_orbit(cat, _bits(mask), derive_seed(seed, "ideal", idx))))
    return out


def classify(cat: OrbitCatalog, seed: int | None = None, jobs: int = 1, allow_large: bool = False) -> ClassificationReport:
    if cat.type in LARGE_TYPES and not allow_large:
        raise ClassificationError(f"classification of {cat.type} is gated; pass allow_large")
    seed = cat.seed if seed is None else seed
    ideals = enumerate_ideals(cat.rs)
    labels: list = [None] * len(ideals)
    if jobs > 1 and len(ideals) > 50:
        items = [(k, I.members) for k, I in enumerate(ideals)]
        size = max(1, len(items) // (jobs * 4))
        chunks = [(str(cat.type), cat.seed, seed, items[i : i + size]) for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_init, initargs=(str(cat.type), cat.seed)) as ex:
            for part in ex.map(_worker_chunk, chunks):
                for idx, lab in part:
                    labels[idx] = lab
    else:
        for k, I in enumerate(ideals):
            labels[k] = dense_orbit(cat, I.roots(), derive_seed(seed, "ideal", k))
    groups: dict = {}
    for I, lab in zip(ideals, labels):
        groups.setdefault(lab, []).append(I)
    classes = []
    for e in cat.entries:
        classes.append(build_class(cat, e.label, groups.pop(e.label, [])))
    if groups:
        raise ClassificationError(f"ideals associated with unknown orbits: {list(groups)}")
    if sum(len(c) for c in classes) != len(ideals):
        raise ClassificationError("classes do not partition the ideals")
    return ClassificationReport(cat.type, tuple(classes), len(ideals), seed)


@lru_cache(maxsize=None)
def classify_type(t: SimpleType, seed: int = DEFAULT_SEED) -> ClassificationReport:
    return classify(build_catalog(t, seed))


def is_lonely(report: ClassificationReport, orbit: OrbitLabel) -> bool:
    c = report.cls(orbit)
    if len(c.ideals) == 1:
        if c.ideals[0].members != c.dynkin_ideal.members:
            raise ClassificationError(f"singleton class of {orbit} is not its Dynkin ideal")
        return True
    return False


@dataclass(frozen=True)
class DminVerdict:
    orbit: OrbitLabel
    observed: int
    formula: int

    @property
    def ok(self) -> bool:
        return self.observed == self.formula


def check_dmin_formula(report: ClassificationReport, cdata: dict) -> list[DminVerdict]:
    """``cdata`` maps orbit labels to CentralizerData."""
    return [DminVerdict(c.orbit, c.d_min_observed, cdata[c.orbit].d_min) for c in report.classes]


# --- conjecture checkers ----------------------------------------------------------


@dataclass(frozen=True)
class InductionWitness:
    S: frozenset
    inner: tuple
    d_max_inner: int
    nil_dim: int


@dataclass
class ConjectureFindings:
    type: SimpleType
    rigid: list = field(default_factory=list)
    conj34_witnesses: dict = field(default_factory=dict)  # orbit -> list of InductionWitness
    conj34_counterexamples: list = field(default_factory=list)
    hasse_disconnected: list = field(default_factory=list)
    nonuniform_minimal: list = field(default_factory=list)  # (orbit, dims of minimal elements)
    rigidity_mismatches: list = field(default_factory=list)
    simple_root_mismatches: list = field(default_factory=list)

    @property
    def counterexamples(self) -> int:
        return (
            len(self.conj34_counterexamples)
            + len(self.hasse_disconnected)
            + len(self.nonuniform_minimal)
            + len(self.rigidity_mismatches)
            + len(self.simple_root_mismatches)
        )


def levi_dmax(cat: OrbitCatalog, S: frozenset, inner: tuple) -> int:
    total = 0
    for (ct, _), lab in zip(levi_components(cat.rs, S), inner):
        rep = classify_type(ct, cat.seed)
        total += rep.cls(lab).d_max
    return total


def induction_table(cat: OrbitCatalog) -> dict:
    """orbit -> list of (S, inner) with S nonempty realising it as induced."""
    out: dict = {}
    for S in all_simple_subsets(cat.rs.rank):
        if not S:
            continue
        for inner, lab in inductions(cat, S):
            out.setdefault(lab, []).append((S, inner))
    return out


def check_conjectures(cat: OrbitCatalog, report: ClassificationReport) -> ConjectureFindings:
    f = ConjectureFindings(cat.type)
    table = induction_table(cat)
    rs = cat.rs
    derived = derived_ideal(rs)
    for c in report.classes:
        O = c.orbit
        pairs = table.get(O, [])
        rigid = not pairs
        if rigid:
            f.rigid.append(O)
        else:
            wits = []
            for S, inner in pairs:
                nil = len(nilradical_roots(rs, S))
                dm = levi_dmax(cat, S, inner)
                if dm + nil == c.d_max:
                    wits.append(InductionWitness(S, inner, dm, nil))
                elif dm + nil > c.d_max:
                    raise ClassificationError(f"induction lift exceeds d_max for {O}")
            f.conj34_witnesses[O] = wits
            if not wits:
                f.conj34_counterexamples.append(O)
        if not c.hasse_connected:
            f.hasse_disconnected.append(O)
        mins = sorted({m.dim for m in c.minimal_elements})
        if mins != [c.d_min_observed]:
            f.nonuniform_minimal.append((O, mins))
        in_derived = all(I.issubset(derived) for I in c.ideals)
        if in_derived != rigid:
            f.rigidity_mismatches.append(O)
        induced_from = {S for S, _ in pairs}
        for I in c.ideals:
            S = detect_induced_via_simple_roots(rs, I)
            if S is not None and S not in induced_from:
                f.simple_root_mismatches.append((O, S))
    report.findings = f
    return f


def richardson_flags(cat: OrbitCatalog) -> dict:
    """orbit -> list of polarisations (empty if not Richardson)."""
    return {e.label: polarisations(cat, e.label) for e in cat.entries}

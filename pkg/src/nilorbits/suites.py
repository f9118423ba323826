"""Verification suites: each reproduces a published statement by computation.

A suite returns a list of ``Check`` records; a failed check is a finding,
never an exception.  Internal consistency errors (genericity, identification)
propagate and are mapped to exit code 3 by the CLI.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import linalg
from .analysis import TypeAnalysis, analyze
from .centralizers import centralizer_data_from_grading, intermediate_orbit, intermediate_wdd
from .chevalley import DEFAULT_SEED, bracket, build_realization, build_structure_constants
from .ideals import (
    associated_orbit,
    derived_ideal,
    enumerate_ideals,
    generalized_catalan,
)
from .orbits import (
    Partition,
    build_catalog,
    classical_orbits,
    dual_partition,
    enumerate_wdds,
    grading_data,
    orbit_dimension,
)
from .rootsys import SimpleType, build_root_system, nilradical_roots

SUITES = ("chevalley", "wdd", "extreme", "lonely", "dmin", "richardson", "anomalies", "conjectures")

DEFAULT_TYPES = (
    [SimpleType("A", n) for n in range(1, 6)]
    + [SimpleType("B", n) for n in range(2, 5)]
    + [SimpleType("C", n) for n in range(2, 5)]
    + [SimpleType("D", n) for n in range(4, 6)]
    + [SimpleType("G", 2), SimpleType("F", 4)]
)
E6 = SimpleType("E", 6)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteConfig:
    max_rank: int = 5
    seed: int = DEFAULT_SEED
    jobs: int = 1
    include_e6: bool = False

    def types(self) -> list[SimpleType]:
        ts = [t for t in DEFAULT_TYPES if t.rank <= self.max_rank]
        if self.include_e6 and self.max_rank >= 6:
            ts.append(E6)
        return ts

    def analysis(self, t: SimpleType) -> TypeAnalysis:
        return analyze(t, self.seed, self.jobs)


def _check(out: list, suite: str, name: str, ok: bool, detail: str = ""):
    out.append(Check(suite, name, bool(ok), detail))


def _by_partition(a: TypeAnalysis, parts, family=None):
    return a.catalog.by_partition(Partition.of(parts), family).label


# --- reference lists--------------------------------------------------------------


def expected_extreme(t: SimpleType) -> set | None:
    """Nontrivial extreme orbits as partitions (classical) or None."""
    n, fam = t.rank, t.family
    if fam == "A":
        N = n + 1
        k = N // 2
        out = {Partition.of([2 * m] + [1] * (N - 2 * m)) for m in range(1, k + 1)}
        if N % 2:
            out |= {Partition.of([m, N - m]) for m in range(k + 1, 2 * k + 1)}
            out.add(Partition((N,)))
        return out
    if fam == "C":
        return {Partition.of([2 * m] + [1] * (2 * n - 2 * m)) for m in range(1, n + 1)}
    if fam == "B" and n >= 3:
        return {Partition.of([2, 2] + [1] * (2 * n - 3)), Partition.of([2 * n - 3, 2, 2]), Partition((2 * n + 1,))}
    if fam == "D":
        return {Partition.of([2, 2] + [1] * (2 * n - 4)), Partition.of([2 * n - 5, 2, 2, 1]), Partition.of([2 * n - 1, 1])}
    return None


def expected_lonely(a: TypeAnalysis) -> set:
    """Nonzero lonely orbits per the classification theorem."""
    t, cat = a.type, a.catalog
    pr = cat.principal.label
    fam = t.family
    if fam == "B" and t.rank == 2:
        # so5 = sp4: both nonzero extreme orbits are lonely, as for C2
        return {pr, cat.minimal.label}
    if fam in "ABF":
        return {pr}
    if fam == "C":
        return {cat.by_partition(p).label for p in expected_extreme(t)}
    return {pr, intermediate_orbit(cat)}


INTERMEDIATE_ROWS = {
    # type: (wdd, dim O, dim g(h;1), dim g(h;2), rk G_e, d_Dy)
    "G2": ((1, 0), 8, 2, 1, 1, 3),
    "F4": ((1, 0, 1, 2), 42, 4, 3, 1, 19),
    "E6": (None, 64, 6, 5, 1, 29),
    "E7": (None, 118, 6, 6, 1, 56),
    "E8": (None, 232, 6, 7, 1, 113),
}


# --- suites -----------------------------------------------------------------------


def suite_chevalley(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "chevalley"
    for t in cfg.types():
        sc = build_structure_constants(t)
        d = sc.dim
        if t.rank <= 4:
            triples = itertools.combinations(range(d), 3)
            label = "all triples"
        else:
            rng = random.Random(cfg.seed)
            triples = [tuple(rng.randrange(d) for _ in range(3)) for _ in range(2000)]
            label = "2000 seeded triples"
        bad = _jacobi_failures(sc, triples)
        _check(out, s, f"Jacobi {t} ({label})", bad == 0, f"{bad} failures")
        if t.is_classical and t.rank <= 5:
            bad = _homomorphism_failures(sc)
            _check(out, s, f"realization {t} bracket-preserving", bad == 0, f"{bad} failing pairs")
    for t in ("E6", "E7", "E8"):
        sc = build_structure_constants(t)
        rng = random.Random(cfg.seed)
        triples = [tuple(rng.randrange(sc.dim) for _ in range(3)) for _ in range(10_000)]
        bad = _jacobi_failures(sc, triples)
        _check(out, s, f"Jacobi {t} (10^4 seeded triples)", bad == 0, f"{bad} failures")
    for t, dim in (("G2", 14), ("F4", 52), ("E6", 78)):
        got = build_structure_constants(t).dim
        _check(out, s, f"ambient dim {t} = {dim}", got == dim, f"got {got}")
    rng = random.Random(cfg.seed)
    disagree = 0
    for _ in range(100):
        m, n = rng.randint(1, 9), rng.randint(1, 9)
        M = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6 else 0 for _ in range(n)] for _ in range(m)]
        order = list(range(n))
        rng.shuffle(order)
        if linalg.rank_exact(M) != linalg.bareiss_rank(M, order):
            disagree += 1
    _check(out, s, "rank: FLINT vs Bareiss (100 random matrices)", disagree == 0, f"{disagree} disagreements")
    return out


def _jacobi_failures(sc, triples) -> int:
    bad = 0
    for i, j, k in triples:
        a, b, c = sc.basis_vector(i), sc.basis_vector(j), sc.basis_vector(k)
        tot = bracket(sc, a, bracket(sc, b, c)) + bracket(sc, b, bracket(sc, c, a)) + bracket(sc, c, bracket(sc, a, b))
        if not tot.is_zero():
            bad += 1
    return bad


def _homomorphism_failures(sc) -> int:
    real = build_realization(sc)
    bad = 0
    for i in range(sc.dim):
        A = real.images[i]
        for j in range(i + 1, sc.dim):
            B = real.images[j]
            lhs = real.matrix(bracket(sc, sc.basis_vector(i), sc.basis_vector(j)))
            AB, BA = linalg.matmul(A, B), linalg.matmul(B, A)
            if lhs != [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)]:
                bad += 1
    return bad


def suite_wdd(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "wdd"
    for t in cfg.types():
        rs = build_root_system(t)
        found = set(enumerate_wdds(rs, seed=cfg.seed))
        if t.is_classical:
            labs = classical_orbits(t)
            want = {lab.wdd for lab in labs}
            _check(out, s, f"{t}: density scan = partition diagrams", found == want and len(want) == len(labs),
                   f"{len(found)} scanned, {len(want)} from partitions")
            bad = [str(l) for l in labs if orbit_dimension(l) != grading_data(rs, l.wdd).orbit_dim]
            _check(out, s, f"{t}: partition dimension formula = grading dimension", not bad, ", ".join(bad))
    counts = {"G2": 5, "F4": 16}
    if cfg.include_e6:
        counts["E6"] = 21
    for t, n in counts.items():
        got = len(enumerate_wdds(build_root_system(t), seed=cfg.seed))
        _check(out, s, f"{t}: {n} weighted Dynkin diagrams", got == n, f"got {got}")
    for t in ("G2", "F4"):
        cat = build_catalog(t, cfg.seed)
        bad = [str(e.label) for e in cat if e.label.name is None]
        _check(out, s, f"{t}: every diagram carries a name", not bad, ", ".join(bad))
    out += table1_checks(cfg)
    return out


def table1_checks(cfg: SuiteConfig) -> list[Check]:
    """Grading rows and rk G_e of the intermediate orbit; needs no classification."""
    out: list[Check] = []
    for t, (wdd, dim, g1, g2, rk, ddy) in INTERMEDIATE_ROWS.items():
        rs = build_root_system(t)
        w = intermediate_wdd(rs)
        g = grading_data(rs, w)
        got = (g.orbit_dim, g.dim(1), g.dim(2), g.d_dy)
        ok = got == (dim, g1, g2, ddy) and (wdd is None or w.labels == wdd)
        _check(out, "wdd", f"intermediate row {t}: grading of the intermediate orbit", ok, f"wdd {w}, (dim, g1, g2, dDy) = {got}")
        d = centralizer_data_from_grading(rs, build_structure_constants(rs), g, cfg.seed)
        _check(out, "wdd", f"intermediate row {t}: rk G_e = {rk}", d.rk_ge == rk, f"got {d.rk_ge}")
    return out


def suite_extreme(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "extreme"
    for t in cfg.types():
        a = cfg.analysis(t)
        cat = a.catalog
        got = {lab for lab in a.nonzero() if a.extreme[lab]}
        exp = expected_extreme(t)
        if exp is not None:
            got_p = {lab.partition for lab in got}
            _check(out, s, f"{t}: nontrivial extreme orbits", got_p == exp,
                   f"got {sorted(map(str, got_p))}, expected {sorted(map(str, exp))}")
        if t.family in "BDEFG" and not (t.family == "B" and t.rank < 3):
            imd = intermediate_orbit(cat)
            want = {cat.principal.label, cat.minimal.label, imd}
            _check(out, s, f"{t}: exactly three nontrivial extreme orbits (pr, min, imd)", got == want,
                   f"got {sorted(map(str, got))}")
        pr, mn = cat.principal, cat.minimal
        dpr, dmn = a.cdata[pr.label], a.cdata[mn.label]
        _check(out, s, f"{t}: principal g(h;2)=rank, rk G_e=0",
               pr.grading.dim(2) == t.rank and dpr.rk_ge == 0 and dpr.d_min == len(cat.rs.positive_roots))
        _check(out, s, f"{t}: minimal g(h;2)=1, rk G_e=rank-1, d_min=1",
               mn.grading.dim(2) == 1 and dmn.rk_ge == t.rank - 1 and dmn.d_min == 1)
        bad = [str(l) for l in a.catalog.labels() if a.extreme[l] != (a.report.cls(l).d_min_observed == cat.entry(l).grading.d_dy)]
        _check(out, s, f"{t}: extreme iff d_min (observed) = d_Dy", not bad, ", ".join(bad))
        bad = [str(l) for l in a.catalog.labels() if cat.entry(l).grading.dim(2) + a.cdata[l].rk_ge < t.rank]
        _check(out, s, f"{t}: dim g(h;2) + rk G_e >= rank", not bad, ", ".join(bad))
    return out


def suite_lonely(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "lonely"
    for t in cfg.types():
        a = cfg.analysis(t)
        got = {lab for lab in a.nonzero() if a.lonely[lab]}
        exp = expected_lonely(a)
        _check(out, s, f"{t}: lonely orbits", got == exp, f"got {sorted(map(str, got))}, expected {sorted(map(str, exp))}")
        if t.family == "C":
            n = t.rank
            bad = []
            for m in range(1, n + 1):
                g = a.catalog.by_partition(Partition.of([2 * m] + [1] * (2 * n - 2 * m))).grading
                if g.d_dy != (m - 1) * (2 * n - m + 1) + 1:
                    bad.append(m)
            _check(out, s, f"{t}: d_Dy(O_m(n)) = (m-1)(2n-m+1)+1", not bad, f"fails for m={bad}")
        if t.family == "D":
            n = t.rank
            imd = intermediate_orbit(a.catalog)
            ddy = a.catalog.entry(imd).grading.d_dy
            _check(out, s, f"{t}: d_Dy(O_imd) = n^2-n-7", ddy == n * n - n - 7, f"got {ddy}")
        if t == SimpleType("D", 5):
            rs = a.catalog.rs
            uu = derived_ideal(rs)
            o5 = _by_partition(a, (5, 2, 2, 1))
            cls = a.report.cls(o5)
            _check(out, s, "so10: dim [u,u] = 15", uu.dim == 15, f"got {uu.dim}")
            _check(out, s, "so10: d_Dy(O_5) = 13", a.catalog.entry(o5).grading.d_dy == 13)
            inside = [I for I in cls.ideals if I.issubset(uu) and 13 <= I.dim <= 15 and I.members != cls.dynkin_ideal.members]
            _check(out, s, "so10: no non-Dynkin ideal of dim 13-15 in [u,u] maps to O_5", not inside and len(cls.ideals) == 1,
                   f"{len(inside)} found, class size {len(cls.ideals)}")
            dense = associated_orbit(a.catalog, uu, cfg.seed)
            _check(out, s, "so10: dense orbit in G.[u,u] is (5,3,1,1)", dense == _by_partition(a, (5, 3, 1, 1)), str(dense))
    return out


def suite_dmin(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "dmin"
    for t in ("A2", "B2", "G2", "F4"):
        rs = build_root_system(t)
        n_enum = len(enumerate_ideals(rs))
        n_brute = brute_force_ideal_count(rs)
        _check(out, s, f"{t}: ideal count enumerator = brute force", n_enum == n_brute,
               f"enumerator {n_enum}, brute force {n_brute}, Catalan {generalized_catalan(rs.type)}")
    for t in cfg.types():
        a = cfg.analysis(t)
        bad = [(str(c.orbit), c.d_min_observed, a.cdata[c.orbit].d_min) for c in a.report.classes
               if c.d_min_observed != a.cdata[c.orbit].d_min]
        _check(out, s, f"{t}: d_min observed = dim B - dim B(G_e) for all {len(a.report.classes)} orbits", not bad, str(bad))
        bad = [str(c.orbit) for c in a.report.classes
               if not (c.d_min_observed <= a.catalog.entry(c.orbit).grading.d_dy <= c.d_max <= a.catalog.dim(c.orbit) // 2)]
        _check(out, s, f"{t}: d_min <= d_Dy <= d_max <= dim/2", not bad, ", ".join(bad))
        _check(out, s, f"{t}: ideal count = generalized Catalan", a.report.total == generalized_catalan(t))
    return out


def brute_force_ideal_count(rs) -> int:
    """Count antichains of the root poset by subset size (independent of the enumerator)."""
    n = len(rs.positive_roots)
    coords = [r.coords for r in rs.positive_roots]

    def comparable(i, j):
        a, b = coords[i], coords[j]
        return all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b))

    inc = [[comparable(i, j) for j in range(n)] for i in range(n)]
    total = 1  # empty antichain
    k = 1
    while True:
        found = 0
        for sub in itertools.combinations(range(n), k):
            if all(not inc[i][j] for i, j in itertools.combinations(sub, 2)):
                found += 1
        if not found:
            return total
        total += found
        k += 1


def suite_richardson(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "richardson"
    for t in cfg.types():
        a = cfg.analysis(t)
        rs = a.catalog.rs
        bad_eq, bad_bound, bad_nil = [], [], []
        nil_sets = {S: nilradical_roots(rs, S) for labs in a.polar.values() for S in labs}
        for c in a.report.classes:
            half = a.catalog.dim(c.orbit) // 2
            rich = bool(a.polar[c.orbit])
            if c.d_max > half:
                bad_bound.append(str(c.orbit))
            if (c.d_max == half) != rich:
                bad_eq.append(str(c.orbit))
            pols = {frozenset(nil_sets[S]) for S in a.polar[c.orbit]}
            for I in c.ideals:
                if I.dim == half and frozenset(I.roots()) not in pols:
                    bad_nil.append(str(c.orbit))
        _check(out, s, f"{t}: d_max <= dim O / 2", not bad_bound, ", ".join(bad_bound))
        _check(out, s, f"{t}: d_max = dim O / 2 iff Richardson", not bad_eq, ", ".join(bad_eq))
        _check(out, s, f"{t}: class members of dim O/2 are polarisation nilradicals", not bad_nil, ", ".join(sorted(set(bad_nil))))
        even_bad = [str(e.label) for e in a.catalog if e.grading.is_even
                    and frozenset(i for i, x in enumerate(e.label.wdd.labels) if x) not in a.polar[e.label]]
        _check(out, s, f"{t}: even orbits are polarised by their nonzero labels", not even_bad, ", ".join(even_bad))
        if t.family == "A":
            N = t.rank + 1
            bad = []
            for c in a.report.classes:
                ghat = dual_partition(c.orbit.partition)
                if 2 * c.d_max != N * N - sum(x * x for x in ghat):
                    bad.append(str(c.orbit))
            _check(out, s, f"{t}: d_max(O(lambda)) = (n^2 - sum c_j^2)/2", not bad, ", ".join(bad))
        if t == SimpleType("A", 5):
            o = _by_partition(a, (2, 2, 1, 1))
            c = a.report.cls(o)
            _check(out, s, "sl6 (2,2,1,1): dim 16", a.catalog.dim(o) == 16)
            _check(out, s, "sl6 (2,2,1,1): d_max 8", c.d_max == 8, f"got {c.d_max}")
            _check(out, s, "sl6 (2,2,1,1): maximal element of dim 5", any(I.dim == 5 for I in c.maximal_elements),
                   f"maximal dims {sorted(I.dim for I in c.maximal_elements)}")
            pols = a.polar[o]
            _check(out, s, "sl6 (2,2,1,1): two polarisations with 8-dim nilradicals",
                   len(pols) >= 2 and all(len(nilradical_roots(rs, S)) == 8 for S in pols), f"{len(pols)} polarisations")
    return out


def suite_anomalies(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "anomalies"
    if cfg.max_rank < 4:
        return out
    a = cfg.analysis(SimpleType("D", 4))
    imd = _by_partition(a, (3, 2, 2, 1))
    ci = a.report.cls(imd)
    _check(out, s, "so8: O_imd = (3,2,2,1), dim 16", a.catalog.dim(imd) == 16 and intermediate_orbit(a.catalog) == imd)
    _check(out, s, "so8: d_max(O_imd) = 5", ci.d_max == 5, f"got {ci.d_max}")
    boundary = [_by_partition(a, (3, 1, 1, 1, 1, 1)), _by_partition(a, (2, 2, 2, 2), "I"), _by_partition(a, (2, 2, 2, 2), "II")]
    for o in boundary:
        c = a.report.cls(o)
        _check(out, s, f"so8: {o} is even with dim 12 and d_max 6",
               a.catalog.dim(o) == 12 and c.d_max == 6 and a.catalog.entry(o).grading.is_even,
               f"dim {a.catalog.dim(o)}, d_max {c.d_max}")
    cI, cII = a.report.cls(boundary[1]), a.report.cls(boundary[2])
    same = (cI.dims == cII.dims and cI.d_max == cII.d_max and cI.d_min_observed == cII.d_min_observed)
    disjoint = not ({I.members for I in cI.ideals} & {I.members for I in cII.ideals})
    _check(out, s, "so8: (2^4) I and II give two distinct classes with identical statistics", same and disjoint and boundary[1] != boundary[2])
    if cfg.max_rank >= 5:
        a5 = cfg.analysis(SimpleType("D", 5))
        o2 = _by_partition(a5, (5, 2, 2, 1))
        o1 = _by_partition(a5, (3, 3, 3, 1))
        n = 5
        _check(out, s, "so10: (3,3,3,1) is Richardson with d_max = n^2-n-5 = dim O_imd/2 - 1",
               bool(a5.polar[o1]) and a5.report.cls(o1).d_max == n * n - n - 5 == a5.catalog.dim(o2) // 2 - 1)
    if cfg.include_e6:
        a6 = cfg.analysis(E6)
        cat = a6.catalog
        imd = intermediate_orbit(cat)
        o1 = cat.by_wdd((1, 1, 1, 0, 1, 1)).label
        c1 = a6.report.cls(o1)
        _check(out, s, "E6: O_1 = A4+A1 [111011] is Richardson of dim 62 with d_max 31",
               cat.dim(o1) == 62 and bool(a6.polar[o1]) and c1.d_max == 31, f"dim {cat.dim(o1)}, d_max {c1.d_max}")
        _check(out, s, "E6: d_max(O_imd) = 29 and dim O_imd - dim O_1 = 2",
               a6.report.cls(imd).d_max == 29 and cat.dim(imd) - cat.dim(o1) == 2, f"d_max {a6.report.cls(imd).d_max}")
    return out


def suite_conjectures(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    s = "conjectures"
    for t in cfg.types():
        a = cfg.analysis(t)
        f = a.findings
        _check(out, s, f"{t}: d_max attained via induction for every non-rigid orbit",
               not f.conj34_counterexamples, ", ".join(map(str, f.conj34_counterexamples)))
        _check(out, s, f"{t}: Hasse diagram of each class connected", not f.hasse_disconnected,
               ", ".join(map(str, f.hasse_disconnected)))
        _check(out, s, f"{t}: minimal elements have dimension d_min", not f.nonuniform_minimal,
               "; ".join(f"{o}: minimal dims {d}" for o, d in f.nonuniform_minimal))
        _check(out, s, f"{t}: rigid iff every class member lies in [u,u]", not f.rigidity_mismatches,
               ", ".join(map(str, f.rigidity_mismatches)))
        _check(out, s, f"{t}: simple roots in an ideal give an induction", not f.simple_root_mismatches)
        bad = [str(c.orbit) for c in a.report.classes if c.d_min_observed == c.d_max and len(c.ideals) != 1]
        _check(out, s, f"{t}: d_min = d_max implies lonely", not bad, ", ".join(bad))
    return out


RUNNERS: dict[str, Callable[[SuiteConfig], list[Check]]] = {
    "chevalley": suite_chevalley,
    "wdd": suite_wdd,
    "extreme": suite_extreme,
    "lonely": suite_lonely,
    "dmin": suite_dmin,
    "richardson": suite_richardson,
    "anomalies": suite_anomalies,
    "conjectures": suite_conjectures,
}


def run_suites(names, cfg: SuiteConfig) -> list[Check]:
    if names is None or names == "all" or "all" in names:
        names = SUITES
    out: list[Check] = []
    for n in names:
        out += RUNNERS[n](cfg)
    return out

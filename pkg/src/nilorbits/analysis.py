"""Per-type bundle of everything the reports and suites need."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .centralizers import CentralizerData, centralizer_data, intermediate_orbit, is_extreme
from .chevalley import DEFAULT_SEED
from .ideals import (
    LARGE_TYPES,
    ClassificationError,
    ClassificationReport,
    ConjectureFindings,
    check_conjectures,
    classify,
    is_lonely,
)
from .orbits import OrbitCatalog, OrbitLabel, build_catalog, polarisations
from .rootsys import SimpleType, root_str

SCHEMA_VERSION = 1


@dataclass(eq=False)
class TypeAnalysis:
    type: SimpleType
    catalog: OrbitCatalog
    report: ClassificationReport
    cdata: dict
    polar: dict
    extreme: dict
    lonely: dict
    findings: ConjectureFindings = field(repr=False)

    @property
    def rigid(self) -> set:
        return set(self.findings.rigid)

    def nonzero(self) -> list[OrbitLabel]:
        return [e.label for e in self.catalog.entries[1:]]


def analyze(t: SimpleType | str, seed: int = DEFAULT_SEED, jobs: int = 1, allow_large: bool = False) -> TypeAnalysis:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    if t in LARGE_TYPES and not allow_large:
        raise ClassificationError(f"{t} is gated; pass allow_large")
    return _analyze(t, seed, jobs)


@lru_cache(maxsize=None)
def _analyze(t: SimpleType, seed: int, jobs: int) -> TypeAnalysis:
    cat = build_catalog(t, seed)
    rep = classify(cat, jobs=jobs, allow_large=True)
    cdata: dict[OrbitLabel, CentralizerData] = {}
    extreme = {}
    for e in cat.entries:
        cdata[e.label] = centralizer_data(cat, e)
        extreme[e.label] = is_extreme(cat, e, cdata[e.label])
    polar = {e.label: polarisations(cat, e.label) for e in cat.entries}
    lonely = {e.label: is_lonely(rep, e.label) for e in cat.entries}
    findings = check_conjectures(cat, rep)
    return TypeAnalysis(t, cat, rep, cdata, polar, extreme, lonely, findings)


# --- serialisable rows ------------------------------------------------------------


def label_obj(lab: OrbitLabel) -> dict:
    if lab.partition is not None:
        return {"partition": list(lab.partition.parts), "family": lab.family}
    out = {"wdd": list(lab.wdd.labels), "family": None}
    if lab.name:
        out["name"] = lab.name
    return out


def orbit_row(a: TypeAnalysis, lab: OrbitLabel) -> dict:
    e = a.catalog.entry(lab)
    c = a.report.cls(lab)
    nonzero = e.dim > 0
    return {
        "type": a.type.family,
        "rank": a.type.rank,
        "label": label_obj(lab),
        "text": str(lab),
        "wddString": str(lab.wdd),
        "dim": e.dim,
        "even": e.grading.is_even,
        "richardson": bool(a.polar[lab]),
        "rigid": lab in a.rigid,
        "extreme": a.extreme[lab],
        # the zero orbit is a trivial singleton and is not reported as lonely
        "lonely": a.lonely[lab] and nonzero,
        "dMin": c.d_min_observed,
        "dDy": e.grading.d_dy,
        "dMax": c.d_max,
    }


def orbit_detail(a: TypeAnalysis, lab: OrbitLabel) -> dict:
    """Extra per-orbit data shown by ``orbit info``."""
    e = a.catalog.entry(lab)
    d = a.cdata[lab]
    g = e.grading
    return {
        "text": str(lab),
        "gradingDims": {str(i): n for i, n in sorted(g.dim_by_degree.items())},
        "centralizer": {
            "dimGe": d.dim_ge,
            "dimGeRed": d.dim_ge_red,
            "rkGe": d.rk_ge,
            "dimGeU": d.dim_ge_u,
            "dimBGe": d.dim_b_ge,
            "dMinFormula": d.d_min,
        },
        "polarisations": [[i + 1 for i in sorted(S)] for S in a.polar[lab]],
        "dynkinIdeal": [root_str(a.catalog.rs.positive_roots[k].coords) for k in a.report.cls(lab).dynkin_ideal.generators],
    }


def class_row(a: TypeAnalysis, lab: OrbitLabel, full: bool = False) -> dict:
    rs = a.catalog.rs
    c = a.report.cls(lab)

    def gens(I):
        return [root_str(rs.positive_roots[k].coords) for k in I.generators]

    row = {
        "orbit": label_obj(lab),
        "text": str(lab),
        "idealCount": len(c.ideals),
        "dims": c.dims,
        "maximal": [gens(I) for I in c.maximal_elements],
        "minimal": [gens(I) for I in c.minimal_elements],
        "minimalDims": sorted({I.dim for I in c.minimal_elements}),
        "hasseConnected": c.hasse_connected,
    }
    if full:
        row["ideals"] = [gens(I) for I in c.ideals]
    return row


def has_intermediate(t: SimpleType) -> bool:
    """Types whose highest root is a fundamental weight with an intermediate orbit."""
    return t.family in "DEFG" or (t.family == "B" and t.rank >= 3)


def roles(a: TypeAnalysis) -> dict:
    cat = a.catalog
    out = {
        "zero": str(cat.zero.label),
        "minimal": str(cat.minimal.label),
        "principal": str(cat.principal.label),
        "intermediate": str(intermediate_orbit(cat)) if has_intermediate(a.type) else None,
    }
    return out


def type_payload(a: TypeAnalysis) -> dict:
    f = a.findings
    return {
        "schemaVersion": SCHEMA_VERSION,
        "type": a.type.family,
        "rank": a.type.rank,
        "seed": a.catalog.seed,
        "idealCount": a.report.total,
        "roles": roles(a),
        "orbits": [orbit_row(a, lab) for lab in a.catalog.labels()],
        "classes": [class_row(a, lab, full=True) for lab in a.catalog.labels()],
        "details": [orbit_detail(a, lab) for lab in a.catalog.labels()],
        "findings": {
            "conjecture34Counterexamples": [str(x) for x in f.conj34_counterexamples],
            "hasseDisconnected": [str(x) for x in f.hasse_disconnected],
            "nonuniformMinimal": [{"orbit": str(o), "minimalDims": d} for o, d in f.nonuniform_minimal],
            "rigidityMismatches": [str(x) for x in f.rigidity_mismatches],
            "simpleRootMismatches": [str(o) for o, _ in f.simple_root_mismatches],
        },
    }

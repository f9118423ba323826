"""Irreducible root systems in the simple-root basis.

Roots are integer coordinate vectors over the simple roots, numbered after
Bourbaki.  Inner products come from a fixed integral Gram matrix on the
simple roots (short roots have squared length 2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _MIN_RANK:
            raise RootSystemError(f"unknown Lie type family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise RootSystemError(f"invalid rank {self.rank!r} for type {self.family}")
        if self.family in _FIXED_RANKS and self.rank not in _FIXED_RANKS[self.family]:
            raise RootSystemError(f"invalid rank {self.rank} for type {self.family}")

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "SimpleType":
        """Accept ``"G2"``, ``"d5"`` or ``("D", 5)``-style input."""
        text = text.strip().upper()
        if len(text) > 1:
            return cls(text[0], int(text[1:]))
        if rank is None:
            raise RootSystemError(f"type {text} needs a rank")
        return cls(text, int(rank))

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    coords: tuple[int, ...]
    height: int
    is_long: bool

    def __str__(self):
        return root_str(self.coords)


def root_str(coords: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coords, 1):
        if c == 1:
            terms.append(f"a{i}")
        elif c:
            terms.append(f"{c}a{i}")
    return "+".join(terms) or "0"


def _gram_matrix(t: SimpleType) -> list[list[int]]:
    n = t.rank
    g = [[0] * n for _ in range(n)]

    def edge(i, j, v):
        g[i - 1][j - 1] = g[j - 1][i - 1] = v

    fam = t.family
    if fam in "ADE":
        for i in range(n):
            g[i][i] = 2
        if fam == "A":
            for i in range(1, n):
                edge(i, i + 1, -1)
        elif fam == "D":
            for i in range(1, n - 1):
                edge(i, i + 1, -1)
            edge(n - 2, n, -1)
        else:
            edge(1, 3, -1)
            edge(2, 4, -1)
            for i in range(3, n):
                edge(i, i + 1, -1)
    elif fam == "B":
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -2)
    elif fam == "C":
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 1, n, -2)
    elif fam == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        edge(1, 2, -2)
        edge(2, 3, -2)
        edge(3, 4, -1)
    elif fam == "G":
        g[0][0], g[1][1] = 2, 6
        edge(1, 2, -3)
    return g


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive system of an irreducible root system.

    ``positive_roots`` is in canonical order: by height, then by
    lexicographically decreasing coordinates (so ``a1`` precedes ``a2``).
    """

    type: SimpleType
    gram: tuple[tuple[int, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    index: dict = field(repr=False)
    covers: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @property
    def dim(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    def __len__(self):
        return len(self.positive_roots)

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def pairing(self, a: Sequence[int], i: int) -> int:
        """<a, alpha_i^vee> for a root lattice vector ``a``."""
        return 2 * sum(a[j] * self.gram[j][i] for j in range(self.rank)) // self.gram[i][i]

    def find(self, coords: Sequence[int]) -> int | None:
        """Index of the positive root with these coordinates, or None."""
        return self.index.get(tuple(coords))

    def root(self, coords: Sequence[int]) -> Root:
        k = self.find(coords)
        if k is None:
            raise RootSystemError(f"{root_str(coords)} is not a positive root of {self.type}")
        return self.positive_roots[k]

    def is_root(self, coords: Sequence[int]) -> bool:
        c = tuple(coords)
        return c in self.index or tuple(-x for x in c) in self.index


def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return _build(t)


@lru_cache(maxsize=None)
def _build(t: SimpleType) -> RootSystem:
    n = t.rank
    gram = _gram_matrix(t)
    cartan = [[2 * gram[i][j] // gram[i][i] for j in range(n)] for i in range(n)]

    def pair(v, i):
        return 2 * sum(v[j] * gram[j][i] for j in range(n)) // gram[i][i]

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for v in layer:
            for i in range(n):
                if v == simple[i]:
                    continue
                # alpha_i-string through v: v - p a_i, ..., v + q a_i with p - q = <v, a_i^vee>
                p = 0
                w = list(v)
                while True:
                    w[i] -= 1
                    if tuple(w) in found:
                        p += 1
                    else:
                        break
                q = p - pair(v, i)
                if q > 0:
                    u = list(v)
                    u[i] += 1
                    u = tuple(u)
                    if u not in found:
                        found.add(u)
                        nxt.append(u)
        layer = nxt

    long_len = max(gram[i][i] for i in range(n))
    ordered = sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))
    roots = []
    for c in ordered:
        sq = sum(c[i] * gram[i][j] * c[j] for i in range(n) for j in range(n))
        roots.append(Root(c, sum(c), sq == long_len))
    index = {r.coords: k for k, r in enumerate(roots)}
    covers = []
    for r in roots:
        up = []
        for i in range(n):
            u = list(r.coords)
            u[i] += 1
            k = index.get(tuple(u))
            if k is not None:
                up.append(k)
        covers.append(tuple(up))
    return RootSystem(
        type=t,
        gram=tuple(map(tuple, gram)),
        cartan_matrix=tuple(map(tuple, cartan)),
        positive_roots=tuple(roots),
        index=index,
        covers=tuple(covers),
    )


def root_leq(rs: RootSystem, gamma: Root | Sequence[int], mu: Root | Sequence[int]) -> bool:
    g = gamma.coords if isinstance(gamma, Root) else gamma
    m = mu.coords if isinstance(mu, Root) else mu
    return all(b >= a for a, b in zip(g, m))


def nilradical_roots(rs: RootSystem, S: Iterable[int]) -> frozenset[int]:
    """Indices of positive roots of the nilradical of the standard parabolic p{S}.

    ``S`` holds 0-based simple-root indices; the result is every root with a
    positive coordinate at some member of ``S``.
    """
    S = tuple(S)
    return frozenset(k for k, r in enumerate(rs.positive_roots) if any(r.coords[i] > 0 for i in S))


def cocharacter_weight(gamma: Root | Sequence[int], labels: Sequence[int]) -> int:
    coords = gamma.coords if isinstance(gamma, Root) else gamma
    if len(coords) != len(labels):
        raise RootSystemError("labels must have one entry per simple root")
    return sum(c * l for c, l in zip(coords, labels))


def positive_root_count(t: SimpleType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n),
        "F": 24,
        "G": 6,
    }[t.family]


def levi_components(rs: RootSystem, S: Iterable[int]) -> list[tuple[SimpleType, tuple[int, ...]]]:
    """Simple factors of the standard Levi l{S}.

    Returns ``(type, nodes)`` pairs where ``nodes[k]`` is the simple root of
    ``rs`` playing the role of Bourbaki node ``k`` of the factor.
    """
    rest = sorted(set(range(rs.rank)) - set(S))
    cm = rs.cartan_matrix
    comps: list[list[int]] = []
    seen: set[int] = set()
    for v in rest:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in rest:
                if b not in seen and cm[a][b] != 0:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        out.append(_identify_component(cm, comp))
    out.sort(key=lambda tn: tn[1])
    return out


def _candidate_types(k: int) -> list[SimpleType]:
    cands = []
    for fam in "ABCDEFG":
        try:
            cands.append(SimpleType(fam, k))
        except RootSystemError:
            pass
    return cands


def _identify_component(cm, comp: list[int]) -> tuple[SimpleType, tuple[int, ...]]:
    k = len(comp)
    sub = [[cm[a][b] for b in comp] for a in comp]
    for t in _candidate_types(k):
        ref = build_root_system(t).cartan_matrix
        perm = _match(ref, sub)
        if perm is not None:
            return t, tuple(comp[p] for p in perm)
    raise RootSystemError(f"cannot identify Levi factor on nodes {comp}")


def _match(ref, sub) -> list[int] | None:
    # backtracking; candidates tried in increasing order so monotone maps win
    k = len(ref)
    assign: list[int] = []
    used = [False] * k

    def ok(pos, cand):
        if ref[pos][pos] != sub[cand][cand]:
            return False
        for q in range(pos):
            if ref[pos][q] != sub[cand][assign[q]] or ref[q][pos] != sub[assign[q]][cand]:
                return False
        return True

    def go(pos):
        if pos == k:
            return True
        for cand in range(k):
            if not used[cand] and ok(pos, cand):
                used[cand] = True
                assign.append(cand)
                if go(pos + 1):
                    return True
                assign.pop()
                used[cand] = False
        return False

    return assign if go(0) else None

"""Finite-quotient fingerprints: abelianization and homomorphism counts.

Groups with isomorphic profinite completions have the same number of
homomorphisms into every finite group, so a vector of hom counts over a
fixed catalog is a cheap necessary invariant. It is a consistency harness,
never a decision procedure.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .errors import ResourceGuardExceeded
from .exactmat import IntMatrix, cokernel_invariants
from .seifert import GroupPresentation, SeifertData

MAX_DEGREE = 32
MAX_ELEMENTS = 10**4
MAX_HOM_ORDER = 100
MAX_HOM_GENERATORS = 12
NODE_LIMIT = 2 * 10**6


class CatalogError(ValueError):
    pass


@dataclass
class FiniteGroup:
    id: str
    degree: int
    generators: tuple[tuple[int, ...], ...]
    elements: list[tuple[int, ...]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.degree > MAX_DEGREE:
            raise CatalogError(f"{self.id}: degree {self.degree} exceeds {MAX_DEGREE}")
        if not self.elements:
            self.elements = _closure(self.generators, self.degree)
        self._tables = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def tables(self):
        """(mul, inv, pows): index arithmetic on the enumerated elements."""
        if self._tables is None:
            index = {p: i for i, p in enumerate(self.elements)}
            mul = [[index[_compose(p, q)] for q in self.elements] for p in self.elements]
            inv = [row.index(0) for row in mul]
            pows = []
            for x in range(len(self.elements)):
                seq, y = [0], x
                while y != 0:
                    seq.append(y)
                    y = mul[y][x]
                pows.append(seq)
            self._tables = (mul, inv, pows)
        return self._tables


def _compose(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def _closure(gens, degree):
    ident = tuple(range(degree))
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > MAX_ELEMENTS:
                        raise ResourceGuardExceeded(f"group closure exceeds {MAX_ELEMENTS} elements")
        frontier = nxt
    return elements


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """'(1 2)(3 4 5)' with 1-based points -> image tuple on 0..degree-1."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)+", text):
        raise CatalogError(f"malformed cycle notation: {text!r}")
    image = list(range(degree))
    used = set()
    for body in re.findall(r"\(([^)]*)\)", text):
        pts = [int(x) - 1 for x in body.split()]
        for p in pts:
            if not 0 <= p < degree:
                raise CatalogError(f"point {p + 1} outside 1..{degree} in {text!r}")
            if p in used:
                raise CatalogError(f"point {p + 1} repeated in {text!r}")
            used.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            image[a] = b
    return tuple(image)


def parse_catalog(text: str) -> list[FiniteGroup]:
    groups = []
    current = None

    def finish():
        if current is None:
            return
        gid, declared, degree, gens = current
        G = FiniteGroup(gid, degree, tuple(gens))
        if G.order != declared:
            raise CatalogError(f"{gid}: declared order {declared}, closure has {G.order}")
        groups.append(G)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "group":
            finish()
            m = re.fullmatch(r"(\S+)\s+(\d+)\s+degree\s+(\d+)", rest.strip())
            if not m:
                raise CatalogError(f"line {lineno}: expected 'group <id> <order> degree <n>'")
            current = (m.group(1), int(m.group(2)), int(m.group(3)), [])
        elif head == "gen":
            if current is None:
                raise CatalogError(f"line {lineno}: 'gen' before any 'group'")
            try:
                current[3].append(parse_cycles(rest, current[2]))
            except CatalogError as exc:
                raise CatalogError(f"line {lineno}: {exc}") from None
        else:
            raise CatalogError(f"line {lineno}: unknown directive {head!r}")
    finish()
    return groups


def load_catalog(source: Optional[str | Path] = None) -> list[FiniteGroup]:
    """Read a catalog file; None loads the shipped default catalog."""
    if source is None:
        text = resources.files("seifert4").joinpath("data/default_catalog.txt").read_text()
    else:
        text = Path(source).read_text()
    return parse_catalog(text)


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    n1, n2 = G1.degree, G2.degree
    gens = [g + tuple(range(n1, n1 + n2)) for g in G1.generators]
    gens += [tuple(range(n1)) + tuple(n1 + x for x in g) for g in G2.generators]
    return FiniteGroup(f"{G1.id}x{G2.id}", n1 + n2, tuple(gens))


def abelianization(p: GroupPresentation) -> tuple[int, ...]:
    """Invariant factors of the abelianization (0 = free Z)."""
    n = len(p.generators)
    rows = []
    for word in p.relators:
        row = [0] * n
        for g, e in word:
            row[g] += e
        rows.append(row)
    return cokernel_invariants(IntMatrix.from_rows(rows, n), n)


def _check_sizes(p: GroupPresentation, G: FiniteGroup):
    if G.order > MAX_HOM_ORDER:
        raise ValueError(f"{G.id}: order {G.order} exceeds {MAX_HOM_ORDER}")
    if len(p.generators) > MAX_HOM_GENERATORS:
        raise ValueError(f"presentation has more than {MAX_HOM_GENERATORS} generators")


def hom_count(p: GroupPresentation, G: FiniteGroup, node_limit: Optional[int] = None) -> int:
    """Exact number of homomorphisms from the presented group to G."""
    _check_sizes(p, G)
    if p.seifert is not None:
        return hom_count_seifert(p.seifert, G)
    return hom_count_backtrack(p, G, node_limit)


def hom_count_backtrack(p: GroupPresentation, G: FiniteGroup, node_limit: Optional[int] = None) -> int:
    """Plain backtracking; every relator is checked once its letters are assigned.

    Generators occurring in the most relators (the central l, h of a Seifert
    presentation) are assigned first. Raises ResourceGuardExceeded rather
    than returning a partial count.
    """
    _check_sizes(p, G)
    if node_limit is None:
        node_limit = NODE_LIMIT
    mul, inv, pows = G.tables()
    n = len(p.generators)
    weight = [0] * n
    for w in p.relators:
        for g in {g for g, _ in w}:
            weight[g] += 1
    order = sorted(range(n), key=lambda g: (-weight[g], g))
    pos = {g: i for i, g in enumerate(order)}
    checks = [[] for _ in range(n)]
    for w in p.relators:
        if w:
            checks[max(pos[g] for g, _ in w)].append(w)

    def power(x, e):
        seq = pows[x]
        return seq[e % len(seq)]

    assign = [0] * n
    nodes = 0

    def rec(level):
        nonlocal nodes
        if level == n:
            return 1
        total = 0
        gen = order[level]
        for x in range(G.order):
            nodes += 1
            if nodes > node_limit:
                raise ResourceGuardExceeded(f"hom search into {G.id} exceeds {node_limit} nodes")
            assign[gen] = x
            ok = True
            for w in checks[level]:
                y = 0
                for g, e in w:
                    y = mul[y][power(assign[g], e)]
                if y != 0:
                    ok = False
                    break
            if ok:
                total += rec(level + 1)
        return total

    return rec(0)


def hom_count_seifert(data: SeifertData, G: FiniteGroup) -> int:
    """Hom count for a Seifert presentation by staged enumeration.

    l, h are enumerated first (commuting pairs), then each x_i ranges over
    the centralizer solutions of its power relation, then each (u_j, v_j)
    pair over its conjugation constraints; the long relator is handled by
    convolving the distributions of partial products.
    """
    mul, inv, pows = G.tables()
    n = G.order

    def power(x, e):
        seq = pows[x]
        return seq[e % len(seq)]

    def conj(u, x):
        return mul[mul[u][x]][inv[u]]

    comm_cache: dict = {}

    def comm_dist(U, V):
        key = (U, V)
        if key not in comm_cache:
            dist = defaultdict(int)
            for u in U:
                for v in V:
                    dist[mul[mul[u][v]][mul[inv[u]][inv[v]]]] += 1
            comm_cache[key] = dict(dist)
        return comm_cache[key]

    a, b = data.obstruction
    total = 0
    for l in range(n):
        for h in range(n):
            if mul[l][h] != mul[h][l]:
                continue
            cent = [z for z in range(n) if mul[z][l] == mul[l][z] and mul[z][h] == mul[h][z]]
            dist = {0: 1}
            for m, ai, bi in data.cone_points:
                need = inv[mul[power(l, ai)][power(h, bi)]]
                X = [x for x in cent if power(x, m) == need]
                new = defaultdict(int)
                for prefix, cnt in dist.items():
                    for x in X:
                        new[mul[prefix][x]] += cnt
                dist = new
                if not dist:
                    break
            if not dist:
                continue
            for j in range(data.genus):
                sides = []
                for A in data.monodromy[2 * j : 2 * j + 2]:
                    (al, be), (ga, de) = A.data
                    img_l = mul[power(l, al)][power(h, ga)]
                    img_h = mul[power(l, be)][power(h, de)]
                    sides.append(tuple(u for u in range(n) if conj(u, l) == img_l and conj(u, h) == img_h))
                C = comm_dist(*sides)
                new = defaultdict(int)
                for prefix, cnt in dist.items():
                    for w, c in C.items():
                        new[mul[prefix][w]] += cnt * c
                dist = new
            total += dist.get(mul[power(l, a)][power(h, b)], 0)
    return total


@dataclass(frozen=True)
class QuotientSpectrum:
    entries: tuple[tuple[str, Optional[int]], ...]  # None marks a tripped resource guard

    def to_json(self):
        return [[gid, "overflow" if c is None else c] for gid, c in self.entries]


def census(p: GroupPresentation, catalog: Sequence[FiniteGroup]) -> QuotientSpectrum:
    entries = []
    for G in catalog:
        try:
            entries.append((G.id, hom_count(p, G)))
        except ResourceGuardExceeded:
            entries.append((G.id, None))
    return QuotientSpectrum(tuple(entries))

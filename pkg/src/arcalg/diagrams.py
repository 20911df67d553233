"""Crossingless matchings, circle diagrams, and saddle combinatorics.

Endpoints are numbered 1..2n from the bottom.  A matching `a` glued to `b`
(written here as ``glue(a, b)``) closes up into a disjoint union of circles;
the circle containing point 1 is the marked one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Sequence


class UnionFind:
    """Union-find over arbitrary hashable keys with path compression."""

    def __init__(self) -> None:
        self.parent: dict[Hashable, Hashable] = {}

    def add(self, k: Hashable) -> None:
        if k not in self.parent:
            self.parent[k] = k

    def find(self, k: Hashable) -> Hashable:
        self.add(k)
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def union(self, a: Hashable, b: Hashable) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def classes(self) -> list[frozenset]:
        groups: dict[Hashable, set] = {}
        for k in self.parent:
            groups.setdefault(self.find(k), set()).add(k)
        return [frozenset(g) for g in groups.values()]


def connected_components(points: Iterable[Hashable],
                         edges: Iterable[tuple[Hashable, Hashable]]) -> tuple[frozenset, ...]:
    """Components of a graph, sorted by their minimal element."""
    uf = UnionFind()
    for p in points:
        uf.add(p)
    for p, q in edges:
        uf.union(p, q)
    return tuple(sorted(uf.classes(), key=min))


@dataclass(frozen=True)
class Matching:
    """Planar crossingless perfect matching on the points 1..2n."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        arcs = tuple(sorted(tuple(sorted(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        points = [p for arc in arcs for p in arc]
        if sorted(points) != list(range(1, 2 * self.n + 1)):
            raise ValueError("arcs must form a perfect matching on 1..2n")
        for (i, j), (k, l) in itertools.combinations(arcs, 2):
            if i < k < j < l:
                raise ValueError(f"arcs ({i},{j}) and ({k},{l}) cross")

    def partner(self, p: int) -> int:
        for i, j in self.arcs:
            if p == i:
                return j
            if p == j:
                return i
        raise KeyError(f"point {p} not matched")

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}

    @classmethod
    def from_json(cls, data: dict) -> "Matching":
        return cls(data["n"], tuple(tuple(a) for a in data["arcs"]))

    def __repr__(self) -> str:
        return "Matching(%d, %s)" % (self.n, "".join(f"({i},{j})" for i, j in self.arcs))


@dataclass(frozen=True)
class CircleDiagram:
    """The closed 1-manifold obtained by gluing a reflected matching to another.

    `circles` partitions the 2n shared boundary points; `marked` is the index
    (into `circles`) of the component containing point 1, or None for n = 0.
    """

    left: Matching
    right: Matching
    circles: tuple[frozenset[int], ...]
    marked: int | None

    @property
    def n(self) -> int:
        return self.left.n

    def marked_circle(self) -> frozenset[int]:
        if self.marked is None:
            raise ValueError("empty diagram has no marked circle")
        return self.circles[self.marked]

    def to_json(self) -> dict:
        return {
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "circles": [sorted(c) for c in self.circles],
            "marked": self.marked,
        }


@dataclass(frozen=True)
class SurgerySite:
    """One elementary saddle, located at an arc of the middle matching."""

    index: int
    points: tuple[int, int]


@dataclass(frozen=True)
class CobordismComponentStats:
    """Per-component counts for a minimal saddle cobordism.

    genus is forced by Euler characteristic: a component with s saddles has
    chi = -s, so 2 - 2g - (circles_in + circles_out) = -s.
    """

    saddles: int
    circles_in: int
    circles_out: int
    genus: int
    incoming: tuple[frozenset, ...]
    outgoing: tuple[frozenset, ...]
    sites: tuple[SurgerySite, ...]


def enumerate_matchings(n: int) -> list[Matching]:
    """All planar crossingless matchings on 2n points, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Matching(n, arcs) for arcs in sorted(_noncrossing_pairings(tuple(range(1, 2 * n + 1))))]


@lru_cache(maxsize=None)
def _noncrossing_pairings(points: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    # Point 1 pairs with a point leaving an even run inside; recurse on both sides.
    if not points:
        return ((),)
    first = points[0]
    out = []
    for k in range(1, len(points), 2):
        inner = _noncrossing_pairings(points[1:k])
        outer = _noncrossing_pairings(points[k + 1:])
        for a in inner:
            for b in outer:
                out.append(tuple(sorted(((first, points[k]),) + a + b)))
    return tuple(out)


@lru_cache(maxsize=None)
def glue(a: Matching, b: Matching) -> CircleDiagram:
    """Close up a (reflected, on the left) with b; return the circle partition."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    points = range(1, 2 * a.n + 1)
    circles = connected_components(points, list(a.arcs) + list(b.arcs))
    marked = None
    for idx, c in enumerate(circles):
        if 1 in c:
            marked = idx
            break
    return CircleDiagram(a, b, circles, marked)


def surgery_sequence(a: Matching, b: Matching, c: Matching) -> list[SurgerySite]:
    """The n elementary saddles of the minimal cobordism a!b + b!c -> a!c.

    One site per arc of the middle matching b, in order of smaller endpoint.
    """
    if not (a.n == b.n == c.n):
        raise ValueError("size mismatch")
    return [SurgerySite(i + 1, arc) for i, arc in enumerate(b.arcs)]


def cobordism_components(a: Matching, b: Matching, c: Matching) -> list[CobordismComponentStats]:
    """Connected components of the minimal saddle cobordism, with genus.

    The surface deformation-retracts onto the union of all circles ever
    present plus the saddle bands, so its connectivity is the connectivity of
    the graph on two point columns joined by one vertical edge per point.
    """
    sites = surgery_sequence(a, b, c)
    U = [(0, p) for p in range(1, 2 * a.n + 1)]
    W = [(1, p) for p in range(1, 2 * a.n + 1)]

    def u_edges(arcs):
        return [((0, i), (0, j)) for i, j in arcs]

    def w_edges(arcs):
        return [((1, i), (1, j)) for i, j in arcs]

    incoming = list(connected_components(U, u_edges(a.arcs) + u_edges(b.arcs))) + \
        list(connected_components(W, w_edges(b.arcs) + w_edges(c.arcs)))
    outgoing = connected_components(
        U + W,
        u_edges(a.arcs) + w_edges(c.arcs) + [((0, p), (1, p)) for p in range(1, 2 * a.n + 1)],
    )
    surface = connected_components(
        U + W,
        u_edges(a.arcs) + u_edges(b.arcs) + w_edges(b.arcs) + w_edges(c.arcs)
        + [((0, p), (1, p)) for p in range(1, 2 * a.n + 1)],
    )

    stats = []
    for comp in surface:
        comp_in = tuple(circ for circ in incoming if circ <= comp)
        comp_out = tuple(circ for circ in outgoing if circ <= comp)
        comp_sites = tuple(s for s in sites if (0, s.points[0]) in comp)
        two_g = 2 - len(comp_in) - len(comp_out) + len(comp_sites)
        if two_g % 2 != 0 or two_g < 0:
            raise AssertionError(f"non-integral or negative genus: 2g = {two_g}")
        stats.append(CobordismComponentStats(
            saddles=len(comp_sites),
            circles_in=len(comp_in),
            circles_out=len(comp_out),
            genus=two_g // 2,
            incoming=comp_in,
            outgoing=comp_out,
            sites=comp_sites,
        ))
    return stats

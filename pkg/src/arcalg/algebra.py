"""The arc algebra on 2n points and its reduced quotient.

Generators are pairs of crossingless matchings with a {1, x} label on every
circle of the glued diagram.  Multiplication replays the minimal saddle
sequence through the shared middle matching, applying the Frobenius merge and
split maps to an evolving labeled 1-manifold.  An independent implementation
(`multiply_oracle`) evaluates the same product through the genus-0 counting
criterion on cobordism components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .diagrams import (CircleDiagram, Matching, connected_components,
                       cobordism_components, enumerate_matchings, glue,
                       surgery_sequence)
from .linalg import gf2_kernel, integer_kernel
from .rings import (FrobeniusConfig, LABEL_ONE, LABEL_X, LABELS, Ring,
                    frob_comultiply, frob_multiply)


@dataclass(frozen=True)
class Generator:
    """A basis element: two matchings plus one label per circle.

    `labels` is aligned with the circle order of ``glue(left, right)``
    (circles sorted by minimal point).  Reduced generators keep their full
    label tuple but are constrained to label the marked circle 1.
    """

    left: Matching
    right: Matching
    labels: tuple[str, ...]
    reduced: bool = False

    def __post_init__(self) -> None:
        if self.left.n != self.right.n:
            raise ValueError("size mismatch")
        diagram = glue(self.left, self.right)
        if len(self.labels) != len(diagram.circles):
            raise ValueError("one label per circle required")
        if any(l not in LABELS for l in self.labels):
            raise ValueError("labels must be '1' or 'x'")
        if self.reduced and diagram.marked is not None \
                and self.labels[diagram.marked] != LABEL_ONE:
            raise ValueError("reduced generator must label the marked circle 1")

    @property
    def n(self) -> int:
        return self.left.n

    def diagram(self) -> CircleDiagram:
        return glue(self.left, self.right)

    def marked_label(self) -> str:
        marked = self.diagram().marked
        return LABEL_ONE if marked is None else self.labels[marked]

    def relabel(self, labels: Sequence[str], reduced: bool | None = None) -> "Generator":
        return Generator(self.left, self.right, tuple(labels),
                         self.reduced if reduced is None else reduced)

    def sort_key(self) -> tuple:
        return (self.marked_label() == LABEL_X, self.left.arcs, self.right.arcs, self.labels)

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json(),
                "labels": list(self.labels), "reduced": self.reduced}

    @classmethod
    def from_json(cls, data: dict) -> "Generator":
        return cls(Matching.from_json(data["left"]), Matching.from_json(data["right"]),
                   tuple(data["labels"]), bool(data.get("reduced", False)))

    def __repr__(self) -> str:
        tag = "~" if self.reduced else ""
        return f"{tag}({self.left!r}!{self.right!r}, {''.join(self.labels)})"


def q_degree(g: Generator) -> int:
    """Quantum degree: (#1-labels) - (#x-labels) - n, and -1 more if reduced."""
    ones = sum(1 for l in g.labels if l == LABEL_ONE)
    return 2 * ones - len(g.labels) - g.n - (1 if g.reduced else 0)


def basis(n: int, reduced: bool = False) -> list[Generator]:
    """All generators in canonical order (marked-1 block first when unreduced)."""
    gens = []
    for a, b in itertools.product(enumerate_matchings(n), repeat=2):
        diagram = glue(a, b)
        k = len(diagram.circles)
        for labels in itertools.product(LABELS, repeat=k):
            if reduced and diagram.marked is not None \
                    and labels[diagram.marked] != LABEL_ONE:
                continue
            gens.append(Generator(a, b, labels, reduced))
    gens.sort(key=Generator.sort_key)
    return gens


class AlgebraElement:
    """Formal linear combination of generators with exact coefficients."""

    __slots__ = ("n", "frob", "reduced", "terms")

    def __init__(self, n: int, frob: FrobeniusConfig, reduced: bool,
                 terms: dict[Generator, object] | None = None):
        self.n = n
        self.frob = frob
        self.reduced = reduced
        self.terms: dict[Generator, object] = {}
        if terms:
            for g, c in terms.items():
                if g.n != n or g.reduced != reduced:
                    raise ValueError("incompatible generator")
                if not frob.ring.is_zero(c):
                    self.terms[g] = c

    @property
    def ring(self) -> Ring:
        return self.frob.ring

    @classmethod
    def zero(cls, n: int, frob: FrobeniusConfig, reduced: bool = False) -> "AlgebraElement":
        return cls(n, frob, reduced)

    @classmethod
    def from_generator(cls, g: Generator, frob: FrobeniusConfig, coeff=None) -> "AlgebraElement":
        return cls(g.n, frob, g.reduced, {g: frob.ring.one() if coeff is None else coeff})

    def _check_compatible(self, other: "AlgebraElement") -> None:
        if (self.n, self.reduced) != (other.n, other.reduced) \
                or self.frob.cache_key() != other.frob.cache_key():
            raise ValueError("incompatible operands")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        out = dict(self.terms)
        R = self.ring
        for g, c in other.terms.items():
            out[g] = R.add(out[g], c) if g in out else c
        return AlgebraElement(self.n, self.frob, self.reduced, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(self.ring.neg(self.ring.one()))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def scale(self, c) -> "AlgebraElement":
        R = self.ring
        return AlgebraElement(self.n, self.frob, self.reduced,
                              {g: R.mul(c, v) for g, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, g: Generator):
        return self.terms.get(g, self.ring.zero())

    def support(self) -> list[Generator]:
        return sorted(self.terms, key=Generator.sort_key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if (self.n, self.reduced) != (other.n, other.reduced) \
                or self.frob.cache_key() != other.frob.cache_key():
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.ring.eq(c, other.terms[g]) for g, c in self.terms.items())

    def __hash__(self):
        raise TypeError("AlgebraElement is not hashable")

    def to_json(self) -> dict:
        R = self.ring
        return {
            "n": self.n,
            "ring": self.frob.to_json(),
            "reduced": self.reduced,
            "terms": [{**g.to_json(), "coeff": R.to_json(c)}
                      for g, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        frob = FrobeniusConfig.from_json(data["ring"])
        terms = {Generator.from_json(t): frob.ring.from_json(t["coeff"])
                 for t in data["terms"]}
        return cls(data["n"], frob, bool(data["reduced"]), terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        R = self.ring
        return " + ".join(f"({R.show(c)})*{g!r}" for g, c in
                          sorted(self.terms.items(), key=lambda t: t[0].sort_key()))


def saddle_replay(points: Sequence, edges: dict, sites: Sequence[tuple],
                  initial_labels: dict, cfg: FrobeniusConfig):
    """Replay a sequence of elementary saddles on a labeled 1-manifold.

    `edges` maps edge ids to point pairs; each site is (removed_id, removed_id,
    added_pairs).  `initial_labels` carries one label per starting component.
    Returns the final component tuple and a combination mapping label tuples
    (aligned with the final components) to coefficients.
    """
    R = cfg.ring
    comps = connected_components(points, edges.values())
    state = {tuple(initial_labels[c] for c in comps): R.one()}
    current = dict(edges)
    for step, (rm1, rm2, added) in enumerate(sites):
        del current[rm1], current[rm2]
        for k, pair in enumerate(added):
            current[("saddle", step, k)] = pair
        new_comps = connected_components(points, current.values())
        old_index = {comp: i for i, comp in enumerate(comps)}
        gone = [comp for comp in comps if comp not in set(new_comps)]
        born = [comp for comp in new_comps if comp not in old_index]
        new_state: dict[tuple, object] = {}

        def put(labels, coeff):
            if labels in new_state:
                coeff = R.add(new_state[labels], coeff)
            if R.is_zero(coeff):
                new_state.pop(labels, None)
            else:
                new_state[labels] = coeff

        if len(gone) == 2 and len(born) == 1:
            i1, i2 = old_index[gone[0]], old_index[gone[1]]
            for labels, coeff in state.items():
                for (lab,), c in frob_multiply(cfg, labels[i1], labels[i2]).items():
                    assign = {born[0]: lab}
                    out = tuple(assign[nc] if nc in assign else labels[old_index[nc]]
                                for nc in new_comps)
                    put(out, R.mul(coeff, c))
        elif len(gone) == 1 and len(born) == 2:
            i0 = old_index[gone[0]]
            for labels, coeff in state.items():
                for (lab1, lab2), c in frob_comultiply(cfg, labels[i0]).items():
                    assign = {born[0]: lab1, born[1]: lab2}
                    out = tuple(assign[nc] if nc in assign else labels[old_index[nc]]
                                for nc in new_comps)
                    put(out, R.mul(coeff, c))
        else:
            raise AssertionError("saddle neither merges nor splits")
        comps, state = new_comps, new_state
    return comps, state


def _lift(circles: Iterable[frozenset[int]], side: int) -> list[frozenset]:
    return [frozenset((side, p) for p in c) for c in circles]


_PRODUCT_CACHE: dict[tuple, dict[Generator, object]] = {}


def generator_product(g1: Generator, g2: Generator, cfg: FrobeniusConfig,
                      site_order: tuple[int, ...] | None = None) -> dict[Generator, object]:
    """Product of two unreduced generators as a generator -> coefficient map."""
    if g1.reduced or g2.reduced:
        raise ValueError("generator_product works on unreduced generators")
    if g1.right != g2.left:
        return {}
    key = (cfg.cache_key(), g1, g2, site_order)
    cached = _PRODUCT_CACHE.get(key)
    if cached is not None:
        return cached

    a, b, c = g1.left, g1.right, g2.right
    n2 = 2 * a.n
    points = [(0, p) for p in range(1, n2 + 1)] + [(1, p) for p in range(1, n2 + 1)]
    edges = {}
    for i, j in a.arcs:
        edges[("a", i, j)] = ((0, i), (0, j))
    for i, j in b.arcs:
        edges[("bu", i, j)] = ((0, i), (0, j))
        edges[("bw", i, j)] = ((1, i), (1, j))
    for i, j in c.arcs:
        edges[("c", i, j)] = ((1, i), (1, j))

    sites = surgery_sequence(a, b, c)
    if site_order is not None:
        if sorted(site_order) != list(range(len(sites))):
            raise ValueError("site_order must be a permutation")
        sites = [sites[i] for i in site_order]
    site_spec = [
        (("bu",) + s.points, ("bw",) + s.points,
         (((0, s.points[0]), (1, s.points[0])), ((0, s.points[1]), (1, s.points[1]))))
        for s in sites
    ]

    initial = {}
    for circ, lab in zip(_lift(glue(a, b).circles, 0), g1.labels):
        initial[circ] = lab
    for circ, lab in zip(_lift(glue(b, c).circles, 1), g2.labels):
        initial[circ] = lab

    final_comps, state = saddle_replay(points, edges, site_spec, initial, cfg)
    target = glue(a, c).circles
    index_of = {}
    for k, comp in enumerate(final_comps):
        base = frozenset(p for side, p in comp if side == 0)
        index_of[k] = target.index(base)

    out: dict[Generator, object] = {}
    R = cfg.ring
    for labels, coeff in state.items():
        arranged = [LABEL_ONE] * len(target)
        for k, lab in enumerate(labels):
            arranged[index_of[k]] = lab
        g = Generator(a, c, tuple(arranged), False)
        out[g] = R.add(out[g], coeff) if g in out else coeff
    out = {g: cc for g, cc in out.items() if not R.is_zero(cc)}
    _PRODUCT_CACHE[key] = out
    return out


def multiply(e1: AlgebraElement, e2: AlgebraElement,
             site_order: tuple[int, ...] | None = None) -> AlgebraElement:
    """Bilinear product; reduced elements multiply through the quotient."""
    e1._check_compatible(e2)
    R = e1.ring
    if e1.reduced:
        lifted = _multiply_terms(_lift_terms(e1), _lift_terms(e2), e1.frob, site_order)
        kept = {g.relabel(g.labels, reduced=True): c for g, c in lifted.items()
                if g.marked_label() == LABEL_ONE}
        return AlgebraElement(e1.n, e1.frob, True, kept)
    out = _multiply_terms(e1.terms, e2.terms, e1.frob, site_order)
    return AlgebraElement(e1.n, e1.frob, False, out)


def _lift_terms(e: AlgebraElement) -> dict[Generator, object]:
    return {g.relabel(g.labels, reduced=False): c for g, c in e.terms.items()}


def _multiply_terms(t1: dict, t2: dict, cfg: FrobeniusConfig,
                    site_order: tuple[int, ...] | None) -> dict[Generator, object]:
    R = cfg.ring
    out: dict[Generator, object] = {}
    for g1, c1 in t1.items():
        for g2, c2 in t2.items():
            prod = generator_product(g1, g2, cfg, site_order)
            if not prod:
                continue
            c12 = R.mul(c1, c2)
            for g, c in prod.items():
                v = R.mul(c12, c)
                out[g] = R.add(out[g], v) if g in out else v
    return {g: c for g, c in out.items() if not R.is_zero(c)}


def multiply_oracle(g1: Generator, g2: Generator, cfg: FrobeniusConfig) -> AlgebraElement:
    """Independent product via the counting criterion on cobordism components.

    On a connected component of genus g, a labeling contributes coefficient
    2^g when (#x among its incoming labels) + (#1 among its outgoing labels)
    equals 1 - g, and 0 otherwise.  For g = 0 this is the familiar criterion
    (#x in) + (#1 out) = 1 with coefficient 1; in characteristic 2 every
    positive-genus component kills its terms.  No surgery sequencing is used.
    """
    if cfg.deformed:
        raise ValueError("oracle undefined for deformed Frobenius algebra")
    if g1.reduced or g2.reduced:
        raise ValueError("oracle works on unreduced generators")
    if g1.right != g2.left:
        return AlgebraElement.zero(g1.n, cfg)
    a, b, c = g1.left, g1.right, g2.right
    R = cfg.ring
    stats = cobordism_components(a, b, c)
    target = glue(a, c).circles

    in_label = {}
    for circ, lab in zip(_lift(glue(a, b).circles, 0), g1.labels):
        in_label[circ] = lab
    for circ, lab in zip(_lift(glue(b, c).circles, 1), g2.labels):
        in_label[circ] = lab

    terms = {}
    for w in itertools.product(LABELS, repeat=len(target)):
        def out_label(circ):
            base = frozenset(p for side, p in circ if side == 0)
            return w[target.index(base)]

        coeff = R.one()
        for comp in stats:
            xs_in = sum(1 for circ in comp.incoming if in_label[circ] == LABEL_X)
            ones_out = sum(1 for circ in comp.outgoing if out_label(circ) == LABEL_ONE)
            if xs_in + ones_out != 1 - comp.genus:
                coeff = R.zero()
                break
            coeff = R.mul(coeff, R.from_int(2 ** comp.genus))
        if not R.is_zero(coeff):
            terms[Generator(a, c, w, False)] = coeff
    return AlgebraElement(g1.n, cfg, False, terms)


def unit(n: int, frob: FrobeniusConfig, reduced: bool = False) -> AlgebraElement:
    """Sum of the all-1 idempotents, one per matching."""
    terms = {}
    for a in enumerate_matchings(n):
        k = len(glue(a, a).circles)
        terms[Generator(a, a, (LABEL_ONE,) * k, reduced)] = frob.ring.one()
    return AlgebraElement(n, frob, reduced, terms)


def reduce_element(e: AlgebraElement) -> AlgebraElement:
    """Project to the quotient by the marked-x ideal."""
    if e.reduced:
        raise ValueError("element already reduced")
    kept = {g.relabel(g.labels, reduced=True): c for g, c in e.terms.items()
            if g.marked_label() == LABEL_ONE}
    return AlgebraElement(e.n, e.frob, True, kept)


def commutator(e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
    return multiply(e1, e2) - multiply(e2, e1)


def center_in_degree(n: int, ring: Ring, reduced: bool, d: int) -> list[AlgebraElement]:
    """Basis of the degree-d central elements, by exact kernel computation."""
    if ring.kind not in ("Z", "GF2"):
        raise ValueError("unsupported ring kind for center computation")
    cfg = FrobeniusConfig(ring)
    gens = basis(n, reduced)
    gens_d = [g for g in gens if q_degree(g) == d]
    if not gens_d:
        return []
    rows: list[list[int]] = []
    for g in gens:
        g_elem = AlgebraElement.from_generator(g, cfg)
        cols = []
        for z in gens_d:
            z_elem = AlgebraElement.from_generator(z, cfg)
            cols.append(commutator(z_elem, g_elem))
        out_gens = sorted({h for col in cols for h in col.terms}, key=Generator.sort_key)
        for h in out_gens:
            rows.append([col.coeff(h) for col in cols])
    kernel = integer_kernel(rows, len(gens_d)) if ring.kind == "Z" \
        else gf2_kernel(rows, len(gens_d))
    return [AlgebraElement(n, cfg, reduced,
                           {g: ring.from_int(v) for g, v in zip(gens_d, vec) if v})
            for vec in kernel]


def center(n: int, ring: Ring, reduced: bool) -> dict[int, list[AlgebraElement]]:
    """Center of the whole algebra, organized by degree (grading is bounded)."""
    degrees = sorted({q_degree(g) for g in basis(n, reduced)})
    out = {}
    for d in degrees:
        elems = center_in_degree(n, ring, reduced, d)
        if elems:
            out[d] = elems
    return out


def stack_embed(e: AlgebraElement, n: int) -> AlgebraElement:
    """Embed into a larger algebra by stacking 1-labeled circles on top."""
    if n <= e.n:
        raise ValueError("target size must exceed the element's size")
    extra = tuple((2 * i - 1, 2 * i) for i in range(e.n + 1, n + 1))
    terms = {}
    for g, c in e.terms.items():
        left = Matching(n, g.left.arcs + extra)
        right = Matching(n, g.right.arcs + extra)
        labels = g.labels + (LABEL_ONE,) * (n - e.n)
        terms[Generator(left, right, labels, g.reduced)] = c
    return AlgebraElement(n, e.frob, e.reduced, terms)

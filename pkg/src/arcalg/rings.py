"""Exact coefficient rings and the Frobenius algebra on circle labels.

Four ring kinds: Z, GF2, and the two-variable polynomial rings PolyZ and
PolyGF2 in the deformation parameters a0, a1.  Polynomial elements are
canonical dicts mapping exponent pairs (e0, e1) to nonzero integer
coefficients; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

LABEL_ONE = "1"
LABEL_X = "x"
LABELS = (LABEL_ONE, LABEL_X)


class Ring:
    """Arithmetic interface for one coefficient ring kind."""

    kind: str
    characteristic: int
    has_alphas = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def to_json(self, a):
        raise NotImplementedError

    def from_json(self, data):
        raise NotImplementedError

    def show(self, a) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self.kind}>"


class IntegerRing(Ring):
    kind = "Z"
    characteristic = 0

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return k

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def to_json(self, a):
        return a

    def from_json(self, data):
        return int(data)

    def show(self, a):
        return str(a)


class GF2Ring(Ring):
    kind = "GF2"
    characteristic = 2

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return k % 2

    def add(self, a, b):
        return (a + b) % 2

    def neg(self, a):
        return a % 2

    def mul(self, a, b):
        return (a * b) % 2

    def is_zero(self, a):
        return a % 2 == 0

    def to_json(self, a):
        return a % 2

    def from_json(self, data):
        return int(data) % 2

    def show(self, a):
        return str(a % 2)


class PolynomialRing(Ring):
    """Z[a0, a1] or GF2[a0, a1]; elements are canonical exponent->coeff dicts."""

    has_alphas = True

    def __init__(self, characteristic: int):
        if characteristic not in (0, 2):
            raise ValueError("only characteristic 0 or 2 supported")
        self.characteristic = characteristic
        self.kind = "PolyZ" if characteristic == 0 else "PolyGF2"

    def _canon(self, terms: dict) -> dict:
        out = {}
        for expo, c in terms.items():
            if self.characteristic:
                c %= self.characteristic
            if c:
                out[expo] = c
        return out

    def zero(self):
        return {}

    def one(self):
        return {(0, 0): 1}

    def from_int(self, k):
        return self._canon({(0, 0): k})

    def alpha0(self):
        return {(1, 0): 1}

    def alpha1(self):
        return {(0, 1): 1}

    def add(self, a, b):
        out = dict(a)
        for expo, c in b.items():
            out[expo] = out.get(expo, 0) + c
        return self._canon(out)

    def neg(self, a):
        return self._canon({expo: -c for expo, c in a.items()})

    def mul(self, a, b):
        out: dict = {}
        for (e0, e1), c in a.items():
            for (f0, f1), d in b.items():
                key = (e0 + f0, e1 + f1)
                out[key] = out.get(key, 0) + c * d
        return self._canon(out)

    def is_zero(self, a):
        return not self._canon(a)

    def eq(self, a, b):
        return self._canon(a) == self._canon(b)

    def to_json(self, a):
        return {"monomials": [{"a0": e0, "a1": e1, "c": c}
                              for (e0, e1), c in sorted(a.items())]}

    def from_json(self, data):
        return self._canon({(m["a0"], m["a1"]): m["c"] for m in data["monomials"]})

    def show(self, a):
        if not a:
            return "0"
        parts = []
        for (e0, e1), c in sorted(a.items()):
            mono = ""
            if e0:
                mono += "a0" + (f"^{e0}" if e0 > 1 else "")
            if e1:
                mono += ("*" if mono else "") + "a1" + (f"^{e1}" if e1 > 1 else "")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def monomial_degree(self, a) -> int | None:
        """Quantum degree when homogeneous (each alpha has degree -2), else None."""
        degs = {-2 * (e0 + e1) for (e0, e1) in a}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None


_RINGS = {
    "Z": IntegerRing(),
    "GF2": GF2Ring(),
    "PolyZ": PolynomialRing(0),
    "PolyGF2": PolynomialRing(2),
}


def ring_ops(kind: str) -> Ring:
    """Look up the arithmetic interface for a ring kind."""
    try:
        return _RINGS[kind]
    except KeyError:
        raise ValueError(f"unknown ring kind {kind!r}") from None


@dataclass(frozen=True)
class FrobeniusConfig:
    """The rank-2 Frobenius algebra on {1, x} driving merges and splits.

    Undeformed: x*x = 0, D(1) = 1@x + x@1, D(x) = x@x.  Deformed (requires a
    polynomial ring): x*x = h*x - t*1, D(1) = 1@x + x@1 - h*1@1,
    D(x) = x@x - t*1@1, with h = a0 + a1 and t = a0*a1.
    """

    ring: Ring
    deformed: bool = False

    def __post_init__(self) -> None:
        if self.deformed and not self.ring.has_alphas:
            raise ValueError("deformed Frobenius algebra needs a polynomial ring")

    def h(self):
        return self.ring.add(self.ring.alpha0(), self.ring.alpha1())

    def t(self):
        return self.ring.mul(self.ring.alpha0(), self.ring.alpha1())

    def cache_key(self) -> tuple:
        return (self.ring.kind, self.deformed)

    def to_json(self) -> dict:
        return {"kind": self.ring.kind, "deformed": self.deformed}

    @classmethod
    def from_json(cls, data: dict) -> "FrobeniusConfig":
        return cls(ring_ops(data["kind"]), bool(data.get("deformed", False)))


def frob_multiply(cfg: FrobeniusConfig, u: str, v: str) -> dict[tuple[str, ...], object]:
    """m(u @ v) as a combination of single labels."""
    R = cfg.ring
    if (u, v) in ((LABEL_ONE, LABEL_ONE),):
        return {(LABEL_ONE,): R.one()}
    if LABEL_ONE in (u, v):
        return {(LABEL_X,): R.one()}
    if not cfg.deformed:
        return {}
    return {(LABEL_X,): cfg.h(), (LABEL_ONE,): R.neg(cfg.t())}


def frob_comultiply(cfg: FrobeniusConfig, u: str) -> dict[tuple[str, str], object]:
    """D(u) as a combination of label pairs."""
    R = cfg.ring
    if u == LABEL_ONE:
        out = {(LABEL_ONE, LABEL_X): R.one(), (LABEL_X, LABEL_ONE): R.one()}
        if cfg.deformed:
            out[(LABEL_ONE, LABEL_ONE)] = R.neg(cfg.h())
        return out
    out = {(LABEL_X, LABEL_X): R.one()}
    if cfg.deformed:
        out[(LABEL_ONE, LABEL_ONE)] = R.neg(cfg.t())
    return out

"""Generalized 2x2 matrices over a ring-bimodule pair, and the pair module.

Given a ring S and an (S, S)-bimodule N, the ring R consists of matrices
[[a, x], [y, b]] with a, b in S and x, y in N, multiplied by

    (a, x, y, b) * (a', x', y', b') = (a a', a x' + x b', y a' + b y', b b')

so the two N-entries never multiply each other: the product pairing
N x N -> S is identically zero, by the shape of the formula rather than
by a runtime convention.  M = N (+) S is a right R-module via

    (n, s) * [[a, x], [y, b]] = (n a + s y, s b)

and every right-R-endomorphism of M is left multiplication by a unique
element of S.  end_ring_verify checks that on finite instances by
computing End(M) with the exact linear solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .homs import FiniteHom, module_homs
from .rings import CapExceeded


@dataclass(frozen=True)
class GenMatrix:
    """One element [[a, x], [y, b]]: a, b from the ring, x, y from the bimodule."""

    ring: "GenMatrixRing"
    a: object
    x: object
    y: object
    b: object

    def _require_same(self, other):
        if not isinstance(other, GenMatrix) or other.ring is not self.ring:
            raise ValueError("mismatched parents for generalized matrices")

    def __add__(self, other):
        self._require_same(other)
        S, N = self.ring.S, self.ring.N
        return GenMatrix(
            self.ring,
            S.add(self.a, other.a),
            N.add(self.x, other.x),
            N.add(self.y, other.y),
            S.add(self.b, other.b),
        )

    def __neg__(self):
        S, N = self.ring.S, self.ring.N
        return GenMatrix(self.ring, S.neg(self.a), N.neg(self.x), N.neg(self.y), S.neg(self.b))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._require_same(other)
        S, N = self.ring.S, self.ring.N
        return GenMatrix(
            self.ring,
            S.mul(self.a, other.a),
            N.add(N.left(self.a, other.x), N.right(self.x, other.b)),
            N.add(N.right(self.y, other.a), N.left(self.b, other.y)),
            S.mul(self.b, other.b),
        )

    def format(self) -> str:
        S, N = self.ring.S, self.ring.N
        return (
            f"[[{S.format_element(self.a)}, {N.format_element(self.x)}], "
            f"[{N.format_element(self.y)}, {S.format_element(self.b)}]]"
        )

    def __repr__(self):
        return self.format()


def genmatrix_mul(u: GenMatrix, v: GenMatrix) -> GenMatrix:
    return u * v


class GenMatrixRing:
    """The ring of generalized matrices over (S, N)."""

    def __init__(self, S, N):
        if getattr(N, "ring", None) is not S:
            raise ValueError("the bimodule is not over the given ring")
        self.S = S
        self.N = N
        self.name = f"GenMatrix({S.name}, {N.name})"
        self.finite = hasattr(S, "size") and hasattr(N, "size")
        if self.finite:
            self.size = S.size * N.size * N.size * S.size
        self.zero = GenMatrix(self, S.zero, N.zero, N.zero, S.zero)
        self.one = GenMatrix(self, S.one, N.zero, N.zero, S.one)

    def elem(self, a, x, y, b) -> GenMatrix:
        return GenMatrix(self, a, x, y, b)

    def elements(self, cap: int | None = None):
        if not self.finite:
            raise CapExceeded(f"{self.name} is infinite; no carrier enumeration")
        if cap is not None and self.size > cap:
            raise CapExceeded(f"{self.name} has {self.size} elements, cap is {cap}")
        S, N = self.S, self.N
        return [
            GenMatrix(self, a, x, y, b)
            for a, x, y, b in product(S.elements(), N.elements(), N.elements(), S.elements())
        ]

    def add(self, u, v):
        return u + v

    def neg(self, u):
        return -u

    def sub(self, u, v):
        return u - v

    def mul(self, u, v):
        return u * v

    def index(self, u: GenMatrix) -> int:
        S, N = self.S, self.N
        out = S.index(u.a)
        out = out * N.size + N.index(u.x)
        out = out * N.size + N.index(u.y)
        out = out * S.size + S.index(u.b)
        return out

    def additive_generators(self):
        S, N = self.S, self.N
        out = []
        for g, _ in S.generators():
            out.append(GenMatrix(self, g, N.zero, N.zero, S.zero))
        for g, _ in N.generators():
            out.append(GenMatrix(self, S.zero, g, N.zero, S.zero))
        for g, _ in N.generators():
            out.append(GenMatrix(self, S.zero, N.zero, g, S.zero))
        for g, _ in S.generators():
            out.append(GenMatrix(self, S.zero, N.zero, N.zero, g))
        return out

    def format_element(self, u) -> str:
        return u.format()

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class PairVec:
    """An element (n, s) of the right module M = N (+) S."""

    module: "PairModule"
    n: object
    s: object

    def _require_same(self, other):
        if not isinstance(other, PairVec) or other.module is not self.module:
            raise ValueError("mismatched parents for pair vectors")

    def __add__(self, other):
        self._require_same(other)
        N, S = self.module.N, self.module.S
        return PairVec(self.module, N.add(self.n, other.n), S.add(self.s, other.s))

    def __neg__(self):
        N, S = self.module.N, self.module.S
        return PairVec(self.module, N.neg(self.n), S.neg(self.s))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, u: GenMatrix):
        """The right action (n, s) * [[a, x], [y, b]] = (n a + s y, s b)."""
        if not isinstance(u, GenMatrix) or u.ring is not self.module.ring:
            raise ValueError("mismatched parents for the module action")
        N, S = self.module.N, self.module.S
        return PairVec(
            self.module,
            N.add(N.right(self.n, u.a), N.left(self.s, u.y)),
            S.mul(self.s, u.b),
        )

    def format(self) -> str:
        N, S = self.module.N, self.module.S
        return f"({N.format_element(self.n)}, {S.format_element(self.s)})"

    def __repr__(self):
        return self.format()


def module_act(m: PairVec, u: GenMatrix) -> PairVec:
    return m * u


class PairModule:
    """M = N (+) S as a right module over the generalized matrix ring."""

    def __init__(self, ring: GenMatrixRing):
        self.ring = ring
        self.S = ring.S
        self.N = ring.N
        self.name = f"Pair({self.S.name}, {self.N.name})"
        self.finite = ring.finite
        if self.finite:
            self.size = self.N.size * self.S.size
        self.zero = PairVec(self, self.N.zero, self.S.zero)

    def elem(self, n, s) -> PairVec:
        return PairVec(self, n, s)

    def elements(self, cap: int | None = None):
        if not self.finite:
            raise CapExceeded(f"{self.name} is infinite; no carrier enumeration")
        if cap is not None and self.size > cap:
            raise CapExceeded(f"{self.name} has {self.size} elements, cap is {cap}")
        return [
            PairVec(self, n, s)
            for n, s in product(self.N.elements(), self.S.elements())
        ]

    def add(self, m1, m2):
        return m1 + m2

    def neg(self, m):
        return -m

    def act(self, m: PairVec, u: GenMatrix) -> PairVec:
        return m * u

    def index(self, m: PairVec) -> int:
        return self.N.index(m.n) * self.S.size + self.S.index(m.s)

    def generators(self):
        out = [(PairVec(self, g, self.S.zero), order) for g, order in self.N.generators()]
        out += [(PairVec(self, self.N.zero, g), order) for g, order in self.S.generators()]
        return out

    def coords(self, m: PairVec):
        return tuple(self.N.coords(m.n)) + tuple(self.S.coords(m.s))

    def from_coords(self, cs):
        nk = len(self.N.generators())
        return PairVec(self, self.N.from_coords(cs[:nk]), self.S.from_coords(cs[nk:]))

    def format_element(self, m) -> str:
        return m.format()

    def __repr__(self):
        return self.name


class LambdaEndo:
    """Left multiplication by t on both components: (n, s) -> (t n, t s)."""

    def __init__(self, module: PairModule, t):
        self.module = module
        self.t = t

    def __call__(self, m: PairVec) -> PairVec:
        N, S = self.module.N, self.module.S
        return PairVec(self.module, N.left(self.t, m.n), S.mul(self.t, m.s))

    def as_hom(self) -> FiniteHom:
        images = tuple(self(g) for g, _ in self.module.generators())
        return FiniteHom(self.module, self.module, images)

    def __repr__(self):
        return f"lambda[{self.module.S.format_element(self.t)}]"


def lambda_of(t, module: PairModule) -> LambdaEndo:
    return LambdaEndo(module, t)


@dataclass
class Instance:
    """A fully assembled (S, N, R, M) quadruple."""

    S: object
    N: object
    R: GenMatrixRing
    M: PairModule
    kind: str  # 'finite' | 'symbolic'

    @property
    def name(self) -> str:
        return f"(S={self.S.name}, N={self.N.name})"


def make_instance(S, N) -> Instance:
    R = GenMatrixRing(S, N)
    M = PairModule(R)
    kind = "finite" if R.finite else "symbolic"
    return Instance(S, N, R, M, kind)


@dataclass
class EndRingReport:
    """Outcome of identifying End(M) with S on a finite instance."""

    ok: bool
    end_size: int
    ring_size: int
    bijective: bool
    additive: bool
    multiplicative: bool
    unital: bool
    failure: dict | None = None

    def to_json(self):
        return {
            "type": "end-ring-isomorphism",
            "ok": self.ok,
            "endSize": self.end_size,
            "ringSize": self.ring_size,
            "bijective": self.bijective,
            "additive": self.additive,
            "multiplicative": self.multiplicative,
            "unital": self.unital,
            "failure": self.failure,
        }


def end_ring_verify(instance: Instance, limit: int = 1 << 20) -> EndRingReport:
    """Compute End(M) by the solver and match it elementwise with S.

    Verifies that every endomorphism is left multiplication by exactly
    one ring element and that the matching is a ring isomorphism
    (pointwise, with composition read as apply-rightmost-first).
    """
    if instance.kind != "finite":
        raise CapExceeded("end-ring verification enumerates; symbolic instances use the structural route")
    M = instance.M
    S = instance.S
    homs = module_homs(M, M, limit)
    lam = {t: lambda_of(t, M).as_hom() for t in S.elements()}
    matches: dict = {}
    for h in homs:
        hits = [t for t in S.elements() if lam[t] == h]
        if len(hits) != 1:
            return EndRingReport(
                False, len(homs), S.size, False, False, False, False,
                {"reason": "endomorphism not matched by exactly one ring element",
                 "hits": len(hits), "hom": repr(h)},
            )
        matches[h] = hits[0]
    bijective = len(homs) == S.size and len(set(matches.values())) == len(homs)
    additive = all(
        lam[S.add(t, u)] == lam[t] + lam[u]
        for t in S.elements()
        for u in S.elements()
    )
    multiplicative = all(
        lam[S.mul(t, u)] == lam[t].compose(lam[u])
        for t in S.elements()
        for u in S.elements()
    )
    unital = lam[S.one].is_identity()
    ok = bijective and additive and multiplicative and unital
    failure = None
    if not ok:
        failure = {"reason": "ring law failed",
                   "bijective": bijective, "additive": additive,
                   "multiplicative": multiplicative, "unital": unital}
    return EndRingReport(ok, len(homs), S.size, bijective, additive, multiplicative, unital, failure)

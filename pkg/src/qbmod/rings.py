"""Finite ring and bimodule descriptors, ideals, and exhaustive checks.

Rings here are small structural descriptors, not multiplication tables
supplied by the user: a residue ring Zmod(n) and a matrix ring
MatRing(k, p) over a prime field.  Both expose a common duck interface:

    name, size, zero, one
    elements(cap=None)      carrier in a fixed deterministic order
    add/neg/sub/mul         arithmetic on carrier elements
    index(a)                position of a in the carrier order
    additive_generators()   ring elements generating (carrier, +)
    generators()            [(element, additive order), ...] cyclic basis
    coords(a) / from_coords(cs)   coordinates over generators()
    format_element(a)

Bimodules over a ring S expose the same additive interface plus
left(s, x) and right(x, s).  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class CapExceeded(Exception):
    """An exhaustive enumeration would exceed the configured capacity."""


def _check_cap(size: int, cap: int | None, what: str):
    if cap is not None and size > cap:
        raise CapExceeded(f"{what} has {size} elements, cap is {cap}")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Zmod:
    """The residue ring Z/n with carrier 0..n-1."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        self.n = n
        self.name = f"Zmod({n})"
        self.size = n
        self.zero = 0
        self.one = 1

    def elements(self, cap: int | None = None) -> list[int]:
        _check_cap(self.size, cap, self.name)
        return list(range(self.n))

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def index(self, a) -> int:
        return a % self.n

    def additive_generators(self):
        return [1]

    def generators(self):
        return [(1, self.n)]

    def coords(self, a):
        return (a % self.n,)

    def from_coords(self, cs):
        return cs[0] % self.n

    def format_element(self, a) -> str:
        return str(a % self.n)

    def __repr__(self):
        return self.name


class MatRing:
    """k-by-k matrices over the prime field F_p; elements are tuples of row tuples."""

    def __init__(self, k: int, p: int):
        if k < 1:
            raise ValueError("matrix size must be at least 1")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime; matrix rings are over prime fields here")
        self.k = k
        self.p = p
        self.name = f"MatRing({k}, F_{p})"
        self.size = p ** (k * k)
        self.zero = tuple(tuple(0 for _ in range(k)) for _ in range(k))
        self.one = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        self._elements = None

    def elements(self, cap: int | None = None):
        _check_cap(self.size, cap, self.name)
        if self._elements is None:
            k, p = self.k, self.p
            self._elements = [
                tuple(tuple(flat[i * k + j] for j in range(k)) for i in range(k))
                for flat in product(range(p), repeat=k * k)
            ]
        return self._elements

    def add(self, a, b):
        p = self.p
        return tuple(
            tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
        )

    def neg(self, a):
        p = self.p
        return tuple(tuple((-x) % p for x in row) for row in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        k, p = self.k, self.p
        return tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(k))
            for i in range(k)
        )

    def index(self, a) -> int:
        k, p = self.k, self.p
        out = 0
        for i in range(k):
            for j in range(k):
                out = out * p + a[i][j]
        return out

    def additive_generators(self):
        return [e for e, _ in self.generators()]

    def generators(self):
        k, p = self.k, self.p
        out = []
        for i in range(k):
            for j in range(k):
                unit = tuple(
                    tuple(1 if (r, c) == (i, j) else 0 for c in range(k))
                    for r in range(k)
                )
                out.append((unit, p))
        return out

    def coords(self, a):
        return tuple(x for row in a for x in row)

    def from_coords(self, cs):
        k, p = self.k, self.p
        return tuple(tuple(cs[i * k + j] % p for j in range(k)) for i in range(k))

    def format_element(self, a) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in a) + "]"

    def __repr__(self):
        return self.name


class RegularBimodule:
    """The ring S seen as the (S, S)-bimodule S itself."""

    def __init__(self, ring):
        self.ring = ring
        self.name = f"Regular({ring.name})"
        self.size = ring.size
        self.zero = ring.zero

    def elements(self, cap: int | None = None):
        return self.ring.elements(cap)

    def add(self, a, b):
        return self.ring.add(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def left(self, s, x):
        return self.ring.mul(s, x)

    def right(self, x, s):
        return self.ring.mul(x, s)

    def index(self, a):
        return self.ring.index(a)

    def generators(self):
        return self.ring.generators()

    def coords(self, a):
        return self.ring.coords(a)

    def from_coords(self, cs):
        return self.ring.from_coords(cs)

    def format_element(self, a) -> str:
        return self.ring.format_element(a)

    def __repr__(self):
        return self.name


class ZmodBimodule:
    """Z/m as a bimodule over Zmod(n), acting through reduction mod m.

    Well-defined only when m divides n: the action s.x = (s mod m)*x
    must not depend on the representative of s mod n.
    """

    def __init__(self, ring: Zmod, m: int):
        if not isinstance(ring, Zmod):
            raise ValueError("ZmodBimodule needs a Zmod base ring")
        if m < 1 or ring.n % m != 0:
            raise ValueError(f"{m} does not divide {ring.n}; the action would be ill-defined")
        self.ring = ring
        self.m = m
        self.name = f"ZmodBimodule({ring.name}, {m})"
        self.size = m
        self.zero = 0

    def elements(self, cap: int | None = None):
        _check_cap(self.size, cap, self.name)
        return list(range(self.m))

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def left(self, s, x):
        return (s * x) % self.m

    def right(self, x, s):
        return (x * s) % self.m

    def index(self, a):
        return a % self.m

    def generators(self):
        if self.m == 1:
            return []
        return [(1, self.m)]

    def coords(self, a):
        if self.m == 1:
            return ()
        return (a % self.m,)

    def from_coords(self, cs):
        if self.m == 1:
            return 0
        return cs[0] % self.m

    def format_element(self, a) -> str:
        return str(a % self.m)

    def __repr__(self):
        return self.name


@dataclass
class AxiomReport:
    ok: bool
    checked: int
    failures: list

    def __bool__(self):
        return self.ok


def ring_axioms_check(ring, cap: int | None = 4096) -> AxiomReport:
    """Exhaustively verify associativity, distributivity and the two-sided unit."""
    elems = ring.elements(cap)
    failures = []
    checked = 0
    one = ring.one
    for a in elems:
        checked += 2
        if ring.mul(one, a) != a or ring.mul(a, one) != a:
            failures.append({"law": "unit", "witness": [a]})
            return AxiomReport(False, checked, failures)
    for a in elems:
        for b in elems:
            for c in elems:
                checked += 3
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
                    failures.append({"law": "associativity", "witness": [a, b, c]})
                    return AxiomReport(False, checked, failures)
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
                    failures.append({"law": "left distributivity", "witness": [a, b, c]})
                    return AxiomReport(False, checked, failures)
                if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)):
                    failures.append({"law": "right distributivity", "witness": [a, b, c]})
                    return AxiomReport(False, checked, failures)
    return AxiomReport(True, checked, failures)


def bimodule_axioms_check(bimod, cap: int | None = 4096) -> AxiomReport:
    """Exhaustively verify the two-sided module laws of a bimodule over its ring."""
    ring = bimod.ring
    selems = ring.elements(cap)
    xelems = bimod.elements(cap)
    failures = []
    checked = 0
    one = ring.one
    for x in xelems:
        checked += 2
        if bimod.left(one, x) != x or bimod.right(x, one) != x:
            failures.append({"law": "unit action", "witness": [x]})
            return AxiomReport(False, checked, failures)
    for s in selems:
        for t in selems:
            for x in xelems:
                checked += 3
                if bimod.left(s, bimod.left(t, x)) != bimod.left(ring.mul(s, t), x):
                    failures.append({"law": "left associativity", "witness": [s, t, x]})
                    return AxiomReport(False, checked, failures)
                if bimod.right(bimod.right(x, s), t) != bimod.right(x, ring.mul(s, t)):
                    failures.append({"law": "right associativity", "witness": [s, t, x]})
                    return AxiomReport(False, checked, failures)
                if bimod.right(bimod.left(s, x), t) != bimod.left(s, bimod.right(x, t)):
                    failures.append({"law": "middle associativity", "witness": [s, t, x]})
                    return AxiomReport(False, checked, failures)
    for s in selems:
        for x in xelems:
            for y in xelems:
                checked += 2
                if bimod.left(s, bimod.add(x, y)) != bimod.add(bimod.left(s, x), bimod.left(s, y)):
                    failures.append({"law": "left distributivity", "witness": [s, x, y]})
                    return AxiomReport(False, checked, failures)
                if bimod.right(bimod.add(x, y), s) != bimod.add(bimod.right(x, s), bimod.right(y, s)):
                    failures.append({"law": "right distributivity", "witness": [s, x, y]})
                    return AxiomReport(False, checked, failures)
    return AxiomReport(True, checked, failures)


class IdealHandle:
    """An ideal of a finite ring, carried as its full element set.

    side is one of 'left', 'right', 'two-sided'.  The element set is
    closed by construction; generators record how it was built.
    """

    def __init__(self, ring, side: str, generators: tuple, elements: frozenset):
        assert side in ("left", "right", "two-sided")
        self.ring = ring
        self.side = side
        self.generators = generators
        self.elements = elements

    @property
    def size(self) -> int:
        return len(self.elements)

    def is_zero(self) -> bool:
        return self.elements == frozenset([self.ring.zero])

    def __contains__(self, a):
        return a in self.elements

    def sorted_elements(self):
        return sorted(self.elements, key=self.ring.index)

    def __eq__(self, other):
        return (
            isinstance(other, IdealHandle)
            and self.ring is other.ring
            and self.side == other.side
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.side, self.elements))

    def format(self) -> str:
        gens = ", ".join(self.ring.format_element(g) for g in self.generators)
        return f"{self.side} ideal ({gens}) of {self.ring.name}, {self.size} elements"

    def to_json(self):
        return {
            "side": self.side,
            "generators": [self.ring.format_element(g) for g in self.generators],
            "size": self.size,
            "elements": [self.ring.format_element(a) for a in self.sorted_elements()],
        }

    def __repr__(self):
        return self.format()


def close_additively(add, current: set, seed) -> list:
    """Grow current to its additive closure with seed; return the fresh elements.

    Negation comes for free: in a finite additive group -y is a repeated
    sum of y, so closing under addition alone closes the subgroup.
    """
    fresh = []
    stack = [seed]
    while stack:
        y = stack.pop()
        if y in current:
            continue
        current.add(y)
        fresh.append(y)
        for c in list(current):
            z = add(y, c)
            if z not in current:
                stack.append(z)
    return fresh


def ideal_closure(ring, gens, side: str = "two-sided", cap: int | None = 4096) -> IdealHandle:
    """Smallest ideal of the given sidedness containing gens, by worklist fixed point."""
    assert side in ("left", "right", "two-sided")
    selems = ring.elements(cap)
    current = {ring.zero}
    work = list(gens)
    while work:
        a = work.pop()
        for y in close_additively(ring.add, current, a):
            if side in ("left", "two-sided"):
                for s in selems:
                    v = ring.mul(s, y)
                    if v not in current:
                        work.append(v)
            if side in ("right", "two-sided"):
                for s in selems:
                    v = ring.mul(y, s)
                    if v not in current:
                        work.append(v)
    return IdealHandle(ring, side, tuple(dict.fromkeys(gens)), frozenset(current))


def _ideal_sum(ring, i1: IdealHandle, i2: IdealHandle) -> IdealHandle:
    """Sum of two same-sided ideals: the additive span of their union."""
    current = set(i1.elements)
    for b in i2.elements:
        close_additively(ring.add, current, b)
    gens = tuple(dict.fromkeys(i1.generators + i2.generators))
    return IdealHandle(ring, i1.side, gens, frozenset(current))


def enumerate_ideals(
    ring,
    side: str = "two-sided",
    cap: int | None = 4096,
    count_cap: int = 10000,
) -> list[IdealHandle]:
    """All ideals of the given sidedness, smallest first, deterministically ordered.

    Closes the set of principal ideals under pairwise sums; every ideal
    of a finite ring is a finite sum of principal ones, so the fixed
    point is complete.  count_cap guards pathological ideal lattices.
    """
    pool: dict[frozenset, IdealHandle] = {}
    for a in ring.elements(cap):
        h = ideal_closure(ring, (a,), side, cap)
        pool.setdefault(h.elements, h)
    while True:
        added = False
        handles = list(pool.values())
        for i1 in handles:
            for i2 in handles:
                if i1 is i2:
                    continue
                key_union = i1.elements | i2.elements
                if key_union in pool:
                    continue
                s = _ideal_sum(ring, i1, i2)
                if s.elements not in pool:
                    pool[s.elements] = s
                    added = True
                    if len(pool) > count_cap:
                        raise CapExceeded(
                            f"more than {count_cap} {side} ideals in {ring.name}"
                        )
        if not added:
            break
    out = sorted(
        pool.values(),
        key=lambda h: (h.size, tuple(sorted(ring.index(a) for a in h.elements))),
    )
    return out

"""Exact linear algebra over Z/n.

Everything here works with plain Python ints modulo a single modulus n.
Gaussian elimination is not enough over a ring with zero divisors (over
Z/4 the row span of [[2]] contains [2] but no unit multiple of it), so
row reduction is done with the Howell normal form: a row echelon form
that additionally contains, for every row, the annihilator multiples
needed to make membership testing and kernel extraction complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _split(a: int, n: int) -> int:
    # n // gcd(a^infinity, n): strips from n every prime it shares with a.
    a %= n
    if a == 0:
        return 1
    g = gcd(a, n)
    while g != 1:
        n //= g
        g = gcd(a, n)
    return n


def _stab(a: int, b: int, n: int) -> int:
    # c such that gcd(a + c*b, n) == gcd(a, b, n).
    g = gcd(a, gcd(b, n))
    return _split(a // g, n // g) % n


def unit_multiplier(a: int, n: int) -> int:
    """A unit u mod n with u*a == gcd(a, n) mod n."""
    a %= n
    if a == 0:
        return 1
    g, s, _ = xgcd(a, n)
    s %= n
    if gcd(s, n) == 1:
        return s
    # s*a == g but s is a zero divisor; shift s by a multiple of n//g,
    # which does not change s*a mod n since (n//g)*a == 0.
    c = _stab(s, n // g, n)
    u = (s + c * (n // g)) % n
    assert gcd(u, n) == 1
    return u


def howell(rows: list[list[int]], n: int) -> list[list[int]]:
    """Howell normal form of the subgroup of (Z/n)^w generated by rows.

    Returns rows with strictly increasing pivot columns, each pivot a
    divisor of n, entries above a pivot reduced modulo it, no zero rows.
    The result is a canonical generating set of the row span: it depends
    only on the span, not on the presented generators.
    """
    assert n >= 1
    if n == 1 or not rows:
        return []
    w = len(rows[0])
    work = [[v % n for v in r] for r in rows]
    assert all(len(r) == w for r in work)
    r = 0
    for c in range(w):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, len(work)):
            if work[i][c]:
                a, b = work[r][c], work[i][c]
                g, s, t = xgcd(a, b)
                bq, aq = -(b // g), a // g
                # [[s, t], [-b/g, a/g]] has determinant 1
                ri = work[i]
                rr = work[r]
                work[r] = [(s * x + t * y) % n for x, y in zip(rr, ri)]
                work[i] = [(bq * x + aq * y) % n for x, y in zip(rr, ri)]
        u = unit_multiplier(work[r][c], n)
        if u != 1:
            work[r] = [(u * v) % n for v in work[r]]
        p = work[r][c]
        assert p == gcd(p, n)
        for i in range(r):
            q = work[i][c] // p
            if q:
                work[i] = [(x - q * y) % n for x, y in zip(work[i], work[r])]
        # the annihilator multiple stays in the span and is needed for
        # completeness of membership tests below later pivots
        ann = n // gcd(p, n)
        if ann % n:
            extra = [(ann * v) % n for v in work[r]]
            if any(extra):
                work.append(extra)
        r += 1
    return work[:r]


def reduce_by_howell(vec: list[int], hform: list[list[int]], n: int) -> list[int]:
    """Residue of vec after reduction by a Howell form; zero iff vec is in the span."""
    v = [x % n for x in vec]
    for row in hform:
        c = next(i for i, val in enumerate(row) if val)
        q = v[c] // row[c]
        if q:
            v = [(x - q * y) % n for x, y in zip(v, row)]
    return v


@dataclass
class LinearSystem:
    """A*x == b over Z/n; rows of a are equations, unknowns indexed 0..k-1."""

    a: list[list[int]]
    b: list[int]
    n: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        assert self.n >= 1
        assert len(self.a) == len(self.b)
        if self.a:
            k = len(self.a[0])
            assert all(len(row) == k for row in self.a)

    @property
    def unknowns(self) -> int:
        return len(self.a[0]) if self.a else len(self.labels)


@dataclass
class LinearSolution:
    """Solution set of a system over Z/n: particular + homogeneous subgroup."""

    consistent: bool
    n: int
    unknowns: int
    particular: tuple[int, ...] | None = None
    homogeneous: tuple[tuple[int, ...], ...] = ()
    _pivots: tuple[int, ...] = field(default=(), repr=False)

    def count(self) -> int:
        if not self.consistent:
            return 0
        total = 1
        for p in self._pivots:
            total *= self.n // p
        return total

    def iter_solutions(self):
        """All solutions, each a tuple mod n, without repetition."""
        if not self.consistent:
            return
        base = self.particular
        ranges = [range(self.n // p) for p in self._pivots]
        for coeffs in product(*ranges):
            v = list(base)
            for t, row in zip(coeffs, self.homogeneous):
                if t:
                    for i, x in enumerate(row):
                        v[i] = (v[i] + t * x) % self.n
            yield tuple(v)


def solve_linear(system: LinearSystem) -> LinearSolution:
    """Solve A*x == b over Z/n exactly.

    The homogeneous solutions are read off the Howell form of the
    augmented generator matrix [A^T | I]: rows whose left block is zero
    record exactly the combinations of unknowns annihilating every
    equation, including the torsion combinations Gaussian elimination
    misses over a non-field modulus.
    """
    n = system.n
    k = system.unknowns
    m = len(system.a)
    if n == 1:
        return LinearSolution(True, 1, k, tuple([0] * k), (), ())
    if k == 0:
        ok = all(x % n == 0 for x in system.b)
        return LinearSolution(ok, n, 0, () if ok else None, (), ())
    gens = []
    for i in range(k):
        row = [system.a[j][i] % n for j in range(m)]
        tail = [0] * k
        tail[i] = 1
        gens.append(row + tail)
    h = howell(gens, n)
    kernel = []
    image_rows = []
    for row in h:
        if any(row[:m]):
            image_rows.append(row)
        else:
            kernel.append(tuple(row[m:]))
    target = [x % n for x in system.b] + [0] * k
    residue = reduce_by_howell(target, image_rows, n)
    if any(residue[:m]):
        return LinearSolution(False, n, k)
    particular = tuple((-x) % n for x in residue[m:])
    pivots = tuple(next(v for v in row if v) for row in kernel)
    return LinearSolution(True, n, k, particular, tuple(kernel), pivots)

"""Homomorphisms and submodules of finite modules, by exact linear solve.

A finite module here is any object with the additive duck interface of
rings.py (elements, zero, add, neg, index, generators, coords,
from_coords, format_element) plus

    ring         the acting ring (exposing additive_generators())
    act(m, r)    the action of ring element r on m

act is additive in both arguments, so R-linearity of a map only needs
checking against additive generators of the ring.  The module side is
handled through the cyclic decomposition generators(): an additive map
is a choice of generator images compatible with the generator orders.
"""

from __future__ import annotations

from itertools import product
from math import lcm

from .linalg import LinearSystem, solve_linear
from .rings import CapExceeded, close_additively


def scale(module, c: int, m):
    """c-fold sum of m in the module, c >= 0, by binary doubling."""
    assert c >= 0
    out = module.zero
    base = m
    while c:
        if c & 1:
            out = module.add(out, base)
        c >>= 1
        if c:
            base = module.add(base, base)
    return out


class FiniteHom:
    """An additive, action-compatible map between finite modules.

    Determined by the images of the source's cyclic generators; applied
    to arbitrary elements through their coordinates.
    """

    def __init__(self, src, dst, images: tuple):
        self.src = src
        self.dst = dst
        self.images = tuple(images)
        assert len(self.images) == len(src.generators())

    def __call__(self, m):
        out = self.dst.zero
        for c, img in zip(self.src.coords(m), self.images):
            if c:
                out = self.dst.add(out, scale(self.dst, c, img))
        return out

    def is_zero(self) -> bool:
        return all(img == self.dst.zero for img in self.images)

    def is_identity(self) -> bool:
        if self.src is not self.dst:
            return False
        return all(img == g for img, (g, _) in zip(self.images, self.src.generators()))

    def compose(self, other: "FiniteHom") -> "FiniteHom":
        """self after other."""
        assert other.dst is self.src
        return FiniteHom(other.src, self.dst, tuple(self(img) for img in other.images))

    def __add__(self, other: "FiniteHom") -> "FiniteHom":
        assert self.src is other.src and self.dst is other.dst
        return FiniteHom(
            self.src,
            self.dst,
            tuple(self.dst.add(a, b) for a, b in zip(self.images, other.images)),
        )

    def __eq__(self, other):
        return (
            isinstance(other, FiniteHom)
            and self.src is other.src
            and self.dst is other.dst
            and self.images == other.images
        )

    def __hash__(self):
        return hash(tuple(self.dst.index(img) for img in self.images))

    def sort_key(self):
        return tuple(self.dst.index(img) for img in self.images)

    def __repr__(self):
        imgs = ", ".join(self.dst.format_element(i) for i in self.images)
        return f"FiniteHom([{imgs}])"


def _canonical_images(dst, coords_rows):
    """Turn unknown-vector rows (coeffs per dst generator) into dst elements."""
    gens = dst.generators()
    images = []
    for row in coords_rows:
        img = dst.zero
        for (g, order), c in zip(gens, row):
            c %= order
            if c:
                img = dst.add(img, scale(dst, c, g))
        images.append(img)
    return tuple(images)


def module_homs(src, dst, limit: int = 1 << 20) -> list[FiniteHom]:
    """All R-linear maps src -> dst, via one linear solve over Z/n.

    Unknown x[i][l] is the coefficient of dst generator l in the image
    of src generator i.  All congruences (generator orders, linearity
    against ring additive generators) are scaled into a single modulus
    n = lcm of the dst generator orders.
    """
    assert src.ring is dst.ring
    sgens = src.generators()
    dgens = dst.generators()
    k, q = len(sgens), len(dgens)
    if q == 0 or k == 0:
        return [FiniteHom(src, dst, tuple(dst.zero for _ in range(k)))]
    n = lcm(*[order for _, order in dgens])
    nun = k * q
    rows: list[list[int]] = []
    rhs: list[int] = []

    def empty_row():
        return [0] * nun

    # generator order compatibility: d_i * x[i][l] == 0 (mod c_l)
    for i, (_, d) in enumerate(sgens):
        for l, (_, c) in enumerate(dgens):
            row = empty_row()
            row[i * q + l] = (n // c) * d % n
            rows.append(row)
            rhs.append(0)
    # linearity against ring additive generators, coordinate by coordinate
    ring_gens = src.ring.additive_generators()
    src_action = {}
    for i, (e, _) in enumerate(sgens):
        for ri, r in enumerate(ring_gens):
            src_action[i, ri] = src.coords(src.act(e, r))
    dst_action = {}
    for l, (f, _) in enumerate(dgens):
        for ri, r in enumerate(ring_gens):
            dst_action[l, ri] = dst.coords(dst.act(f, r))
    for i in range(k):
        for ri in range(len(ring_gens)):
            a = src_action[i, ri]
            for m in range(q):
                c_m = dgens[m][1]
                sc = n // c_m
                row = empty_row()
                for j in range(k):
                    if a[j]:
                        row[j * q + m] = (row[j * q + m] + sc * a[j]) % n
                for l in range(q):
                    b = dst_action[l, ri][m]
                    if b:
                        row[i * q + l] = (row[i * q + l] - sc * b) % n
                rows.append(row)
                rhs.append(0)

    sol = solve_linear(LinearSystem(rows, rhs, n))
    assert sol.consistent  # the zero map always satisfies the system
    if sol.count() > limit:
        raise CapExceeded(f"{sol.count()} raw hom candidates exceed limit {limit}")
    seen = {}
    for vec in sol.iter_solutions():
        key = tuple(
            vec[i * q + l] % dgens[l][1] for i in range(k) for l in range(q)
        )
        if key in seen:
            continue
        coords_rows = [key[i * q : (i + 1) * q] for i in range(k)]
        seen[key] = FiniteHom(src, dst, _canonical_images(dst, coords_rows))
    out = sorted(seen.values(), key=FiniteHom.sort_key)
    return out


def enumerate_module_homs(src, dst, limit: int = 4096) -> list[FiniteHom]:
    """Brute-force route: try every assignment of generator images.

    Independent of the linear solver on purpose: candidates are filtered
    by directly checking additivity on all element pairs and linearity
    against every ring element (falling back to additive generators if
    the ring carrier is too large to enumerate).
    """
    assert src.ring is dst.ring
    sgens = src.generators()
    k = len(sgens)
    delems = dst.elements()
    if len(delems) ** k > limit:
        raise CapExceeded(
            f"{len(delems)}^{k} candidate maps exceed enumeration limit {limit}"
        )
    try:
        ring_elems = src.ring.elements(limit)
    except CapExceeded:
        ring_elems = src.ring.additive_generators()
    selems = src.elements()
    out = []
    for images in product(delems, repeat=k):
        if any(scale(dst, d, img) != dst.zero for (_, d), img in zip(sgens, images)):
            continue
        cand = FiniteHom(src, dst, images)
        table = {m: cand(m) for m in selems}
        if any(
            table[src.add(a, b)] != dst.add(table[a], table[b])
            for a in selems
            for b in selems
        ):
            continue
        if any(
            table[src.act(m, r)] != dst.act(table[m], r)
            for m in selems
            for r in ring_elems
        ):
            continue
        out.append(cand)
    out.sort(key=FiniteHom.sort_key)
    return out


class Submodule:
    """A submodule of a finite module, carried as its full element set."""

    def __init__(self, module, generators: tuple, elements: frozenset):
        self.module = module
        self.generators = tuple(generators)
        self.elements = elements

    @classmethod
    def span(cls, module, gens) -> "Submodule":
        current = {module.zero}
        for g in gens:
            close_additively(module.add, current, g)
        return cls(module, tuple(gens), frozenset(current))

    @classmethod
    def from_elements(cls, module, elems) -> "Submodule":
        """Wrap an additively closed set, reducing to a small generating set."""
        elems = frozenset(elems)
        current = {module.zero}
        gens = []
        for m in sorted(elems, key=module.index):
            if m not in current:
                gens.append(m)
                close_additively(module.add, current, m)
        assert frozenset(current) == elems, "element set was not additively closed"
        return cls(module, tuple(gens), elems)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, m):
        return m in self.elements

    def is_zero(self) -> bool:
        return self.elements == frozenset([self.module.zero])

    def is_all(self) -> bool:
        return self.size == len(self.module.elements())

    def sorted_elements(self):
        return sorted(self.elements, key=self.module.index)

    def stable_under_action(self) -> bool:
        ring_gens = self.module.ring.additive_generators()
        return all(
            self.module.act(m, r) in self.elements
            for m in self.elements
            for r in ring_gens
        )

    def generator_orders(self):
        out = []
        for g in self.generators:
            order = 1
            cur = g
            while cur != self.module.zero:
                cur = self.module.add(cur, g)
                order += 1
            out.append((g, order))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.module is other.module
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)

    def to_json(self):
        return {
            "generators": [self.module.format_element(g) for g in self.generators],
            "size": self.size,
            "elements": [self.module.format_element(m) for m in self.sorted_elements()]
            if self.size <= 64
            else None,
        }

    def __repr__(self):
        return f"Submodule(size={self.size} of {getattr(self.module, 'name', self.module)})"


def is_direct_summand(sub: Submodule) -> FiniteHom | None:
    """A retraction of the module onto sub, or None if sub is not a summand.

    Parametrizes candidate projections by unknown coefficients over the
    submodule's generators, imposes well-definedness, linearity and
    identity-on-sub as congruences, and solves once.  A summand exists
    iff an R-linear idempotent onto sub does.
    """
    module = sub.module
    assert sub.stable_under_action(), "not an actual submodule: not action-stable"
    mgens = module.generators()
    k = len(mgens)
    kgens = sub.generators
    t_count = len(kgens)
    if sub.is_zero():
        return FiniteHom(module, module, tuple(module.zero for _ in range(k)))
    if k == 0:
        return FiniteHom(module, module, ())
    n = lcm(*[order for _, order in mgens])
    nun = k * t_count
    kcoords = [module.coords(g) for g in kgens]
    rows: list[list[int]] = []
    rhs: list[int] = []

    def add_congruence(coeffs: dict, target_coord: int, l: int):
        c_l = mgens[l][1]
        sc = n // c_l
        row = [0] * nun
        for idx, val in coeffs.items():
            row[idx] = (row[idx] + sc * val) % n
        rows.append(row)
        rhs.append(sc * target_coord % n)

    # well-definedness: d_i * pi(e_i) == 0
    for i, (_, d) in enumerate(mgens):
        for l in range(k):
            coeffs = {}
            for t in range(t_count):
                v = d * kcoords[t][l]
                if v:
                    coeffs[i * t_count + t] = v
            add_congruence(coeffs, 0, l)
    # linearity against ring additive generators
    ring_gens = module.ring.additive_generators()
    act_kcoords = {
        (t, ri): module.coords(module.act(kgens[t], r))
        for t in range(t_count)
        for ri, r in enumerate(ring_gens)
    }
    for i, (e, _) in enumerate(mgens):
        for ri, r in enumerate(ring_gens):
            a = module.coords(module.act(e, r))
            for l in range(k):
                coeffs = {}
                for j in range(k):
                    if a[j]:
                        for t in range(t_count):
                            v = a[j] * kcoords[t][l]
                            if v:
                                idx = j * t_count + t
                                coeffs[idx] = coeffs.get(idx, 0) + v
                for t in range(t_count):
                    v = act_kcoords[t, ri][l]
                    if v:
                        idx = i * t_count + t
                        coeffs[idx] = coeffs.get(idx, 0) - v
                add_congruence(coeffs, 0, l)
    # identity on the submodule's generators
    for g, gc in zip(kgens, kcoords):
        ecoords = module.coords(g)
        for l in range(k):
            coeffs = {}
            for i in range(k):
                if ecoords[i]:
                    for t in range(t_count):
                        v = ecoords[i] * kcoords[t][l]
                        if v:
                            idx = i * t_count + t
                            coeffs[idx] = coeffs.get(idx, 0) + v
            add_congruence(coeffs, gc[l], l)

    sol = solve_linear(LinearSystem(rows, rhs, n))
    if not sol.consistent:
        return None
    vec = sol.particular
    images = []
    for i in range(k):
        img = module.zero
        for t in range(t_count):
            c = vec[i * t_count + t] % n
            if c:
                img = module.add(img, scale(module, c, kgens[t]))
        images.append(img)
    pi = FiniteHom(module, module, tuple(images))
    # the solve encodes exactly these properties; verify them outright
    for m in sub.sorted_elements():
        assert pi(m) == m
    for m in module.elements():
        assert pi(m) in sub.elements
        for r in ring_gens:
            assert pi(module.act(m, r)) == module.act(pi(m), r)
    return pi

"""Exact arithmetic in the rational first Weyl algebra, with x invertible.

Elements are finite sums of monomials c * x^i * d^j where d is the
derivation symbol (d*x = x*d + 1), i may be any integer (negative powers
come from inverting x), j is nonnegative, and c is an exact rational.
The normal form keeps all x-powers to the left of all d-powers.

The plain algebra (no negative x-powers) is a simple Noetherian domain;
the quotient of the localization by it is a bimodule with x-torsion.
Certificates produced here make both facts machine-checkable: a collapse
certificate drives any nonzero element down to a nonzero scalar by
commutators (so the two-sided ideal it generates is everything), and a
torsion witness exhibits s, q with s*q falling back into the plain
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .rings import CapExceeded


def _falling(i: int, t: int) -> int:
    """Falling factorial i*(i-1)*...*(i-t+1), valid for any integer i."""
    out = 1
    for r in range(t):
        out *= i - r
    return out


class WeylElement:
    """Normal-form element: immutable map (xexp, dexp) -> nonzero Fraction."""

    def __init__(self, terms=None):
        data = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                assert j >= 0, "negative powers of the derivation do not exist here"
                c = Fraction(c)
                if c:
                    c = data.get((i, j), Fraction(0)) + c
                    if c:
                        data[i, j] = c
                    else:
                        data.pop((i, j), None)
        self._terms = data
        self._key = tuple(sorted(data.items()))

    def terms(self):
        """Sorted ((xexp, dexp), coeff) pairs."""
        return self._key

    def support(self):
        return self._terms.keys()

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        data = dict(self._terms)
        for k, c in other._terms.items():
            v = data.get(k, Fraction(0)) + c
            if v:
                data[k] = v
            else:
                data.pop(k, None)
        return WeylElement(data)

    def __neg__(self):
        return WeylElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "WeylElement":
        c = Fraction(c)
        return WeylElement({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scaled(other)
        out: dict = {}
        for (i, j), c1 in self._terms.items():
            for (k, l), c2 in other._terms.items():
                c12 = c1 * c2
                # d^j * x^k = sum_t C(j,t) * falling(k,t) * x^(k-t) * d^(j-t)
                for t in range(j + 1):
                    f = comb(j, t) * _falling(k, t)
                    if f == 0:
                        continue
                    key = (i + k - t, j + l - t)
                    v = out.get(key, Fraction(0)) + c12 * f
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return WeylElement(out)

    def __rmul__(self, other):
        return self.scaled(other)

    def degree_d(self) -> int:
        """Highest power of the derivation symbol; -1 for zero."""
        return max((j for (_, j) in self._terms), default=-1)

    def max_xexp(self) -> int:
        return max((i for (i, _) in self._terms), default=0)

    def top_layer(self) -> dict:
        """Laurent coefficients {xexp: coeff} at the highest d-degree."""
        top = self.degree_d()
        return {i: c for (i, j), c in self._terms.items() if j == top}

    def negative_part(self) -> "WeylElement":
        """The monomials with xexp < 0: the canonical coset representative."""
        return WeylElement({(i, j): c for (i, j), c in self._terms.items() if i < 0})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))
        pieces = []
        for (i, j), c in ordered:
            factors = []
            if i == 1:
                factors.append("x")
            elif i != 0:
                factors.append(f"x^{i}")
            if j == 1:
                factors.append("d")
            elif j != 0:
                factors.append(f"d^{j}")
            mag = abs(c)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"<{self.to_text()}>"


def monomial(c, i: int, j: int) -> WeylElement:
    return WeylElement({(i, j): Fraction(c)})


ZERO = WeylElement()
ONE = monomial(1, 0, 0)
X = monomial(1, 1, 0)
XINV = monomial(1, -1, 0)
D = monomial(1, 0, 1)


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def naive_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """Single-step rewriting oracle for the product.

    Each monomial pair becomes a word over {x, X, d} (X standing for the
    inverse of x); the relations d x -> x d + 1 and d X -> X d - X X are
    applied one step at a time until no d sits left of an x or X.  Slow
    and deliberately different from the closed form in __mul__.
    """
    out: dict = {}
    for (i, j), c1 in a.terms():
        for (k, l), c2 in b.terms():
            word = []
            word += ["x"] * i if i >= 0 else ["X"] * (-i)
            word += ["d"] * j
            word += ["x"] * k if k >= 0 else ["X"] * (-k)
            word += ["d"] * l
            stack = [(c1 * c2, tuple(word))]
            while stack:
                c, w = stack.pop()
                pos = next(
                    (p for p in range(len(w) - 1) if w[p] == "d" and w[p + 1] in ("x", "X")),
                    None,
                )
                if pos is None:
                    xe = w.count("x") - w.count("X")
                    de = w.count("d")
                    v = out.get((xe, de), Fraction(0)) + c
                    if v:
                        out[xe, de] = v
                    else:
                        out.pop((xe, de), None)
                    continue
                head, tail = w[:pos], w[pos + 2 :]
                if w[pos + 1] == "x":
                    stack.append((c, head + ("x", "d") + tail))
                    stack.append((c, head + tail))
                else:
                    stack.append((c, head + ("X", "d") + tail))
                    stack.append((-c, head + ("X", "X") + tail))
    return WeylElement(out)


def is_in_base(a: WeylElement) -> bool:
    """True iff no monomial uses a negative power of x."""
    return all(i >= 0 for (i, _) in a.support())


def domain_degree_check(a: WeylElement, b: WeylElement) -> bool:
    """Certificate step for the absence of zero divisors.

    The top layer of the d-filtration multiplies inside the commutative
    Laurent polynomial ring over Q, which is a domain, so degrees add
    and top coefficients multiply.  Verifies both facts for a, b.
    """
    if not a or not b:
        raise ValueError("domain degree check needs nonzero inputs")
    p = a * b
    if p.degree_d() != a.degree_d() + b.degree_d():
        return False
    conv: dict = {}
    for i1, c1 in a.top_layer().items():
        for i2, c2 in b.top_layer().items():
            v = conv.get(i1 + i2, Fraction(0)) + c1 * c2
            if v:
                conv[i1 + i2] = v
            else:
                conv.pop(i1 + i2, None)
    return conv == p.top_layer()


def ad_d(b: WeylElement) -> WeylElement:
    """Commutator with the derivation generator: d*b - b*d."""
    return D * b - b * D


def ad_x(b: WeylElement) -> WeylElement:
    """Commutator with x on the other side: b*x - x*b."""
    return b * X - X * b


@dataclass(frozen=True)
class CollapseCertificate:
    """Replayable proof that the two-sided ideal generated by element is everything."""

    element: WeylElement
    ad_d_count: int
    ad_x_count: int
    final_scalar: Fraction

    def to_json(self):
        return {
            "element": self.element.to_text(),
            "adDCount": self.ad_d_count,
            "adXCount": self.ad_x_count,
            "finalScalar": str(self.final_scalar),
        }


def ideal_collapse_certificate(a: WeylElement) -> CollapseCertificate:
    """Drive a nonzero element of the plain algebra down to a nonzero scalar.

    Commuting with d kills one x-degree per step (x^i d^j goes to
    i*x^(i-1)*d^j), so after max-xexp steps only the top x-layer
    survives, scaled by a factorial that cannot vanish over Q.  Then
    commuting with x strips d-powers the same way.  Both commutators
    stay inside the two-sided ideal generated by a, so reaching a
    nonzero scalar shows that ideal is the whole ring.
    """
    if not a:
        raise ValueError("the zero element generates the zero ideal")
    if not is_in_base(a):
        raise ValueError("collapse certificates need an element of the plain algebra")
    i_max = a.max_xexp()
    cur = a
    for _ in range(i_max):
        cur = ad_d(cur)
    assert cur, "top x-layer cannot vanish in characteristic zero"
    j_max = cur.degree_d()
    for _ in range(j_max):
        cur = ad_x(cur)
    assert cur.support() == {(0, 0)}
    scalar = cur.coeff(0, 0)
    assert scalar
    return CollapseCertificate(a, i_max, j_max, scalar)


def replay_collapse(cert: CollapseCertificate) -> bool:
    """Re-run the commutator schedule of a certificate and check the scalar."""
    cur = cert.element
    for _ in range(cert.ad_d_count):
        cur = ad_d(cur)
    for _ in range(cert.ad_x_count):
        cur = ad_x(cur)
    return bool(cert.final_scalar) and cur == ONE.scaled(cert.final_scalar)


def torsion_witness_verify(s: WeylElement, q: WeylElement) -> bool:
    """True iff s is nonzero, q has a nonzero coset, and s*q has a zero coset."""
    if not s:
        return False
    if is_in_base(q):
        return False
    return is_in_base(s * q)


def random_element(
    rng,
    xmin: int = -2,
    xmax: int = 3,
    dmax: int = 3,
    max_terms: int = 2,
    coeff_bound: int = 3,
) -> WeylElement:
    """Nonzero random element with exponents in the given box, coefficients
    nonzero integers up to coeff_bound in absolute value."""
    count = rng.randint(1, max_terms)
    seen = set()
    terms = {}
    while len(terms) < count:
        key = (rng.randint(xmin, xmax), rng.randint(0, dmax))
        if key in seen:
            continue
        seen.add(key)
        c = rng.randint(1, coeff_bound) * rng.choice([1, -1])
        terms[key] = Fraction(c)
    return WeylElement(terms)


def random_base_element(rng, max_total_degree: int = 5, max_terms: int = 3) -> WeylElement:
    """Nonzero random element of the plain algebra, total degree bounded."""
    count = rng.randint(1, max_terms)
    terms = {}
    while len(terms) < count:
        i = rng.randint(0, max_total_degree)
        j = rng.randint(0, max_total_degree - i)
        if (i, j) in terms:
            continue
        c = rng.randint(1, 3) * rng.choice([1, -1])
        terms[i, j] = Fraction(c)
    return WeylElement(terms)


class WeylAlgebra:
    """Ring handle for the plain Weyl algebra (no negative x-powers)."""

    kind = "weyl"

    def __init__(self):
        self.name = "Weyl"
        self.zero = ZERO
        self.one = ONE

    def elements(self, cap: int | None = None):
        raise CapExceeded("the Weyl algebra is infinite; no carrier enumeration")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def contains(self, a) -> bool:
        return is_in_base(a)

    def format_element(self, a) -> str:
        return a.to_text()

    def __repr__(self):
        return self.name


class WeylLocalization(WeylAlgebra):
    """Ring handle for the localization at powers of x (all x-exponents allowed)."""

    kind = "weyl-loc"

    def __init__(self):
        super().__init__()
        self.name = "WeylLoc"

    def contains(self, a) -> bool:
        return True


class WeylQuotientBimodule:
    """The localization modulo the plain algebra, as a bimodule over it.

    Elements are canonical coset representatives: only monomials with
    negative x-exponent survive.  Both actions multiply then reduce.
    """

    kind = "weyl-quotient"

    def __init__(self, ring: WeylAlgebra):
        if not isinstance(ring, WeylAlgebra) or isinstance(ring, WeylLocalization):
            raise ValueError("the quotient bimodule lives over the plain Weyl algebra")
        self.ring = ring
        self.name = "WeylQuotient"
        self.zero = ZERO

    def canon(self, a: WeylElement) -> WeylElement:
        return a.negative_part()

    def elements(self, cap: int | None = None):
        raise CapExceeded("the quotient bimodule is infinite; no carrier enumeration")

    def add(self, a, b):
        return self.canon(a + b)

    def neg(self, a):
        return self.canon(-a)

    def left(self, s, q):
        return self.canon(s * q)

    def right(self, q, s):
        return self.canon(q * s)

    def is_zero(self, q) -> bool:
        return not self.canon(q)

    def format_element(self, a) -> str:
        return self.canon(a).to_text()

    def __repr__(self):
        return self.name

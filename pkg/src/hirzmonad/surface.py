"""The Hirzebruch surface as a Picard-graded Cox ring.

Cox variables and their classes in Pic = ZH + ZF, written as pairs (p, q):

    z1, z2 : F     = (0, 1)
    z3     : E     = (1, -n)
    z4     : H     = (1, 0)

A monomial z1^a z2^b z3^c z4^d therefore has class (c + d, a + b - n c).
The irrelevant locus is {z1 = z2 = 0} u {z3 = z4 = 0}.  The line at
infinity is the toric divisor {z4 = 0} (class H, disjoint from E = {z3 = 0}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .exact import BiPoly, UniPoly

__all__ = [
    "PicClass",
    "H",
    "F",
    "E",
    "canonical_class",
    "BigradedPoly",
    "ChernCharacter",
    "ChartPoint",
    "CHARTS",
    "BinaryForm",
    "ClassMismatch",
    "NegativeRestrictedDegree",
    "section_basis",
    "h0",
    "h1",
    "h2",
    "chi",
    "h1_direct",
    "vanishing_pattern",
    "intersect",
    "chern_of_linebundle",
    "restrict_to_linf",
    "evaluate_on_chart",
]


class ClassMismatch(ValueError):
    """A polynomial is not homogeneous of the class it claims."""


class NegativeRestrictedDegree(RuntimeError):
    pass


class PicClass(NamedTuple):
    p: int
    q: int

    def __add__(self, other):  # type: ignore[override]
        return PicClass(self.p + other[0], self.q + other[1])

    def __sub__(self, other):
        return PicClass(self.p - other[0], self.q - other[1])

    def __neg__(self):
        return PicClass(-self.p, -self.q)

    def __mul__(self, k):  # type: ignore[override]
        return PicClass(self.p * k, self.q * k)

    __rmul__ = __mul__


H = PicClass(1, 0)
F = PicClass(0, 1)


def E(n: int) -> PicClass:
    return PicClass(1, -n)


def canonical_class(n: int) -> PicClass:
    return PicClass(-2, n - 2)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"Hirzebruch index must be >= 1, got {n}")


# ---------------------------------------------------------------------------
# numerics of line bundles


def section_basis(n: int, cls) -> list[tuple[int, int, int, int]]:
    """Monomials (a, b, c, d) of class ``cls``, sorted descending by (c, a)."""
    _check_n(n)
    p, q = cls
    out = []
    for c in range(p, -1, -1):
        ab = q + n * c
        for a in range(ab, -1, -1):
            out.append((a, ab - a, c, p - c))
    return out


def h0(n: int, cls) -> int:
    _check_n(n)
    p, q = cls
    if p < 0:
        return 0
    return sum(max(0, q + n * c + 1) for c in range(p + 1))


def h2(n: int, cls) -> int:
    p, q = cls
    return h0(n, (-2 - p, n - 2 - q))


def chi(n: int, cls) -> int:
    # Riemann-Roch: 1 + D.(D - K)/2
    p, q = cls
    return 1 + (n * p * (p + 1)) // 2 + p * q + p + q


def h1(n: int, cls) -> int:
    return h0(n, cls) + h2(n, cls) - chi(n, cls)


def h1_direct(n: int, cls) -> int:
    """h^1 from the pushforward to the base P^1, independent of Riemann-Roch.

    For p >= 0 the bundle pushes forward to the sum of O(q + n c), c = 0..p,
    with no higher direct image; p = -1 is acyclic; p <= -2 is Serre dual to
    the first case.
    """
    _check_n(n)
    p, q = cls
    if p <= -2:
        return h1_direct(n, (-2 - p, n - 2 - q))
    if p == -1:
        return 0
    return sum(max(0, -(q + n * c) - 1) for c in range(p + 1))


def vanishing_pattern(n: int, cls) -> tuple[bool, bool, bool]:
    """Nonvanishing of (H^0, H^1, H^2) read off the region inequalities."""
    p, q = cls
    nz0 = p >= 0 and n * p + q >= 0
    nz1 = (p >= 0 and q <= -2) or (p <= -2 and q >= n)
    nz2 = p <= -2 and n * p + q <= -(n + 2)
    return nz0, nz1, nz2


def intersect(n: int, c1, c2) -> int:
    p1, q1 = c1
    p2, q2 = c2
    return n * p1 * p2 + p1 * q2 + p2 * q1


@dataclass(frozen=True)
class ChernCharacter:
    rk: int
    c1: PicClass
    ch2: Fraction

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.rk + other.rk, PicClass(*self.c1) + other.c1, self.ch2 + other.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.rk - other.rk, PicClass(*self.c1) - other.c1, self.ch2 - other.ch2)

    def __mul__(self, k: int) -> "ChernCharacter":
        return ChernCharacter(self.rk * k, PicClass(*self.c1) * k, self.ch2 * k)

    __rmul__ = __mul__

    @classmethod
    def zero(cls) -> "ChernCharacter":
        return cls(0, PicClass(0, 0), Fraction(0))


def chern_of_linebundle(n: int, cls) -> ChernCharacter:
    cls = PicClass(*cls)
    return ChernCharacter(1, cls, Fraction(intersect(n, cls, cls), 2))


# ---------------------------------------------------------------------------
# sections


def _monomial_class(n: int, e) -> PicClass:
    a, b, c, d = e
    return PicClass(c + d, a + b - n * c)


class BigradedPoly:
    """A section of O(p, q): a homogeneous polynomial in the Cox ring.

    ``terms`` maps exponent tuples (a, b, c, d) to nonzero rationals.  The
    zero polynomial carries a class too, but adding it to anything is
    allowed regardless of class.
    """

    __slots__ = ("n", "cls", "terms", "_key")

    def __init__(self, n: int, cls, terms: Mapping | None = None, *, check: bool = True):
        self.n = n
        self.cls = PicClass(*cls)
        t = {}
        for e, v in (terms or {}).items():
            if v:
                e = tuple(e)
                if check and (min(e) < 0 or _monomial_class(n, e) != self.cls):
                    raise ClassMismatch(f"monomial {e} is not of class {tuple(self.cls)} on Sigma_{n}")
                t[e] = v if isinstance(v, Fraction) else Fraction(v)
        self.terms = t
        self._key = None

    @classmethod
    def zero(cls, n: int, pic) -> "BigradedPoly":
        return cls(n, pic)

    @classmethod
    def constant(cls, n: int, v) -> "BigradedPoly":
        return cls(n, (0, 0), {(0, 0, 0, 0): v}, check=False)

    @classmethod
    def monomial(cls, n: int, e, coef=1) -> "BigradedPoly":
        return cls(n, _monomial_class(n, e), {tuple(e): coef}, check=False)

    @classmethod
    def from_vector(cls, n: int, pic, vec: Iterable) -> "BigradedPoly":
        basis = section_basis(n, pic)
        vec = list(vec)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector length differs from h0")
        return cls(n, pic, dict(zip(basis, vec)), check=False)

    def to_vector(self, basis: list | None = None) -> list[Fraction]:
        if basis is None:
            basis = section_basis(self.n, self.cls)
        return [self.terms.get(e, Fraction(0)) for e in basis]

    def is_zero(self) -> bool:
        return not self.terms

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        if self.n != other.n:
            return False
        if not self.terms and not other.terms:
            return True
        return self.cls == other.cls and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.key()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-t[0][2], -t[0][0])):
            mono = "*".join(f"z{i + 1}^{k}" if k > 1 else f"z{i + 1}" for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)

    def with_class(self, pic) -> "BigradedPoly":
        """Relabel a polynomial (only legal for zero or already matching)."""
        pic = PicClass(*pic)
        if self.terms and pic != self.cls:
            raise ClassMismatch(f"entry of class {tuple(self.cls)} where {tuple(pic)} expected")
        if pic == self.cls:
            return self
        return BigradedPoly(self.n, pic)

    def _combine_class(self, other: "BigradedPoly") -> PicClass:
        if self.n != other.n:
            raise ValueError("polynomials on different surfaces")
        if not self.terms:
            return other.cls
        if not other.terms:
            return self.cls
        if self.cls != other.cls:
            raise ClassMismatch(f"adding classes {tuple(self.cls)} and {tuple(other.cls)}")
        return self.cls

    def __add__(self, other: "BigradedPoly") -> "BigradedPoly":
        cls = self._combine_class(other)
        t = dict(self.terms)
        for e, v in other.terms.items():
            s = t.get(e, 0) + v
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return BigradedPoly(self.n, cls, t, check=False)

    def __neg__(self):
        return BigradedPoly(self.n, self.cls, {e: -v for e, v in self.terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BigradedPoly):
            s = Fraction(other)
            if not s:
                return BigradedPoly(self.n, self.cls)
            return BigradedPoly(self.n, self.cls, {e: v * s for e, v in self.terms.items()}, check=False)
        if self.n != other.n:
            raise ValueError("polynomials on different surfaces")
        cls = self.cls + other.cls
        t: dict = {}
        for e, u in self.terms.items():
            for f, v in other.terms.items():
                k = (e[0] + f[0], e[1] + f[1], e[2] + f[2], e[3] + f[3])
                t[k] = t.get(k, 0) + u * v
        return BigradedPoly(self.n, cls, {k: v for k, v in t.items() if v}, check=False)

    __rmul__ = __mul__

    def to_chart(self, chart) -> BiPoly:
        """Dehomogenise on a toric chart; see :class:`ChartPoint` for coordinates."""
        i, j = chart
        xi = 1 if i == 1 else 0      # index of the surviving fibre variable
        yi = 3 if j == 3 else 2      # index of the surviving section variable
        t: dict = {}
        for e, v in self.terms.items():
            k = (e[xi], e[yi])
            t[k] = t.get(k, 0) + v
        return BiPoly(t)


class BinaryForm(NamedTuple):
    """Homogeneous form in (z1, z2) of the given degree, stored dehomogenised
    as a polynomial in t = z2/z1 (so the coefficient of t^j is that of
    z1^(deg-j) z2^j)."""

    degree: int
    poly: UniPoly

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def at(self, y1, y2) -> Fraction:
        """Value at the point (y1 : y2) in the frame z1^deg (y1 != 0) or z2^deg."""
        if y1:
            return self.poly(Fraction(y2) / Fraction(y1))
        return self.poly[self.degree]


def restrict_to_linf(f: BigradedPoly) -> BinaryForm:
    p, q = f.cls
    deg = f.n * p + q
    coeffs: dict[int, Fraction] = {}
    for (a, b, c, d), v in f.terms.items():
        if d == 0:
            coeffs[b] = coeffs.get(b, 0) + v
    if coeffs and deg < 0:
        raise NegativeRestrictedDegree(f"nonzero restriction of degree {deg}")
    return BinaryForm(deg, UniPoly(coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1)))


CHARTS = ((1, 3), (1, 4), (2, 3), (2, 4))


@dataclass(frozen=True)
class ChartPoint:
    """A point in the toric chart where z_i = z_j = 1 for ``chart = (i, j)``.

    ``coords`` are the values of the other fibre variable (z2 or z1) and the
    other section variable (z4 or z3), in that order.
    """

    chart: tuple[int, int]
    coords: tuple[Fraction, Fraction]

    def __post_init__(self):
        if tuple(self.chart) not in CHARTS:
            raise ValueError(f"invalid chart {self.chart}")
        object.__setattr__(self, "chart", tuple(self.chart))
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def cox_values(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        i, j = self.chart
        x, y = self.coords
        z12 = (Fraction(1), x) if i == 1 else (x, Fraction(1))
        z34 = (Fraction(1), y) if j == 3 else (y, Fraction(1))
        return z12 + z34


def evaluate_on_chart(f: BigradedPoly, pt: ChartPoint) -> Fraction:
    z = pt.cox_values()
    total = Fraction(0)
    for e, v in f.terms.items():
        term = v
        for zi, k in zip(z, e):
            if k:
                term *= zi ** k
        total += term
    return total

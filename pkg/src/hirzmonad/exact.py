"""Exact rational linear algebra and small polynomial arithmetic.

Everything here works over ``fractions.Fraction``; nothing in the decision
path ever touches a float.  Sympy is used only for two things we do not
want to maintain ourselves: factoring univariate polynomials over Q and
bivariate gcds.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Sequence

import sympy

Rational = Fraction

__all__ = [
    "Rational",
    "RatMatrix",
    "UniPoly",
    "BiPoly",
    "NumberField",
    "ZeroLocus",
    "BothZeroError",
    "AllZeroError",
    "rank",
    "rref",
    "kernel_basis",
    "uni_gcd",
    "resultant_y",
    "zero_locus_class",
    "zero_locus_points",
    "factor_rational",
]


class BothZeroError(ValueError):
    pass


class AllZeroError(ValueError):
    """Every polynomial handed to the zero-locus classifier was zero."""


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


# ---------------------------------------------------------------------------
# sparse elimination kernels (rows are dicts column -> nonzero value)


def _echelon(rows: Iterable[dict], *, reduced: bool = False):
    """Incremental Gaussian elimination on sparse Fraction rows.

    Returns ``(pivot_rows, pivots)`` with pivot rows normalised to 1 at the
    pivot column; when ``reduced`` the result is the reduced echelon form.
    """
    piv: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: _frac(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = piv.get(c)
            if p is None:
                inv = 1 / r[c]
                piv[c] = {k: v * inv for k, v in r.items()}
                break
            f = r[c]
            for k, v in p.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    cols = sorted(piv)
    if reduced:
        for c in reversed(cols):
            p = piv[c]
            for c2 in cols:
                if c2 >= c:
                    break
                q = piv[c2]
                f = q.get(c)
                if f:
                    for k, v in p.items():
                        nv = q.get(k, 0) - f * v
                        if nv:
                            q[k] = nv
                        else:
                            q.pop(k, None)
    return [piv[c] for c in cols], cols


def _sparse_rank(rows: Iterable[dict]) -> int:
    """Fraction-free rank: rows are scaled to primitive integer vectors."""
    piv: dict[int, dict[int, int]] = {}
    for row in rows:
        vals = [_frac(v) for v in row.values() if v]
        if not vals:
            continue
        den = reduce(math.lcm, (v.denominator for v in vals), 1)
        r = {c: int(_frac(v) * den) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = piv.get(c)
            if p is None:
                g = reduce(math.gcd, r.values())
                piv[c] = {k: v // g for k, v in r.items()}
                break
            a, b = p[c], r[c]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {}
            for k in set(r) | set(p):
                v = a * r.get(k, 0) - b * p.get(k, 0)
                if v:
                    new[k] = v
            if new:
                g = reduce(math.gcd, new.values())
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            r = new
    return len(piv)


# ---------------------------------------------------------------------------
# dense matrices


class RatMatrix:
    """Immutable dense matrix over Q.  Zero-row and zero-column shapes are legal."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entry count does not match shape {rows}x{cols}")
        self.data = tuple(tuple(_frac(v) for v in r) for r in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int, scale=1) -> "RatMatrix":
        return cls(n, n, [[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols,
                         [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "RatMatrix":
        s = _frac(s)
        return RatMatrix(self.rows, self.cols, [[s * v for v in r] for r in self.data])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        oc = other.columns()
        return RatMatrix(self.rows, other.cols,
                         [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in oc]
                          for r in self.data])

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [{j: v for j, v in enumerate(r) if v} for r in self.data]

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det([list(r) for r in self.data], Fraction(0), Fraction(1),
                            lambda a, b: a / b)

    def inverse(self) -> "RatMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = []
        for i, r in enumerate(self.data):
            row = {j: v for j, v in enumerate(r) if v}
            row[n + i] = Fraction(1)
            aug.append(row)
        red, piv = _echelon(aug, reduced=True)
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix(n, n, [[red[i].get(n + j, 0) for j in range(n)] for i in range(n)])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and rank(self) == self.rows


def rank(m: RatMatrix) -> int:
    """Rank over Q by fraction-free elimination."""
    return _sparse_rank(m.sparse_rows())


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    red, piv = _echelon(m.sparse_rows(), reduced=True)
    return RatMatrix(len(red), m.cols, [[r.get(j, 0) for j in range(m.cols)] for r in red]), piv


def _kernel_from_rows(rows: Iterable[dict], ncols: int) -> list[list[Fraction]]:
    red, piv = _echelon(rows, reduced=True)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, piv):
            x = r.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def kernel_basis(m: RatMatrix) -> RatMatrix:
    """Null space of ``m`` as the columns of a ``cols x nullity`` matrix.

    The basis is the canonical one read off the reduced echelon form: each
    vector carries a 1 on its own free column and 0 on the others.
    """
    return RatMatrix.from_columns(_kernel_from_rows(m.sparse_rows(), m.cols), m.cols)


def _bareiss_det(M: list[list], zero, one, exact_div: Callable):
    n = len(M)
    if n == 0:
        return one
    M = [list(r) for r in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        if M[k][k] == zero:
            for i in range(k + 1, n):
                if M[i][k] != zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, v) -> "UniPoly":
        return cls([v])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if k == 0 else f"{c}*x^{k}")
        return " + ".join(parts)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            s = _frac(other)
            return UniPoly(c * s for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [Fraction(0)] * max(0, len(rem) - dq)
        inv = 1 / other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                q[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(q), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        return self if not self.coeffs else self * (1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def uni_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while g:
        f, g = g, f % g
    return f.monic()


def factor_rational(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible monic factors of ``f`` over Q with multiplicities (sympy)."""
    if f.degree < 1:
        return []
    x = sympy.Symbol("x")
    p = sympy.Poly.from_list([sympy.Rational(c.numerator, c.denominator)
                              for c in reversed(f.coeffs)], x, domain="QQ")
    _, facs = p.factor_list()
    out = []
    for fac, mult in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append((UniPoly(coeffs).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


# ---------------------------------------------------------------------------
# bivariate polynomials in (x, y)


class BiPoly:
    """Sparse polynomial in Q[x, y]; keys are exponent pairs (i, j) of x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: _frac(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def from_y_coeffs(cls, coeffs: Sequence[UniPoly]) -> "BiPoly":
        return cls({(i, j): c for j, u in enumerate(coeffs) for i, c in enumerate(u.coeffs)})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, v):
        return cls({(0, 0): v})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def y_coeffs(self) -> list[UniPoly]:
        out = [dict() for _ in range(self.y_degree + 1)]
        for (i, j), c in self.terms.items():
            out[j][i] = c
        return [UniPoly(d.get(i, 0) for i in range(max(d, default=-1) + 1)) for d in out]

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return BiPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiPoly) else BiPoly.constant(-_frac(other)))

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            s = _frac(other)
            return BiPoly({k: v * s for k, v in self.terms.items()})
        t: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                t[k] = t.get(k, 0) + u * v
        return BiPoly(t)

    __rmul__ = __mul__

    def __call__(self, x, y):
        return sum((c * x ** i * y ** j for (i, j), c in self.terms.items()), Fraction(0))

    def _sympy(self):
        x, y = sympy.symbols("x y")
        return sympy.Poly.from_dict(
            {k: sympy.Rational(v.numerator, v.denominator) for k, v in self.terms.items()} or {(0, 0): 0},
            x, y, domain="QQ")

    def content_gcd(self, other: "BiPoly") -> "BiPoly":
        """Monic (in sympy's ordering) gcd of two bivariate polynomials."""
        g = self._sympy().gcd(other._sympy())
        return BiPoly({k: Fraction(int(v.p), int(v.q)) for k, v in g.as_dict().items()})


def resultant_y(f: BiPoly, g: BiPoly) -> UniPoly:
    """Sylvester resultant eliminating y.

    The Sylvester matrix is laid out with coefficients in ascending powers of
    y, which fixes the sign: ``resultant_y(y - x, y + x) == -2x``.
    """
    if f.is_zero() and g.is_zero():
        raise BothZeroError("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return UniPoly()
    fc, gc = f.y_coeffs(), g.y_coeffs()
    m, k = len(fc) - 1, len(gc) - 1
    size = m + k
    zero = UniPoly()
    rows = []
    for i in range(k):
        rows.append([zero] * i + fc + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - k - 1))
    return _bareiss_det(rows, zero, UniPoly([1]), UniPoly.exact_div)


# ---------------------------------------------------------------------------
# arithmetic in Q[x]/(f) and in (Q[x]/(f))[y]


class NumberField:
    """The field Q[x]/(f) for an irreducible f; elements are reduced UniPolys."""

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.modulus = modulus.monic()

    def reduce(self, a: UniPoly) -> UniPoly:
        return a % self.modulus

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return (a * b) % self.modulus

    def inv(self, a: UniPoly) -> UniPoly:
        # extended Euclid: s*a + t*f = 1
        r0, r1 = self.modulus, a % self.modulus
        s0, s1 = UniPoly(), UniPoly([1])
        if not r1:
            raise ZeroDivisionError("inverse of zero in number field")
        while r1.degree > 0:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            if not r1:
                raise ZeroDivisionError("modulus is not irreducible")
        return (s1 * (1 / r1.lc)) % self.modulus

    # polynomials over the field: lists of field elements, lowest degree first

    @staticmethod
    def _trim(p: list[UniPoly]) -> list[UniPoly]:
        while p and not p[-1]:
            p.pop()
        return p

    def poly_monic(self, p: list[UniPoly]) -> list[UniPoly]:
        if not p:
            return p
        inv = self.inv(p[-1])
        return [self.mul(c, inv) for c in p]

    def poly_rem(self, a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
        a = list(a)
        inv = self.inv(b[-1])
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = self.mul(a[-1], inv)
            shift = len(a) - 1 - db
            for j, bc in enumerate(b):
                a[shift + j] = self.reduce(a[shift + j] - c * bc)
            self._trim(a)
        return a

    def poly_div(self, a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
        a = list(a)
        inv = self.inv(b[-1])
        db = len(b) - 1
        q = [UniPoly()] * max(0, len(a) - db)
        while a and len(a) - 1 >= db:
            c = self.mul(a[-1], inv)
            shift = len(a) - 1 - db
            q[shift] = c
            for j, bc in enumerate(b):
                a[shift + j] = self.reduce(a[shift + j] - c * bc)
            self._trim(a)
        if a:
            raise ArithmeticError("inexact division in K[y]")
        return self._trim(q)

    def poly_gcd(self, a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
        a, b = self._trim(list(a)), self._trim(list(b))
        while b:
            a, b = b, self.poly_rem(a, b)
        return self.poly_monic(a)

    def poly_derivative(self, p: list[UniPoly]) -> list[UniPoly]:
        return self._trim([c * k for k, c in enumerate(p) if k])

    def squarefree(self, p: list[UniPoly]) -> list[UniPoly]:
        d = self.poly_derivative(p)
        if not d:
            return self.poly_monic(p)
        g = self.poly_gcd(p, d)
        return self.poly_monic(self.poly_div(p, g)) if len(g) > 1 else self.poly_monic(p)

    def specialize(self, f: BiPoly) -> list[UniPoly]:
        """Image of f in K[y] under x -> the class of x."""
        return self._trim([self.reduce(c) for c in f.y_coeffs()])


# ---------------------------------------------------------------------------
# zero loci of bivariate systems


class ZeroLocus(enum.Enum):
    EMPTY = "EMPTY"
    FINITE = "FINITE"
    INFINITE = "INFINITE"


def _elimination_polynomial(ref: BiPoly, others: list[BiPoly]) -> UniPoly:
    R = UniPoly()
    for g in others:
        R = uni_gcd(R, resultant_y(ref, g))
    if R:
        return R
    # every pairwise resultant vanished although the family has no common
    # factor; a generic combination of the others is coprime to ref
    for t in range(1, 64):
        h = BiPoly()
        for i, g in enumerate(others):
            h = h + g * (t ** i)
        res = resultant_y(ref, h)
        if res:
            return res.monic()
    raise ArithmeticError("could not find a coprime combination")  # pragma: no cover


def zero_locus_points(polys: Sequence[BiPoly]):
    """Canonical description of the common complex zeros of ``polys``.

    Returns ``None`` when the zero set is infinite, otherwise a sorted list of
    pairs ``(f, g)``: f is a monic irreducible polynomial over Q whose roots
    are the x-coordinates of one Galois orbit of zeros, and g (a list of
    coefficients in Q[x]/(f), lowest first, monic, squarefree) cuts out the
    y-coordinates over that x.  Raises AllZeroError if all inputs vanish.
    """
    nz = [p for p in polys if not p.is_zero()]
    if not nz:
        raise AllZeroError("all polynomials are zero")
    if any(p.is_constant() for p in nz):
        return []
    g = nz[0]
    for p in nz[1:]:
        if g.is_constant():
            break
        g = g.content_gcd(p)
    if not g.is_constant():
        return None
    ydeg = [p for p in nz if p.y_degree > 0]
    if not ydeg:
        # all in x alone, coprime: no common root
        return []
    ref = min(ydeg, key=lambda p: (p.y_degree, len(p.terms)))
    others = [p for p in nz if p is not ref]
    R = _elimination_polynomial(ref, others)
    points = []
    for f, _ in factor_rational(R):
        K = NumberField(f)
        acc: list[UniPoly] = []
        for p in nz:
            s = K.specialize(p)
            if not s:
                continue
            acc = s if not acc else K.poly_gcd(acc, s)
            if len(acc) == 1:
                break
        if len(acc) > 1:
            gy = K.squarefree(acc)
            points.append((f, gy))
    points.sort(key=lambda fg: (fg[0].degree, fg[0].coeffs, len(fg[1]),
                                tuple(c.coeffs for c in fg[1])))
    return points


def zero_locus_class(polys: Sequence[BiPoly]) -> ZeroLocus:
    """Classify the common zero set of ``polys`` in the affine plane."""
    pts = zero_locus_points(polys)
    if pts is None:
        return ZeroLocus.INFINITE
    return ZeroLocus.FINITE if pts else ZeroLocus.EMPTY

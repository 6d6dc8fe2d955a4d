"""Monads U -> V -> W on the Hirzebruch surface and the conditions (c1)-(c5).

For a quadruple (n, r, a, c) with 0 <= a <= r - 1 put

    k1 = c + n a (a - 1) / 2,   k2 = k1 + n a,
    k3 = k1 + (n - 1) a,        k4 = k1 + r - a,

and

    U = O(0,-1)^k1,   V = O(1,-1)^k2 + O^k4,   W = O(1,0)^k3.

A point is a pair (alpha, beta) of matrices of Cox-ring sections with
beta . alpha = 0.  The checks below decide the open conditions:

* (c1) alpha has generic rank k1 (some maximal minor is nonzero);
* (c2) beta is surjective on every fibre (maximal minors have no common
  zero on any toric chart);
* (c3) alpha restricted to the line at infinity is injective on every fibre;
* (c4) the restricted cohomology is trivial, i.e. H^0(E|l(-1)) = 0;
* (c5) the cohomology is torsion free.

For (c5): A = coker alpha has a locally free resolution of length one, so
its torsion is supported on the divisorial part of the degeneracy locus of
alpha (locally, a k1 x k1 minor that vanishes along a curve makes the
corresponding torsion module nonzero, and conversely a finite degeneracy
locus has codimension two, where a module of projective dimension one has
no torsion).  The cohomology E is the kernel of the surjection A -> W it
inherits from beta, so E contains every torsion section of A that maps to
zero in the torsion-free W, and this is all of the torsion of A.  Hence E is
torsion free exactly when the degeneracy locus of alpha is finite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .exact import AllZeroError, RatMatrix, UniPoly, ZeroLocus, rank, uni_gcd, zero_locus_class
from .linf import _form_minors, _no_common_root, hyper_h, restrict_monad
from .surface import (
    CHARTS,
    BigradedPoly,
    ChartPoint,
    ChernCharacter,
    ClassMismatch,
    PicClass,
    chern_of_linebundle,
    evaluate_on_chart,
    h0,
)

__all__ = [
    "NormalizationViolation",
    "NegativeK1",
    "NegativeDimension",
    "PreconditionC3",
    "KVector",
    "MonadShape",
    "MonadPoint",
    "ConditionReport",
    "k_from_chern",
    "shape_from_k",
    "compose_beta_alpha",
    "is_complex",
    "fiber_matrices",
    "cohomology_fiber_dim",
    "poly_det",
    "alpha_minors",
    "beta_minors",
    "check_c1",
    "check_c2",
    "check_c3",
    "check_c4",
    "c4_dimensions",
    "check_c5",
    "check_all",
    "chern_of_cohomology",
    "hom_dim",
    "dim_V",
    "dim_Wspace",
    "dim_Lk",
    "trivial_monad",
    "monad_to_json",
    "monad_from_json",
    "dumps_monad",
    "loads_monad",
]

U_CLASS = PicClass(0, -1)
V_TWISTED = PicClass(1, -1)
V_TRIVIAL = PicClass(0, 0)
W_CLASS = PicClass(1, 0)


class NormalizationViolation(ValueError):
    pass


class NegativeK1(ValueError):
    pass


class NegativeDimension(RuntimeError):
    pass


class PreconditionC3(ValueError):
    pass


# ---------------------------------------------------------------------------
# numerical data


@dataclass(frozen=True)
class KVector:
    n: int
    r: int
    a: int
    c: int
    k1: int
    k2: int
    k3: int
    k4: int

    @property
    def k(self) -> tuple[int, int, int, int]:
        return (self.k1, self.k2, self.k3, self.k4)

    @property
    def valid_moduli(self) -> bool:
        return self.k1 >= 0


def k_from_chern(n: int, r: int, a: int, c: int) -> KVector:
    if n < 1:
        raise NormalizationViolation(f"n must be at least 1 (got n={n})")
    if r < 1:
        raise NormalizationViolation(f"r must be at least 1 (got r={r})")
    if not 0 <= a <= r - 1:
        raise NormalizationViolation(f"a must satisfy 0 <= a <= r-1 (got a={a}, r={r})")
    k1 = c + n * a * (a - 1) // 2      # a(a-1) is even
    return KVector(n, r, a, c, k1, k1 + n * a, k1 + (n - 1) * a, k1 + r - a)


@dataclass(frozen=True)
class MonadShape:
    kvec: KVector

    def __post_init__(self):
        if self.kvec.k1 < 0:
            raise NegativeK1(f"k1 = {self.kvec.k1} < 0: no monads of this type")

    n = property(lambda self: self.kvec.n)
    r = property(lambda self: self.kvec.r)
    k1 = property(lambda self: self.kvec.k1)
    k2 = property(lambda self: self.kvec.k2)
    k3 = property(lambda self: self.kvec.k3)
    k4 = property(lambda self: self.kvec.k4)

    @property
    def U(self) -> tuple[PicClass, ...]:
        return (U_CLASS,) * self.k1

    @property
    def V(self) -> tuple[PicClass, ...]:
        return (V_TWISTED,) * self.k2 + (V_TRIVIAL,) * self.k4

    @property
    def W(self) -> tuple[PicClass, ...]:
        return (W_CLASS,) * self.k3

    @property
    def ranks(self) -> tuple[int, int, int]:
        return (self.k1, self.k2 + self.k4, self.k3)

    def alpha_class(self, i: int, j: int) -> PicClass:
        return self.V[i] - self.U[j]

    def beta_class(self, i: int, j: int) -> PicClass:
        return self.W[i] - self.V[j]


def shape_from_k(kvec: KVector) -> MonadShape:
    return MonadShape(kvec)


# ---------------------------------------------------------------------------
# points


def _entry(n: int, v, cls: PicClass, where: str) -> BigradedPoly:
    if isinstance(v, BigradedPoly):
        if v.n != n:
            raise ClassMismatch(f"{where}: polynomial lives on Sigma_{v.n}, expected Sigma_{n}")
        try:
            return v.with_class(cls)
        except ClassMismatch as exc:
            raise ClassMismatch(f"{where}: {exc}") from None
    if v == 0:
        return BigradedPoly.zero(n, cls)
    raise ClassMismatch(f"{where}: expected a section of class {tuple(cls)}, got {v!r}")


@dataclass(frozen=True)
class MonadPoint:
    """A pair (alpha, beta) for a fixed shape; entries are validated on creation.

    ``alpha`` has k2 + k4 rows and k1 columns; ``beta`` has k3 rows and
    k2 + k4 columns.  Zero entries may be given as the integer 0.
    """

    shape: MonadShape
    alpha: tuple[tuple[BigradedPoly, ...], ...]
    beta: tuple[tuple[BigradedPoly, ...], ...]

    def __post_init__(self):
        s = self.shape
        nV = s.k2 + s.k4
        if len(self.alpha) != nV or any(len(row) != s.k1 for row in self.alpha):
            raise ValueError(f"alpha must be {nV} x {s.k1}")
        if len(self.beta) != s.k3 or any(len(row) != nV for row in self.beta):
            raise ValueError(f"beta must be {s.k3} x {nV}")
        alpha = tuple(tuple(_entry(s.n, v, s.alpha_class(i, j), f"alpha[{i}][{j}]")
                            for j, v in enumerate(row)) for i, row in enumerate(self.alpha))
        beta = tuple(tuple(_entry(s.n, v, s.beta_class(i, j), f"beta[{i}][{j}]")
                           for j, v in enumerate(row)) for i, row in enumerate(self.beta))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def n(self) -> int:
        return self.shape.n


def trivial_monad(n: int, r: int) -> MonadPoint:
    shape = shape_from_k(k_from_chern(n, r, 0, 0))
    return MonadPoint(shape, tuple(() for _ in range(r)), ())


def _poly_matmul(n: int, A, B, cls: PicClass):
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = BigradedPoly.zero(n, cls)
            for k in range(inner):
                if A[i][k].terms and B[k][j].terms:
                    s = s + A[i][k] * B[k][j]
            row.append(s.with_class(cls))
        out.append(tuple(row))
    return tuple(out)


def compose_beta_alpha(mp: MonadPoint):
    """beta . alpha as a k3 x k1 matrix of class-(1,1) sections."""
    return _poly_matmul(mp.n, mp.beta, mp.alpha, PicClass(1, 1))


@lru_cache(maxsize=4096)
def is_complex(mp: MonadPoint) -> bool:
    return all(e.is_zero() for row in compose_beta_alpha(mp) for e in row)


def fiber_matrices(mp: MonadPoint, pt: ChartPoint) -> tuple[RatMatrix, RatMatrix]:
    s = mp.shape
    nV = s.k2 + s.k4
    A = RatMatrix(nV, s.k1, [[evaluate_on_chart(e, pt) for e in row] for row in mp.alpha])
    B = RatMatrix(s.k3, nV, [[evaluate_on_chart(e, pt) for e in row] for row in mp.beta])
    return A, B


def cohomology_fiber_dim(mp: MonadPoint, pt: ChartPoint) -> int:
    A, B = fiber_matrices(mp, pt)
    d = (B.cols - rank(B)) - rank(A)
    if d < 0:
        raise NegativeDimension("image of alpha exceeds kernel of beta at this point")
    return d


# ---------------------------------------------------------------------------
# minors


def poly_det(M: Sequence[Sequence[BigradedPoly]], n: int) -> BigradedPoly:
    """Determinant of a square matrix of sections by memoised Laplace expansion.

    The Cox ring is a polynomial ring, so cofactor expansion is exact; the
    memo on column subsets keeps the cost at k 2^k products.
    """
    k = len(M)
    if k == 0:
        return BigradedPoly.constant(n, 1)
    memo: dict = {}

    def rec(row: int, cols: tuple[int, ...]):
        if row == k:
            return None
        key = cols
        if key in memo:
            return memo[key]
        acc = None
        for pos, j in enumerate(cols):
            e = M[row][j]
            if not e.terms:
                continue
            sub = rec(row + 1, cols[:pos] + cols[pos + 1:])
            if sub is not None and not sub.terms:
                continue
            term = e if sub is None else e * sub
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = BigradedPoly(n, (0, 0))
        memo[key] = acc
        return acc

    res = rec(0, tuple(range(k)))
    return res


@lru_cache(maxsize=1024)
def alpha_minors(mp: MonadPoint) -> tuple[BigradedPoly, ...]:
    """All k1 x k1 minors of alpha, rows chosen in lexicographic order."""
    k1 = mp.shape.k1
    return tuple(poly_det([mp.alpha[i] for i in rows], mp.n)
                 for rows in combinations(range(len(mp.alpha)), k1))


@lru_cache(maxsize=1024)
def beta_minors(mp: MonadPoint) -> tuple[BigradedPoly, ...]:
    k3 = mp.shape.k3
    nV = mp.shape.k2 + mp.shape.k4
    return tuple(poly_det([[row[j] for j in cols] for row in mp.beta], mp.n)
                 for cols in combinations(range(nV), k3))


def chart_degeneracy(minors: Sequence[BigradedPoly]) -> dict:
    """Zero-locus class of a family of minors on each of the four charts."""
    out = {}
    for chart in CHARTS:
        polys = [m.to_chart(chart) for m in minors if m.terms]
        if not polys:
            out[chart] = ZeroLocus.INFINITE
            continue
        try:
            out[chart] = zero_locus_class(polys)
        except AllZeroError:
            out[chart] = ZeroLocus.INFINITE
    return out


# ---------------------------------------------------------------------------
# conditions


def check_c1(mp: MonadPoint) -> bool:
    if mp.shape.k1 == 0:
        return True
    return any(m.terms for m in alpha_minors(mp))


def _c2_detail(mp: MonadPoint) -> dict:
    if mp.shape.k3 == 0:
        return {chart: ZeroLocus.EMPTY for chart in CHARTS}
    return chart_degeneracy(beta_minors(mp))


def check_c2(mp: MonadPoint) -> bool:
    return all(v is ZeroLocus.EMPTY for v in _c2_detail(mp).values())


def _restricted_alpha_minors(mp: MonadPoint):
    s = mp.shape
    pc = restrict_monad(mp)
    return _form_minors(pc.map_a, pc.degrees_V, pc.degrees_U, s.k1, True)


def check_c3(mp: MonadPoint) -> bool:
    if mp.shape.k1 == 0:
        return True
    return _no_common_root(_restricted_alpha_minors(mp))


def c4_dimensions(mp: MonadPoint) -> tuple[int, int]:
    """(h^0, h^1) of the restricted monad twisted by O(-1)."""
    res = hyper_h(restrict_monad(mp, twist=-1), basis=False)
    return res.h0, res.h1


def check_c4(mp: MonadPoint) -> bool:
    if not check_c3(mp):
        raise PreconditionC3("alpha is not injective on every fibre over the line at infinity")
    return c4_dimensions(mp)[0] == 0


def _c5_detail(mp: MonadPoint) -> dict:
    if mp.shape.k1 == 0:
        return {chart: ZeroLocus.EMPTY for chart in CHARTS}
    return chart_degeneracy(alpha_minors(mp))


def check_c5(mp: MonadPoint) -> bool:
    return all(v is not ZeroLocus.INFINITE for v in _c5_detail(mp).values())


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of all checks; ``None`` marks a check skipped because a
    prerequisite failed (or because ``stop_early`` was set)."""

    is_complex: bool
    c1: Optional[bool] = None
    c2: Optional[bool] = None
    c3: Optional[bool] = None
    c4: Optional[bool] = None
    c5: Optional[bool] = None
    diagnostics: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def flags(self) -> tuple:
        return (self.is_complex, self.c1, self.c2, self.c3, self.c4, self.c5)

    @property
    def in_Lk(self) -> bool:
        return all(f is True for f in self.flags)

    def first_failure(self) -> str | None:
        names = ("complex", "c1", "c2", "c3", "c4", "c5")
        for name, f in zip(names, self.flags):
            if f is False:
                return name
        return None

    def as_dict(self) -> dict:
        return {
            "is_complex": self.is_complex,
            "c1": self.c1, "c2": self.c2, "c3": self.c3, "c4": self.c4, "c5": self.c5,
            "in_Lk": self.in_Lk,
            "diagnostics": self.diagnostics,
        }


def _chart_name(chart) -> str:
    return f"z{chart[0]}=z{chart[1]}=1"


def check_all(mp: MonadPoint, *, stop_early: bool = False) -> ConditionReport:
    """Decide membership in L_k.

    The cheap checks run first.  With ``stop_early`` the first failing
    condition ends the evaluation (used by the sampler).
    """
    if not is_complex(mp):
        return ConditionReport(False, diagnostics={"complex": "beta . alpha is not zero"})
    diag: dict = {}
    res: dict = {}

    def done() -> bool:
        return stop_early and any(v is False for v in res.values())

    res["c1"] = check_c1(mp)
    if not done():
        if mp.shape.k1:
            forms = _restricted_alpha_minors(mp)
            res["c3"] = _no_common_root(forms)
            g = UniPoly()
            for _, p in forms:
                g = uni_gcd(g, p)
            diag["c3"] = {"gcd_of_minors": repr(g) if g else "0"}
        else:
            res["c3"] = True
    if not done() and res.get("c3"):
        h0_, h1_ = c4_dimensions(mp)
        res["c4"] = h0_ == 0
        diag["c4"] = {"h0": h0_, "h1": h1_}
    if not done():
        d2 = _c2_detail(mp)
        res["c2"] = all(v is ZeroLocus.EMPTY for v in d2.values())
        diag["c2"] = {_chart_name(k): v.name for k, v in d2.items()}
    if not done() and res["c1"]:
        d5 = _c5_detail(mp)
        res["c5"] = all(v is not ZeroLocus.INFINITE for v in d5.values())
        diag["c5"] = {_chart_name(k): v.name for k, v in d5.items()}
    return ConditionReport(True, res.get("c1"), res.get("c2"), res.get("c3"),
                           res.get("c4"), res.get("c5"), diag)


# ---------------------------------------------------------------------------
# Chern character and dimensions


def chern_of_cohomology(shape: MonadShape) -> ChernCharacter:
    n = shape.n
    total = ChernCharacter.zero()
    for cls in shape.V:
        total = total + chern_of_linebundle(n, cls)
    for cls in shape.U + shape.W:
        total = total - chern_of_linebundle(n, cls)
    return total


def hom_dim(n: int, source: Sequence, target: Sequence) -> int:
    return sum(h0(n, PicClass(*b) - PicClass(*a)) for a in source for b in target)


def dim_V(kvec: KVector) -> int:
    s = shape_from_k(kvec)
    return hom_dim(s.n, s.U, s.V) + hom_dim(s.n, s.V, s.W)


def dim_Wspace(kvec: KVector) -> int:
    s = shape_from_k(kvec)
    return hom_dim(s.n, s.U, s.W)


def dim_Lk(kvec: KVector) -> int:
    return dim_V(kvec) - dim_Wspace(kvec)


# ---------------------------------------------------------------------------
# JSON


def _coef_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _entry_json(e: BigradedPoly) -> dict:
    return {"terms": [{"e": list(k), "coef": _coef_str(v)} for k, v in sorted(e.terms.items())]}


def monad_to_json(mp: MonadPoint) -> dict:
    kv = mp.shape.kvec
    return {
        "n": kv.n, "r": kv.r, "a": kv.a, "c": kv.c,
        "alpha": [[_entry_json(e) for e in row] for row in mp.alpha],
        "beta": [[_entry_json(e) for e in row] for row in mp.beta],
    }


def _parse_entry(n: int, obj, cls: PicClass, where: str) -> BigradedPoly:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ValueError(f"{where}: entry must be an object with a 'terms' list")
    terms: dict = {}
    for t in obj["terms"]:
        e = tuple(int(x) for x in t["e"])
        if len(e) != 4:
            raise ValueError(f"{where}: exponent vector must have four entries")
        coef = Fraction(str(t["coef"]))
        terms[e] = terms.get(e, 0) + coef
    try:
        return BigradedPoly(n, cls, terms)
    except ClassMismatch as exc:
        raise ClassMismatch(f"{where}: {exc}") from None


def monad_from_json(obj: dict) -> MonadPoint:
    """Parse a monad document; ValueError/KeyError on malformed input and
    ClassMismatch when an entry is not homogeneous of the required class."""
    n, r, a, c = (int(obj[k]) for k in ("n", "r", "a", "c"))
    shape = shape_from_k(k_from_chern(n, r, a, c))
    alpha_rows = obj["alpha"]
    beta_rows = obj["beta"]
    nV = shape.k2 + shape.k4
    if len(alpha_rows) != nV or any(len(row) != shape.k1 for row in alpha_rows):
        raise ValueError(f"alpha must be {nV} x {shape.k1}")
    if len(beta_rows) != shape.k3 or any(len(row) != nV for row in beta_rows):
        raise ValueError(f"beta must be {shape.k3} x {nV}")
    alpha = tuple(tuple(_parse_entry(n, e, shape.alpha_class(i, j), f"alpha[{i}][{j}]")
                        for j, e in enumerate(row)) for i, row in enumerate(alpha_rows))
    beta = tuple(tuple(_parse_entry(n, e, shape.beta_class(i, j), f"beta[{i}][{j}]")
                       for j, e in enumerate(row)) for i, row in enumerate(beta_rows))
    return MonadPoint(shape, alpha, beta)


def dumps_monad(mp: MonadPoint) -> str:
    return json.dumps(monad_to_json(mp), sort_keys=True, separators=(",", ":")) + "\n"


def loads_monad(text: str) -> MonadPoint:
    return monad_from_json(json.loads(text))

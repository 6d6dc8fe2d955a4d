"""Hypercohomology of monads restricted to the line at infinity.

A complex U -> V -> W of split bundles on P^1 is given by the degrees of the
summands and by matrices of binary forms.  Its hypercohomology is computed
from the total complex of the two-chart Cech resolution, truncated in
Laurent degree.

Cochains are written in the coordinate t = z2/z1 and the frame z1^d of
O(d).  For a summand of degree d and window N:

    chart 0  (z1 != 0) : t^e,  0  <= e <= d + N
    chart 1  (z2 != 0) : t^e,  -N <= e <= d
    overlap            : t^e,  -N <= e <= d + N

Multiplication by a form of degree d' - d maps these ranges for O(d) into
those of O(d'), so the truncation is a subcomplex.  Each step N -> N + 1
adds, per summand, one exponent to each chart and two to the overlap, on
which the Cech differential is an isomorphism; the quotient is therefore
acyclic and any N >= max |d| computes hypercohomology exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exact import RatMatrix, UniPoly, _echelon, _kernel_from_rows, _sparse_rank, rank, uni_gcd
from .surface import H, intersect, restrict_to_linf

__all__ = [
    "P1Complex",
    "CechResult",
    "SplittingType",
    "WindowUnstable",
    "NotABundle",
    "NotTrivial",
    "restrict_monad",
    "hyper_h",
    "window_for",
    "is_monad_on_p1",
    "check_trivial_restriction",
    "splitting_type",
    "h0_basis_and_evaluation",
    "apply_chain_map",
    "h0_coordinates",
    "split_complex",
]


class WindowUnstable(RuntimeError):
    pass


class NotABundle(ValueError):
    pass


class NotTrivial(ValueError):
    pass


def _as_poly(p) -> UniPoly:
    return p if isinstance(p, UniPoly) else UniPoly(p)


@dataclass(frozen=True)
class P1Complex:
    """Complex of split bundles U -> V -> W on P^1 in degrees -1, 0, 1.

    ``map_a[i][j]`` maps the j-th summand of U to the i-th of V and must be a
    form of degree ``degrees_V[i] - degrees_U[j]`` (or zero); likewise
    ``map_b``.  ``twist`` shifts every degree.
    """

    degrees_U: tuple[int, ...]
    degrees_V: tuple[int, ...]
    degrees_W: tuple[int, ...]
    map_a: tuple[tuple[UniPoly, ...], ...]
    map_b: tuple[tuple[UniPoly, ...], ...]
    twist: int = 0

    def __post_init__(self):
        dU, dV, dW = (tuple(int(d) for d in x) for x in (self.degrees_U, self.degrees_V, self.degrees_W))
        object.__setattr__(self, "degrees_U", dU)
        object.__setattr__(self, "degrees_V", dV)
        object.__setattr__(self, "degrees_W", dW)
        a = tuple(tuple(_as_poly(p) for p in row) for row in self.map_a)
        b = tuple(tuple(_as_poly(p) for p in row) for row in self.map_b)
        object.__setattr__(self, "map_a", a)
        object.__setattr__(self, "map_b", b)
        if len(a) != len(dV) or any(len(r) != len(dU) for r in a):
            raise ValueError("map_a has the wrong shape")
        if len(b) != len(dW) or any(len(r) != len(dV) for r in b):
            raise ValueError("map_b has the wrong shape")
        for name, m, src, dst in (("map_a", a, dU, dV), ("map_b", b, dV, dW)):
            for i, row in enumerate(m):
                for j, p in enumerate(row):
                    if p and p.degree > dst[i] - src[j]:
                        raise ValueError(f"{name}[{i}][{j}] has degree above {dst[i] - src[j]}")
        for i in range(len(dW)):
            for k in range(len(dU)):
                s = UniPoly()
                for j in range(len(dV)):
                    s = s + b[i][j] * a[j][k]
                if s:
                    raise ValueError("composite b.a is not zero")

    @property
    def dU(self) -> tuple[int, ...]:
        return tuple(d + self.twist for d in self.degrees_U)

    @property
    def dV(self) -> tuple[int, ...]:
        return tuple(d + self.twist for d in self.degrees_V)

    @property
    def dW(self) -> tuple[int, ...]:
        return tuple(d + self.twist for d in self.degrees_W)

    @property
    def rank(self) -> int:
        return len(self.degrees_V) - len(self.degrees_U) - len(self.degrees_W)

    @property
    def degree(self) -> int:
        return sum(self.dV) - sum(self.dU) - sum(self.dW)

    def twisted(self, t: int) -> "P1Complex":
        return replace(self, twist=self.twist + t)

    def euler_characteristic(self) -> int:
        return (sum(d + 1 for d in self.dV) - sum(d + 1 for d in self.dU)
                - sum(d + 1 for d in self.dW))


def split_complex(degrees: Sequence[int]) -> P1Complex:
    """The complex 0 -> sum O(d) -> 0 (a split bundle as a test vector)."""
    return P1Complex((), tuple(degrees), (), tuple(() for _ in degrees), ())


def restrict_monad(mp, twist: int = 0) -> P1Complex:
    """Restrict a monad point on the surface to the line at infinity."""
    shape = mp.shape
    n = shape.n
    dU = tuple(intersect(n, c, H) for c in shape.U)
    dV = tuple(intersect(n, c, H) for c in shape.V)
    dW = tuple(intersect(n, c, H) for c in shape.W)
    a = tuple(tuple(restrict_to_linf(e).poly for e in row) for row in mp.alpha)
    b = tuple(tuple(restrict_to_linf(e).poly for e in row) for row in mp.beta)
    return P1Complex(dU, dV, dW, a, b, twist)


def window_for(pc: P1Complex) -> int:
    degs = pc.dU + pc.dV + pc.dW
    if not degs:
        return 2
    steps = [v - u for v in pc.dV for u in pc.dU] + [w - v for w in pc.dW for v in pc.dV]
    return max(abs(d) for d in degs) + max(steps + [0]) + 2


# ---------------------------------------------------------------------------
# the truncated total complex


class _C0:
    """Index bookkeeping for Cech 0-cochains (two charts) of a split bundle."""

    def __init__(self, degrees, N, offset=0):
        self.degrees = degrees
        self.N = N
        self.idx = {}
        k = offset
        for chart in (0, 1):
            for s, d in enumerate(degrees):
                lo, hi = (0, d + N) if chart == 0 else (-N, d)
                for e in range(lo, hi + 1):
                    self.idx[(chart, s, e)] = k
                    k += 1
        self.size = k - offset


class _C1:
    def __init__(self, degrees, N, offset=0):
        self.degrees = degrees
        self.idx = {}
        k = offset
        for s, d in enumerate(degrees):
            for e in range(-N, d + N + 1):
                self.idx[(s, e)] = k
                k += 1
        self.size = k - offset


def _mult(m: UniPoly, e: int):
    for k, c in enumerate(m.coeffs):
        if c:
            yield e + k, c


class _Tot:
    def __init__(self, pc: P1Complex, N: int):
        self.pc = pc
        self.N = N
        dU, dV, dW = pc.dU, pc.dV, pc.dW
        self.C0U = _C0(dU, N)
        self.C0V = _C0(dV, N)
        self.C1U = _C1(dU, N, self.C0V.size)
        self.C0W = _C0(dW, N)
        self.C1V = _C1(dV, N, self.C0W.size)
        self.C1W = _C1(dW, N)
        self.dims = (self.C0U.size, self.C0V.size + self.C1U.size,
                     self.C0W.size + self.C1V.size, self.C1W.size)
        self.D = [self._dm1(), self._d0(), self._d1()]

    @staticmethod
    def _rows(nrows, entries):
        rows = [dict() for _ in range(nrows)]
        for r, c, v in entries:
            rows[r][c] = rows[r].get(c, 0) + v
        return [{c: v for c, v in row.items() if v} for row in rows]

    def _dm1(self):
        pc, out = self.pc, []
        for (chart, j, e), src in self.C0U.idx.items():
            for i in range(len(pc.dV)):
                for e2, c in _mult(pc.map_a[i][j], e):
                    out.append((self.C0V.idx[(chart, i, e2)], src, c))
            out.append((self.C1U.idx[(j, e)], src, Fraction(1 if chart == 0 else -1)))
        return self._rows(self.dims[1], out)

    def _d0(self):
        pc, out = self.pc, []
        for (chart, j, e), src in self.C0V.idx.items():
            for i in range(len(pc.dW)):
                for e2, c in _mult(pc.map_b[i][j], e):
                    out.append((self.C0W.idx[(chart, i, e2)], src, c))
            out.append((self.C1V.idx[(j, e)], src, Fraction(-1 if chart == 0 else 1)))
        for (j, e), src in self.C1U.idx.items():
            for i in range(len(pc.dV)):
                for e2, c in _mult(pc.map_a[i][j], e):
                    out.append((self.C1V.idx[(i, e2)], src, c))
        return self._rows(self.dims[2], out)

    def _d1(self):
        pc, out = self.pc, []
        for (chart, j, e), src in self.C0W.idx.items():
            out.append((self.C1W.idx[(j, e)], src, Fraction(1 if chart == 0 else -1)))
        for (j, e), src in self.C1V.idx.items():
            for i in range(len(pc.dW)):
                for e2, c in _mult(pc.map_b[i][j], e):
                    out.append((self.C1W.idx[(i, e2)], src, c))
        return self._rows(self.dims[3], out)

    def dimensions(self) -> tuple[int, int, int, int]:
        r = [_sparse_rank(D) for D in self.D]
        t = self.dims
        return (t[0] - r[0], t[1] - r[1] - r[0], t[2] - r[2] - r[1], t[3] - r[2])

    def image_echelon(self):
        """Reduced echelon basis of the coboundaries in degree 0."""
        cols: list[dict] = [dict() for _ in range(self.dims[0])]
        for r, row in enumerate(self.D[0]):
            for c, v in row.items():
                cols[c][r] = v
        return _echelon(cols, reduced=True)

    def h0_basis(self):
        img, img_piv = self.image_echelon()
        kern = _kernel_from_rows(self.D[1], self.dims[1])
        nfs = []
        for v in kern:
            w = {k: x for k, x in enumerate(v) if x}
            nfs.append(_normal_form(w, img, img_piv))
        basis, piv = _echelon(nfs, reduced=True)
        return basis, piv, img, img_piv


def _normal_form(v: dict, red: list[dict], piv: list[int]) -> dict:
    w = dict(v)
    for p, c in zip(red, piv):
        f = w.get(c)
        if f:
            for k, x in p.items():
                nv = w.get(k, 0) - f * x
                if nv:
                    w[k] = nv
                else:
                    w.pop(k, None)
    return w


@dataclass(frozen=True)
class CechResult:
    """Hypercohomology dimensions plus a canonical basis of H^0.

    ``h0_basis`` holds degree-0 cocycles of the truncated total complex as
    dense coefficient tuples; coordinates list chart-0 coefficients of every
    V summand (ascending Laurent degree), then chart-1 ones, then the
    overlap coefficients of U.  They are reduced against the coboundaries and
    put in reduced echelon form, so the basis is canonical.
    """

    h0: int
    h1: int
    h_minus1: int
    h2: int
    h0_basis: tuple[tuple[Fraction, ...], ...]
    window: int
    pivots: tuple[int, ...] = field(default=(), repr=False)
    _tot: object = field(default=None, repr=False, compare=False, hash=False)
    _img: object = field(default=None, repr=False, compare=False, hash=False)

    @property
    def euler(self) -> int:
        return -self.h_minus1 + self.h0 - self.h1 + self.h2


@lru_cache(maxsize=512)
def _hyper_h_cached(pc: P1Complex, basis: bool, verify: bool) -> CechResult:
    N = window_for(pc)
    tot = _Tot(pc, N)
    hm1, h0, h1, h2 = tot.dimensions()
    if verify:
        again = _Tot(pc, 2 * N).dimensions()
        if again != (hm1, h0, h1, h2):
            raise WindowUnstable(f"window {N} gave {(hm1, h0, h1, h2)}, window {2 * N} gave {again}")
    if not basis:
        return CechResult(h0, h1, hm1, h2, (), N)
    vecs, piv, img, img_piv = tot.h0_basis()
    assert len(vecs) == h0
    dense = tuple(tuple(v.get(k, Fraction(0)) for k in range(tot.dims[1])) for v in vecs)
    return CechResult(h0, h1, hm1, h2, dense, N, tuple(piv), tot, (img, img_piv, vecs))


def hyper_h(pc: P1Complex, *, basis: bool = True, verify: bool = True) -> CechResult:
    """Hypercohomology of ``pc`` in degrees -1..2 with a canonical H^0 basis.

    With ``verify`` the dimensions are recomputed at twice the window and
    WindowUnstable is raised if anything moved.
    """
    return _hyper_h_cached(pc, basis, verify)


# ---------------------------------------------------------------------------
# bundles on P^1


def _no_common_root(forms: list[tuple[int, UniPoly]]) -> bool:
    """True iff the binary forms (degree, dehomogenised poly) share no root."""
    nz = [(d, p) for d, p in forms if p]
    if not nz:
        return False
    g = UniPoly()
    for _, p in nz:
        g = uni_gcd(g, p)
    if g.degree > 0:
        return False
    # root at (0:1) iff every form lacks its top coefficient
    return any(p.degree == d for d, p in nz)


def _form_minors(m, rows_deg, cols_deg, k, by_rows: bool):
    """Maximal minors of a matrix of forms as (degree, poly) pairs."""
    from itertools import combinations

    nr, nc = len(rows_deg), len(cols_deg)
    out = []
    if by_rows:
        for rs in combinations(range(nr), k):
            sub = [[m[i][j] for j in range(nc)] for i in rs]
            det = _uni_det(sub)
            out.append((sum(rows_deg[i] for i in rs) - sum(cols_deg), det))
    else:
        for cs in combinations(range(nc), k):
            sub = [[m[i][j] for j in cs] for i in range(nr)]
            det = _uni_det(sub)
            out.append((sum(rows_deg) - sum(cols_deg[j] for j in cs), det))
    return out


def _uni_det(M):
    from .exact import _bareiss_det
    return _bareiss_det(M, UniPoly(), UniPoly([1]), UniPoly.exact_div)


def is_monad_on_p1(pc: P1Complex) -> bool:
    """a injective and b surjective on every fibre of P^1."""
    dU, dV, dW = pc.degrees_U, pc.degrees_V, pc.degrees_W
    if len(dU) > len(dV) or len(dW) > len(dV):
        return False
    if dU and not _no_common_root(_form_minors(pc.map_a, dV, dU, len(dU), True)):
        return False
    if dW and not _no_common_root(_form_minors(pc.map_b, dW, dV, len(dW), False)):
        return False
    return True


def check_trivial_restriction(pc: P1Complex) -> bool:
    if not is_monad_on_p1(pc):
        raise NotABundle("the restricted complex is not a monad on P^1")
    return pc.degree == 0 and hyper_h(pc.twisted(-1), basis=False).h0 == 0


@dataclass(frozen=True)
class SplittingType:
    degrees: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def is_trivial(self) -> bool:
        return all(d == 0 for d in self.degrees)


def splitting_type(pc: P1Complex, *, max_steps: int = 256) -> SplittingType:
    """Splitting type of the cohomology bundle from its h^0 ladder.

    With h(d) = h^0(E(d)) = sum max(0, a_i + d + 1), the first difference
    h(d) - h(d-1) counts the a_i >= -d, so second differences count each
    degree exactly.
    """
    if not is_monad_on_p1(pc):
        raise NotABundle("the restricted complex is not a monad on P^1")
    r = pc.rank

    def h(d):
        return hyper_h(pc.twisted(d), basis=False).h0

    d = 0
    while h(d) > 0:
        d -= 1
        if -d > max_steps:
            raise RuntimeError("splitting ladder did not terminate")
    # now h(d) = 0: every a_i < -d - 1 + ... climb until all summands counted
    lo = d
    hs = {lo - 1: 0, lo: 0}
    degrees: list[int] = []
    k = lo
    while len(degrees) < r:
        k += 1
        if k - lo > max_steps:
            raise RuntimeError("splitting ladder did not terminate")
        hs[k] = h(k)
        first_now = hs[k] - hs[k - 1]
        first_prev = hs[k - 1] - hs[k - 2] if (k - 2) in hs else 0
        degrees.extend([-k] * (first_now - first_prev))
    return SplittingType(tuple(sorted(degrees, reverse=True)))


# ---------------------------------------------------------------------------
# H^0 bases, framings, chain maps


def h0_coordinates(res: CechResult, vec: dict) -> list[Fraction]:
    """Coordinates of a degree-0 cocycle in the canonical H^0 basis."""
    img, img_piv, vecs = res._img
    w = _normal_form(vec, img, img_piv)
    coords = []
    for b, p in zip(vecs, res.pivots):
        lam = w.get(p, Fraction(0))
        coords.append(lam)
        if lam:
            for k, x in b.items():
                nv = w.get(k, 0) - lam * x
                if nv:
                    w[k] = nv
                else:
                    w.pop(k, None)
    if w:
        raise ValueError("vector is not a cocycle of this complex")
    return coords


def _value_at(tot: _Tot, vec: dict, s: int, y) -> Fraction:
    y1, y2 = (Fraction(v) for v in y)
    d = tot.C0V.degrees[s]
    if y1:
        t = y2 / y1
        return sum((vec.get(tot.C0V.idx[(0, s, e)], 0) * t ** e for e in range(0, d + tot.N + 1)),
                   Fraction(0))
    return Fraction(vec.get(tot.C0V.idx[(1, s, d)], 0))


def h0_basis_and_evaluation(pc: P1Complex):
    """Canonical H^0 basis and an evaluator into the cohomology fibres.

    The evaluator takes a point (y1 : y2) of P^1 and returns the
    ``len(V) x r`` matrix whose columns are the basis sections evaluated in
    V at that point; together with the columns of a(y) they span a space of
    dimension rank(U) + r exactly when H^0 (x) O -> E is an isomorphism there.
    """
    if not check_trivial_restriction(pc):
        raise NotTrivial("restriction is not trivial")
    res = hyper_h(pc)
    tot = res._tot
    vecs = res._img[2]

    def evaluator(y) -> RatMatrix:
        rows = [[_value_at(tot, v, s, y) for v in vecs] for s in range(len(pc.dV))]
        return RatMatrix(len(pc.dV), len(vecs), rows)

    return res, evaluator


def fibre_matrix_a(pc: P1Complex, y) -> RatMatrix:
    y1, y2 = y
    from .surface import BinaryForm
    rows = []
    for i, row in enumerate(pc.map_a):
        rows.append([BinaryForm(pc.degrees_V[i] - pc.degrees_U[j], p).at(y1, y2) for j, p in enumerate(row)])
    return RatMatrix(len(pc.dV), len(pc.dU), rows)


def evaluation_rank(pc: P1Complex, evaluator: Callable, y) -> int:
    A = fibre_matrix_a(pc, y)
    ev = evaluator(y)
    rows = [list(A.row(i)) + list(ev.row(i)) for i in range(A.rows)]
    return rank(RatMatrix(A.rows, A.cols + ev.cols, rows))


def apply_chain_map(src: CechResult, dst: CechResult, phi, psi, vec: dict) -> dict:
    """Push a degree-0 cochain through a morphism of restricted complexes.

    ``phi`` (U to U) and ``psi`` (V to V) are matrices of UniPoly forms; the
    W component plays no role in degree 0.  Both results must come from
    complexes with identical degrees (hence identical layouts).
    """
    ts, td = src._tot, dst._tot
    if ts.dims != td.dims or ts.N != td.N:
        raise ValueError("incompatible Cech layouts")
    out: dict = {}

    def add(k, v):
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)

    for (chart, j, e), k in ts.C0V.idx.items():
        x = vec.get(k)
        if not x:
            continue
        for i in range(len(psi)):
            for e2, c in _mult(psi[i][j], e):
                add(td.C0V.idx[(chart, i, e2)], c * x)
    for (j, e), k in ts.C1U.idx.items():
        x = vec.get(k)
        if not x:
            continue
        for i in range(len(phi)):
            for e2, c in _mult(phi[i][j], e):
                add(td.C1U.idx[(i, e2)], c * x)
    return out


def basis_vectors(res: CechResult) -> list[dict]:
    return [dict(v) for v in res._img[2]]

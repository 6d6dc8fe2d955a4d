"""Group actions, framings, stabilisers, sampling and dimension counts.

The group G_k = Aut(U) x Aut(V) x Aut(W) acts on pairs by

    alpha' = psi alpha phi^-1,    beta' = chi beta psi^-1.

Aut(U) and Aut(W) are GL(k1) and GL(k3).  Since Hom(O, O(1,-1)) has
dimension n and Hom(O(1,-1), O) = 0, an automorphism of
V = O(1,-1)^k2 + O^k4 is a block matrix

    psi = [[P, Q],
           [0, S]]

with P, S invertible constant matrices and Q a k2 x k4 matrix of sections
of O(1,-1), that is z3 times binary forms of degree n - 1.

A framing at a point is an invertible r x r matrix theta expressed in the
canonical basis of H^0(E|l); a group element acts by theta -> theta Lambda^-1
where Lambda is the induced map on H^0 of the restricted cohomology.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exact import RatMatrix, UniPoly, _kernel_from_rows, kernel_basis, rank, zero_locus_points
from .linf import (
    CechResult,
    apply_chain_map,
    basis_vectors,
    h0_coordinates,
    hyper_h,
    restrict_monad,
    splitting_type,
)
from .monad import (
    KVector,
    MonadPoint,
    MonadShape,
    NegativeK1,
    alpha_minors,
    check_all,
    chern_of_cohomology,
    dim_Lk,
    k_from_chern,
    poly_det,
    shape_from_k,
    trivial_monad,
)
from .surface import CHARTS, BigradedPoly, PicClass, restrict_to_linf, section_basis

__all__ = [
    "ShapeMismatch",
    "NonInvertible",
    "NotInLk",
    "InvalidK",
    "MonadMorphism",
    "GroupElement",
    "FramedPoint",
    "OrbitFingerprint",
    "identity_element",
    "scalar_element",
    "random_group_element",
    "compose",
    "act",
    "act_framed",
    "induced_map",
    "induced_lambda",
    "stabilizer_algebra",
    "freeness_certificate",
    "freeness_report",
    "sample_Lk",
    "expected_dim",
    "dim_G",
    "dim_identity",
    "nonempty",
    "discriminant",
    "orbit_fingerprint",
]

Q_CLASS = PicClass(1, -1)


class ShapeMismatch(ValueError):
    pass


class NonInvertible(ValueError):
    pass


class NotInLk(ValueError):
    pass


class InvalidK(ValueError):
    pass


# ---------------------------------------------------------------------------
# morphisms and group elements


def _as_matrix(m, size: int, name: str) -> RatMatrix:
    if not isinstance(m, RatMatrix):
        m = RatMatrix.from_rows(m, size) if size else RatMatrix.zeros(0, 0)
    if m.shape != (size, size):
        raise ShapeMismatch(f"{name} must be {size} x {size}")
    return m


@dataclass(frozen=True)
class MonadMorphism:
    """An endomorphism (phi, psi, chi) of the three terms of a monad shape.

    ``psi`` is stored by blocks: P (k2 x k2), Q (k2 x k4 sections of class
    (1,-1)) and S (k4 x k4).  No invertibility is assumed.
    """

    shape: MonadShape
    phi: RatMatrix
    P: RatMatrix
    Q: tuple[tuple[BigradedPoly, ...], ...]
    S: RatMatrix
    chi: RatMatrix

    def __post_init__(self):
        s = self.shape
        object.__setattr__(self, "phi", _as_matrix(self.phi, s.k1, "phi"))
        object.__setattr__(self, "P", _as_matrix(self.P, s.k2, "P"))
        object.__setattr__(self, "S", _as_matrix(self.S, s.k4, "S"))
        object.__setattr__(self, "chi", _as_matrix(self.chi, s.k3, "chi"))
        Q = self.Q
        if len(Q) != s.k2 or any(len(row) != s.k4 for row in Q):
            raise ShapeMismatch(f"Q must be {s.k2} x {s.k4}")
        Q = tuple(tuple(BigradedPoly.zero(s.n, Q_CLASS) if (not isinstance(e, BigradedPoly) and e == 0)
                        else e.with_class(Q_CLASS) for e in row) for row in Q)
        object.__setattr__(self, "Q", Q)

    def psi_entries(self) -> list[list[BigradedPoly]]:
        """psi as a (k2+k4) x (k2+k4) matrix of sections."""
        s = self.shape
        n, k2, k4 = s.n, s.k2, s.k4
        out = []
        for i in range(k2 + k4):
            row = []
            for j in range(k2 + k4):
                if i < k2 and j < k2:
                    row.append(BigradedPoly.constant(n, self.P[i, j]))
                elif i < k2:
                    row.append(self.Q[i][j - k2])
                elif j >= k2:
                    row.append(BigradedPoly.constant(n, self.S[i - k2, j - k2]))
                else:
                    row.append(BigradedPoly.zero(n, (-1, 1)))
            out.append(row)
        return out

    def restricted(self):
        """(phi, psi, chi) on the line at infinity as matrices of UniPoly."""
        def const(m: RatMatrix):
            return [[UniPoly([m[i, j]]) for j in range(m.cols)] for i in range(m.rows)]
        psi = [[restrict_to_linf(e).poly for e in row] for row in self.psi_entries()]
        return const(self.phi), psi, const(self.chi)

    def flat(self) -> tuple[Fraction, ...]:
        """Coordinates in the fixed basis used by the stabiliser solve."""
        s = self.shape
        qb = section_basis(s.n, Q_CLASS)
        out = []
        for m in (self.phi, self.P, self.S, self.chi):
            out.extend(m[i, j] for i in range(m.rows) for j in range(m.cols))
        for row in self.Q:
            for e in row:
                out.extend(e.to_vector(qb))
        return tuple(out)


class GroupElement(MonadMorphism):
    """A monad morphism with phi, P, S, chi invertible."""

    def __post_init__(self):
        super().__post_init__()
        for name in ("phi", "P", "S", "chi"):
            m = getattr(self, name)
            if m.rows and not m.is_invertible():
                raise NonInvertible(f"{name} is not invertible")

    def inverse(self) -> "GroupElement":
        s = self.shape
        Pi, Si = self.P.inverse(), self.S.inverse()
        # -P^-1 Q S^-1: Q entries are sections, P and S constants
        Qi = _const_poly_product(s.n, Si, _const_poly_product(s.n, -Pi, self.Q, Q_CLASS, left=True),
                                 Q_CLASS, left=False)
        return GroupElement(s, self.phi.inverse(), Pi, Qi, Si, self.chi.inverse())


def _const_poly_product(n, M, polys, cls, *, left: bool):
    """M * polys (left) or polys * M (right) with M a constant matrix."""
    if left:
        rows, inner = M.rows, M.cols
        cols = len(polys[0]) if polys else 0
        get_m = lambda i, k: M[i, k]
        get_p = lambda k, j: polys[k][j]
    else:
        rows, inner, cols = len(polys), M.rows, M.cols
        get_m = lambda k, j: M[k, j]
        get_p = lambda i, k: polys[i][k]
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = BigradedPoly.zero(n, cls)
            for k in range(inner):
                c = get_m(i, k) if left else get_m(k, j)
                p = get_p(k, j) if left else get_p(i, k)
                if c and p.terms:
                    acc = acc + p * c
            row.append(acc.with_class(cls))
        out.append(tuple(row))
    return tuple(out)


def identity_element(shape: MonadShape) -> GroupElement:
    return scalar_element(shape, 1)


def scalar_element(shape: MonadShape, lam) -> GroupElement:
    lam = Fraction(lam)
    zeroQ = tuple(tuple(0 for _ in range(shape.k4)) for _ in range(shape.k2))
    return GroupElement(shape, RatMatrix.identity(shape.k1, lam), RatMatrix.identity(shape.k2, lam),
                        zeroQ, RatMatrix.identity(shape.k4, lam), RatMatrix.identity(shape.k3, lam))


def compose(g2: MonadMorphism, g1: MonadMorphism) -> MonadMorphism:
    """The composite g2 o g1 (apply g1 first)."""
    if g1.shape != g2.shape:
        raise ShapeMismatch("group elements for different shapes")
    s = g1.shape
    n = s.n
    # psi2 psi1 = [[P2 P1, P2 Q1 + Q2 S1], [0, S2 S1]]
    a = _const_poly_product(n, g2.P, g1.Q, Q_CLASS, left=True)
    b = _const_poly_product(n, g1.S, g2.Q, Q_CLASS, left=False)
    Q = tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
    cls = GroupElement if isinstance(g1, GroupElement) and isinstance(g2, GroupElement) else MonadMorphism
    return cls(s, g2.phi @ g1.phi, g2.P @ g1.P, Q, g2.S @ g1.S, g2.chi @ g1.chi)


def _rand_invertible(rng: random.Random, size: int, lo=-3, hi=3) -> RatMatrix:
    while True:
        m = RatMatrix.from_rows([[rng.randint(lo, hi) for _ in range(size)] for _ in range(size)], size) \
            if size else RatMatrix.zeros(0, 0)
        if not size or m.is_invertible():
            return m


def _rand_section(rng: random.Random, n: int, cls, lo=-3, hi=3) -> BigradedPoly:
    basis = section_basis(n, cls)
    return BigradedPoly.from_vector(n, cls, [rng.randint(lo, hi) for _ in basis])


def random_group_element(shape: MonadShape, rng: random.Random) -> GroupElement:
    Q = tuple(tuple(_rand_section(rng, shape.n, Q_CLASS) for _ in range(shape.k4)) for _ in range(shape.k2))
    return GroupElement(shape, _rand_invertible(rng, shape.k1), _rand_invertible(rng, shape.k2), Q,
                        _rand_invertible(rng, shape.k4), _rand_invertible(rng, shape.k3))


# ---------------------------------------------------------------------------
# actions


def _matmul_sections(n, A, B, target_cls):
    """Product of matrices of sections; target_cls(i, j) gives the result class."""
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = BigradedPoly.zero(n, target_cls(i, j))
            for k in range(inner):
                x, y = A[i][k], B[k][j]
                if x.terms and y.terms:
                    acc = acc + x * y
            row.append(acc.with_class(target_cls(i, j)))
        out.append(tuple(row))
    return tuple(out)


def _const_entries(n, m: RatMatrix):
    return [[BigradedPoly.constant(n, m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def _transform(mor: MonadMorphism, mp: MonadPoint, phi_inv: RatMatrix, psi_inv_entries):
    s = mp.shape
    n = s.n
    psi = mor.psi_entries()
    alpha = _matmul_sections(n, _matmul_sections(n, psi, mp.alpha, s.alpha_class),
                             _const_entries(n, phi_inv), s.alpha_class)
    beta = _matmul_sections(n, _matmul_sections(n, _const_entries(n, mor.chi), mp.beta, s.beta_class),
                            psi_inv_entries, s.beta_class)
    return MonadPoint(s, alpha, beta)


def act(g: GroupElement, mp: MonadPoint) -> MonadPoint:
    if g.shape != mp.shape:
        raise ShapeMismatch("group element and monad point have different shapes")
    if not isinstance(g, GroupElement):
        raise NonInvertible("only invertible morphisms act")
    gi = g.inverse()
    return _transform(g, mp, gi.phi, gi.psi_entries())


@dataclass(frozen=True)
class FramedPoint:
    mp: MonadPoint
    theta: RatMatrix

    def __post_init__(self):
        r = self.mp.shape.r
        if self.theta.shape != (r, r) or not self.theta.is_invertible():
            raise NonInvertible("framing must be an invertible r x r matrix")


def _h0(mp: MonadPoint) -> CechResult:
    return hyper_h(restrict_monad(mp))


def induced_map(mor: MonadMorphism, src: MonadPoint, dst: MonadPoint) -> RatMatrix:
    """Matrix of H^0(E_src|l) -> H^0(E_dst|l) induced by a chain map.

    Columns are the images of the canonical basis of the source expressed in
    the canonical basis of the target.  The caller guarantees that ``mor``
    is a morphism of complexes from ``src`` to ``dst``.
    """
    rs, rd = _h0(src), _h0(dst)
    phi, psi, _ = mor.restricted()
    cols = [h0_coordinates(rd, apply_chain_map(rs, rd, phi, psi, b)) for b in basis_vectors(rs)]
    return RatMatrix.from_columns(cols, rd.h0) if cols else RatMatrix.zeros(rd.h0, 0)


def _require_Lk(mp: MonadPoint) -> None:
    if not check_all(mp).in_Lk:
        raise NotInLk("the monad point does not satisfy (c1)-(c5)")


def induced_lambda(g: GroupElement, mp: MonadPoint) -> RatMatrix:
    _require_Lk(mp)
    return induced_map(g, mp, act(g, mp))


def act_framed(g: GroupElement, fp: FramedPoint) -> FramedPoint:
    mp2 = act(g, fp.mp)
    lam = induced_map(g, fp.mp, mp2)
    return FramedPoint(mp2, fp.theta @ lam.inverse())


# ---------------------------------------------------------------------------
# stabiliser


def _unknown_layout(shape: MonadShape):
    """Unit morphisms, in the order used by :meth:`MonadMorphism.flat`."""
    s = shape
    n = s.n
    qb = section_basis(n, Q_CLASS)
    zeroQ = [[BigradedPoly.zero(n, Q_CLASS) for _ in range(s.k4)] for _ in range(s.k2)]

    def mats():
        return {"phi": RatMatrix.zeros(s.k1, s.k1), "P": RatMatrix.zeros(s.k2, s.k2),
                "S": RatMatrix.zeros(s.k4, s.k4), "chi": RatMatrix.zeros(s.k3, s.k3)}

    units = []
    for name, size in (("phi", s.k1), ("P", s.k2), ("S", s.k4), ("chi", s.k3)):
        for i in range(size):
            for j in range(size):
                m = mats()
                rows = [[0] * size for _ in range(size)]
                rows[i][j] = 1
                m[name] = RatMatrix.from_rows(rows, size)
                units.append(MonadMorphism(s, m["phi"], m["P"], tuple(map(tuple, zeroQ)), m["S"], m["chi"]))
    for i in range(s.k2):
        for j in range(s.k4):
            for e in qb:
                Q = [list(r) for r in zeroQ]
                Q[i][j] = BigradedPoly.monomial(n, e)
                m = mats()
                units.append(MonadMorphism(s, m["phi"], m["P"], tuple(map(tuple, Q)), m["S"], m["chi"]))
    return units


def _commutator_equations(mor: MonadMorphism, mp: MonadPoint) -> dict:
    """Coefficients of psi alpha - alpha phi and beta psi - chi beta."""
    s = mp.shape
    n = s.n
    psi = mor.psi_entries()
    A1 = _matmul_sections(n, psi, mp.alpha, s.alpha_class)
    A2 = _matmul_sections(n, mp.alpha, _const_entries(n, mor.phi), s.alpha_class)
    B1 = _matmul_sections(n, mp.beta, psi, s.beta_class)
    B2 = _matmul_sections(n, _const_entries(n, mor.chi), mp.beta, s.beta_class)
    out: dict = {}
    for tag, X, Y in (("a", A1, A2), ("b", B1, B2)):
        for i, (rx, ry) in enumerate(zip(X, Y)):
            for j, (x, y) in enumerate(zip(rx, ry)):
                for e, v in (x - y).terms.items():
                    out[(tag, i, j, e)] = v
    return out


def _from_flat(shape: MonadShape, vec: Sequence[Fraction], units) -> MonadMorphism:
    s = shape
    acc = None
    for c, u in zip(vec, units):
        if not c:
            continue
        term = _scale_morphism(u, c)
        acc = term if acc is None else _add_morphisms(acc, term)
    if acc is None:
        acc = _scale_morphism(units[0], 0) if units else MonadMorphism(s, [], [], (), [], [])
    return acc


def _scale_morphism(m: MonadMorphism, c) -> MonadMorphism:
    return MonadMorphism(m.shape, m.phi.scale(c), m.P.scale(c), tuple(tuple(e * c for e in row) for row in m.Q),
                         m.S.scale(c), m.chi.scale(c))


def _add_morphisms(a: MonadMorphism, b: MonadMorphism) -> MonadMorphism:
    Q = tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.Q, b.Q))
    return MonadMorphism(a.shape, a.phi + b.phi, a.P + b.P, Q, a.S + b.S, a.chi + b.chi)


def stabilizer_algebra(mp: MonadPoint) -> list[MonadMorphism]:
    """Basis of the endomorphisms (phi, psi, chi) commuting with (alpha, beta).

    The equations psi alpha = alpha phi and beta psi = chi beta are linear in
    the unknown blocks, so the algebra is the null space of one rational
    matrix; the basis is the canonical one of that null space.
    """
    _require_Lk(mp)
    units = _unknown_layout(mp.shape)
    rows: dict = {}
    for col, u in enumerate(units):
        for key, v in _commutator_equations(u, mp).items():
            rows.setdefault(key, {})[col] = v
    kern = _kernel_from_rows([rows[k] for k in sorted(rows)], len(units))
    return [_from_flat(mp.shape, v, units) for v in kern]


def _identity_morphism(shape: MonadShape) -> MonadMorphism:
    g = identity_element(shape)
    return MonadMorphism(shape, g.phi, g.P, g.Q, g.S, g.chi)


def freeness_report(mp: MonadPoint) -> dict:
    """Evidence that G_k acts freely on framings at ``mp``.

    Three checks: the restriction map from the stabiliser algebra to
    End(H^0(E|l)) is injective (so a stabilising group element with trivial
    induced map is the identity); for each non-scalar basis element X a
    group element id + tX stabilises the point and moves the framing; and
    the scalar 2 acts on framings by 2.
    """
    _require_Lk(mp)
    s = mp.shape
    r = s.r
    basis = stabilizer_algebra(mp)
    images = [induced_map(X, mp, mp) for X in basis]
    flat = RatMatrix.from_rows([[m[i, j] for i in range(r) for j in range(r)] for m in images], r * r) \
        if images else RatMatrix.zeros(0, r * r)
    injective = rank(flat) == len(basis)

    ident = _identity_morphism(s)
    id_flat = ident.flat()
    perturbed_ok = True
    for X in basis:
        xf = X.flat()
        # skip elements proportional to the identity (the scalar line)
        if rank(RatMatrix.from_rows([list(xf), list(id_flat)])) < 2:
            continue
        for t in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 11)):
            cand = _add_morphisms(ident, _scale_morphism(X, t))
            try:
                g = GroupElement(s, cand.phi, cand.P, cand.Q, cand.S, cand.chi)
            except NonInvertible:
                continue
            break
        else:
            perturbed_ok = False
            continue
        if act(g, mp) != mp:
            perturbed_ok = False
            continue
        lam = induced_map(g, mp, mp)
        if lam == RatMatrix.identity(r):
            perturbed_ok = False
    lam2 = induced_lambda(scalar_element(s, 2), mp)
    scalar_ok = lam2 == RatMatrix.identity(r, 2)
    return {
        "stabilizer_dim": len(basis),
        "restriction_injective": injective,
        "perturbed_elements_move_framing": perturbed_ok,
        "scalar_moves_framing": scalar_ok,
        "free": injective and perturbed_ok and scalar_ok,
    }


def freeness_certificate(mp: MonadPoint) -> bool:
    return freeness_report(mp)["free"]


# ---------------------------------------------------------------------------
# sampling


def _pencil_block(rng: random.Random, n: int, rows: int, cols: int) -> list[list[BigradedPoly]]:
    """A rows x cols matrix of class-(0,1) forms degenerating on finitely many fibres.

    Normal form [[z2 I - z1 T], [0]] moved by random invertible matrices on
    both sides; T is a random integer matrix whose eigenvalues name the
    fibres over which the block drops rank.
    """
    z1 = BigradedPoly.monomial(n, (1, 0, 0, 0))
    z2 = BigradedPoly.monomial(n, (0, 1, 0, 0))
    T = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(cols)]
    base = []
    for i in range(rows):
        row = []
        for j in range(cols):
            if i < cols:
                e = z1 * (-T[i][j])
                if i == j:
                    e = e + z2
                row.append(e.with_class((0, 1)))
            else:
                row.append(BigradedPoly.zero(n, (0, 1)))
        base.append(row)
    L, R = _rand_invertible(rng, rows, -2, 2), _rand_invertible(rng, cols, -2, 2)
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = BigradedPoly.zero(n, (0, 1))
            for k in range(rows):
                for m in range(cols):
                    c = L[i, k] * R[m, j]
                    if c and base[k][m].terms:
                        acc = acc + base[k][m] * c
            row.append(acc.with_class((0, 1)))
        out.append(row)
    return out


def _draw_alpha(rng: random.Random, shape: MonadShape, structured: bool):
    n = shape.n
    rows = []
    for i in range(shape.k2):
        rows.append([_rand_section(rng, n, shape.alpha_class(i, j)) for j in range(shape.k1)])
    if structured:
        rows.extend(_pencil_block(rng, n, shape.k4, shape.k1))
    else:
        for i in range(shape.k2, shape.k2 + shape.k4):
            rows.append([_rand_section(rng, n, shape.alpha_class(i, j)) for j in range(shape.k1)])
    return rows


def _beta_space(shape: MonadShape, alpha) -> tuple[list, RatMatrix]:
    """Null space of beta -> beta . alpha in coordinates of beta's entries."""
    n = shape.n
    nV = shape.k2 + shape.k4
    slots = []          # (row, col, monomial)
    for i in range(shape.k3):
        for j in range(nV):
            for e in section_basis(n, shape.beta_class(i, j)):
                slots.append((i, j, e))
    eqs: dict = {}
    for col, (i, j, e) in enumerate(slots):
        mono = BigradedPoly.monomial(n, e)
        for k in range(shape.k1):
            a = alpha[j][k]
            if not a.terms:
                continue
            for f, v in (mono * a).terms.items():
                row = eqs.setdefault((i, k, f), {})
                row[col] = row.get(col, 0) + v
    kern = _kernel_from_rows(list(eqs.values()), len(slots))
    return slots, kern


def _sample_one(kvec: KVector, seed, index: int) -> tuple[Optional[MonadPoint], str]:
    shape = shape_from_k(kvec)
    rng = random.Random(f"{seed}:{index}")
    n, nV = shape.n, shape.k2 + shape.k4
    alpha = _draw_alpha(rng, shape, structured=bool(index % 2))
    slots, kern = _beta_space(shape, alpha)
    if shape.k3 and not kern:
        return None, "beta"
    coeffs = [Fraction(0)] * len(slots)
    for v in kern:
        w = rng.randint(-3, 3)
        if w:
            for t, x in enumerate(v):
                if x:
                    coeffs[t] += w * x
    terms: dict = {}
    for (i, j, e), c in zip(slots, coeffs):
        if c:
            terms.setdefault((i, j), {})[e] = c
    beta = [[BigradedPoly(n, shape.beta_class(i, j), terms.get((i, j), {}), check=False)
             for j in range(nV)] for i in range(shape.k3)]
    mp = MonadPoint(shape, tuple(map(tuple, alpha)), tuple(map(tuple, beta)))
    rep = check_all(mp, stop_early=True)
    if rep.in_Lk:
        return mp, "ok"
    return None, rep.first_failure() or "unknown"


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("HIRZMONAD_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass
class SampleStats:
    attempts: int = 0
    successes: int = 0
    failures: dict = field(default_factory=dict)


def sample_Lk(kvec: KVector, seed=0, attempts: int = 500, *, max_points: Optional[int] = None,
              workers: Optional[int] = 1, stats: Optional[SampleStats] = None) -> list[MonadPoint]:
    """Witness points of L_k found among ``attempts`` random draws.

    Attempt i uses its own generator seeded by (seed, i), so results do not
    depend on the worker count.  Even attempts draw every entry of alpha
    uniformly; odd attempts draw its trivial-row block as a pencil
    degenerating on finitely many fibres, which is where the degeneracy
    locus of a point with c > 0 has to sit.  beta is a random combination of
    a basis of solutions of beta . alpha = 0.  Every returned point passed
    ``check_all``; duplicates are dropped.
    """
    if kvec.k1 < 0:
        raise InvalidK(f"k1 = {kvec.k1} < 0")
    stats = stats if stats is not None else SampleStats()
    if kvec.k1 == 0 and kvec.k3 == 0:
        # V = O^r only: the unique point is the trivial monad
        stats.attempts, stats.successes = max(attempts, 0), 1 if attempts > 0 else 0
        return [trivial_monad(kvec.n, kvec.r)] if attempts > 0 else []
    found: list[MonadPoint] = []
    seen = set()
    nw = _worker_count(workers)

    def consume(res):
        mp, why = res
        stats.attempts += 1
        if mp is None:
            stats.failures[why] = stats.failures.get(why, 0) + 1
            return False
        stats.successes += 1
        if mp not in seen:
            seen.add(mp)
            found.append(mp)
        return max_points is not None and len(found) >= max_points

    if nw == 1:
        for i in range(attempts):
            if consume(_sample_one(kvec, seed, i)):
                break
        return found
    with ProcessPoolExecutor(max_workers=nw) as ex:
        batch = nw * 4
        for start in range(0, attempts, batch):
            idx = range(start, min(attempts, start + batch))
            results = list(ex.map(_sample_one, [kvec] * len(idx), [seed] * len(idx), idx))
            for res in results:
                if consume(res):
                    return found
    return found


# ---------------------------------------------------------------------------
# dimension counts


def _check_k(kvec: KVector) -> None:
    if kvec.k1 < 0:
        raise InvalidK(f"k1 = {kvec.k1} < 0")


def dim_G(kvec: KVector) -> int:
    k1, k2, k3, k4 = kvec.k
    return k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4 + kvec.n * k2 * k4


def expected_dim(kvec: KVector) -> int:
    _check_k(kvec)
    n, r, a, c = kvec.n, kvec.r, kvec.a, kvec.c
    return 2 * r * c + (r - 1) * n * a * a


def dim_identity(kvec: KVector) -> bool:
    """dim L_k + r^2 - dim G_k equals the expected dimension."""
    _check_k(kvec)
    return dim_Lk(kvec) + kvec.r ** 2 - dim_G(kvec) == expected_dim(kvec)


def nonempty(kvec: KVector) -> bool:
    return kvec.k1 >= 0


def discriminant(kvec: KVector) -> Fraction:
    """c2 - (r-1)/(2r) c1^2 with c1 = aE, so c1^2 = -n a^2."""
    n, r, a, c = kvec.n, kvec.r, kvec.a, kvec.c
    return c + Fraction((r - 1) * n * a * a, 2 * r)


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class OrbitFingerprint:
    flags: tuple
    chern: tuple
    splitting: tuple[int, ...]
    stabilizer_dim: int
    strata: tuple          # per chart, per rank bound: canonical point sets
    fibre_dims: tuple      # sorted (fibre dimension, number of points)

    def as_dict(self) -> dict:
        return {
            "flags": list(self.flags),
            "chern": list(self.chern),
            "splitting": list(self.splitting),
            "stabilizer_dim": self.stabilizer_dim,
            "fibre_dims": [list(x) for x in self.fibre_dims],
            "strata": repr(self.strata),
        }


def _minors_of_size(mp: MonadPoint, j: int) -> list[BigradedPoly]:
    from itertools import combinations
    A = mp.alpha
    out = []
    for rs in combinations(range(len(A)), j):
        for cs in combinations(range(mp.shape.k1), j):
            m = poly_det([[A[i][c] for c in cs] for i in rs], mp.n)
            if m.terms:
                out.append(m)
    return out


def _point_key(pts) -> tuple:
    return tuple((tuple(f.coeffs), tuple(tuple(c.coeffs) for c in g)) for f, g in pts)


def _count(pts) -> int:
    return sum(f.degree * (len(g) - 1) for f, g in pts)


def orbit_fingerprint(mp: MonadPoint) -> OrbitFingerprint:
    """Summary of (alpha, beta) that only depends on the G_k orbit.

    The degeneracy strata {rank alpha <= j - 1} are described chart by chart
    through their canonical point sets; the cohomology fibre at a point of
    rank rho has dimension r + k1 - rho.  Points are counted on the chart
    where z1 = 1 and z3 = 1 together with the points on the remaining
    toric divisors picked up by the other charts.
    """
    rep = check_all(mp)
    if not rep.in_Lk:
        raise NotInLk("the monad point does not satisfy (c1)-(c5)")
    s = mp.shape
    ch = chern_of_cohomology(s)
    split = splitting_type(restrict_monad(mp)).degrees
    stab = len(stabilizer_algebra(mp))
    strata = []
    counts = {}
    for chart in CHARTS:
        per_j = []
        for j in range(1, s.k1 + 1):
            minors = alpha_minors(mp) if j == s.k1 else _minors_of_size(mp, j)
            polys = [m.to_chart(chart) for m in minors if m.terms]
            pts = zero_locus_points(polys) if polys else None
            per_j.append(_point_key(pts) if pts is not None else "infinite")
            counts[(chart, j)] = _count(pts) if pts is not None else None
        strata.append((chart, tuple(per_j)))
    # exact rank counts on the union of charts: use the chart z1=z3=1 for
    # the open torus and the others for points on z1 = 0 or z3 = 0
    fibre = {}
    for j in range(1, s.k1 + 1):
        below = _union_count(mp, j)
        above = _union_count(mp, j - 1) if j > 1 else 0
        exact = below - above          # points with rank exactly j - 1
        if exact:
            fibre[s.r + s.k1 - (j - 1)] = exact
    return OrbitFingerprint(rep.flags, (ch.rk, tuple(ch.c1), str(ch.ch2)), tuple(split), stab,
                            tuple(strata), tuple(sorted(fibre.items())))


def _union_count(mp: MonadPoint, j: int) -> int:
    """Number of points (over C) where rank alpha <= j - 1."""
    minors = alpha_minors(mp) if j == mp.shape.k1 else _minors_of_size(mp, j)
    total = 0
    for chart, extra in (((1, 3), None), ((2, 3), "x"), ((1, 4), "y"), ((2, 4), "xy")):
        polys = [m.to_chart(chart) for m in minors if m.terms]
        if extra:
            from .exact import BiPoly
            if "x" in extra:
                polys.append(BiPoly.x())
            if "y" in extra:
                polys.append(BiPoly.y())
        pts = zero_locus_points(polys)
        if pts is None:
            raise NotInLk("degeneracy locus is not finite")
        total += _count(pts)
    return total

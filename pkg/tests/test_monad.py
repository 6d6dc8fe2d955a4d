from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from hirzmonad.exact import RatMatrix, ZeroLocus, rank
from hirzmonad.linf import fibre_matrix_a, hyper_h, restrict_monad, split_complex
from hirzmonad.monad import (
    MonadPoint,
    NegativeK1,
    NormalizationViolation,
    PreconditionC3,
    c4_dimensions,
    chart_degeneracy,
    check_all,
    check_c1,
    check_c2,
    check_c3,
    check_c4,
    check_c5,
    chern_of_cohomology,
    cohomology_fiber_dim,
    compose_beta_alpha,
    dim_Lk,
    dim_V,
    dim_Wspace,
    dumps_monad,
    fiber_matrices,
    hom_dim,
    is_complex,
    k_from_chern,
    loads_monad,
    monad_from_json,
    poly_det,
    shape_from_k,
    trivial_monad,
)
from hirzmonad.selftest import moduli_grid, probe_points
from hirzmonad.surface import BigradedPoly, ChartPoint, ClassMismatch, PicClass


def z(n, i, coef=1):
    e = [0, 0, 0, 0]
    e[i - 1] = 1
    return BigradedPoly.monomial(n, e, coef)


def point_1101(beta_row):
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    return MonadPoint(s, ((z(1, 4),), (z(1, 1),), (z(1, 2),)), (tuple(beta_row),))


EXAMPLE = point_1101([z(1, 1), z(1, 4, -1), 0])


def random_chart_point(rng):
    return ChartPoint(rng.choice([(1, 3), (1, 4), (2, 3), (2, 4)]),
                      (Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5))))


# numerical data


def test_k_vectors():
    assert k_from_chern(1, 1, 0, 1).k == (1, 1, 1, 2)
    assert k_from_chern(2, 3, 1, 2).k == (2, 4, 3, 4)
    kv = k_from_chern(1, 1, 0, 0)
    assert kv.k == (0, 0, 0, 1) and kv.valid_moduli
    assert not k_from_chern(1, 2, 1, -1).valid_moduli
    with pytest.raises(NormalizationViolation):
        k_from_chern(1, 1, 1, 0)
    with pytest.raises(NegativeK1):
        shape_from_k(k_from_chern(1, 2, 1, -1))


def test_shapes():
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    assert s.U == (PicClass(0, -1),) and s.W == (PicClass(1, 0),)
    assert s.V == (PicClass(1, -1), PicClass(0, 0), PicClass(0, 0))
    s = shape_from_k(k_from_chern(3, 2, 0, 0))
    assert s.U == () and s.W == () and s.V == (PicClass(0, 0),) * 2
    s = shape_from_k(k_from_chern(1, 2, 1, 1))
    assert s.ranks == (1, 4, 1) and s.V[:2] == (PicClass(1, -1),) * 2


def test_rank_identity_grid():
    for q in moduli_grid():
        kv = k_from_chern(*q)
        assert kv.k2 + kv.k4 - kv.k1 - kv.k3 == kv.r


def test_chern_examples():
    def tup(ch):
        return ch.rk, tuple(ch.c1), ch.ch2

    assert tup(chern_of_cohomology(shape_from_k(k_from_chern(1, 1, 0, 1)))) == (1, (0, 0), -1)
    assert tup(chern_of_cohomology(shape_from_k(k_from_chern(3, 2, 0, 0)))) == (2, (0, 0), 0)
    assert tup(chern_of_cohomology(shape_from_k(k_from_chern(2, 3, 1, 2)))) == (3, (1, -2), -3)


def test_dimension_examples():
    kv = k_from_chern(1, 1, 0, 1)
    assert (dim_V(kv), dim_Wspace(kv), dim_Lk(kv)) == (15, 5, 10)
    for n in range(1, 5):
        assert dim_Lk(k_from_chern(n, 3, 0, 0)) == 0
        assert hom_dim(n, [PicClass(1, -1)], [PicClass(0, 0)]) == 0
    # Hom(U, W) = k1 k3 (n + 4)
    for q in moduli_grid(kmax=3):
        kv = k_from_chern(*q)
        assert dim_Wspace(kv) == kv.k1 * kv.k3 * (kv.n + 4)


# points and complexes


def test_composite_examples():
    assert is_complex(EXAMPLE)
    assert not is_complex(point_1101([z(1, 1), 0, 0]))
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    zero = MonadPoint(s, ((0,), (0,), (0,)), ((z(1, 1), z(1, 4), z(1, 4)),))
    assert is_complex(zero)
    assert all(e.cls == PicClass(1, 1) for row in compose_beta_alpha(EXAMPLE) for e in row)


def test_entry_class_is_validated():
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    with pytest.raises(ClassMismatch, match=r"alpha\[1\]\[0\]"):
        MonadPoint(s, ((z(1, 4),), (z(1, 4),), (z(1, 2),)), ((0, 0, 0),))


def test_fiber_matrices():
    rng = random.Random(0)
    for _ in range(100):
        A, B = fiber_matrices(EXAMPLE, random_chart_point(rng))
        assert (B @ A).is_zero()
    A, _ = fiber_matrices(EXAMPLE, ChartPoint((2, 3), (5, 7)))
    assert A == RatMatrix.from_rows([[7], [5], [1]])
    A, B = fiber_matrices(trivial_monad(2, 3), ChartPoint((1, 3), (0, 0)))
    assert A.shape == (3, 0) and cohomology_fiber_dim(trivial_monad(2, 3), ChartPoint((1, 3), (0, 0))) == 3


def test_poly_det():
    n = 1
    M = [[z(n, 1), z(n, 2)], [z(n, 2), z(n, 1)]]
    d = poly_det(M, n)
    assert d == z(n, 1) * z(n, 1) - z(n, 2) * z(n, 2)
    # proportional columns
    assert poly_det([[z(n, 1), z(n, 1, 2)], [z(n, 2), z(n, 2, 2)]], n).is_zero()


# conditions


def test_c1_examples():
    assert check_c1(trivial_monad(1, 2))
    assert check_c1(EXAMPLE)
    s = shape_from_k(k_from_chern(1, 1, 0, 2))       # k = (2, 2, 2, 3)
    a = ((z(1, 4), z(1, 4, 2)), (z(1, 3) * z(1, 1), z(1, 3) * z(1, 1, 2)),
         (z(1, 1), z(1, 1, 2)), (z(1, 2), z(1, 2, 2)), (0, 0))
    mp = MonadPoint(s, a, tuple(tuple(0 for _ in range(5)) for _ in range(2)))
    assert not check_c1(mp)


def test_c2_examples():
    assert check_c2(trivial_monad(1, 1))
    assert not check_c2(EXAMPLE)
    detail = chart_degeneracy([EXAMPLE.beta[0][0], EXAMPLE.beta[0][1]])
    assert detail[(2, 3)] is ZeroLocus.FINITE
    assert detail[(1, 3)] is ZeroLocus.EMPTY
    # the entries z1, z4, z2 z3 have no common zero off the irrelevant locus
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    mp = MonadPoint(s, ((0,), (0,), (0,)), ((z(1, 1), z(1, 4), z(1, 2) * z(1, 3)),))
    assert check_c2(mp)


def test_c3_examples():
    assert check_c3(trivial_monad(2, 2))
    assert check_c3(EXAMPLE)
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    bad = MonadPoint(s, ((z(1, 4),), (z(1, 1),), (z(1, 1),)), ((0, 0, 0),))
    assert not check_c3(bad)
    # a common root at z1 = 0, seen only through the top coefficient
    bad2 = MonadPoint(s, ((z(1, 4),), (z(1, 2),), (z(1, 2, 3),)), ((0, 0, 0),))
    assert not check_c3(bad2)


def test_c4_examples():
    assert check_c4(trivial_monad(3, 2))
    # restricted cohomology O(1) + O(-1) gives H^0(E(-1)) of dimension 1
    res = hyper_h(split_complex((1, -1)).twisted(-1))
    assert res.h0 == 1 and res.h1 == 1
    # the worked example: alpha injective on the line, beta not surjective there
    assert c4_dimensions(EXAMPLE) == (1, 1)
    assert not check_c4(EXAMPLE)
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    bad = MonadPoint(s, ((z(1, 4),), (z(1, 1),), (z(1, 1),)), ((0, 0, 0),))
    with pytest.raises(PreconditionC3):
        check_c4(bad)


def test_c5_examples():
    assert check_c5(trivial_monad(1, 1))
    assert check_c5(EXAMPLE)
    # alpha = z1 * (column): every minor is divisible by z1, which vanishes on a fibre
    s = shape_from_k(k_from_chern(1, 1, 0, 1))
    z1 = z(1, 1)
    mp = MonadPoint(s, ((z1 * z(1, 3),), (z1,), (z1 * 2,)), ((0, 0, 0),))
    assert check_c1(mp) and not check_c5(mp)


def test_c5_needs_finite_locus_on_every_chart():
    # k1 = 2 with a common fibre z1 = 0 in the two trivial rows and in the top rows
    n = 1
    s = shape_from_k(k_from_chern(1, 1, 0, 2))       # k = (2, 2, 2, 3)
    zero = BigradedPoly.zero(n, (0, 1))
    z1, z3 = z(n, 1), z(n, 3)
    a = ((z1 * z3, zero),
         (zero, z1 * z3),
         (z1, zero),
         (zero, z1),
         (zero, zero))
    mp = MonadPoint(s, a, tuple(tuple(0 for _ in range(5)) for _ in range(2)))
    assert check_c1(mp) and not check_c5(mp)


def test_check_all_short_circuits():
    rep = check_all(point_1101([z(1, 1), 0, 0]))
    assert rep.is_complex is False and rep.flags[1:] == (None,) * 5 and not rep.in_Lk
    rep = check_all(trivial_monad(2, 2))
    assert rep.in_Lk
    rep = check_all(EXAMPLE)
    assert rep.flags == (True, True, False, True, False, True)
    assert rep.diagnostics["c2"]["z2=z3=1"] == "FINITE"
    assert rep.first_failure() == "c2"


# properties on sampled points


def test_sampled_points_properties(sampled_points):
    rng = random.Random(1)
    for q, mp in sampled_points.items():
        assert mp is not None, q
        assert check_all(mp).in_Lk
        r, k1 = mp.shape.r, mp.shape.k1
        for _ in range(100):
            A, B = fiber_matrices(mp, random_chart_point(rng))
            assert (B @ A).is_zero()
        # generic points have fibre dimension r; degeneracy points r + (k1 - rank)
        for pt in probe_points(mp, rng, 20):
            A, _ = fiber_matrices(mp, pt)
            assert cohomology_fiber_dim(mp, pt) == r + k1 - rank(A)
        # (c3) smoke cross-check: alpha has rank k1 at random points of the line
        pc = restrict_monad(mp)
        for _ in range(50):
            y = (rng.randint(-5, 5), rng.randint(-5, 5))
            if y == (0, 0):
                continue
            assert rank(fibre_matrix_a(pc, y)) == k1


def test_degeneracy_point_has_bigger_fibre(sampled_points):
    mp = sampled_points[(1, 1, 0, 1)]
    pts = probe_points(mp, random.Random(0), 20)
    dims = [cohomology_fiber_dim(mp, p) for p in pts]
    # the rational degeneracy points come first in probe_points
    assert max(dims) == mp.shape.r + 1 and min(dims) == mp.shape.r


# JSON


def test_json_round_trip(sampled_points):
    for mp in list(sampled_points.values()) + [trivial_monad(2, 3), EXAMPLE]:
        text = dumps_monad(mp)
        mp2 = loads_monad(text)
        assert mp2 == mp
        assert dumps_monad(mp2) == text
        assert check_all(mp2).flags == check_all(mp).flags


def test_json_errors():
    doc = json.loads(dumps_monad(EXAMPLE))
    doc["alpha"][0][0]["terms"][0]["e"] = [1, 0, 0, 0]
    with pytest.raises(ClassMismatch, match=r"alpha\[0\]\[0\]"):
        monad_from_json(doc)
    doc = json.loads(dumps_monad(EXAMPLE))
    del doc["beta"][0][2]
    with pytest.raises(ValueError):
        monad_from_json(doc)
    doc = json.loads(dumps_monad(EXAMPLE))
    doc["alpha"][0][0]["terms"][0]["coef"] = "3/6"
    assert monad_from_json(doc).alpha[0][0].terms[(0, 0, 0, 1)] == Fraction(1, 2)

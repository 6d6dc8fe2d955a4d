from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hirzmonad.exact import RatMatrix, UniPoly, rank
from hirzmonad.linf import (
    NotABundle,
    NotTrivial,
    P1Complex,
    WindowUnstable,
    _Tot,
    check_trivial_restriction,
    h0_basis_and_evaluation,
    hyper_h,
    is_monad_on_p1,
    restrict_monad,
    split_complex,
    splitting_type,
    window_for,
)
from hirzmonad.monad import trivial_monad
from hirzmonad.selftest import random_p1_complex

T = UniPoly.x()
ONE = UniPoly([1])


def koszul():
    # O(-1) -> O^2 -> O(1) with a = (z1, z2), b = (-z2, z1); in t = z2/z1: z1 -> 1, z2 -> t
    return P1Complex((-1,), (0, 0), (1,), ((ONE,), (T,)), ((-T, ONE),))


def test_spec_examples():
    r = hyper_h(split_complex((-1,)))
    assert (r.h0, r.h1) == (0, 0)
    r = hyper_h(split_complex((0, 0, 0)))
    assert (r.h0, r.h1) == (3, 0)
    r = hyper_h(koszul())
    assert (r.h_minus1, r.h0, r.h1, r.h2) == (0, 0, 0, 0)


@pytest.mark.parametrize("d", range(-6, 7))
def test_line_bundles(d):
    r = hyper_h(split_complex((d,)))
    assert r.h0 == max(0, d + 1) and r.h1 == max(0, -d - 1)
    assert r.h_minus1 == 0 and r.h2 == 0


def test_shifted_line_bundles():
    # O(d) placed in degree -1 or +1 moves its cohomology
    r = hyper_h(P1Complex((2,), (), (), (), ()))
    assert (r.h_minus1, r.h0) == (3, 0)
    r = hyper_h(P1Complex((), (), (-3,), (), ((),)))
    assert (r.h1, r.h2) == (0, 2)


def test_validation():
    with pytest.raises(ValueError):
        P1Complex((0,), (0,), (), ((T,),), ())                 # degree too high
    with pytest.raises(ValueError):
        P1Complex((-1,), (0, 0), (1,), ((ONE,), (T,)), ((T, ONE),))   # b a != 0


def test_twist():
    pc = koszul()
    tw = pc.twisted(3)
    assert tw.dU == (2,) and tw.dV == (3, 3) and tw.dW == (4,)
    assert tw.twisted(-3) == pc


def test_restrict_monad_degrees(sampled_points):
    pc = restrict_monad(sampled_points[(1, 1, 0, 1)])
    assert pc.degrees_U == (-1,) and pc.degrees_V == (0, 0, 0) and pc.degrees_W == (1,)
    pc = restrict_monad(trivial_monad(2, 3))
    assert pc.degrees_U == () and pc.degrees_V == (0, 0, 0) and pc.degrees_W == ()
    pc = restrict_monad(sampled_points[(2, 1, 0, 1)])
    assert pc.degrees_V == (1, 0, 0) and pc.degrees_W == (2,)


def _global_sections_oracle(pc: P1Complex):
    """Hypercohomology from global sections, valid when every degree is >= -1."""
    def space(degs):
        idx, k = {}, 0
        for s, d in enumerate(degs):
            for e in range(d + 1):
                idx[(s, e)] = k
                k += 1
        return idx, k

    iU, nU = space(pc.dU)
    iV, nV = space(pc.dV)
    iW, nW = space(pc.dW)

    def matrix(m, isrc, nsrc, itgt, ntgt):
        rows = [[0] * nsrc for _ in range(ntgt)]
        for (j, e), col in isrc.items():
            for i in range(len(m)):
                for k, c in enumerate(m[i][j].coeffs):
                    rows[itgt[(i, e + k)]][col] += c
        return RatMatrix.from_rows(rows, nsrc) if ntgt else RatMatrix.zeros(0, nsrc)

    A = matrix(pc.map_a, iU, nU, iV, nV)
    B = matrix(pc.map_b, iV, nV, iW, nW)
    ra, rb = rank(A), rank(B)
    return nU - ra, nV - rb - ra, nW - rb


def test_against_global_sections_oracle():
    rng = random.Random(11)
    checked = 0
    while checked < 60:
        pc = random_p1_complex(rng)
        if min(pc.dU + pc.dV + pc.dW, default=0) < -1:
            continue
        r = hyper_h(pc)
        assert (r.h_minus1, r.h0, r.h1) == _global_sections_oracle(pc)
        assert r.h2 == 0
        checked += 1


def test_random_complexes_euler_and_window():
    rng = random.Random(12)
    for _ in range(100):
        pc = random_p1_complex(rng)
        r = hyper_h(pc)
        assert r.euler == pc.euler_characteristic()
        N = window_for(pc)
        assert _Tot(pc, N + 3).dimensions() == (r.h_minus1, r.h0, r.h1, r.h2)


def test_window_too_small_is_detected():
    # a window below max |degree| loses cohomology; the doubling check must notice
    pc = split_complex((-5,))
    assert _Tot(pc, 1).dimensions() != _Tot(pc, 10).dimensions()


def test_splitting_types():
    assert splitting_type(split_complex((0, 0))).degrees == (0, 0)
    assert splitting_type(split_complex((1, -1))).degrees == (1, -1)
    assert splitting_type(split_complex((3, 0, -2))).degrees == (3, 0, -2)
    # Euler sequence: O(-1) -> O^2 has cokernel O(1)
    pc = P1Complex((-1,), (0, 0), (), ((ONE,), (T,)), ())
    assert splitting_type(pc).degrees == (1,)
    # kernel of O^2 -> O(1) is O(-1)
    pc = P1Complex((), (0, 0), (1,), ((), ()), ((-T, ONE),))
    assert splitting_type(pc).degrees == (-1,)


def test_trivial_restriction():
    assert check_trivial_restriction(split_complex((0, 0)))
    assert not check_trivial_restriction(split_complex((1, -1)))
    assert is_monad_on_p1(P1Complex((-1,), (0, 0), (), ((ONE,), (T,)), ()))
    # (z1, z1) vanishes at (0 : 1): only the top coefficients see it
    assert not is_monad_on_p1(P1Complex((-1,), (0, 0), (), ((ONE,), (ONE,)), ()))
    bad = P1Complex((-1,), (0, 0), (), ((T,), (T * 2,)), ())     # common root t = 0
    assert not is_monad_on_p1(bad)
    with pytest.raises(NotABundle):
        check_trivial_restriction(bad)
    with pytest.raises(NotTrivial):
        h0_basis_and_evaluation(split_complex((1, -1)))


def test_trivial_basis_is_standard():
    res, ev = h0_basis_and_evaluation(restrict_monad(trivial_monad(1, 3)))
    assert res.h0 == 3
    for y in [(1, 0), (0, 1), (2, -3)]:
        assert ev(y) == RatMatrix.identity(3)


def test_sampled_evaluator_rank(sampled_points):
    from hirzmonad.linf import evaluation_rank

    rng = random.Random(13)
    for mp in sampled_points.values():
        pc = restrict_monad(mp)
        res, ev = h0_basis_and_evaluation(pc)
        assert res.h0 == mp.shape.r
        assert splitting_type(pc).degrees == (0,) * mp.shape.r
        for _ in range(20):
            y = (rng.randint(-4, 4), rng.randint(-4, 4))
            if y == (0, 0):
                continue
            assert evaluation_rank(pc, ev, y) == mp.shape.k1 + mp.shape.r


def test_basis_is_reduced_echelon():
    res = hyper_h(split_complex((2, 1)))
    basis = res.h0_basis
    piv = res.pivots
    assert len(basis) == res.h0 == 5
    for i, b in enumerate(basis):
        assert b[piv[i]] == 1
        for j, p in enumerate(piv):
            if j != i:
                assert b[p] == 0

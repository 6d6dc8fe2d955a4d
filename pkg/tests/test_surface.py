from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest

from hirzmonad.exact import UniPoly
from hirzmonad.surface import (
    E,
    F,
    H,
    BigradedPoly,
    ChartPoint,
    ClassMismatch,
    PicClass,
    canonical_class,
    chern_of_linebundle,
    chi,
    evaluate_on_chart,
    h0,
    h1,
    h1_direct,
    h2,
    intersect,
    restrict_to_linf,
    section_basis,
    vanishing_pattern,
)

GRID = list(product(range(1, 5), range(-6, 7), range(-6, 7)))


def mono(n, e, coef=1):
    return BigradedPoly.monomial(n, e, coef)


def z(n, i):
    e = [0, 0, 0, 0]
    e[i - 1] = 1
    return mono(n, e)


def rand_section(rng, n, cls):
    return BigradedPoly.from_vector(n, cls, [rng.randint(-3, 3) for _ in section_basis(n, cls)])


def test_section_basis_examples():
    assert section_basis(1, (1, 0)) == [(1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 0, 1)]
    assert section_basis(2, (-1, 5)) == []
    assert section_basis(1, (0, 1)) == [(1, 0, 0, 0), (0, 1, 0, 0)]


def test_cohomology_examples():
    for n in range(1, 5):
        assert chi(n, (0, 0)) == 1
    assert h0(1, (1, 0)) == 3
    assert h1(2, (-2, 2)) > 0 and h0(2, (-2, 2)) == 0 and h2(2, (-2, 2)) == 0


def test_vanishing_pattern_examples():
    assert vanishing_pattern(2, (-2, 2)) == (False, True, False)
    assert vanishing_pattern(1, (0, -2)) == (False, True, False)
    assert vanishing_pattern(3, (-2, -5)) == (False, False, True)


@pytest.mark.parametrize("n,p,q", GRID)
def test_grid_against_regions(n, p, q):
    cls = (p, q)
    assert len(section_basis(n, cls)) == h0(n, cls)
    assert (h0(n, cls) > 0, h1_direct(n, cls) > 0, h2(n, cls) > 0) == vanishing_pattern(n, cls)
    # Riemann-Roch against the independent h^1
    assert h0(n, cls) - h1_direct(n, cls) + h2(n, cls) == chi(n, cls)


def test_canonical_class_and_serre_duality():
    for n in range(1, 5):
        K = canonical_class(n)
        assert K == PicClass(-2, n - 2)
        assert intersect(n, K, K) == 8       # K^2 = 8 on a Hirzebruch surface
        for p, q in product(range(-4, 5), repeat=2):
            assert h0(n, (p, q)) == h2(n, K - PicClass(p, q))


def test_intersection_examples_and_bilinearity():
    for n in range(1, 5):
        assert intersect(n, H, H) == n
        assert intersect(n, E(n), E(n)) == -n
        assert intersect(n, F, F) == 0
        assert intersect(n, E(n), H) == 0
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(1, 4)
        a, b, c = (PicClass(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(3))
        assert intersect(n, a, b) == intersect(n, b, a)
        assert intersect(n, a + b, c) == intersect(n, a, c) + intersect(n, b, c)


def test_chern_of_linebundle():
    for n in range(1, 5):
        assert chern_of_linebundle(n, (0, 0)).ch2 == 0
        assert chern_of_linebundle(n, (1, -1)).ch2 == Fraction(n - 2, 2)
        assert chern_of_linebundle(n, (1, 0)).ch2 == Fraction(n, 2)


def test_class_validation():
    with pytest.raises(ClassMismatch):
        BigradedPoly(1, (1, 0), {(1, 0, 0, 0): 1})
    with pytest.raises(ClassMismatch):
        z(1, 1) + z(1, 4)
    # zero adds to anything
    assert z(1, 4) + BigradedPoly.zero(1, (5, 5)) == z(1, 4)
    assert (z(2, 3) * z(2, 1)).cls == PicClass(1, -1)


def test_restrict_examples():
    assert restrict_to_linf(z(1, 4)).is_zero()
    r = restrict_to_linf(z(1, 1) * z(1, 3))
    assert r.degree == 1 and r.poly == UniPoly([1])          # z1 in the frame z1^1
    r = restrict_to_linf(z(2, 2))
    assert r.degree == 1 and r.poly == UniPoly([0, 1])


def test_restrict_is_a_ring_map():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 3)
        c1 = PicClass(rng.randint(0, 2), rng.randint(-1, 2))
        c2 = PicClass(rng.randint(0, 2), rng.randint(-1, 2))
        f, g, f2 = rand_section(rng, n, c1), rand_section(rng, n, c2), rand_section(rng, n, c1)
        if n * c1.p + c1.q < 0 or n * c2.p + c2.q < 0:
            continue
        assert restrict_to_linf(f * g).poly == restrict_to_linf(f).poly * restrict_to_linf(g).poly
        assert restrict_to_linf(f + f2).poly == restrict_to_linf(f).poly + restrict_to_linf(f2).poly


def test_evaluate_examples_and_multiplicativity():
    assert evaluate_on_chart(z(1, 4), ChartPoint((1, 4), (3, 9))) == 1
    assert evaluate_on_chart(z(1, 1) * z(1, 3), ChartPoint((2, 3), (5, 7))) == 5
    assert evaluate_on_chart(BigradedPoly.zero(1, (1, 0)), ChartPoint((1, 3), (1, 1))) == 0
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = rand_section(rng, n, (rng.randint(0, 2), rng.randint(0, 2)))
        g = rand_section(rng, n, (rng.randint(0, 2), rng.randint(0, 2)))
        pt = ChartPoint(rng.choice([(1, 3), (1, 4), (2, 3), (2, 4)]),
                        (Fraction(rng.randint(-5, 5), 3), rng.randint(-5, 5)))
        assert evaluate_on_chart(f * g, pt) == evaluate_on_chart(f, pt) * evaluate_on_chart(g, pt)


def test_to_chart_consistent_with_evaluation():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 3)
        f = rand_section(rng, n, (rng.randint(0, 2), rng.randint(0, 3)))
        chart = rng.choice([(1, 3), (1, 4), (2, 3), (2, 4)])
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        assert f.to_chart(chart)(a, b) == evaluate_on_chart(f, ChartPoint(chart, (a, b)))


def test_vector_round_trip():
    rng = random.Random(4)
    f = rand_section(rng, 2, (2, 1))
    assert BigradedPoly.from_vector(2, (2, 1), f.to_vector()) == f

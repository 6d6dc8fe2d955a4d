from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hirzmonad.exact import (
    AllZeroError,
    BiPoly,
    BothZeroError,
    NumberField,
    RatMatrix,
    UniPoly,
    ZeroLocus,
    factor_rational,
    kernel_basis,
    rank,
    resultant_y,
    rref,
    uni_gcd,
    zero_locus_class,
    zero_locus_points,
)

x, y = BiPoly.x(), BiPoly.y()


def M(rows, cols=None):
    return RatMatrix.from_rows(rows, cols)


def rand_matrix(rng, r, c, lo=-3, hi=3):
    return M([[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)], c)


# rank / kernel


def test_rank_examples():
    assert rank(RatMatrix.zeros(0, 0)) == 0
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(2)).shape == (2, 0)
    assert kernel_basis(RatMatrix.zeros(2, 2)) == RatMatrix.identity(2)
    K = kernel_basis(M([[1, 1]]))
    assert K == M([[-1], [1]])


def test_rank_nullity_and_transpose():
    rng = random.Random(1)
    for _ in range(200):
        m = rand_matrix(rng, rng.randint(0, 5), rng.randint(0, 5), -1, 1)
        K = kernel_basis(m)
        assert rank(m) == rank(m.transpose())
        assert m.cols == rank(m) + K.cols
        assert (m @ K).is_zero()


def test_rank_matches_sympy():
    import sympy

    rng = random.Random(2)
    for _ in range(50):
        m = rand_matrix(rng, 4, 5, -2, 2)
        ref = sympy.Matrix([[int(v) for v in m.row(i)] for i in range(m.rows)]).rank()
        assert rank(m) == ref


def test_rref_and_kernel_are_canonical():
    m = M([[2, 4, 6], [1, 2, 4]])
    R, piv = rref(m)
    assert piv == [0, 2]
    assert R == M([[1, 2, 0], [0, 0, 1]])
    # a row-equivalent matrix has the same kernel basis
    assert kernel_basis(m) == kernel_basis(M([[1, 2, 4], [3, 6, 10]]))


def test_det_and_inverse():
    m = M([[2, 1], [7, 4]])
    assert m.det() == 1
    assert m @ m.inverse() == RatMatrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        M([[1, 2], [2, 4]]).inverse()
    assert RatMatrix.zeros(0, 0).det() == 1


def test_det_matches_cofactor_expansion():
    def cofactor(rows):
        if not rows:
            return Fraction(1)
        return sum((-1) ** j * rows[0][j] * cofactor([r[:j] + r[j + 1:] for r in rows[1:]])
                   for j in range(len(rows)))

    rng = random.Random(3)
    for _ in range(30):
        k = rng.randint(1, 4)
        m = rand_matrix(rng, k, k)
        assert m.det() == cofactor([list(m.row(i)) for i in range(k)])


# univariate


def test_uni_gcd_examples():
    X = UniPoly.x()
    assert uni_gcd(X * X - 1, X - 1) == X - 1
    f = UniPoly([2, 0, 4])
    assert uni_gcd(f, UniPoly()) == f.monic()
    assert uni_gcd(UniPoly([1]), X * X + 3) == UniPoly([1])


def test_factor_rational():
    X = UniPoly.x()
    f = (X - 1) * (X - 1) * (X * X + 1)
    facs = dict((tuple(g.coeffs), e) for g, e in factor_rational(f))
    assert facs == {(Fraction(-1), Fraction(1)): 2, (Fraction(1), Fraction(0), Fraction(1)): 1}


# resultants


def test_resultant_examples():
    assert resultant_y(y - x, y + x) == UniPoly([0, -2])
    assert resultant_y(y, y) == UniPoly()
    assert resultant_y(y - 1, x) == UniPoly([0, 1])
    with pytest.raises(BothZeroError):
        resultant_y(BiPoly(), BiPoly())


def _rand_bipoly(rng, deg=2):
    return BiPoly({(i, j): rng.randint(-2, 2) for i in range(deg + 1) for j in range(deg + 1 - i)})


def test_resultant_vanishes_iff_common_y_factor():
    rng = random.Random(4)
    for _ in range(60):
        f, g = _rand_bipoly(rng), _rand_bipoly(rng)
        if rng.random() < 0.4:
            h = y + _rand_bipoly(rng, 1)
            f, g = f * h, g * h
        if f.is_zero() or g.is_zero():
            continue
        common = f.content_gcd(g)
        assert (resultant_y(f, g).is_zero()) == (common.y_degree > 0)


# number fields


def test_number_field_inverse():
    X = UniPoly.x()
    K = NumberField(X * X - 2)
    a = UniPoly([1, 1])                     # 1 + sqrt 2
    assert K.mul(a, K.inv(a)) == UniPoly([1])


# zero loci


def test_zero_locus_examples():
    assert zero_locus_class([x, y]) is ZeroLocus.FINITE
    assert zero_locus_class([x]) is ZeroLocus.INFINITE
    assert zero_locus_class([x, x + 1]) is ZeroLocus.EMPTY
    with pytest.raises(AllZeroError):
        zero_locus_class([BiPoly(), BiPoly()])


def test_zero_locus_irrational_points():
    # x^2 = 2, y = x: two conjugate points
    pts = zero_locus_points([x * x - 2, y - x])
    assert len(pts) == 1
    f, g = pts[0]
    assert f == UniPoly([-2, 0, 1]) and len(g) == 2
    # a conic meeting a line in no point over Q but two over C
    assert zero_locus_class([x * x + y * y + 1, y]) is ZeroLocus.FINITE
    # two parallel lines never meet
    assert zero_locus_class([y - x, y - x - 1]) is ZeroLocus.EMPTY


def test_zero_locus_all_resultants_vanish():
    # pairwise resultants against the reference vanish but there is no common factor
    pts = zero_locus_points([x * y, x * (y - 1), y * (y - 1) * (x - 1) + x])
    assert pts is not None


def test_zero_locus_invariances():
    rng = random.Random(5)
    for _ in range(40):
        polys = [_rand_bipoly(rng, rng.randint(1, 2)) for _ in range(rng.randint(2, 3))]
        polys = [p for p in polys if not p.is_zero()]
        if not polys:
            continue
        cls = zero_locus_class(polys)
        shuffled = polys[::-1]
        scaled = [p * BiPoly.constant(rng.choice([-3, 2, 5])) for p in polys]
        assert zero_locus_class(shuffled) is cls
        assert zero_locus_class(scaled) is cls


def test_zero_locus_agrees_with_sympy():
    import sympy

    X, Y = sympy.symbols("x y")
    rng = random.Random(6)
    for _ in range(25):
        polys = [_rand_bipoly(rng, 2) for _ in range(2)]
        if any(p.is_zero() for p in polys):
            continue
        exprs = [sum(int(c) * X ** i * Y ** j for (i, j), c in p.terms.items()) for p in polys]
        g = sympy.gcd(exprs[0], exprs[1])
        if sympy.Poly(g, X, Y).total_degree() > 0:
            assert zero_locus_class(polys) is ZeroLocus.INFINITE
            continue
        G = sympy.groebner(exprs, X, Y, order="lex")
        empty = list(G.exprs) == [1]
        assert (zero_locus_class(polys) is ZeroLocus.EMPTY) == empty

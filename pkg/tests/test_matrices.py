import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from localroots.arith import INF, InsufficientPrecision
from localroots.laurent import LaurentScalar
from localroots.matrices import (
    QQ,
    LocalMatrix,
    char_poly,
    companion,
    det,
    inverse,
    is_nonderogatory,
    laurent_field,
    matrix_slopes,
    newton_polygon,
    padic_field,
    poly_mul,
    power_map,
)
from localroots.padic import PadicScalar

from helpers import elementary_conjugator, jordan_block, random_rational_matrix

F = Fraction


def m(rows, fld=QQ):
    return LocalMatrix.of(fld, rows)


def test_char_poly_examples():
    assert char_poly(LocalMatrix.identity(QQ, 3)) == (-1, 3, -3, 1)
    assert char_poly(companion(QQ, [-1, -1, 1])) == (-1, -1, 1)
    assert char_poly(m([[0, -1], [1, 0]])) == (1, 0, 1)


def test_char_poly_matches_sympy():
    rng = random.Random(1)
    x = sympy.symbols("x")
    for _ in range(40):
        n = rng.randint(1, 5)
        M = random_rational_matrix(rng, n)
        ref = sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in row] for row in M.entries])
        coeffs = sympy.Poly(ref.charpoly(x).as_expr(), x).all_coeffs()[::-1]
        assert [F(int(c.p), int(c.q)) for c in coeffs] == list(char_poly(M))


def test_char_poly_over_laurent_field():
    fld = laurent_field(2)
    t = LaurentScalar.uniformizer(fld.profile)
    M = m([[1, t], [0, 1]], fld)
    f = char_poly(M)
    assert [fld.is_zero(c - e) for c, e in zip(f, (1, 0, 1))] == [True] * 3


def test_power_map_examples():
    U = m([[1, 1], [0, 1]])
    assert power_map(U, 0).equals(LocalMatrix.identity(QQ, 2))
    assert power_map(U, 1).equals(U)
    assert power_map(U, 3).equals(m([[1, 3], [0, 1]]))
    assert power_map(U, -2).equals(m([[1, -2], [0, 1]]))
    with pytest.raises(ValueError):
        power_map(m([[1, 1], [1, 1]]), -1)


def test_inverse_round_trip():
    rng = random.Random(2)
    for _ in range(30):
        M = random_rational_matrix(rng, rng.randint(1, 5))
        assert (M @ inverse(M)).equals(LocalMatrix.identity(QQ, M.n))


def test_padic_inverse_agrees_at_precision():
    fld = padic_field(5, 20)
    M = m([[5, 1], [2, 3]], fld)
    assert (M @ inverse(M)).agrees(LocalMatrix.identity(fld, 2))


def test_det_and_derogatory():
    assert det(m([[2, 1], [0, 3]])) == 6
    assert not is_nonderogatory(LocalMatrix.identity(QQ, 2))
    assert is_nonderogatory(jordan_block(QQ, 3))
    assert is_nonderogatory(companion(QQ, [1, 2, 3, 4]))


def test_matrix_shape_is_checked():
    with pytest.raises(ValueError):
        m([[1, 2]])


# ---------------------------------------------------------------- Newton polygons


def test_newton_examples():
    assert newton_polygon([-5, 1], 5).segments == ((1, 1),)
    assert newton_polygon([-5, 0, 1], 5).segments == ((F(1, 2), 2),)
    assert newton_polygon([2, -3, 1], 5).segments == ((0, 2),)
    with pytest.raises(ValueError):
        newton_polygon([0, 0], 5)


def test_newton_reports_roots_at_zero():
    poly = newton_polygon([0, 0, -5, 1], 5)
    assert poly.segments == ((1, 1), (INF, 2))
    assert poly.degree == 3


def _product_of_linears(roots):
    f = [F(1)]
    for r in roots:
        f = poly_mul(f, [-r, F(1)], F(0))
    return f


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 7]),
    st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 40)), min_size=1, max_size=6),
)
def test_newton_slopes_match_known_roots(p, data):
    roots = []
    for a, u in data:
        if u % p == 0:
            u += 1
        roots.append(F(p) ** a * u)
    poly = newton_polygon(_product_of_linears(roots), p)
    assert sorted(poly.slopes) == sorted(a for a, _ in data)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 7), st.integers(2, 4))
def test_newton_pure_power(p, a, d):
    # x^d - p^a has one segment of slope a/d
    f = [F(-(p**a))] + [F(0)] * (d - 1) + [F(1)]
    assert newton_polygon(f, p).segments == ((F(a, d), d),)


def test_newton_with_padic_coefficients():
    fld = padic_field(5, 10)
    f = [fld.to_padic(c) for c in (F(-1, 5), F(0), F(1))]
    assert newton_polygon(f).segments == ((F(-1, 2), 2),)


def test_uncertain_zero_near_the_hull_raises():
    prof = padic_field(5, 10).profile
    f = [PadicScalar.from_rational(25, prof), PadicScalar.zero(prof, 1), PadicScalar.from_rational(1, prof)]
    with pytest.raises(InsufficientPrecision):
        newton_polygon(f)
    far = [PadicScalar.from_rational(25, prof), PadicScalar.zero(prof, 5), PadicScalar.from_rational(1, prof)]
    assert newton_polygon(far).segments == ((1, 2),)


def test_slopes_scale_under_powers():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(1, 4)
        M = random_rational_matrix(rng, n)
        base = sorted(matrix_slopes(M, 3).slopes)
        for j in (2, 3, -1):
            got = sorted(matrix_slopes(power_map(M, j), 3).slopes)
            assert got == sorted(j * s for s in base)


def test_slopes_are_conjugation_invariant():
    rng = random.Random(4)
    for _ in range(20):
        M = random_rational_matrix(rng, 3)
        C, Cinv = elementary_conjugator(rng, 3)
        assert matrix_slopes(M, 2) == matrix_slopes(C @ M @ Cinv, 2)

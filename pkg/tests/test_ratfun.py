from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lbforge.errors import DegenerateSubstitutionError, PoleAtZeroError
from lbforge.ratfun import (
    bivar,
    bivar_swap_vars,
    expand_at_zero,
    poly2,
    poly2_divide_vu,
    ratfun1,
    residue,
    substitute_affine_scalar,
)
from lbforge.sparse import Sparse, poly_mul

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def test_expand_geometric():
    assert expand_at_zero(ratfun1([1], [1, -1]), 3) == [1, 1, 1, 1]


def test_expand_two_point_product():
    # 1/((1-u)(1-2u)): multiply the two geometric series
    f = ratfun1([1], [1, -3, 2])
    assert expand_at_zero(f, 2) == [1, 3, 7]


def test_expand_double_pole():
    # 1/(1-u)^2: derivative of the geometric series
    f = ratfun1([1], [1, -2, 1])
    assert expand_at_zero(f, 2) == [1, 2, 3]


def test_expand_pole_at_zero():
    with pytest.raises(PoleAtZeroError):
        expand_at_zero(ratfun1([1], {1: 1}), 2)


@given(
    st.lists(fracs, min_size=1, max_size=4),
    st.lists(fracs, min_size=1, max_size=4),
    st.integers(min_value=0, max_value=6),
)
def test_expand_division_check(num, den, order):
    # the defining property: expansion * den == num through the order
    den = [Fraction(1)] + den[1:]
    f = ratfun1(num, den)
    coeffs = expand_at_zero(f, order)
    product = poly_mul(Sparse(enumerate(coeffs)), f.den)
    for k in range(order + 1):
        assert product.get(k, 0) == f.num.get(k, 0)


def test_residue_simple():
    assert residue(Sparse({-1: Fraction(1)}), ratfun1([1])) == 1


def test_residue_two_point_taylor():
    # coefficient t_2 of 1/((1-c1 u)(1-c2 u)) is c1^2 + c1 c2 + c2^2
    for c1, c2 in [(2, 3), (Fraction(1, 2), -1)]:
        a = ratfun1([1], [1, -(c1 + c2), c1 * c2])
        expected = c1 * c1 + c1 * c2 + c2 * c2
        assert residue(Sparse({-3: Fraction(1)}), a) == expected


@given(st.integers(min_value=0, max_value=8))
def test_residue_nonnegative_powers_vanish(k):
    a = ratfun1([1], [1, -3, 2])
    assert residue(Sparse({k: Fraction(5)}), a) == 0


@given(
    st.dictionaries(st.integers(min_value=-5, max_value=5), fracs, max_size=4),
    st.dictionaries(st.integers(min_value=-5, max_value=5), fracs, max_size=4),
    fracs,
)
def test_residue_linear(f, g, c):
    a = ratfun1([1], [1, -1])
    left = residue(Sparse(f) + c * Sparse(g), a)
    assert left == residue(Sparse(f), a) + c * residue(Sparse(g), a)


# -- bivariate ----------------------------------------------------------------

def test_divide_vu_exact():
    # (v - u)(u + v) = v^2 - u^2
    p = poly2({(0, 2): 1, (2, 0): -1})
    quot, rem = poly2_divide_vu(p)
    assert rem.is_zero()
    assert quot == poly2({(1, 0): 1, (0, 1): 1})


def test_divide_vu_remainder():
    quot, rem = poly2_divide_vu(poly2({(1, 1): 1}))  # uv
    assert rem == poly2({(2, 0): 1})  # uv at v=u
    assert quot == poly2({(1, 0): 1})


def test_bivar_reduction():
    # (v^2 - u^2)/(v - u) reduces to (u + v)
    f = bivar(poly2({(0, 2): 1, (2, 0): -1}), 1)
    assert f.den_pow == 0
    assert f.num == poly2({(1, 0): 1, (0, 1): 1})


def test_bivar_add_common_denominator():
    one_over = bivar(poly2({(0, 0): 1}), 1)
    const = bivar(poly2({(0, 0): 1}), 0)
    total = one_over + const
    assert total.den_pow == 1
    assert total.num == poly2({(0, 0): 1, (0, 1): 1, (1, 0): -1})


def test_substitute_identity():
    f = bivar(poly2({(1, 1): 1}), 1)  # uv/(v-u)
    assert substitute_affine_scalar(f, 1, 0) == f


def test_substitute_scaling():
    f = bivar(poly2({(0, 0): 1}), 1)  # 1/(v-u)
    g = substitute_affine_scalar(f, 2, 1)
    assert g == bivar(poly2({(0, 0): Fraction(1, 2)}), 1)


def test_substitute_remark_kernel():
    # (1-uv)/(v-u) under u -> 2u-1 becomes (u+v-2uv)/(v-u)
    f = bivar(poly2({(0, 0): 1, (1, 1): -1}), 1)
    g = substitute_affine_scalar(f, 2, -1)
    assert g == bivar(poly2({(1, 0): 1, (0, 1): 1, (1, 1): -2}), 1)


def test_substitute_degenerate():
    with pytest.raises(DegenerateSubstitutionError):
        substitute_affine_scalar(bivar(poly2({(0, 0): 1}), 1), 0, 1)


bivar_rats = st.builds(
    bivar,
    st.dictionaries(
        st.tuples(st.integers(0, 2), st.integers(0, 2)), fracs, max_size=3
    ).map(poly2),
    st.integers(min_value=0, max_value=1),
)


@given(bivar_rats, bivar_rats, fracs.filter(lambda x: x != 0), fracs)
def test_substitute_is_ring_morphism(f, g, p, q):
    sub = lambda h: substitute_affine_scalar(h, p, q)
    assert sub(f + g) == sub(f) + sub(g)
    assert sub(f.mul_rat(g)) == sub(f).mul_rat(sub(g))


def test_swap_vars():
    f = bivar(poly2({(1, 0): 1}), 1)  # u/(v-u)
    g = bivar_swap_vars(f)  # v/(u-v) = -v/(v-u)
    assert g == bivar(poly2({(0, 1): -1}), 1)

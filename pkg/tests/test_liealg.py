"""The matrix realization is checked against an independent oracle: plain
Fraction matrices multiplied entrywise, with no shared code path."""

from fractions import Fraction

import pytest

from lbforge.errors import InvalidParameterError, InvalidRankError
from lbforge.liealg import (
    ad_action2,
    basis_element,
    bracket,
    bracket_basis,
    build_sl,
    casimir,
    cyb,
    dual_element,
    form,
    jordanian,
    r_c1c2,
    r_dj,
    swap2,
)
from lbforge.sparse import Sparse


# -- oracle: dense Fraction matrices ------------------------------------------

def dense_basis(n):
    """E/F/H basis as dense matrices, in the package's basis order."""
    roots = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]

    def unit(i, j):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i - 1][j - 1] = Fraction(1)
        return m

    mats = [unit(i, j) for (i, j) in roots]
    mats += [unit(j, i) for (i, j) in roots]
    for i in range(1, n):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i - 1][i - 1] = Fraction(1)
        m[i][i] = Fraction(-1)
        mats.append(m)
    return mats


def mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def to_dense(alg, x: Sparse, mats):
    n = len(mats[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for idx, c in x.items():
        for i in range(n):
            for j in range(n):
                out[i][j] += c * mats[idx][i][j]
    return out


@pytest.mark.parametrize("n", [2, 3, 4])
def test_structure_constants_match_matrix_commutators(n):
    alg = build_sl(n)
    mats = dense_basis(n)
    for a in range(alg.dim):
        for b in range(alg.dim):
            expected = mat_sub(mat_mul(mats[a], mats[b]), mat_mul(mats[b], mats[a]))
            got = to_dense(alg, bracket_basis(alg, a, b), mats)
            assert got == expected, (alg.basis[a], alg.basis[b])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gram_matches_trace_form(n):
    alg = build_sl(n)
    mats = dense_basis(n)
    for a in range(alg.dim):
        for b in range(alg.dim):
            assert alg.gram[a][b] == mat_trace(mat_mul(mats[a], mats[b]))


def test_sl2_frozen_table():
    alg = build_sl(2)
    assert alg.basis == ["E(1,2)", "F(1,2)", "H(1)"]
    e, f, h = 0, 1, 2
    assert bracket_basis(alg, e, f) == Sparse({h: 1})
    assert bracket_basis(alg, h, e) == Sparse({e: 2})
    assert bracket_basis(alg, h, f) == Sparse({f: -2})
    assert form(alg, basis_element(e), basis_element(f)) == 1
    assert form(alg, basis_element(h), basis_element(h)) == 2


def test_sl3_shape():
    alg = build_sl(3)
    assert len(alg.positive_roots) == 3 and alg.rank == 2
    for root in alg.positive_roots:
        e = basis_element(alg.e_index(root))
        f = basis_element(alg.f_index(root))
        assert form(alg, e, f) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jacobi_full_enumeration(n):
    alg = build_sl(n)
    for a in range(alg.dim):
        xa = basis_element(a)
        for b in range(a + 1, alg.dim):
            xb = basis_element(b)
            ab = bracket(alg, xa, xb)
            for c in range(b + 1, alg.dim):
                xc = basis_element(c)
                total = (
                    bracket(alg, ab, xc)
                    + bracket(alg, bracket(alg, xb, xc), xa)
                    + bracket(alg, bracket(alg, xc, xa), xb)
                )
                assert total.is_zero(), (a, b, c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_antisymmetry(n):
    alg = build_sl(n)
    for a in range(alg.dim):
        for b in range(alg.dim):
            assert bracket_basis(alg, a, b) == -bracket_basis(alg, b, a)
        assert bracket(alg, basis_element(a), basis_element(a)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_form_invariance(n):
    alg = build_sl(n)
    for a in range(alg.dim):
        xa = basis_element(a)
        for b in range(alg.dim):
            xb = basis_element(b)
            ab = bracket(alg, xa, xb)
            for c in range(alg.dim):
                xc = basis_element(c)
                lhs = form(alg, ab, xc)
                rhs = form(alg, xa, bracket(alg, xb, xc))
                assert lhs == rhs


@pytest.mark.parametrize("n", [2, 3])
def test_coroot_normalization(n):
    # h_alpha = [e, f] acts on e_alpha with eigenvalue 2
    alg = build_sl(n)
    for root in alg.positive_roots:
        e = basis_element(alg.e_index(root))
        f = basis_element(alg.f_index(root))
        h = bracket(alg, e, f)
        assert bracket(alg, h, e) == 2 * e


def test_invalid_rank():
    with pytest.raises(InvalidRankError):
        build_sl(1)


def test_casimir_sl2_frozen():
    # oracle: invert the 3x3 Gram matrix by hand
    alg = build_sl(2)
    assert casimir(alg) == Sparse(
        {(0, 1): 1, (1, 0): 1, (2, 2): Fraction(1, 2)}
    )


@pytest.mark.parametrize("n", [2, 3])
def test_casimir_symmetric_and_invariant(n):
    alg = build_sl(n)
    om = casimir(alg)
    assert swap2(om) == om
    for i in range(alg.dim):
        assert ad_action2(alg, basis_element(i), om).is_zero()


def test_dual_element_pairs_to_delta():
    alg = build_sl(3)
    for i in range(alg.dim):
        star = dual_element(alg, basis_element(i))
        for j in range(alg.dim):
            assert form(alg, star, basis_element(j)) == (1 if i == j else 0)


def test_r_dj_sl2_frozen():
    alg = build_sl(2)
    assert r_dj(alg) == Sparse({(0, 1): 1, (2, 2): Fraction(1, 4)})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_r_dj_contract(n):
    alg = build_sl(n)
    r = r_dj(alg)
    assert r + swap2(r) == casimir(alg)
    if n <= 3:
        assert cyb(alg, r).is_zero()
        assert cyb(alg, swap2(r)).is_zero()


def test_cyb_zero_tensor():
    alg = build_sl(2)
    assert cyb(alg, Sparse()).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cyb_jordanian(n):
    alg = build_sl(n)
    assert cyb(alg, jordanian(alg)).is_zero()


def test_cyb_nonsolution_witness():
    # CYB(e (x) f) = -e (x) h (x) f by direct structure-constant expansion
    alg = build_sl(2)
    assert cyb(alg, Sparse({(0, 1): 1})) == Sparse({(0, 2, 1): -1})


def test_r_c1c2_sl2_literal():
    # on sl_2 the closed form is c1 f(x)e + c2 e(x)f + (c1+c2)/4 h(x)h
    alg = build_sl(2)
    for c1, c2 in [(Fraction(1), Fraction(2)), (Fraction(-3), Fraction(1, 2))]:
        expected = Sparse(
            {(1, 0): c1, (0, 1): c2, (2, 2): (c1 + c2) / 4}
        )
        assert r_c1c2(alg, c1, c2) == expected


def test_r_c1c2_one_minus_one():
    alg = build_sl(2)
    assert r_c1c2(alg, 1, -1) == Sparse({(1, 0): 1, (0, 1): -1})


@pytest.mark.parametrize("n", [2, 3])
def test_r_c1c2_rewriting(n):
    # c1*Omega - r_{c1,c2} == (c1 - c2) r_DJ
    alg = build_sl(n)
    c1, c2 = Fraction(5, 3), Fraction(-2)
    lhs = c1 * casimir(alg) - r_c1c2(alg, c1, c2)
    assert lhs == (c1 - c2) * r_dj(alg)


@pytest.mark.parametrize("n", [2, 3])
def test_r_c1c2_symmetric_part(n):
    alg = build_sl(n)
    c1, c2 = Fraction(3), Fraction(7, 2)
    r = r_c1c2(alg, c1, c2)
    assert r + swap2(r) == (c1 + c2) * casimir(alg)


def test_r_c1c2_invalid():
    alg = build_sl(2)
    with pytest.raises(InvalidParameterError):
        r_c1c2(alg, 1, 1)
    with pytest.raises(InvalidParameterError):
        r_c1c2(alg, 0, 1)


def test_jordanian_unknown_root():
    alg = build_sl(2)
    with pytest.raises(InvalidParameterError):
        jordanian(alg, (2, 5))

import itertools

import pytest
from conftest import TORUS, torus_result
from oracle import torus_alexander_oracle

from divshadow import intmath
from divshadow.fibration import (DegreeMismatch, alexander_compare, match_signed_permutation,
                                 product, torus_alexander, twist_matrix)


@pytest.mark.parametrize("p,q", TORUS)
def test_fiber_surface_is_milnor_fiber(p, q):
    rs = torus_result(p, q).lf.surface
    assert rs.n_boundary == 1
    assert rs.genus == (p - 1) * (q - 1) // 2
    assert rs.b1 == (p - 1) * (q - 1)


@pytest.mark.parametrize("p,q", TORUS)
def test_form_is_antisymmetric_and_unimodular_on_closed_part(p, q):
    j = torus_result(p, q).monodromy.form
    n = len(j)
    assert all(j[a][b] == -j[b][a] for a in range(n) for b in range(n))
    # one boundary circle: the form is non-degenerate
    assert abs(intmath.det(j)) == 1


@pytest.mark.parametrize("p,q", TORUS)
def test_same_class_cycles_are_disjoint_and_twists_commute(p, q):
    res = torus_result(p, q)
    classes, m = res.lf.classes, res.monodromy
    for a, b in itertools.combinations(range(len(classes)), 2):
        if classes[a] == classes[b]:
            assert m.form[a][b] == 0
            fa, fb = m.factors[a], m.factors[b]
            assert intmath.matmul(fa, fb) == intmath.matmul(fb, fa)


@pytest.mark.parametrize("p,q", TORUS)
def test_torus_formula_agrees_with_oracle(p, q):
    assert torus_alexander(p, q) == torus_alexander_oracle(p, q)


def test_twist_is_a_transvection():
    form = ((0, 1), (-1, 0))
    t = twist_matrix((1, 0), form, sign=1)
    # x -> x + <x, c> c with c = e1: e2 -> e2 + <e2, e1> e1 = e2 - e1
    assert t == ((1, -1), (0, 1))
    assert intmath.det(t) == 1


def test_product_order():
    a, b = ((1, 1), (0, 1)), ((1, 0), (1, 1))
    assert product([a, b]) == intmath.matmul(b, a)


def test_alexander_compare_units_and_degree():
    assert alexander_compare((1, -1, 1), (-1, 1, -1))
    assert not alexander_compare((1, -1, 1), (1, 1, 1))
    with pytest.raises(DegreeMismatch):
        alexander_compare((1, -1, 1), (1, -1, 1, -1, 1))


def test_signed_permutation_matcher():
    a = ((1, 2), (3, 4))
    # swap the basis and negate the first vector
    b = ((4, -3), (-2, 1))
    perm, signs = match_signed_permutation([a], [b])
    assert [[a[perm[i]][perm[j]] * signs[i] * signs[j] for j in range(2)]
            for i in range(2)] == [list(r) for r in b]
    assert match_signed_permutation([a], [((0, 0), (0, 0))]) is None

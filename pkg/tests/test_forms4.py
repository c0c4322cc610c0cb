"""Two-form algebra: star, self-dual split, circ product, operator bound."""

import numpy as np
import pytest

from ymgap import forms4


def dx(i, j):
    return forms4.basis_form(i - 1, j - 1)


def brute_circ(a, b):
    """Independent loop implementation of the circ contraction."""
    am = forms4.to_matrix(a)
    bm = forms4.to_matrix(b)
    out = np.zeros((4, 4))
    for i in range(4):
        for j in range(4):
            out[i, j] = sum(am[i, k] * bm[j, k] - am[j, k] * bm[i, k] for k in range(4))
    return forms4.from_matrix(out)


def test_inner_product_convention():
    assert forms4.inner_2form(dx(1, 2), dx(1, 2)) == 2.0
    assert forms4.inner_2form(dx(1, 2), dx(3, 4)) == 0.0
    assert forms4.inner_2form(dx(1, 2) + dx(3, 4), dx(1, 2) + dx(3, 4)) == 4.0


def test_star_table():
    assert np.array_equal(forms4.hodge_star(dx(1, 2)), dx(3, 4))
    assert np.array_equal(forms4.hodge_star(dx(1, 3)), -dx(2, 4))
    assert np.array_equal(forms4.hodge_star(dx(1, 4)), dx(2, 3))
    sd = dx(1, 2) + dx(3, 4)
    assert np.array_equal(forms4.hodge_star(sd), sd)


def test_star_involution_and_isometry():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = rng.standard_normal(6)
        b = rng.standard_normal(6)
        assert np.max(np.abs(forms4.hodge_star(forms4.hodge_star(a)) - a)) < 1e-15
        gap = forms4.inner_2form(forms4.hodge_star(a), forms4.hodge_star(b)) - forms4.inner_2form(a, b)
        assert abs(gap) < 1e-12


def test_sd_project():
    plus, minus = forms4.sd_project(dx(1, 2))
    assert np.allclose(plus, 0.5 * (dx(1, 2) + dx(3, 4)))
    assert np.allclose(minus, 0.5 * (dx(1, 2) - dx(3, 4)))
    sd = dx(1, 2) + dx(3, 4)
    plus, minus = forms4.sd_project(sd)
    assert np.allclose(plus, sd) and np.max(np.abs(minus)) == 0.0


def test_sd_project_idempotent_orthogonal_pythagoras():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = rng.standard_normal(6)
        plus, minus = forms4.sd_project(a)
        replus, reminus = forms4.sd_project(plus)
        assert np.max(np.abs(replus - plus)) < 1e-15
        assert np.max(np.abs(reminus)) < 1e-15
        assert abs(forms4.inner_2form(plus, minus)) < 1e-13
        total = forms4.inner_2form(plus, plus) + forms4.inner_2form(minus, minus)
        assert abs(total - forms4.inner_2form(a, a)) < 1e-12


def test_sd_basis_orthonormal_and_self_dual():
    e = forms4.sd_basis()
    for a in range(3):
        assert np.max(np.abs(forms4.hodge_star(e[a]) - e[a])) == 0.0
        for b in range(3):
            assert abs(forms4.inner_2form(e[a], e[b]) - (a == b)) < 1e-15


def test_circ_standard_basis():
    e = forms4.sd_basis()
    assert np.allclose(forms4.circ(e[0], e[1]), e[2], atol=1e-15)
    assert np.allclose(forms4.circ(e[1], e[2]), e[0], atol=1e-15)
    assert np.allclose(forms4.circ(e[0], e[2]), -e[1], atol=1e-15)
    assert np.max(np.abs(forms4.circ(e[0], e[0]))) == 0.0


def test_circ_matches_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(30):
        a = rng.standard_normal(6)
        b = rng.standard_normal(6)
        assert np.max(np.abs(forms4.circ(a, b) - brute_circ(a, b))) < 1e-12


def test_circ_basis_orthonormal_for_random_bases():
    rng = np.random.default_rng(19)
    for _ in range(100):
        basis = forms4.random_sd_basis(rng)
        prods = np.stack([forms4.circ(basis[0], basis[1]),
                          forms4.circ(basis[0], basis[2]),
                          forms4.circ(basis[1], basis[2])])
        gram = np.array([[forms4.inner_2form(p, q) for q in prods] for p in prods])
        assert np.max(np.abs(gram - np.eye(3))) < 1e-10


def test_weyl_validation():
    with pytest.raises(ValueError):
        forms4.require_weyl(np.eye(3))          # not trace-free
    with pytest.raises(ValueError):
        forms4.require_weyl(np.triu(np.ones((3, 3))))
    forms4.require_weyl(np.diag([1.0, 1.0, -2.0]))


def test_weyl_act_self_adjoint_and_zero():
    rng = np.random.default_rng(23)
    w = forms4.random_weyl(rng)
    u = rng.standard_normal(3)
    v = rng.standard_normal(3)
    assert abs(u @ forms4.weyl_act(w, v) - v @ forms4.weyl_act(w, u)) < 1e-12
    assert forms4.weyl_quad(np.zeros((3, 3)), v) == 0.0


def test_weyl_extremal_equality():
    w, v = forms4.extremal_weyl(scale=0.7)
    lhs = abs(forms4.weyl_quad(w, v))
    rhs = forms4.WEYL_BOUND * forms4.weyl_norm(w) * float(v @ v)
    assert abs(lhs - rhs) < 1e-12
    assert abs(forms4.weyl_quad(w, v) - (-2 * 0.7)) < 1e-12


def test_weyl_bound_random_and_sup():
    rng = np.random.default_rng(29)
    sup_ratio = 0.0
    for _ in range(10000):
        w = forms4.random_weyl(rng)
        v = rng.standard_normal(3)
        bound = forms4.WEYL_BOUND * forms4.weyl_norm(w) * float(v @ v)
        val = abs(forms4.weyl_quad(w, v))
        assert val <= bound + 1e-10
        sup_ratio = max(sup_ratio, val / bound)
    # extremal configuration pushes the sampled supremum onto the constant
    w, v = forms4.extremal_weyl()
    sup_ratio = max(sup_ratio, abs(forms4.weyl_quad(w, v)) /
                    (forms4.WEYL_BOUND * forms4.weyl_norm(w) * float(v @ v)))
    assert sup_ratio > 1.0 - 1e-3

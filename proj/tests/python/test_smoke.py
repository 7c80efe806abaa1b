import numpy as np
import pytest

import flagconn


def test_roots_and_basis():
    assert flagconn.positive_roots("A", 2) == [[0, 1], [1, 0], [1, 1]]
    assert len(flagconn.positive_roots("B", 3)) == 9
    labels = flagconn.basis_labels("A", 2)
    assert labels[0] == ([0, 1], "U") and labels[1] == ([0, 1], "V")
    assert abs(flagconn.structure_constant("B", 2, [0, 1], [1, 1])) == 2


def test_tensor_shape_and_normal_metric():
    t = flagconn.connection_tensor("A", 3)
    assert t.shape == (12, 12, 12)
    np.testing.assert_array_equal(t, 0.5 * flagconn.bracket_table("A", 3))


def test_closed_form_matches_oracle():
    rng = np.random.default_rng(0)
    n = 2 * len(flagconn.positive_roots("C", 3))
    x, y = rng.standard_normal(n), rng.standard_normal(n)
    a = flagconn.u("C", 3, "random", x, y, seed=4)
    b = flagconn.u_oracle("C", 3, "random", x, y, seed=4)
    np.testing.assert_allclose(a, b, atol=1e-12)
    np.testing.assert_allclose(a, flagconn.u("C", 3, "random", y, x, seed=4), atol=1e-13)


def test_explicit_coefficients():
    coeffs = {(0, 1): 1.0, (1, 0): 2.0, (1, 1): 3.0}
    e = np.eye(6)
    u = flagconn.u("A", 2, coeffs, e[2], e[0])
    np.testing.assert_allclose(u, [0, 0, 0, 0, 1 / 6, 0], atol=1e-15)
    np.testing.assert_allclose(flagconn.u("A", 2, [1.0, 2.0, 3.0], e[2], e[0]), u)
    assert flagconn.metric_diagonal("A", 2, coeffs).tolist() == [12, 12, 24, 24, 36, 36]


def test_checks_and_su3():
    reports = flagconn.run_checks("A", 3, "random", seed=2)
    assert {r["check_name"] for r in reports} == {"oracle", "torsion", "metric", "lemma2", "su-crosscheck"}
    assert all(r["passed"] for r in reports)
    assert flagconn.su3_coefficients(1, 2, 3) == pytest.approx([0.5, 0.5, 1 / 6])
    assert np.all(flagconn.u_su3(1, 1, 1, np.ones(6), np.arange(6.0)) == 0)


def test_errors():
    with pytest.raises(ValueError, match=r"\[1,1\]"):
        flagconn.connection_tensor("A", 2, {(0, 1): 1.0, (1, 0): 2.0})
    with pytest.raises(ValueError):
        flagconn.positive_roots("B", 1)
    with pytest.raises(ValueError):
        flagconn.u("A", 2, None, np.zeros(5), np.zeros(6))
    with pytest.raises(ValueError):
        flagconn.run_checks("B", 2, checks=["su-crosscheck"])

import numpy as np
import pytest

from contactcalc.charts import darboux_chart, with_constraints, \
    unit_norm_constraint
from contactcalc.errors import DegenerateSystemError, IllConditionedError
from contactcalc.fields import (flow, hamiltonian_vector_field,
                                liouville_vector_field, moser_field,
                                reeb_vector_field)
from contactcalc.forms import custom_form, dz_plus, lambda_can, lambda_std, \
    restrict_form, weinstein, weinstein_hamiltonian


def test_liouville_lambda_std_is_half_radial(rng):
    n = 2
    lam = lambda_std(n)
    for _ in range(10):
        p = lam.chart.point(rng.uniform(-2, 2, 2 * n))
        assert np.allclose(liouville_vector_field(lam, p), 0.5 * p.coords,
                           atol=1e-8)


def test_liouville_lambda_can_is_p_dp(rng):
    n = 2
    can = lambda_can(n)
    for _ in range(10):
        c = rng.uniform(-2, 2, 2 * n)
        expected = np.concatenate([np.zeros(n), c[n:]])
        assert np.allclose(liouville_vector_field(can, can.chart.point(c)),
                           expected, atol=1e-8)


def test_liouville_weinstein_is_shifted_radial(rng):
    n, k = 2, 1
    w = weinstein(n, k)
    for _ in range(10):
        c = rng.uniform(-2, 2, 2 * n)
        expected = 0.5 * c.copy()
        expected[:k] += c[:k]        # x_j: 1/2 + 1 = 3/2
        expected[n:n + k] -= c[n:n + k]  # y_j: 1/2 - 1 = -1/2
        assert np.allclose(liouville_vector_field(w, w.chart.point(c)),
                           expected, atol=1e-8)


def test_hamiltonian_field_of_f_k(rng):
    n, k = 2, 1
    lam = lambda_std(n)
    f = weinstein_hamiltonian(n, k)
    for _ in range(10):
        c = rng.uniform(-2, 2, 2 * n)
        expected = np.zeros(2 * n)
        expected[:k] = c[:k]
        expected[n:n + k] = -c[n:n + k]
        got = hamiltonian_vector_field(f, lam, lam.chart.point(c))
        assert np.allclose(got, expected, atol=1e-8)


def test_reeb_of_collar_form(rng):
    alpha = dz_plus(lambda_std(2))
    ez = np.zeros(5)
    ez[0] = 1.0
    for _ in range(5):
        p = alpha.chart.point(rng.uniform(-1, 1, 5))
        assert np.allclose(reeb_vector_field(alpha, p), ez, atol=1e-8)


def test_reeb_on_sphere(rng):
    n = 2
    sph = with_constraints(darboux_chart(n), [unit_norm_constraint(range(2 * n))],
                           "S3_xy")
    lam = restrict_form(lambda_std(n), sph)
    x = np.array([1.0, 0.0, 0.0, 0.0])
    p = sph.point(x)
    r = reeb_vector_field(lam, p)
    # 2(x d_y - y d_x) pattern at (1,0,0,0) -> 2 d_{y1}
    assert np.allclose(r, [0.0, 0.0, 2.0, 0.0], atol=1e-7)
    assert float(lam.at(p) @ r) == pytest.approx(1.0, abs=1e-8)


def test_reeb_refuses_degenerate():
    ch = darboux_chart(1)
    zero = custom_form("zero", ch, lambda c: np.zeros(2))
    with pytest.raises(DegenerateSystemError):
        reeb_vector_field(zero, ch.point([0.3, 0.4]))


def test_liouville_refuses_ill_conditioned():
    ch = darboux_chart(1)
    # closed form: d(const) = 0, singular system
    const = custom_form("const", ch, lambda c: np.array([1.0, 1.0]))
    with pytest.raises(IllConditionedError) as exc:
        liouville_vector_field(const, ch.point([0.1, 0.2]))
    assert exc.value.condition_number > 1e10 or not np.isfinite(
        exc.value.condition_number)


def test_moser_field_zero_for_equal_forms():
    lam = lambda_std(1)
    v = moser_field(lam, lam, lam.chart.point([0.7, -0.2]))
    assert np.array_equal(v, np.zeros(2))


def test_moser_field_solves_difference(rng):
    n = 1
    lam = lambda_std(n)
    # x dy has the same exterior derivative as lambda_std
    other = custom_form("xdy", lam.chart,
                        lambda c: np.array([0.0, c[0]]))
    p = lam.chart.point([0.4, 0.8])
    v = moser_field(lam, other, p)
    # d(lam)(V,.) = lam - other = (-y/2, -x/2); with omega = dx^dy,
    # omega(V,.) = (V_x dy - V_y dx) -> V = (-x/2, y/2)
    assert np.allclose(v, [-0.2, 0.4], atol=1e-6)


def test_moser_field_rejects_mismatched_derivatives():
    lam = lambda_std(1)
    other = custom_form("2xdy", lam.chart, lambda c: np.array([0.0, 2.0 * c[0]]))
    with pytest.raises(DegenerateSystemError):
        moser_field(lam, other, lam.chart.point([0.4, 0.8]))


def test_flow_rotation():
    v = lambda x: np.array([-x[1], x[0]])
    out = flow(v, np.array([1.0, 0.0]), np.pi / 2, steps=64)
    assert np.allclose(out, [0.0, 1.0], atol=1e-6)

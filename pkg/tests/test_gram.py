import math

import numpy as np
import pytest

from fucik.certify import certify_system, optimal_scaling, parse_system
from fucik.fourier import quadrature_coefficient
from fucik.gram import extremal_eigenvalues, gram_matrix, gram_witness
from fucik.spectrum import point_from_gamma


def constant_shape_even_family(gamma, top):
    # every even index on the curve with the same dilation parameter
    return parse_system(
        {"entries": [{"n": n, "alpha": gamma * n * n / 4.0} for n in range(2, top + 1, 2)]}
    )


def test_unperturbed_system_gives_the_identity():
    spec = parse_system({"entries": []})
    m = gram_matrix(spec, 8)
    assert np.max(np.abs(m - np.eye(8))) <= 1e-11


def test_single_perturbed_row_matches_quadrature_coefficients():
    spec = parse_system({"entries": [{"n": 2, "alpha": 5.0}]})
    p = spec.entries[0]
    m = gram_matrix(spec, 5)
    rho = optimal_scaling(p)
    for k in (1, 3, 4, 5):
        expected = rho * quadrature_coefficient(p, k)
        assert m[1, k - 1] == pytest.approx(expected, abs=1e-11)
        assert m[k - 1, 1] == m[1, k - 1]
    assert m[0, 2] == pytest.approx(0.0, abs=1e-11)  # untouched rows stay orthonormal


def test_unscaled_diagonal_entry_is_the_squared_norm():
    spec = parse_system({"entries": [{"n": 2, "alpha": 5.0}]})
    m = gram_matrix(spec, 4, rescale=False)
    assert m[1, 1] == pytest.approx(0.8454915028125262, abs=1e-11)
    scaled = gram_matrix(spec, 4)
    assert scaled[1, 1] == pytest.approx(
        optimal_scaling(spec.entries[0]) ** 2 * m[1, 1], abs=1e-11
    )


def test_gram_matrix_is_symmetric_and_positive():
    spec = parse_system(
        {"entries": [{"n": 2, "alpha": 6.0}, {"n": 3, "alpha": 10.0}, {"n": 4, "alpha": 18.0}]}
    )
    m = gram_matrix(spec, 12)
    assert np.max(np.abs(m - m.T)) <= 1e-12
    lo, hi = extremal_eigenvalues(m)
    assert lo > -1e-9
    assert hi >= 1.0  # contains the untouched unit directions


def test_extremal_eigenvalues_validation():
    assert extremal_eigenvalues(np.eye(3)) == (1.0, 1.0)
    lo, hi = extremal_eigenvalues(np.diag([0.25, 4.0]))
    assert (lo, hi) == (0.25, 4.0)
    with pytest.raises(ValueError):
        extremal_eigenvalues(np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        extremal_eigenvalues(np.array([[np.nan, 0.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        extremal_eigenvalues(np.ones((2, 3)))


def test_witness_for_a_certified_sparse_system():
    spec = parse_system({"entries": [{"n": 2, "alpha": 6.4}]})
    cert = certify_system(spec)
    for size in (16, 32):
        w = gram_witness(spec, size)
        assert w.theta == pytest.approx(math.sqrt(cert.total), abs=1e-13)
        assert w.window_low == pytest.approx((1.0 - w.theta) ** 2 - 0.02, abs=1e-13)
        assert w.window_high == pytest.approx((1.0 + w.theta) ** 2 + 0.02, abs=1e-13)
        assert w.within_window
        assert w.size == size
    as_dict = gram_witness(spec, 16).as_dict()
    assert set(as_dict) >= {"size", "min_eig", "max_eig", "within_window"}


def test_constant_shape_family_escapes_the_window():
    # same-shape even systems concentrate: every profile keeps the same
    # nonzero mean, so truncated top eigenvalues grow without a uniform
    # ceiling and eventually leave the certificate window even though the
    # certificate itself passes
    spec = constant_shape_even_family(5.0, 64)
    tops = {}
    for size in (16, 32, 64):
        m = gram_matrix(spec, size)
        lo, hi = extremal_eigenvalues(m)
        w = gram_witness(spec, size, matrix=m)
        tops[size] = hi
        assert lo > w.window_low  # the floor side never fails here
    assert tops[16] < tops[32] < tops[64]
    assert tops[64] == pytest.approx(2.6178491368841, abs=1e-9)
    w64 = gram_witness(spec, 64)
    assert not w64.within_window
    assert tops[64] > w64.window_high


def test_witness_matrix_argument_must_match_size():
    spec = parse_system({"entries": [{"n": 2, "alpha": 6.4}]})
    m = gram_matrix(spec, 8)
    with pytest.raises(ValueError):
        gram_witness(spec, 16, matrix=m)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import trapezoid

from voigtft.errors import IoFailure, NonFiniteSample
from voigtft.reference import evaluate
from voigtft.sampling import (
    FitParams,
    SampledFunction,
    decompose,
    from_table,
    kernel,
    read_table,
    reconstruct,
)

P = FitParams(0.02, 0.025, 25)


def rect(t):
    return evaluate("rect", t)


@pytest.mark.parametrize("args", [(0, 0.1, 3), (0.1, -1, 3), (0.1, 0.1, 0), (0.1, 0.1, 2.5),
                                  (math.nan, 0.1, 3)])
def test_fit_params_validated(args):
    with pytest.raises(ValueError):
        FitParams(*args)


def test_rect_has_no_odd_part():
    sf = decompose(rect, P)
    assert np.all(sf.odd_values == 0)
    assert sf.even_values.shape == (26,)
    assert sf.odd_values.shape == (25,)


def test_sawtooth_has_no_even_part():
    sf = decompose(lambda t: evaluate("sawtooth", t), P)
    assert np.all(sf.even_values == 0)
    # t = +-1/2 hits the defined half values +-1/4
    assert sf.odd_values[-1] == 0.25


def test_g_split():
    p = FitParams(0.004, 0.0045, 30)
    sf = decompose(lambda t: evaluate("gFull", t), p)
    n = np.arange(31)
    np.testing.assert_allclose(sf.even_values, np.exp(-(6 * np.pi * n * p.h) ** 2), rtol=1e-14)
    np.testing.assert_allclose(sf.odd_values, -np.sin(32 * n[1:] * p.h)
                               * np.exp(-(7 * np.pi * n[1:] * p.h) ** 2), rtol=1e-13, atol=1e-17)


def test_scalar_only_callable():
    sf = decompose(lambda t: math.exp(-t * t) + t, P)
    assert sf.odd_values[0] == pytest.approx(P.h)


def test_non_finite_sample_names_grid_point():
    def f(t):
        return np.where(np.isclose(t, -3 * P.h), np.nan, 1.0)

    with pytest.raises(NonFiniteSample) as err:
        decompose(f, P)
    assert err.value.n == -3


def test_values_roundtrip():
    vals = np.random.default_rng(1).normal(size=51)
    sf = SampledFunction.from_samples(vals, P)
    np.testing.assert_allclose(sf.values(), vals, rtol=0, atol=1e-15)


def test_kernel_examples():
    p = FitParams(0.02, 0.025, 5)
    assert kernel(0.0, p) == pytest.approx(0.02 / (0.025 * math.sqrt(math.pi)), rel=1e-15)
    assert kernel(0.0, p) == pytest.approx(0.451352, abs=1e-6)
    assert kernel(p.c, p) / kernel(0.0, p) == pytest.approx(math.exp(-1), rel=1e-15)
    t = np.linspace(-20 * p.c, 20 * p.c, 40001)
    assert trapezoid(kernel(t, p), t) == pytest.approx(p.h, abs=1e-9)


def test_reconstruct_rect_centre():
    sf = decompose(lambda t: evaluate("rectApprox", t), P)
    direct = sum(kernel(0.0 - n * P.h, P) * evaluate("rectApprox", n * P.h) for n in range(-25, 26))
    assert reconstruct(sf, 0.0) == pytest.approx(direct, rel=1e-13)
    assert abs(reconstruct(sf, 0.0) - 1) <= 0.05


def test_reconstruct_zero_and_far_field():
    assert np.all(reconstruct(SampledFunction.zeros(P), np.linspace(-1, 1, 11)) == 0)
    sf = decompose(rect, P)
    far = 25 * P.h + 10 * P.c + 0.01
    assert abs(reconstruct(sf, far)) <= 1e-12
    assert abs(reconstruct(sf, -far)) <= 1e-12


def _overshoot(params):
    sf = decompose(lambda t: evaluate("rectApprox", t), params)
    t = np.linspace(-0.4, 0.4, 4001)
    return np.max(reconstruct(sf, t)) - 1


def test_gibbs_shrinks_as_h_approaches_c():
    assert _overshoot(FitParams(0.02, 0.025, 25)) < _overshoot(FitParams(0.065, 0.035, 25))


samples = st.lists(st.floats(-1e3, 1e3), min_size=11, max_size=11)


@settings(max_examples=100, deadline=None)
@given(samples, samples, st.floats(-10, 10), st.floats(-10, 10))
def test_decompose_linear(a, b, alpha, beta):
    p = FitParams(0.1, 0.1, 5)
    fa = SampledFunction.from_samples(a, p)
    fb = SampledFunction.from_samples(b, p)
    fab = SampledFunction.from_samples(alpha * np.array(a) + beta * np.array(b), p)
    combo = alpha * fa + beta * fb
    scale = 1e-12 * (1 + abs(alpha) + abs(beta)) * 1e3
    np.testing.assert_allclose(fab.even_values, combo.even_values, rtol=0, atol=scale)
    np.testing.assert_allclose(fab.odd_values, combo.odd_values, rtol=0, atol=scale)


@settings(max_examples=100, deadline=None)
@given(samples)
def test_even_plus_odd_recovers_samples(vals):
    p = FitParams(0.1, 0.1, 5)
    sf = SampledFunction.from_samples(vals, p)
    pos = np.array(vals[5:])
    np.testing.assert_allclose(sf.even_values[1:] + sf.odd_values, pos[1:], rtol=0,
                               atol=1e-12 * max(1.0, np.abs(vals).max()))


def test_table_resampling(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("# t, f\n-1, 0\n0 2  # peak\n\n1,0\n")
    t, f = read_table(path)
    np.testing.assert_array_equal(t, [-1, 0, 1])
    p = FitParams(0.5, 0.5, 3)
    sf = from_table(t, f, p)
    np.testing.assert_allclose(sf.values(), [0, 0, 1, 2, 1, 0, 0])


@pytest.mark.parametrize("text", ["", "# only comments\n", "1 2 3\n", "a b\n"])
def test_table_parse_errors(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(ValueError):
        read_table(path)


def test_table_requires_increasing_t():
    with pytest.raises(ValueError):
        from_table([0, 0, 1], [1, 2, 3], P)


def test_table_missing_file(tmp_path):
    with pytest.raises(IoFailure):
        read_table(tmp_path / "absent.txt")

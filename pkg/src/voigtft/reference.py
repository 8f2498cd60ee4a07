"""Analytic test functions and their closed-form Fourier transforms.

* ``rect``, ``sawtooth``: solitary rectangular and sawtooth pulses, with the
  half values at ``|t| = 1/2``.
* ``rectApprox``, ``sawtoothApprox``: the smooth stand-ins
  ``1/((2t)^70 + 1)`` and ``t/((2t)^70 + 1)``.
* ``gFull = gEven + gOdd`` with ``gEven = exp(-(6 pi t)^2)`` and
  ``gOdd = -sin(32 t) exp(-(7 pi t)^2)``.
* ``uFn``: the real function whose inverse transform is
  ``exp(-(6 pi nu)^2) - i exp(-(7 pi nu)^2) sin(32 nu)``.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from . import transform
from .errors import UnsupportedId
from .sampling import FitParams, decompose

__all__ = [
    "TestFunctionId",
    "evaluate",
    "exact_ft",
    "g_even_ft",
    "g_odd_ft",
    "sampling_source",
    "approximate_ft",
    "abs_diff_curve",
    "parse_builtin",
]

SQRT_PI = np.sqrt(np.pi)
RECT_EXPONENT = 70


class TestFunctionId(str, Enum):
    __test__ = False  # keep pytest from collecting this

    rect = "rect"
    rectApprox = "rectApprox"
    sawtooth = "sawtooth"
    sawtoothApprox = "sawtoothApprox"
    gFull = "gFull"
    gEven = "gEven"
    gOdd = "gOdd"
    uFn = "uFn"

    @property
    def parity(self):
        if self in (TestFunctionId.rect, TestFunctionId.rectApprox, TestFunctionId.gEven):
            return "even"
        if self in (TestFunctionId.sawtooth, TestFunctionId.sawtoothApprox, TestFunctionId.gOdd):
            return "odd"
        return None


def _rect(t):
    a = np.abs(t)
    return np.where(a < 0.5, 1.0, np.where(a == 0.5, 0.5, 0.0))


def _rect_approx(t):
    with np.errstate(divide="ignore", over="ignore"):
        # exp(70 ln|2t|) avoids the power overflow; clip keeps exp finite
        log_pow = RECT_EXPONENT * np.log(np.abs(2 * t))
        return 1.0 / (np.exp(np.minimum(log_pow, 700.0)) + 1.0)


def g_even_ft(nu):
    """``exp(-(nu/6)^2) / (6 sqrt(pi))``."""
    return np.exp(-((np.asarray(nu, dtype=float) / 6) ** 2)) / (6 * SQRT_PI)


def g_odd_ft(nu):
    """Imaginary coefficient of the transform of ``gOdd`` (real array)."""
    nu = np.asarray(nu, dtype=float)
    return (np.exp(-(((16 + np.pi * nu) / (7 * np.pi)) ** 2))
            * np.expm1(64 * nu / (49 * np.pi)) / (14 * SQRT_PI))


def _u(t):
    return g_even_ft(t) - g_odd_ft(t)


_EVAL = {
    TestFunctionId.rect: _rect,
    TestFunctionId.rectApprox: _rect_approx,
    TestFunctionId.sawtooth: lambda t: t * _rect(t),
    TestFunctionId.sawtoothApprox: lambda t: t * _rect_approx(t),
    TestFunctionId.gEven: lambda t: np.exp(-((6 * np.pi * t) ** 2)),
    TestFunctionId.gOdd: lambda t: -np.sin(32 * t) * np.exp(-((7 * np.pi * t) ** 2)),
    TestFunctionId.gFull: lambda t: (np.exp(-((6 * np.pi * t) ** 2))
                                     - np.sin(32 * t) * np.exp(-((7 * np.pi * t) ** 2))),
    TestFunctionId.uFn: _u,
}


def evaluate(fid, t):
    """Value of test function ``fid`` at ``t`` (scalar or array)."""
    fid = TestFunctionId(fid)
    ta = np.asarray(t, dtype=float)
    out = np.asarray(_EVAL[fid](ta), dtype=float)
    return float(out) if ta.ndim == 0 else out


def _sinc_pi(nu):
    x = np.pi * nu
    small = np.abs(x) < 1e-4
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.sin(x) / x
    return np.where(small, 1 - x**2 / 6, out)


def _sawtooth_ft(nu):
    x = np.pi * nu
    # the direct form cancels to ~eps/x^2 relative; the series is exact to
    # ~x^8 relative below the switch
    small = np.abs(x) < 1e-2
    with np.errstate(invalid="ignore", divide="ignore"):
        out = (x * np.cos(x) - np.sin(x)) / (2 * x**2)
    x2 = x * x
    series = -x / 6 * (1 - x2 / 10 * (1 - x2 / 28 * (1 - x2 / 54)))
    return np.where(small, series, out)


def exact_ft(fid, nu):
    """Closed-form transform of ``fid`` at ``nu`` (complex).

    For ``uFn`` this is the inverse-direction transform, i.e. the function
    whose inverse transform is ``u``.

    Raises
    ------
    UnsupportedId
        For ``rectApprox``, ``sawtoothApprox`` and ``gFull``.
    """
    fid = TestFunctionId(fid)
    v = np.asarray(nu, dtype=float)
    if fid is TestFunctionId.rect:
        out = _sinc_pi(v) + 0j
    elif fid is TestFunctionId.sawtooth:
        out = 1j * _sawtooth_ft(v)
    elif fid is TestFunctionId.gEven:
        out = g_even_ft(v) + 0j
    elif fid is TestFunctionId.gOdd:
        out = 1j * g_odd_ft(v)
    elif fid is TestFunctionId.uFn:
        out = np.exp(-((6 * np.pi * v) ** 2)) - 1j * np.exp(-((7 * np.pi * v) ** 2)) * np.sin(32 * v)
    else:
        raise UnsupportedId(f"no closed-form transform housed for {fid.value}")
    out = np.asarray(out, dtype=complex)
    return complex(out) if v.ndim == 0 else out


def sampling_source(fid):
    """Function actually sampled when approximating the transform of ``fid``.

    The discontinuous pulses are sampled through their smooth stand-ins. Near
    the jumps the two differ (``rectApprox(0.48) ~ 0.946``), and that
    difference is part of the error curves reported for them.
    """
    fid = TestFunctionId(fid)
    return {TestFunctionId.rect: TestFunctionId.rectApprox,
            TestFunctionId.sawtooth: TestFunctionId.sawtoothApprox}.get(fid, fid)


def approximate_ft(fid, variant: str, params: FitParams, nu_grid, lut=None):
    """Both channels of one transform variant for test function ``fid``."""
    src = sampling_source(fid)
    sf = decompose(lambda t: evaluate(src, t), params)
    return transform.spectrum(sf, nu_grid, variant, lut)


def abs_diff_curve(fid, variant: str, params: FitParams, nu_grid, lut=None):
    """``|approx - exact|`` over ``nu_grid`` for the channel matching ``fid``'s parity."""
    fid = TestFunctionId(fid)
    if fid is TestFunctionId.uFn:
        raise UnsupportedId("uFn's closed form is an inverse transform; use inverse_series")
    ref = exact_ft(fid, np.asarray(nu_grid, dtype=float))
    spec = approximate_ft(fid, variant, params, nu_grid, lut)
    if fid.parity == "even":
        return np.abs(spec.even_part - ref.real)
    if fid.parity == "odd":
        return np.abs(spec.odd_part - ref.imag)
    return np.abs(spec.values - ref)


def parse_builtin(name: str):
    """Resolve ``"rect"`` or a ``+``-joined sum like ``"rectApprox+sawtoothApprox"``."""
    parts = [p.strip() for p in name.split("+")]
    try:
        ids = [TestFunctionId(p) for p in parts]
    except ValueError:
        valid = ", ".join(i.value for i in TestFunctionId)
        raise ValueError(f"unknown built-in function {name!r}; valid names: {valid}") from None

    def f(t):
        return sum(np.asarray(evaluate(i, t)) for i in ids)

    return f, ids

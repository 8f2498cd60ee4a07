"""Fourier transform approximations of Gaussian-sampled functions.

Every routine approximates ``F{f}(nu) = int f(t) exp(-2 pi i nu t) dt`` from
the samples ``f(n h)``. Four algebraically equivalent formulations are
provided:

``full``
    ``h sum_{n=-N}^{N} exp(-(nh/c)^2) f(nh) K(pi nu c, nh/c)`` (and the L
    analogue). Evaluates K at negative second arguments, so it overflows for
    large ``nh/c``.
``half``
    Even/odd symmetry folds the sum onto ``n >= 1`` with the coefficients
    V_k, V_l, optionally served from a :class:`~voigtft.lut.VoigtLUT`.
``trig``
    ``h exp(-(pi nu c)^2) (f_e(0) + 2 sum f_e(nh) cos(2 pi nu n h))`` and the
    sine counterpart.
``combined``
    The complex DFT-like sum over ``f(+-nh)`` with the same Gaussian window.

Even channels return real values. Odd channels return purely imaginary
complex values. Scalar ``nu`` gives scalars back, array ``nu`` gives arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import lut as _lut
from .errors import NonFiniteInput, NonFiniteSample
from .sampling import FitParams, SampledFunction
from .voigt import k_fn, l_fn, vk_scaled, vl_scaled

__all__ = [
    "VARIANTS",
    "Spectrum",
    "make_grid",
    "ft_even_full",
    "ft_odd_full",
    "ft_even_half",
    "ft_odd_half",
    "ft_even_trig",
    "ft_odd_trig",
    "ft_combined",
    "ft_combined_samples",
    "spectrum",
    "inverse_series",
    "relative_error",
    "relative_error_curve",
]

VARIANTS = ("full", "half", "trig", "combined")


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Transform values on a frequency grid.

    ``even_part`` is ``Re f^(nu)`` and ``odd_part`` is ``Im f^(nu)``.
    """

    nu_grid: np.ndarray = field(repr=False)
    even_part: np.ndarray = field(repr=False)
    odd_part: np.ndarray = field(repr=False)
    params: FitParams

    def __post_init__(self):
        nu = np.asarray(self.nu_grid, dtype=float)
        if nu.ndim != 1 or not (len(nu) == len(self.even_part) == len(self.odd_part)):
            raise ValueError("nu_grid, even_part and odd_part must be 1-d with equal length")
        if nu.size > 1 and not np.all(np.diff(nu) > 0):
            raise ValueError("nu_grid must be strictly increasing")

    @property
    def values(self):
        return np.asarray(self.even_part) + 1j * np.asarray(self.odd_part)


def make_grid(start: float, stop: float, step: float):
    """``start + k*step`` for ``k = 0, 1, ...`` while not past ``stop``.

    Same node set as a Mathematica ``Table[..., {nu, start, stop, step}]``.
    """
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    if not start < stop:
        raise ValueError(f"need start < stop, got {start} >= {stop}")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return start + step * np.arange(count)


def _nu(nu):
    a = np.asarray(nu, dtype=float)
    if not np.all(np.isfinite(a)):
        raise NonFiniteInput(f"nu must be finite, got {nu!r}")
    return np.atleast_1d(a), a.ndim == 0


def _ret(arr, scalar):
    if scalar:
        v = arr[0]
        return complex(v) if np.iscomplexobj(arr) else float(v)
    return arr


def _window(nu, c):
    return np.exp(-((np.pi * nu * c) ** 2))


def ft_even_full(sf: SampledFunction, nu):
    """Even channel over the full index range ``n = -N..N`` with K.

    Raises OverflowGuard when ``K(pi nu c, -nh/c)`` is not representable.
    """
    p = sf.params
    v, scalar = _nu(nu)
    n = np.arange(-p.n_max, p.n_max + 1)
    y = n * p.h / p.c
    f = sf.even_values[np.abs(n)]
    K = k_fn(np.pi * v[:, None] * p.c, y[None, :])
    out = p.h * (K * (np.exp(-y**2) * f)).sum(axis=1)
    return _ret(out, scalar)


def ft_odd_full(sf: SampledFunction, nu):
    """Odd channel over the full index range with L; purely imaginary."""
    p = sf.params
    v, scalar = _nu(nu)
    n = np.arange(-p.n_max, p.n_max + 1)
    y = n * p.h / p.c
    f = np.concatenate([-sf.odd_values[::-1], [0.0], sf.odd_values])
    L = l_fn(np.pi * v[:, None] * p.c, y[None, :])
    out = 1j * p.h * (L * (np.exp(-y**2) * f)).sum(axis=1)
    return _ret(out, scalar)


def _scaled_columns(sf, v, lut, which):
    p = sf.params
    if lut is not None:
        vk, vl = _lut.columns(lut, p, v)
        return vk if which == "k" else vl
    x = np.pi * p.c * v[None, :]
    y = p.ratio[:, None]
    return vk_scaled(x, y) if which == "k" else vl_scaled(x, y)


def ft_even_half(sf: SampledFunction, nu, lut=None):
    """Even channel as a half sum over ``n = 1..N`` with V_k.

    Parameters
    ----------
    sf : SampledFunction
    nu : float or array_like
    lut : VoigtLUT, optional
        Precomputed coefficients. Must be built for ``sf.params`` and cover
        ``nu``; off-node frequencies are linearly interpolated.

    Raises
    ------
    LutMismatch
        If `lut` was built for other parameters or does not cover `nu`.
    """
    p = sf.params
    v, scalar = _nu(nu)
    W = _scaled_columns(sf, v, lut, "k")
    out = p.h * (sf.even_values[0] * _window(v, p.c) + sf.even_values[1:] @ W)
    return _ret(out, scalar)


def ft_odd_half(sf: SampledFunction, nu, lut=None):
    """Odd channel ``i h sum_{n=1}^N exp(-(nh/c)^2) f_o(nh) V_l``; see :func:`ft_even_half`."""
    p = sf.params
    v, scalar = _nu(nu)
    W = _scaled_columns(sf, v, lut, "l")
    out = 1j * p.h * (sf.odd_values @ W)
    return _ret(out, scalar)


def _phase(p, v):
    return 2 * np.pi * np.outer(np.arange(1, p.n_max + 1) * p.h, v)


def ft_even_trig(sf: SampledFunction, nu):
    p = sf.params
    v, scalar = _nu(nu)
    s = sf.even_values[0] + 2 * (sf.even_values[1:] @ np.cos(_phase(p, v)))
    return _ret(p.h * _window(v, p.c) * s, scalar)


def ft_odd_trig(sf: SampledFunction, nu):
    p = sf.params
    v, scalar = _nu(nu)
    s = sf.odd_values @ np.sin(_phase(p, v))
    return _ret(-2j * p.h * _window(v, p.c) * s, scalar)


def ft_combined_samples(values, params: FitParams, nu):
    """Windowed DFT-like sum from samples ``f(n h), n = -N..N``."""
    p = params
    v, scalar = _nu(nu)
    vals = np.asarray(values, dtype=float)
    N = p.n_max
    ph = np.exp(-1j * _phase(p, v))
    s = vals[N] + vals[N + 1:] @ ph + vals[N - 1::-1] @ np.conj(ph)
    return _ret(p.h * _window(v, p.c) * s, scalar)


def ft_combined(f, params: FitParams, nu):
    """Complex transform of the callable ``f`` sampled at ``n h``.

    Raises NonFiniteSample if ``f`` is not finite at a grid point.
    """
    t = params.grid()
    try:
        vals = np.asarray(f(t), dtype=float)
        if vals.shape != t.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array([float(f(float(ti))) for ti in t])
    for n, val in zip(range(-params.n_max, params.n_max + 1), vals):
        if not np.isfinite(val):
            raise NonFiniteSample(n, val)
    return ft_combined_samples(vals, params, nu)


def spectrum(sf: SampledFunction, nu_grid, variant: str = "half", lut=None) -> Spectrum:
    """Evaluate both channels of one formulation on ``nu_grid``."""
    nu = np.asarray(nu_grid, dtype=float)
    if variant == "full":
        ev, od = ft_even_full(sf, nu), ft_odd_full(sf, nu)
    elif variant == "half":
        ev, od = ft_even_half(sf, nu, lut), ft_odd_half(sf, nu, lut)
    elif variant == "trig":
        ev, od = ft_even_trig(sf, nu), ft_odd_trig(sf, nu)
    elif variant == "combined":
        z = ft_combined_samples(sf.values(), sf.params, nu)
        ev, od = z.real, 1j * z.imag
    else:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    return Spectrum(nu, np.asarray(ev, dtype=float), np.asarray(od).imag, sf.params)


def _call_spectrum(fn, x):
    try:
        out = np.asarray(fn(x), dtype=complex)
        if out.shape != x.shape:
            raise ValueError
    except (TypeError, ValueError):
        out = np.array([complex(fn(float(xi))) for xi in x])
    return out


def inverse_series(spectrum_fn, params: FitParams, t, *, c=None):
    """Rebuild ``f(t)`` from samples of its inverse transform at ``0`` and ``n h``.

    ``h exp(-(pi c t)^2) [Re F(0) + 2 sum_{n=1}^N (Re F(nh) cos(2 pi t n h)
    + Im F(nh) sin(2 pi t n h))]``, where ``F = spectrum_fn``. ``Re F`` is
    assumed even and ``Im F`` odd.

    Parameters
    ----------
    spectrum_fn : callable
        Maps a frequency (or an array of them) to complex values.
    params : FitParams
    t : float or array_like
    c : float, optional
        Overrides ``params.c``. ``c=0`` drops the Gaussian attenuation and
        gives an ordinary truncated Fourier series.

    Raises
    ------
    NonFiniteSample
        If ``spectrum_fn`` is not finite at some ``n h``.
    """
    width = params.c if c is None else float(c)
    if not width >= 0:
        raise ValueError(f"c must be >= 0, got {c}")
    ta, scalar = _nu(t)
    nodes = np.arange(0, params.n_max + 1) * params.h
    F = _call_spectrum(spectrum_fn, nodes)
    for n, val in enumerate(F):
        if not np.isfinite(val):
            raise NonFiniteSample(n, val)
    ph = _phase(params, ta)
    s = F[0].real + 2 * (F[1:].real @ np.cos(ph) + F[1:].imag @ np.sin(ph))
    return _ret(params.h * _window(ta, width) * s, scalar)


def relative_error(approx: float, reference: float, floor: float = 1e-12):
    """``(approx - reference) / reference``, or ``None`` when ``|reference| < floor``."""
    if not (math.isfinite(approx) and math.isfinite(reference)):
        raise NonFiniteInput("relative_error needs finite inputs")
    if not floor >= 0:
        raise ValueError(f"floor must be >= 0, got {floor}")
    if abs(reference) < floor or reference == 0:
        return None
    return (approx - reference) / reference


def relative_error_curve(approx, reference, floor: float = 1e-12):
    """Elementwise :func:`relative_error`; undefined points come back as NaN."""
    a = np.asarray(approx, dtype=float)
    r = np.asarray(reference, dtype=float)
    out = np.full(np.broadcast(a, r).shape, np.nan)
    ok = (np.abs(r) >= floor) & (r != 0)
    np.divide(a - r, r, out=out, where=ok)
    return out

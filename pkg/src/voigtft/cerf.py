"""Complex error function (Faddeeva function) over the whole complex plane.

Three approximations share the upper half-plane:

* a pole sum evaluated at ``z + i*stigma/2`` for the interior,
* a rational form with an explicit ``exp(-z**2)`` term for a thin band
  around the real axis,
* an 11-level continued fraction for ``|z| > radius_threshold``.

The lower half-plane follows from ``w(-z) = 2 exp(-z**2) - w(z)``.

All functions accept scalars or numpy arrays and broadcast elementwise.
Scalar input gives a Python ``complex`` back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NonFiniteInput

__all__ = [
    "CerfParams",
    "CerfCoefficients",
    "DEFAULT_PARAMS",
    "cerf_coefficients",
    "w",
    "w_upper",
    "w_interior",
    "w_narrow_band",
    "w_continued_fraction",
]

SQRT_PI = np.sqrt(np.pi)


@dataclass(frozen=True)
class CerfParams:
    """Fitting parameters and dispatch constants of the cerf algorithm."""

    big_h: float = 0.25
    stigma: float = 2.75
    big_m: int = 25
    max_n: int = 23
    radius_threshold: float = 8.0
    band_slope: float = 0.05

    def __post_init__(self):
        if not self.big_h > 0:
            raise ValueError(f"big_h must be > 0, got {self.big_h}")
        if not self.stigma > 0:
            raise ValueError(f"stigma must be > 0, got {self.stigma}")
        if int(self.big_m) != self.big_m or self.big_m < 3:
            raise ValueError(f"big_m must be an integer >= 3, got {self.big_m}")
        if int(self.max_n) != self.max_n or self.max_n < 1:
            raise ValueError(f"max_n must be an integer >= 1, got {self.max_n}")
        if not self.radius_threshold > 0:
            raise ValueError(f"radius_threshold must be > 0, got {self.radius_threshold}")
        if not self.band_slope > 0:
            raise ValueError(f"band_slope must be > 0, got {self.band_slope}")
        # eager build, so the first w() call does not pay for it
        cerf_coefficients(self)


def _frozen(a):
    a = np.asarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CerfCoefficients:
    """Expansion coefficients for ``m = 1 .. M-2`` (index 0 holds ``m = 1``).

    ``a0``, ``c0``, ``c1``, ``d1`` are real; ``b0``, ``a1``, ``b1`` are purely
    imaginary and stored as complex.
    """

    a0: np.ndarray = field(repr=False)
    b0: np.ndarray = field(repr=False)
    c0: np.ndarray = field(repr=False)
    a1: np.ndarray = field(repr=False)
    b1: np.ndarray = field(repr=False)
    c1: np.ndarray = field(repr=False)
    d1: np.ndarray = field(repr=False)


@lru_cache(maxsize=16)
def cerf_coefficients(params: CerfParams) -> CerfCoefficients:
    """Both coefficient sets for ``params``, computed once per parameter set."""
    H, s, M = params.big_h, params.stigma, params.big_m
    m = np.arange(1, M - 1, dtype=float)
    n = np.arange(-params.max_n, params.max_n + 1, dtype=float)

    weight = np.exp(s**2 / 4 - (n * H) ** 2)
    phase = np.pi * (m[:, None] - 0.5) * (n[None, :] * H + s / 2) / (M * H)
    a0 = SQRT_PI * (m - 0.5) / (2 * M**2 * H) * (weight * np.sin(phase)).sum(axis=1)
    b0 = -1j / (M * SQRT_PI) * (weight * np.cos(phase)).sum(axis=1)
    c0 = np.pi * (m - 0.5) / (2 * M * H)

    a1 = b0 * (c0**2 - (s / 2) ** 2) + 1j * a0 * s
    c1 = (c0**2 + (s / 2) ** 2) ** 2
    d1 = 2 * c0**2 - s**2 / 2
    return CerfCoefficients(
        a0=_frozen(a0), b0=_frozen(b0), c0=_frozen(c0),
        a1=_frozen(a1), b1=_frozen(b0.copy()), c1=_frozen(c1), d1=_frozen(d1),
    )


DEFAULT_PARAMS = CerfParams()


def _as_complex(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"w(z) needs finite z, got {z!r}")
    return arr


def _out(arr, like):
    return complex(arr) if np.ndim(like) == 0 else arr


def w_interior(z, params: CerfParams = DEFAULT_PARAMS):
    """Pole-sum approximation, accurate for ``Im z > band_slope*|Re z|``."""
    zz = _as_complex(z)
    k = cerf_coefficients(params)
    zs = (zz + 0.5j * params.stigma)[..., None]
    return _out(((k.a0 + k.b0 * zs) / (k.c0**2 - zs**2)).sum(axis=-1), z)


def w_narrow_band(z, params: CerfParams = DEFAULT_PARAMS):
    """Approximation for the band ``0 <= Im z <= band_slope*|Re z|`` near the real axis."""
    zz = _as_complex(z)
    k = cerf_coefficients(params)
    z2 = (zz**2)[..., None]
    s = ((k.a1 - k.b1 * z2) / (k.c1 - k.d1 * z2 + z2**2)).sum(axis=-1)
    return _out(np.exp(-zz**2) + zz * s, z)


def w_continued_fraction(z):
    """Truncated Laplace continued fraction, accurate for large ``|z|`` with ``Im z >= 0``."""
    zz = _as_complex(z)
    with np.errstate(divide="ignore", invalid="ignore"):
        # innermost level first: z - 11/(2z), then alternate k/t and (2k-1)/(2t)
        t = zz - 11 / (2 * zz)
        for num, half in ((5, False), (9, True), (4, False), (7, True), (3, False),
                          (5, True), (2, False), (3, True), (1, False), (1, True)):
            t = zz - (num / (2 * t) if half else num / t)
        out = 1j / (SQRT_PI * t)
    return _out(out, z)


def w_upper(z, params: CerfParams = DEFAULT_PARAMS):
    """Upper half-plane dispatch. ``Im z`` is assumed ``>= 0``."""
    zz = _as_complex(z)
    flat = zz.reshape(-1)
    out = np.empty_like(flat)
    far = np.abs(flat) > params.radius_threshold
    inner = ~far & (flat.imag > params.band_slope * np.abs(flat.real))
    band = ~far & ~inner
    if far.any():
        out[far] = w_continued_fraction(flat[far])
    if inner.any():
        out[inner] = w_interior(flat[inner], params)
    if band.any():
        out[band] = w_narrow_band(flat[band], params)
    return _out(out.reshape(zz.shape), z)


def w(z, params: CerfParams = DEFAULT_PARAMS):
    """Complex error function ``w(z) = exp(-z**2) * erfc(-i z)``.

    Parameters
    ----------
    z : complex or array_like of complex
        Finite argument(s).
    params : CerfParams, optional
        Fitting parameters; the defaults reach ~1e-14 over the plane.

    Returns
    -------
    complex or ndarray
        ``w(z)``. For ``Im z < 0`` the value is
        ``conj(2 exp(-conj(z)**2) - w_upper(conj(z)))``, which overflows to
        ``inf`` once ``Im(z)**2 - Re(z)**2`` exceeds roughly 709.

    Raises
    ------
    NonFiniteInput
        If any element of `z` is NaN or infinite.
    """
    zz = _as_complex(z)
    flat = zz.reshape(-1)
    out = np.empty_like(flat)
    up = flat.imag >= 0
    if up.any():
        out[up] = w_upper(flat[up], params)
    if (~up).any():
        zc = np.conj(flat[~up])
        with np.errstate(over="ignore", invalid="ignore"):
            out[~up] = np.conj(2 * np.exp(-zc**2) - w_upper(zc, params))
    return _out(out.reshape(zz.shape), z)

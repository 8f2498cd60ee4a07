"""Voigt function K(x, y) and imaginary Voigt function L(x, y).

``K + iL = w(x + iy)``. The axis values ``K(x, 0) = exp(-x**2)`` and
``L(0, y) = 0`` are returned in closed form, not through cerf.

Negative ``y`` grows like ``exp(y**2 - x**2)``; once that exceeds
``LOG_GUARD`` an :class:`~voigtft.errors.OverflowGuard` is raised rather than
returning ``inf``. The ``*_scaled`` helpers give the weighted pair sums used by
the transforms and never overflow.
"""
from __future__ import annotations

import numpy as np

from .cerf import DEFAULT_PARAMS, CerfParams, w
from .errors import NonFiniteInput, OverflowGuard

__all__ = [
    "LOG_GUARD",
    "k_fn",
    "l_fn",
    "k_reflect_y",
    "l_reflect_y",
    "vk_scaled",
    "vl_scaled",
]

LOG_GUARD = float(np.log(np.finfo(float).max / 4))


def _args(x, y):
    xa, ya = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(ya))):
        raise NonFiniteInput(f"Voigt functions need finite arguments, got x={x!r}, y={y!r}")
    return xa, ya


def _out(arr, x, y):
    return float(arr) if np.ndim(x) == 0 and np.ndim(y) == 0 else arr


def _guard(xa, ya, negative_only):
    growth = ya**2 - xa**2
    bad = growth > LOG_GUARD
    if negative_only:
        bad &= ya < 0
    if bad.any():
        i = np.flatnonzero(bad.reshape(-1))[0]
        raise OverflowGuard(
            f"exp(y^2 - x^2) overflows at x={xa.reshape(-1)[i]!r}, y={ya.reshape(-1)[i]!r}"
        )


def _w(xa, ya, params):
    _guard(xa, ya, negative_only=True)
    return np.asarray(w(xa + 1j * ya, params))


def k_fn(x, y, params: CerfParams = DEFAULT_PARAMS):
    """Voigt function ``K(x, y) = Re w(x + iy)``; exactly ``exp(-x**2)`` at ``y = 0``."""
    xa, ya = _args(x, y)
    out = _w(xa, ya, params).real
    axis = ya == 0
    out = np.where(axis, np.exp(-xa**2), out)
    return _out(out, x, y)


def l_fn(x, y, params: CerfParams = DEFAULT_PARAMS):
    """Imaginary Voigt function ``L(x, y) = Im w(x + iy)``; exactly 0 at ``x = 0``."""
    xa, ya = _args(x, y)
    out = np.where(xa == 0, 0.0, _w(xa, ya, params).imag)
    return _out(out, x, y)


def k_reflect_y(x, y, params: CerfParams = DEFAULT_PARAMS):
    """``K(x, -y)`` from ``K(x, y)`` via ``2 exp(y**2 - x**2) cos(2xy) - K(x, y)``."""
    xa, ya = _args(x, y)
    _guard(xa, ya, negative_only=False)
    out = 2 * np.exp(ya**2 - xa**2) * np.cos(2 * xa * ya) - k_fn(xa, ya, params)
    return _out(out, x, y)


def l_reflect_y(x, y, params: CerfParams = DEFAULT_PARAMS):
    """``L(x, -y)`` from ``L(x, y)`` via ``2 exp(y**2 - x**2) sin(2xy) + L(x, y)``."""
    xa, ya = _args(x, y)
    _guard(xa, ya, negative_only=False)
    out = 2 * np.exp(ya**2 - xa**2) * np.sin(2 * xa * ya) + l_fn(xa, ya, params)
    return _out(out, x, y)


def vk_scaled(x, y, params: CerfParams = DEFAULT_PARAMS):
    """``exp(-y**2) * (K(x, y) + K(x, -y))`` without forming ``exp(+y**2)``.

    One cerf call for ``K(x, y)``; the reflected partner enters through the
    reflection identity with the ``exp(-y**2)`` weight already applied.
    """
    xa, ya = _args(x, y)
    direct = np.exp(-ya**2) * k_fn(xa, ya, params)
    reflected = 2 * np.exp(-xa**2) * np.cos(2 * xa * ya) - direct
    return _out(direct + reflected, x, y)


def vl_scaled(x, y, params: CerfParams = DEFAULT_PARAMS):
    """``exp(-y**2) * (L(x, y) - L(x, -y))``, the odd counterpart of :func:`vk_scaled`."""
    xa, ya = _args(x, y)
    direct = np.exp(-ya**2) * l_fn(xa, ya, params)
    reflected = 2 * np.exp(-xa**2) * np.sin(2 * xa * ya) + direct
    return _out(direct - reflected, x, y)

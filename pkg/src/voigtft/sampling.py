"""Sampling on the symmetric grid ``t = n*h, n = -N..N`` and Gaussian reconstruction."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import IoFailure, NonFiniteSample

__all__ = [
    "FitParams",
    "SampledFunction",
    "decompose",
    "from_table",
    "read_table",
    "kernel",
    "reconstruct",
]


@dataclass(frozen=True)
class FitParams:
    """Grid step ``h``, kernel width ``c`` and half-count ``n_max`` of samples."""

    h: float
    c: float
    n_max: int

    def __post_init__(self):
        if not (np.isfinite(self.h) and self.h > 0):
            raise ValueError(f"h must be > 0, got {self.h}")
        if not (np.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c must be > 0, got {self.c}")
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ValueError(f"N must be an integer >= 1, got {self.n_max}")
        object.__setattr__(self, "n_max", int(self.n_max))

    @property
    def ratio(self):
        """Second Voigt arguments ``n*h/c`` for ``n = 1..N``."""
        return np.arange(1, self.n_max + 1) * self.h / self.c

    def grid(self):
        """Sample points ``n*h`` for ``n = -N..N``."""
        return np.arange(-self.n_max, self.n_max + 1) * self.h


def _readonly(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SampledFunction:
    """Even and odd halves of a function sampled at ``n*h``.

    ``even_values[n]`` holds ``f_even(n*h)`` for ``n = 0..N`` and
    ``odd_values[n-1]`` holds ``f_odd(n*h)`` for ``n = 1..N``. Negative
    indices follow from parity.
    """

    params: FitParams
    even_values: np.ndarray = field(repr=False)
    odd_values: np.ndarray = field(repr=False)

    def __post_init__(self):
        ev = _readonly(self.even_values)
        od = _readonly(self.odd_values)
        N = self.params.n_max
        if ev.shape != (N + 1,) or od.shape != (N,):
            raise ValueError(
                f"expected {N + 1} even and {N} odd values, got {ev.shape} and {od.shape}"
            )
        for n, v in enumerate(ev):
            if not np.isfinite(v):
                raise NonFiniteSample(n, v)
        for n, v in enumerate(od, start=1):
            if not np.isfinite(v):
                raise NonFiniteSample(n, v)
        object.__setattr__(self, "even_values", ev)
        object.__setattr__(self, "odd_values", od)

    @classmethod
    def from_samples(cls, values, params: FitParams):
        """Split samples ``f(n*h), n = -N..N`` into their even and odd halves."""
        v = np.asarray(values, dtype=float)
        N = params.n_max
        if v.shape != (2 * N + 1,):
            raise ValueError(f"expected {2 * N + 1} samples, got shape {v.shape}")
        for n, val in zip(range(-N, N + 1), v):
            if not np.isfinite(val):
                raise NonFiniteSample(n, val)
        pos, neg = v[N:], v[N::-1]
        even = (pos + neg) / 2
        odd = (pos - neg)[1:] / 2
        return cls(params, even, odd)

    @classmethod
    def zeros(cls, params: FitParams):
        return cls(params, np.zeros(params.n_max + 1), np.zeros(params.n_max))

    def values(self):
        """Full samples ``f(n*h)`` for ``n = -N..N``."""
        pos = self.even_values.copy()
        pos[1:] += self.odd_values
        neg = self.even_values[1:] - self.odd_values
        return np.concatenate([neg[::-1], pos])

    def __add__(self, other):
        if not isinstance(other, SampledFunction) or other.params != self.params:
            return NotImplemented
        return SampledFunction(self.params, self.even_values + other.even_values,
                               self.odd_values + other.odd_values)

    def __mul__(self, k):
        return SampledFunction(self.params, k * self.even_values, k * self.odd_values)

    __rmul__ = __mul__


def _sample(f, t):
    try:
        out = np.asarray(f(t), dtype=float)
        if out.shape != t.shape:
            raise ValueError
    except (TypeError, ValueError):
        # scalar-only callable
        out = np.array([float(f(float(ti))) for ti in t])
    return out


def decompose(f, params: FitParams) -> SampledFunction:
    """Sample ``f`` at ``n*h, n = -N..N`` and split it into even and odd halves.

    ``f`` may be vectorized or scalar-only; it is called at the grid points and
    nowhere else.

    Raises
    ------
    NonFiniteSample
        If ``f`` is not finite at some grid point; ``err.n`` names it.
    """
    t = params.grid()
    return SampledFunction.from_samples(_sample(f, t), params)


def from_table(t, f, params: FitParams) -> SampledFunction:
    """Resample tabulated ``(t, f)`` onto the ``(h, N)`` grid by linear interpolation.

    Grid points outside the tabulated range are taken as 0.
    """
    t = np.asarray(t, dtype=float)
    f = np.asarray(f, dtype=float)
    if t.ndim != 1 or t.shape != f.shape or t.size < 2:
        raise ValueError("table needs at least two (t, f) rows")
    if not np.all(np.diff(t) > 0):
        raise ValueError("table t column must be strictly increasing")
    if not (np.all(np.isfinite(t)) and np.all(np.isfinite(f))):
        raise ValueError("table contains non-finite values")
    return SampledFunction.from_samples(np.interp(params.grid(), t, f, left=0.0, right=0.0), params)


def read_table(path):
    """Read two numeric columns (whitespace or comma separated, ``#`` comments).

    Returns ``(t, f)`` arrays. Raises :class:`ValueError` on malformed content
    and :class:`~voigtft.errors.IoFailure` when the file cannot be read.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 2 columns, got {len(parts)}")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not numeric: {line!r}") from None
    if not rows:
        raise ValueError(f"{path}: no data rows")
    arr = np.array(rows)
    return arr[:, 0], arr[:, 1]


def kernel(t, params: FitParams):
    """Gaussian sampling kernel ``s(t) = h/(c*sqrt(pi)) * exp(-(t/c)**2)``."""
    t = np.asarray(t, dtype=float)
    out = params.h / (params.c * np.sqrt(np.pi)) * np.exp(-((t / params.c) ** 2))
    return float(out) if out.ndim == 0 else out


def reconstruct(sf: SampledFunction, t):
    """Continuous approximation ``sum_n s(t - n*h) f(n*h)`` at ``t``."""
    ta = np.asarray(t, dtype=float)
    grid = sf.params.grid()
    s = kernel(ta[..., None] - grid, sf.params)
    out = s @ sf.values()
    return float(out) if ta.ndim == 0 else out

"""Look-up tables of the function-independent coefficients V_k and V_l.

For a fixed ``(h, c, N)`` and frequency grid the coefficients

    V_k(pi nu c, n h/c) = K(pi nu c, n h/c) + K(pi nu c, -n h/c)
    V_l(pi nu c, n h/c) = L(pi nu c, n h/c) - L(pi nu c, -n h/c)

do not depend on the sampled function, so they are built once and reused.
The raw values grow like ``exp((n h/c)**2)`` and overflow float64 for
``n h/c`` above about 26.6, so the table stores them with the weight
``exp(-(n h/c)**2)`` already applied. That weighted product is what the
transforms consume. :attr:`VoigtLUT.vk` and :attr:`VoigtLUT.vl` undo the
weight on demand.

Binary layout (little-endian)::

    b"VOIGTLUT"  u32 version  f64 h  f64 c  i64 N  u64 J
    f64[J] nu grid   f64[N*J] vk (row-major)   f64[N*J] vl
    u64 FNV-1a 64 of every preceding byte
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    ChecksumMismatch,
    FormatVersionMismatch,
    IoFailure,
    LutMismatch,
    OutOfRange,
    OverflowGuard,
)
from .sampling import FitParams
from .voigt import LOG_GUARD, vk_scaled, vl_scaled

__all__ = [
    "FORMAT_VERSION",
    "VoigtLUT",
    "build",
    "lookup",
    "lookup_scaled",
    "columns",
    "save",
    "load",
    "dumps",
    "loads",
    "export_csv",
    "fnv1a64",
]

MAGIC = b"VOIGTLUT"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<8sIddqQ")
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = 0xFFFFFFFFFFFFFFFF


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK
    return h


def _readonly(a):
    a = np.ascontiguousarray(a, dtype="<f8")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class VoigtLUT:
    """Weighted V_k / V_l tables over rows ``n = 1..N`` and columns ``nu_grid``."""

    params: FitParams
    nu_grid: np.ndarray = field(repr=False)
    vk_scaled: np.ndarray = field(repr=False)
    vl_scaled: np.ndarray = field(repr=False)
    checksum: int = 0

    def __post_init__(self):
        for name in ("nu_grid", "vk_scaled", "vl_scaled"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))
        J = self.nu_grid.size
        if self.nu_grid.ndim != 1 or J < 1:
            raise ValueError("nu_grid must be a non-empty 1-d array")
        if J > 1 and not np.all(np.diff(self.nu_grid) > 0):
            raise ValueError("nu_grid must be strictly increasing")
        shape = (self.params.n_max, J)
        if self.vk_scaled.shape != shape or self.vl_scaled.shape != shape:
            raise ValueError(f"tables must have shape {shape}")

    @property
    def shape(self):
        return self.vk_scaled.shape

    @property
    def vk(self):
        """Unweighted V_k table; raises OverflowGuard if it is not representable."""
        return self.vk_scaled * _unweight(self.params.ratio)[:, None]

    @property
    def vl(self):
        """Unweighted V_l table; raises OverflowGuard if it is not representable."""
        return self.vl_scaled * _unweight(self.params.ratio)[:, None]

    def __eq__(self, other):
        if not isinstance(other, VoigtLUT):
            return NotImplemented
        return (
            self.params == other.params
            and self.checksum == other.checksum
            and np.array_equal(self.nu_grid, other.nu_grid)
            and np.array_equal(self.vk_scaled, other.vk_scaled)
            and np.array_equal(self.vl_scaled, other.vl_scaled)
        )


def _unweight(y):
    y = np.asarray(y, dtype=float)
    if np.any(y**2 > LOG_GUARD):
        raise OverflowGuard(f"exp((nh/c)^2) overflows for nh/c = {float(np.max(y)):.6g}")
    return np.exp(y**2)


def _payload(params, nu_grid, vk, vl):
    N, J = vk.shape
    head = _HEADER.pack(MAGIC, FORMAT_VERSION, params.h, params.c, N, J)
    return b"".join([head, nu_grid.astype("<f8").tobytes(),
                     vk.astype("<f8").tobytes(), vl.astype("<f8").tobytes()])


def build(params: FitParams, nu_grid) -> VoigtLUT:
    """Tabulate the weighted coefficients for every ``n = 1..N`` and grid frequency."""
    nu = np.asarray(nu_grid, dtype=float)
    if nu.ndim != 1 or nu.size == 0 or not np.all(np.isfinite(nu)):
        raise ValueError("nu_grid must be a non-empty 1-d array of finite values")
    if nu.size > 1 and not np.all(np.diff(nu) > 0):
        raise ValueError("nu_grid must be strictly increasing")
    x = np.pi * params.c * nu[None, :]
    y = params.ratio[:, None]
    vk = np.asarray(vk_scaled(x, y), dtype=float)
    vl = np.asarray(vl_scaled(x, y), dtype=float)
    checksum = fnv1a64(_payload(params, nu, vk, vl))
    return VoigtLUT(params, nu, vk, vl, checksum)


def _locate(grid, nu):
    """Left bracket index and interpolation weight for each frequency."""
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    J = grid.size
    if J == 1:
        tol = 1e-12 * max(1.0, abs(grid[0]))
        if np.any(np.abs(nu - grid[0]) > tol):
            raise OutOfRange(f"nu outside the single-node grid {grid[0]!r}")
        return np.zeros(nu.shape, dtype=int), np.zeros(nu.shape)
    step = np.diff(grid)
    lo_tol = 1e-12 * step[0]
    hi_tol = 1e-12 * step[-1]
    bad = (nu < grid[0] - lo_tol) | (nu > grid[-1] + hi_tol) | ~np.isfinite(nu)
    if bad.any():
        raise OutOfRange(
            f"nu={nu[bad][0]!r} outside table range [{grid[0]!r}, {grid[-1]!r}]"
        )
    j = np.clip(np.searchsorted(grid, nu, side="right") - 1, 0, J - 2)
    frac = (nu - grid[j]) / step[j]
    # snap to nodes so on-node queries return stored values bit-exactly
    frac = np.where(np.abs(frac) <= 1e-12, 0.0, frac)
    at_right = np.abs(1 - frac) <= 1e-12
    j = np.where(at_right, j + 1, j)
    frac = np.where(at_right, 0.0, frac)
    return j, frac


def _interp(table, j, frac):
    right = np.minimum(j + 1, table.shape[1] - 1)
    left_vals = table[:, j]
    return np.where(frac == 0.0, left_vals,
                    (1 - frac) * left_vals + frac * table[:, right])


def columns(lut: VoigtLUT, params: FitParams, nu):
    """Weighted coefficient columns at ``nu``, shape ``(N, len(nu))``.

    Frequencies on grid nodes return stored values; others are linearly
    interpolated (approximate).

    Raises
    ------
    LutMismatch
        If ``params`` differ from the table's or ``nu`` leaves its range.
    """
    if lut.params != params:
        raise LutMismatch(f"table built for {lut.params}, requested {params}")
    try:
        j, frac = _locate(lut.nu_grid, nu)
    except OutOfRange as exc:
        raise LutMismatch(str(exc)) from None
    return _interp(lut.vk_scaled, j, frac), _interp(lut.vl_scaled, j, frac)


def lookup_scaled(lut: VoigtLUT, n: int, nu: float):
    """Weighted ``(vk, vl)`` for row ``n`` at frequency ``nu``."""
    if int(n) != n or not 1 <= n <= lut.params.n_max:
        raise OutOfRange(f"row n={n!r} outside 1..{lut.params.n_max}")
    j, frac = _locate(lut.nu_grid, nu)
    row = slice(int(n) - 1, int(n))
    vk = _interp(lut.vk_scaled[row], j, frac)[0, 0]
    vl = _interp(lut.vl_scaled[row], j, frac)[0, 0]
    return float(vk), float(vl)


def lookup(lut: VoigtLUT, n: int, nu: float):
    """Unweighted ``(V_k, V_l)`` for row ``n`` at ``nu``.

    Exact stored value on a grid node, linear interpolation between nodes.

    Raises
    ------
    OutOfRange
        If ``n`` is not in ``1..N`` or ``nu`` lies outside the grid.
    OverflowGuard
        If ``exp((n h/c)**2)`` does not fit in a float64.
    """
    vk, vl = lookup_scaled(lut, n, nu)
    scale = float(_unweight(n * lut.params.h / lut.params.c))
    return vk * scale, vl * scale


def dumps(lut: VoigtLUT) -> bytes:
    body = _payload(lut.params, lut.nu_grid, lut.vk_scaled, lut.vl_scaled)
    return body + struct.pack("<Q", fnv1a64(body))


def loads(data: bytes) -> VoigtLUT:
    if len(data) < _HEADER.size + 8:
        raise FormatVersionMismatch("data too short to be a look-up table")
    magic, version, h, c, N, J = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatVersionMismatch(f"bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise FormatVersionMismatch(f"format version {version}, expected {FORMAT_VERSION}")
    body, (stored,) = data[:-8], struct.unpack("<Q", data[-8:])
    if fnv1a64(body) != stored:
        raise ChecksumMismatch("look-up table checksum does not match its content")
    expected = _HEADER.size + 8 * (J + 2 * N * J) + 8
    if len(data) != expected:
        raise FormatVersionMismatch(f"length {len(data)} does not match header ({expected})")
    try:
        params = FitParams(h, c, N)
    except ValueError as exc:
        raise FormatVersionMismatch(f"stored parameters invalid: {exc}") from None
    off = _HEADER.size
    nu = np.frombuffer(data, "<f8", J, off)
    vk = np.frombuffer(data, "<f8", N * J, off + 8 * J).reshape(N, J)
    vl = np.frombuffer(data, "<f8", N * J, off + 8 * (J + N * J)).reshape(N, J)
    try:
        return VoigtLUT(params, nu, vk, vl, stored)
    except ValueError as exc:
        raise FormatVersionMismatch(str(exc)) from None


def save(lut: VoigtLUT, destination) -> None:
    try:
        Path(destination).write_bytes(dumps(lut))
    except OSError as exc:
        raise IoFailure(f"cannot write {destination}: {exc}") from exc


def load(source) -> VoigtLUT:
    try:
        data = Path(source).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {source}: {exc}") from exc
    return loads(data)


def export_csv(lut: VoigtLUT, destination) -> None:
    """Write ``nu, vk_1..vk_N, vl_1..vl_N`` rows of the weighted tables."""
    N = lut.params.n_max
    header = ["nu"] + [f"vk_{n}" for n in range(1, N + 1)] + [f"vl_{n}" for n in range(1, N + 1)]
    lines = [",".join(header)]
    for j, nu in enumerate(lut.nu_grid):
        row = [nu, *lut.vk_scaled[:, j], *lut.vl_scaled[:, j]]
        lines.append(",".join(f"{v:.17g}" for v in row))
    try:
        Path(destination).write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write {destination}: {exc}") from exc

"""Fourier transforms of sampled functions through the Voigt functions K and L.

The transform coefficients do not depend on the sampled function, so they can
be tabulated once per ``(h, c, N)`` and frequency grid (:mod:`voigtft.lut`).
"""
from .cerf import CerfParams, w
from .errors import (
    ChecksumMismatch,
    FormatVersionMismatch,
    IoFailure,
    LutMismatch,
    NonFiniteInput,
    NonFiniteSample,
    OutOfRange,
    OverflowGuard,
    UnsupportedId,
    VoigtFTError,
)
from .lut import VoigtLUT
from .sampling import FitParams, SampledFunction, decompose, kernel, reconstruct
from .transform import (
    Spectrum,
    ft_combined,
    ft_even_full,
    ft_even_half,
    ft_even_trig,
    ft_odd_full,
    ft_odd_half,
    ft_odd_trig,
    inverse_series,
    make_grid,
    relative_error,
    spectrum,
)
from .voigt import k_fn, k_reflect_y, l_fn, l_reflect_y

__version__ = "0.1.0"

"""Exception types raised by voigtft."""


class VoigtFTError(Exception):
    """Base class for every error raised by this package."""


class NonFiniteInput(VoigtFTError, ValueError):
    """An argument contained NaN or infinity."""


class OverflowGuard(VoigtFTError, OverflowError):
    """A reflection identity would exceed the float64 range."""


class NonFiniteSample(VoigtFTError, ValueError):
    """A sampled function value is not finite.

    The offending grid index is kept in ``n`` (signed, so ``-3`` means ``t = -3h``).
    """

    def __init__(self, n, value=None):
        self.n = n
        self.value = value
        super().__init__(f"non-finite sample at grid index n={n}: {value!r}")


class LutMismatch(VoigtFTError, ValueError):
    """A look-up table was built for other fit parameters or another frequency range."""


class OutOfRange(VoigtFTError, IndexError):
    """A look-up table query fell outside the stored rows or frequency range."""


class ChecksumMismatch(VoigtFTError, ValueError):
    """A stored look-up table failed its integrity check."""


class FormatVersionMismatch(VoigtFTError, ValueError):
    """A stored look-up table has an unknown magic string or format version."""


class IoFailure(VoigtFTError, OSError):
    """Reading or writing a file failed."""


class UnsupportedId(VoigtFTError, ValueError):
    """No closed-form transform is housed for the requested test function."""

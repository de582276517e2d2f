"""Convolution of lattice pmfs: schoolbook, FFT, iid powers, sequence folds.

All routines trim boundary weights below TRIM_THRESHOLD after each full
convolution and accumulate the removed probability into the result's
``trimmed_mass``, so the error budget of a long pipeline stays auditable.
"""

from __future__ import annotations

import functools
import math
import os

import numpy as np

from .pmf import NEG_CLAMP, LatticePmf, delta, make_pmf

# Boundary weights strictly below this are trimmed into trimmed_mass.
TRIM_THRESHOLD = 1e-15
DEFAULT_MAX_SUPPORT = 1 << 22


class SupportOverflowError(RuntimeError):
    """Raised when a convolution would exceed the configured support cap."""


def max_support_length() -> int:
    """Support cap for a single convolution; override with LLT_MAX_SUPPORT."""
    raw = os.environ.get("LLT_MAX_SUPPORT")
    if raw is None:
        return DEFAULT_MAX_SUPPORT
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError("LLT_MAX_SUPPORT must be an integer") from exc
    if cap < 1:
        raise ValueError("LLT_MAX_SUPPORT must be >= 1")
    return cap


def _finish(offset: int, raw: np.ndarray, trimmed_mass: float) -> LatticePmf:
    """Clamp FFT round-off, trim sub-threshold boundary weights, canonicalize."""
    if np.any(raw < NEG_CLAMP):
        raise ValueError(
            "convolution produced weight %g below %g: implementation bug, "
            "not round-off" % (raw.min(), NEG_CLAMP)
        )
    raw = np.where(raw < 0, 0.0, raw)
    lo, hi = 0, len(raw)
    while lo < hi and raw[lo] < TRIM_THRESHOLD:
        lo += 1
    while hi > lo and raw[hi - 1] < TRIM_THRESHOLD:
        hi -= 1
    if lo == hi:
        # Everything fell under the threshold; keep the largest atom so the
        # result remains a valid pmf.
        k = int(np.argmax(raw))
        lo, hi = k, k + 1
    cut = math.fsum(raw[:lo]) + math.fsum(raw[hi:])
    return make_pmf(
        offset + lo,
        raw[lo:hi],
        trimmed_mass=trimmed_mass + cut,
        unnormalized=True,
    )


def convolve_naive(p: LatticePmf, q: LatticePmf) -> LatticePmf:
    """Schoolbook O(N*M) convolution; the oracle for convolve_fft."""
    raw = np.convolve(p.weights, q.weights)
    return _finish(p.offset + q.offset, raw, p.trimmed_mass + q.trimmed_mass)


def convolve_fft(p: LatticePmf, q: LatticePmf) -> LatticePmf:
    """FFT convolution, equal to convolve_naive within 1e-12 max-abs.

    Raises SupportOverflowError when the combined support would exceed
    max_support_length(); lower n or raise the trim threshold upstream.
    """
    out_len = len(p) + len(q) - 1
    cap = max_support_length()
    if out_len > cap:
        raise SupportOverflowError(
            "convolution support %d exceeds cap %d (LLT_MAX_SUPPORT)"
            % (out_len, cap)
        )
    size = 1 << (out_len - 1).bit_length()
    raw = np.fft.irfft(
        np.fft.rfft(p.weights, size) * np.fft.rfft(q.weights, size), size
    )[:out_len]
    return _finish(p.offset + q.offset, raw, p.trimmed_mass + q.trimmed_mass)


def iid_power(p: LatticePmf, n: int) -> LatticePmf:
    """Law of the sum of n iid copies of p, by square-and-multiply.

    n = 0 yields the point mass at 0 (empty sum).
    """
    if n < 0:
        raise ValueError("power n must be >= 0")
    if n == 0:
        return delta(0)
    result = None
    base = p
    while True:
        if n & 1:
            result = base if result is None else convolve_fft(result, base)
        n >>= 1
        if n == 0:
            return result
        base = convolve_fft(base, base)


def convolve_sequence(ps) -> LatticePmf:
    """Left fold of convolve_fft over a nonempty sequence of pmfs."""
    ps = list(ps)
    if not ps:
        raise ValueError("convolve_sequence needs at least one pmf")
    return functools.reduce(convolve_fft, ps)

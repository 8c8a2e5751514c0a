"""Input validation helpers shared by the functional API and the estimators."""

import numpy as np


class ParameterError(ValueError):
    """Raised for invalid code, decoder or simulation parameters."""


def is_power_of_two(n):
    return isinstance(n, (int, np.integer)) and n >= 1 and (n & (n - 1)) == 0


def check_power_of_two(n, name="N", minimum=1):
    if not is_power_of_two(n) or n < minimum:
        raise ParameterError(f"{name} must be a power of two >= {minimum}, got {n!r}")
    return int(n)


def check_bits(bits, length=None, name="bits"):
    """Return ``bits`` as a 1-D uint8 array, checking values are 0/1."""
    arr = np.asarray(bits)
    if arr.ndim != 1:
        raise ParameterError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ParameterError(f"{name} must contain only 0/1 values")
    if length is not None and arr.size != length:
        raise ParameterError(f"{name} must have length {length}, got {arr.size}")
    return arr.astype(np.uint8)


def check_bit_matrix(bits, width, name="X"):
    arr = np.asarray(bits)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ParameterError(f"{name} must have shape (n_frames, {width}), got {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ParameterError(f"{name} must contain only 0/1 values")
    return arr.astype(np.uint8)


def check_llr(llr, length=None, name="llr"):
    arr = np.asarray(llr, dtype=np.float64)
    if arr.ndim != 1:
        raise ParameterError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if length is not None and arr.size != length:
        raise ParameterError(f"{name} must have length {length}, got {arr.size}")
    if not np.isfinite(arr).all():
        raise ParameterError(f"{name} must be finite")
    return arr


def check_llr_matrix(llr, width, name="llr"):
    arr = np.asarray(llr, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ParameterError(f"{name} must have shape (n_frames, {width}), got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ParameterError(f"{name} must be finite")
    return arr


def check_list_size(L):
    if not isinstance(L, (int, np.integer)) or isinstance(L, bool) or L < 1:
        raise ParameterError(f"list size must be a positive integer, got {L!r}")
    return int(L)

"""LLR-domain successive-cancellation primitives (min-sum).

Scalar and array inputs are both accepted; array inputs broadcast.
"""

import numpy as np

from ._validation import ParameterError


def f_op(a, b):
    """Min-sum check-node update. ``sgn(0) = 0``, so a zero input yields 0."""
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def g_op(a, b, beta_l):
    """Variable-node update ``(1 - 2 beta_l) a + b``."""
    return b + (1 - 2 * np.asarray(beta_l, dtype=np.int8)) * a


def combine(beta_l, beta_r):
    """Partial-sum combination of two sibling bit vectors."""
    beta_l = np.asarray(beta_l, dtype=np.uint8)
    beta_r = np.asarray(beta_r, dtype=np.uint8)
    if beta_l.shape != beta_r.shape:
        raise ParameterError(f"sibling widths differ: {beta_l.shape} vs {beta_r.shape}")
    return np.concatenate([beta_l ^ beta_r, beta_r], axis=-1)


def hard_decision(alpha):
    """0 for non-negative LLRs, 1 for negative ones."""
    return (np.asarray(alpha) < 0).astype(np.uint8)


def calc_pm(pm, alpha, beta, length=None):
    """Add ``|alpha_i|`` for every bit that disagrees with its hard decision."""
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = np.asarray(beta)
    if length is not None:
        alpha, beta = alpha[..., :length], beta[..., :length]
    penalty = np.abs(alpha) * (beta != hard_decision(alpha))
    return pm + penalty.sum(axis=-1)


def calc_pm2(pm, alpha, beta, length, gamma, alpha0):
    """SPC variant of :func:`calc_pm`.

    A disagreeing bit costs ``|alpha_i| + (1 - 2 gamma) |alpha0|``: flipping it
    also toggles the parity, which either repairs (``gamma = 1``) or breaks
    (``gamma = 0``) the least-reliable bit.
    """
    alpha = np.asarray(alpha, dtype=np.float64)[..., :length]
    beta = np.asarray(beta)[..., :length]
    miss = beta != hard_decision(alpha)
    penalty = (np.abs(alpha) + (1 - 2 * gamma) * np.abs(alpha0)) * miss
    return pm + penalty.sum(axis=-1)

"""Node decoders operating on a whole path list at once.

Every decoder has the signature ``(paths, alpha, node, conv, L, stats, hook)``
where ``alpha`` holds one LLR row per path. It returns ``(paths, beta,
parent)``: the updated list, the bit vector each surviving path sends back up
the tree, and for every survivor the row of the input list it descends from
(``None`` when the list was not reordered).

``stats`` (a ``collections.Counter`` or ``None``) counts prune steps per node
kind. ``hook`` (callable or ``None``) receives ``(kind, details)`` after each
constituent node and is used by the invariant checks in the test-suite.
"""

import numpy as np

from .code import polar_transform_rows
from .kernel import calc_pm, hard_decision
from .paths import PathList, split
from .plan import NodeKind


def _count(stats, kind, n):
    if stats is not None and n:
        stats[kind] += n


def _with_block(paths, node, v_block, u_block, pm, state, parent=None):
    v = paths.v if parent is None else paths.v[parent]
    u = paths.u if parent is None else paths.u[parent]
    if parent is None:
        v, u = v.copy(), u.copy()
    lo, hi = node.start, node.start + node.width
    v[:, lo:hi] = v_block
    u[:, lo:hi] = u_block
    return PathList(pm, state, v, u, paths.m)


def decode_frozen_leaf(paths, alpha, node, conv, L, stats=None, hook=None):
    a = alpha[:, 0]
    u = conv.output(paths.state)
    pm = paths.pm + np.abs(a) * (u != hard_decision(a))
    state = conv.step(paths.state, 0)
    out = _with_block(paths, node, 0, u[:, None], pm, state)
    return out, u[:, None], None


def decode_info_leaf(paths, alpha, node, conv, L, stats=None, hook=None):
    a = alpha[:, 0]
    hd = hard_decision(a)
    u0 = conv.output(paths.state)
    pm0 = paths.pm + np.abs(a) * (u0 != hd)
    pm1 = paths.pm + np.abs(a) * ((u0 ^ 1) != hd)
    parent, bit, pm = split(pm0, pm1, L)
    _count(stats, NodeKind.GENERAL, 1)
    u = u0[parent] ^ bit
    state = conv.step(paths.state[parent], bit)
    out = _with_block(paths, node, bit[:, None], u[:, None], pm, state, parent)
    return out, u[:, None], parent


def decode_rate0(paths, alpha, node, conv, L, stats=None, hook=None):
    """All message bits frozen: no split, one vector metric update."""
    width = node.width
    zeros = np.zeros((len(paths), width), dtype=np.uint8)
    u = conv.zero_response(paths.state, width)
    beta = polar_transform_rows(u)
    pm = calc_pm(paths.pm, alpha, beta)
    state = conv.advance(paths.state, zeros)
    if hook is not None:
        hook(NodeKind.RATE0, {"alpha": alpha, "beta": beta})
    return _with_block(paths, node, zeros, u, pm, state), beta, None


def decode_rev(paths, alpha, node, conv, L, stats=None, hook=None):
    """Frozen bits followed by one information bit: a single split.

    The two candidate codewords differ only in the last convolution output,
    and the last row of the polar matrix is all ones, so the two ``beta``
    candidates are complements of each other.
    """
    width = node.width
    u0 = conv.zero_response(paths.state, width)
    beta0 = polar_transform_rows(u0)
    beta1 = beta0 ^ 1
    parent, bit, pm = split(calc_pm(paths.pm, alpha, beta0), calc_pm(paths.pm, alpha, beta1), L)
    _count(stats, NodeKind.REV, 1)
    if hook is not None:
        u1 = u0.copy()
        u1[:, -1] ^= 1
        hook(NodeKind.REV, {"beta0": beta0, "beta1": beta1, "u0": u0, "u1": u1})

    v = np.zeros((parent.size, width), dtype=np.uint8)
    v[:, -1] = bit
    u = u0[parent]
    u[:, -1] ^= bit
    beta = beta0[parent] ^ bit[:, None]
    state = conv.advance(paths.state[parent], v)
    return _with_block(paths, node, v, u, pm, state, parent), beta, parent


def decode_rate1(paths, alpha, node, conv, L, stats=None, hook=None):
    """All message bits free: ``min(L - 1, N_o)`` splits on the least reliable positions."""
    width = node.width
    beta = hard_decision(alpha)
    order = np.argsort(np.abs(alpha), axis=1, kind="stable")
    pm, state = paths.pm, paths.state
    lineage = np.arange(len(paths))
    splits = min(L - 1, width)
    for i in range(splits):
        rows = np.arange(pm.size)
        pos = order[:, i]
        a = alpha[rows, pos]
        hd = hard_decision(a)
        absa = np.abs(a)
        parent, bit, pm = split(pm + absa * (hd != 0), pm + absa * (hd != 1), L)
        lineage, order, alpha, beta, state = (
            lineage[parent], order[parent], alpha[parent], beta[parent], state[parent]
        )
        beta[np.arange(parent.size), order[:, i]] = bit
    _count(stats, NodeKind.RATE1, splits)

    u = polar_transform_rows(beta)
    v, state = conv.decode_block(u, state)
    if hook is not None:
        hook(NodeKind.RATE1, {"splits": splits, "alpha": alpha, "beta": beta})
    parent = lineage if splits else None
    return _with_block(paths, node, v, u, pm, state, parent), beta, parent


def decode_spc(paths, alpha, node, conv, L, stats=None, hook=None):
    """First message bit frozen, the rest free.

    The frozen ``v_0`` fixes ``u_0``, which in turn fixes the parity of the
    node's ``beta``. The least reliable position absorbs the parity; only
    positions ``1 .. min(L - 1, N_o - 1)`` of the reliability order are split.
    """
    width = node.width
    entry_state = paths.state
    u_first = conv.output(entry_state)
    beta = hard_decision(alpha)
    gamma = (beta.sum(axis=1) + u_first) & 1
    order = np.argsort(np.abs(alpha), axis=1, kind="stable")
    rows = np.arange(len(paths))
    weakest = np.abs(alpha[rows, order[:, 0]])
    pm = paths.pm + gamma * weakest
    lineage = rows
    splits = min(L - 1, width - 1)
    for i in range(1, splits + 1):
        rows = np.arange(pm.size)
        a = alpha[rows, order[:, i]]
        hd = hard_decision(a)
        # flipping bit i toggles the parity: add or refund the weakest bit
        flip_cost = np.abs(a) + (1 - 2 * gamma.astype(np.int64)) * weakest
        parent, bit, pm = split(pm + flip_cost * (hd != 0), pm + flip_cost * (hd != 1), L)
        flipped = (bit != hd[parent]).astype(np.uint8)
        lineage, order, alpha, beta, weakest, u_first, entry_state = (
            lineage[parent], order[parent], alpha[parent], beta[parent],
            weakest[parent], u_first[parent], entry_state[parent],
        )
        gamma = gamma[parent] ^ flipped
        beta[np.arange(parent.size), order[:, i]] = bit
    _count(stats, NodeKind.SPC, splits)

    rows = np.arange(pm.size)
    beta[rows, order[:, 0]] = 0
    beta[rows, order[:, 0]] = (beta.sum(axis=1) + u_first) & 1
    u = polar_transform_rows(beta)
    v, state = conv.decode_block(u, entry_state)
    if hook is not None:
        hook(NodeKind.SPC, {"beta": beta, "u_first": u_first, "v": v, "alpha": alpha, "pm": pm})
    parent = lineage if splits else None
    return _with_block(paths, node, v, u, pm, state, parent), beta, parent


DECODERS = {
    NodeKind.RATE0: decode_rate0,
    NodeKind.RATE1: decode_rate1,
    NodeKind.REV: decode_rev,
    NodeKind.SPC: decode_spc,
}


def decode_node(paths, alpha, node, conv, L, stats=None, hook=None):
    if node.kind is NodeKind.GENERAL:
        leaf = decode_info_leaf if node.info else decode_frozen_leaf
        return leaf(paths, alpha, node, conv, L, stats, hook)
    return DECODERS[node.kind](paths, alpha, node, conv, L, stats, hook)

"""List and fast list decoding of PAC codes."""

from collections import Counter
from enum import Enum

import numpy as np

from ._validation import ParameterError, check_bits, check_list_size, check_llr
from .kernel import calc_pm, f_op, g_op
from .nodes import decode_node
from .paths import DecodeResult, PathList
from .plan import FOUR_KINDS, THREE_KINDS, classify


class Variant(str, Enum):
    LIST = "list"
    FAST3 = "fast3"
    FAST4 = "fast4"

    @property
    def kinds(self):
        return {"list": frozenset(), "fast3": THREE_KINDS, "fast4": FOUR_KINDS}[self.value]


def parse_variant(value):
    try:
        return Variant(value)
    except ValueError:
        raise ParameterError(f"unknown decoder variant {value!r}; expected list, fast3 or fast4") from None


class TreeDecoder:
    """Successive-cancellation list traversal over a fixed node plan.

    The traversal descends with ``f``/``g`` updates until it reaches a node of
    the plan and hands the node's LLRs to the matching node decoder. With an
    empty set of enabled kinds every node is a single leaf and this is plain
    list decoding.
    """

    def __init__(self, config, L, kinds=frozenset()):
        self.config = config
        self.L = check_list_size(L)
        self.plan = classify(config.profile, kinds)
        self._nodes = self.plan.lookup()
        self.conv = config.packed
        self.stats = Counter()
        self.hook = None

    def decode(self, llr, keep_list=False):
        n = self.config.n
        llr = check_llr(llr, n, name="y_llr")
        paths = PathList.initial(n, self.config.m)
        paths, _, _ = traverse(paths, llr.reshape(1, n), 0, n, self._nodes, self.conv, self.L,
                               self.stats, self.hook)
        best = int(np.argmin(paths.pm))
        info = list(self.config.info_set)
        result = DecodeResult(
            bits=paths.v[best, info].copy(),
            pm=float(paths.pm[best]),
            v=paths.v[best].copy(),
        )
        if keep_list:
            result.survivors = [paths[i] for i in range(len(paths))]
        return result


def traverse(paths, alpha, start, width, nodes, conv, L, stats=None, hook=None):
    """Decode the subtree covering leaves ``start .. start + width - 1``.

    ``nodes`` maps ``(start, width)`` to the :class:`NodeDescriptor` at which
    the descent stops. Returns ``(paths, beta, parent)`` like a node decoder.
    """
    node = nodes.get((start, width))
    if node is not None:
        return decode_node(paths, alpha, node, conv, L, stats, hook)
    half = width // 2
    a, b = alpha[:, :half], alpha[:, half:]
    paths, beta_l, parent_l = traverse(paths, f_op(a, b), start, half, nodes, conv, L, stats, hook)
    if parent_l is not None:
        a, b = a[parent_l], b[parent_l]
    paths, beta_r, parent_r = traverse(paths, g_op(a, b, beta_l), start + half, half, nodes, conv, L, stats, hook)
    if parent_r is not None:
        beta_l = beta_l[parent_r]
    beta = np.concatenate([beta_l ^ beta_r, beta_r], axis=1)
    if parent_l is None:
        parent = parent_r
    else:
        parent = parent_l if parent_r is None else parent_l[parent_r]
    return paths, beta, parent


def decode_list(y_llr, config, L, keep_list=False):
    """Bit-by-bit list decoding; ``L = 1`` is SC decoding of the PAC code."""
    return TreeDecoder(config, L).decode(y_llr, keep_list)


def decode_fast_list(y_llr, config, L, enabled=THREE_KINDS, keep_list=False):
    """List decoding that stops at Rate-0 / Rate-1 / Rev / SPC nodes."""
    return TreeDecoder(config, L, enabled).decode(y_llr, keep_list)


def forced_path_metric(y_llr, v, config):
    """Path metric of the message hypothesis ``v`` under SC with forced decisions.

    Independent of :class:`TreeDecoder`: a direct recursion over the full
    binary tree using the same min-sum updates and leaf penalties.
    """
    n = config.n
    y_llr = check_llr(y_llr, n, name="y_llr")
    v = check_bits(v, n, name="v")
    if v[config.frozen].any():
        raise ParameterError("hypothesis sets a frozen message bit")
    c = config.conv
    state = [0] * config.m
    pm = 0.0

    def leaf(i, a):
        nonlocal state, pm
        u = int(v[i])
        for j in range(1, len(c)):
            if c[j]:
                u ^= state[j - 1]
        state = [int(v[i])] + state[:-1]
        pm = float(calc_pm(pm, [a], [u]))
        return np.array([u], dtype=np.uint8)

    def node(alpha, start):
        if alpha.size == 1:
            return leaf(start, alpha[0])
        half = alpha.size // 2
        a, b = alpha[:half], alpha[half:]
        beta_l = node(f_op(a, b), start)
        beta_r = node(g_op(a, b, beta_l), start + half)
        return np.concatenate([beta_l ^ beta_r, beta_r])

    node(y_llr, 0)
    return pm


def make_decoder(config, L, variant):
    return TreeDecoder(config, L, parse_variant(variant).kinds)

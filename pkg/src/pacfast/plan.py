"""Decomposition of the decoding tree into constituent nodes."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .code import RateProfile


class NodeKind(str, Enum):
    RATE0 = "rate0"
    RATE1 = "rate1"
    REV = "rev"
    SPC = "spc"
    GENERAL = "general"


THREE_KINDS = frozenset({NodeKind.RATE0, NodeKind.RATE1, NodeKind.REV})
FOUR_KINDS = THREE_KINDS | {NodeKind.SPC}

# checked in this order, so an (f, i) pair of width 2 becomes Rev
PRIORITY = (NodeKind.RATE0, NodeKind.RATE1, NodeKind.REV, NodeKind.SPC)


@dataclass(frozen=True)
class NodeDescriptor:
    depth: int
    width: int
    start: int
    kind: NodeKind
    # for General leaves: whether the single bit is an information bit
    info: bool = False

    @property
    def leaves(self):
        return range(self.start, self.start + self.width)


@dataclass(frozen=True)
class NodePlan:
    n: int
    enabled: frozenset
    nodes: tuple

    def lookup(self):
        return {(d.start, d.width): d for d in self.nodes}

    def internal_nodes(self):
        """Number of tree nodes strictly above the plan's nodes."""
        # a full binary tree with len(nodes) leaves has len(nodes) - 1 internal nodes
        return len(self.nodes) - 1

    def counts(self):
        out = {}
        for d in self.nodes:
            out[d.kind] = out.get(d.kind, 0) + 1
        return out


def _match(info, enabled):
    width = info.size
    # width-1 leaves are always decoded as General leaves
    if width < 2:
        return None
    for kind in PRIORITY:
        if kind not in enabled:
            continue
        if kind is NodeKind.RATE0 and not info.any():
            return kind
        if kind is NodeKind.RATE1 and info.all():
            return kind
        if kind is NodeKind.REV and info[-1] and not info[:-1].any():
            return kind
        if kind is NodeKind.SPC and not info[0] and info[1:].all():
            return kind
    return None


def classify(profile, enabled=FOUR_KINDS):
    """Greedy top-down split of the tree into constituent and General nodes.

    ``profile`` is a :class:`RateProfile` (or anything with ``n`` and
    ``info_set``). Each node stops at the first enabled kind it matches; the
    node kinds depend on the message pattern ``v`` only.
    """
    enabled = frozenset(NodeKind(k) for k in enabled)
    if NodeKind.GENERAL in enabled:
        enabled = enabled - {NodeKind.GENERAL}
    if not isinstance(profile, RateProfile):
        profile = RateProfile(profile.n, profile.info_set)
    n = profile.n
    info = ~profile.frozen
    nodes = []

    def visit(depth, start, width):
        kind = _match(info[start:start + width], enabled)
        if kind is not None:
            nodes.append(NodeDescriptor(depth, width, start, kind))
        elif width == 1:
            nodes.append(NodeDescriptor(depth, 1, start, NodeKind.GENERAL, bool(info[start])))
        else:
            half = width // 2
            visit(depth + 1, start, half)
            visit(depth + 1, start + half, half)

    visit(0, 0, n)
    return NodePlan(n, enabled, tuple(nodes))


def plan_kinds_by_leaf(plan):
    """Per-leaf kind labels, handy for display and tests."""
    out = np.empty(plan.n, dtype=object)
    for d in plan.nodes:
        out[d.start:d.start + d.width] = d.kind.value
    return out

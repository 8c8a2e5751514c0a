"""Time-step accounting for list and fast list decoding.

Unit-cost model: one ``f`` stage, one ``g`` stage, one path split and one
vector metric update each take one step; polar and convolutional
re-encoding are free and all per-path work runs in parallel.
"""

import json
from dataclasses import dataclass, field

from ._validation import ParameterError, check_list_size, check_power_of_two
from .decoder import parse_variant
from .plan import NodeKind, classify


def node_time_steps(kind, width, L, variant="fast"):
    """Steps for one constituent node of ``width`` leaves.

    ``variant='list'`` gives the cost of visiting the node's subtree bit by
    bit, ``variant='fast'`` the cost of the dedicated node decoder.
    """
    kind = NodeKind(kind)
    check_power_of_two(width, "N_o")
    L = check_list_size(L)
    if variant == "list":
        table = {
            NodeKind.RATE0: 2 * width - 2,
            NodeKind.RATE1: 3 * width - 2,
            NodeKind.REV: 2 * width - 1,
            NodeKind.SPC: 3 * width - 3,
        }
    elif variant == "fast":
        table = {
            NodeKind.RATE0: 1,
            NodeKind.RATE1: min(L - 1, width),
            NodeKind.REV: 2,
            NodeKind.SPC: min(L, width) + 1,
        }
    else:
        raise ParameterError(f"variant must be 'list' or 'fast', got {variant!r}")
    if kind not in table:
        raise ParameterError(f"no time-step entry for node kind {kind.value!r}")
    return table[kind]


@dataclass
class TimeStepReport:
    variant: str
    n: int
    k: int
    L: int
    traversal: int
    splits: int
    per_kind: dict = field(default_factory=dict)

    @property
    def total(self):
        return self.traversal + self.splits + sum(self.per_kind.values())

    def to_dict(self):
        return {
            "variant": self.variant,
            "N": self.n,
            "K": self.k,
            "L": self.L,
            "traversal": self.traversal,
            "splits": self.splits,
            "perKind": dict(self.per_kind),
            "total": self.total,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        rows = [
            ("variant", self.variant),
            ("code", f"PAC({self.n},{self.k})"),
            ("list size", self.L),
            ("traversal (f/g)", self.traversal),
            ("leaf splits", self.splits),
        ]
        rows += [(f"{kind} nodes", steps) for kind, steps in self.per_kind.items()]
        rows.append(("total", self.total))
        width = max(len(label) for label, _ in rows)
        return "\n".join(f"{label:<{width}}  {value}" for label, value in rows) + "\n"


def total_time_steps(config, L, variant="fast3"):
    """Decoder latency in time steps for one code, list size and variant."""
    L = check_list_size(L)
    variant = parse_variant(variant)
    plan = classify(config.profile, variant.kinds)
    per_kind = {}
    for node in plan.nodes:
        if node.kind is NodeKind.GENERAL:
            continue
        steps = node_time_steps(node.kind, node.width, L, "fast")
        per_kind[node.kind.value] = per_kind.get(node.kind.value, 0) + steps
    splits = sum(1 for node in plan.nodes if node.kind is NodeKind.GENERAL and node.info)
    return TimeStepReport(
        variant=variant.value,
        n=config.n,
        k=config.k,
        L=L,
        traversal=2 * plan.internal_nodes(),
        splits=splits,
        per_kind=per_kind,
    )

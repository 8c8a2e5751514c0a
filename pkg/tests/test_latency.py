import json

import pytest

from pacfast import ParameterError
from pacfast.code import CodeConfig
from pacfast.latency import node_time_steps, total_time_steps
from pacfast.plan import NodeKind


class TestNodeSteps:
    def test_table_entries(self):
        for L in (1, 4, 256):
            assert node_time_steps("rate0", 8, L, "list") == 14
            assert node_time_steps("rate0", 8, L, "fast") == 1
        assert node_time_steps("spc", 4, 64, "fast") == 5
        assert all(node_time_steps("rev", w, L, "fast") == 2 for w in (2, 8, 64) for L in (1, 4, 64))
        assert node_time_steps("rate1", 4, 8, "fast") == 4
        assert node_time_steps("rate1", 16, 8, "fast") == 7
        assert [node_time_steps(k, 4, 4, "list") for k in ("rate1", "rev", "spc")] == [10, 7, 9]

    @pytest.mark.parametrize("kind", ["rate0", "rate1", "rev", "spc"])
    @pytest.mark.parametrize("width", [2, 4, 8, 16, 32])
    def test_list_column_is_subtree_cost(self, kind, width):
        # bit-by-bit: 2 steps per internal node plus one per information leaf
        k = {"rate0": 0, "rate1": width, "rev": 1, "spc": width - 1}[kind]
        assert node_time_steps(kind, width, 4, "list") == 2 * (width - 1) + k

    def test_errors(self):
        with pytest.raises(ParameterError):
            node_time_steps("rate0", 6, 4)
        with pytest.raises(ParameterError):
            node_time_steps("general", 4, 4)
        with pytest.raises(ValueError):
            node_time_steps("rep", 4, 4)
        with pytest.raises(ParameterError):
            node_time_steps("rev", 4, 4, "fastest")


@pytest.mark.parametrize("n,k,L,row", [
    (128, 64, 4, (318, 143, 108)),
    (256, 128, 16, (638, 267, 215)),
])
def test_headline_rows(n, k, L, row):
    cfg = CodeConfig.rm(n, k)
    assert tuple(total_time_steps(cfg, L, v).total for v in ("list", "fast3", "fast4")) == row


@pytest.mark.parametrize("n,k", [(8, 4), (32, 16), (64, 10), (128, 96), (256, 200)])
def test_list_baseline_and_ordering(n, k):
    cfg = CodeConfig.rm(n, k)
    previous = None
    for L in (1, 2, 4, 8, 16, 64, 256, 1024):
        totals = [total_time_steps(cfg, L, v).total for v in ("list", "fast3", "fast4")]
        assert totals[0] == 2 * n - 2 + k
        assert totals[2] <= totals[1] <= totals[0]
        if previous is not None:
            assert all(a <= b for a, b in zip(previous, totals))
        previous = totals
    assert previous == [total_time_steps(cfg, n, v).total for v in ("list", "fast3", "fast4")]


def test_report_fields():
    rep = total_time_steps(CodeConfig.rm(128, 64), 4, "fast4")
    d = json.loads(rep.to_json())
    assert list(d) == ["variant", "N", "K", "L", "traversal", "splits", "perKind", "total"]
    assert d["total"] == rep.traversal + rep.splits + sum(rep.per_kind.values()) == 108
    assert set(d["perKind"]) <= {k.value for k in NodeKind}
    assert rep.to_text().splitlines()[-1].split() == ["total", "108"]

"""Acceptance criteria, one test per criterion.

Each test prints a ``PASS``/``FAIL`` line with the measured numbers. Run
``pytest tests/test_acceptance.py -v -s`` or ``python3 tests/test_acceptance.py``.
"""

import itertools
import subprocess
import sys
from collections import Counter

import numpy as np
import pytest
from _helpers import PAC_8_4, pm_close

from pacfast.code import (
    CodeConfig,
    conv_decode,
    conv_encode,
    insert_message,
    pac_encode_rows,
    polar_matrix,
    polar_transform,
)
from pacfast.decoder import TreeDecoder, forced_path_metric
from pacfast.latency import total_time_steps
from pacfast.plan import FOUR_KINDS, THREE_KINDS, NodeKind
from pacfast.sim import binomial_sigma, bpsk_modulate, channel_llr, ebn0_to_sigma, make_frames, run_fer

EQUIV_FRAMES = 10_000
ML_FRAMES = 1_000
NODE_FRAMES = 1_000
ROUNDTRIP_VECTORS = 10_000
EBN0_CYCLE = (0.5, 1.5, 2.5, 3.5)

TABLE = {
    (128, 32, 4): (286, 75, 72),
    (128, 32, 64): (286, 81, 78),
    (128, 64, 4): (318, 143, 108),
    (128, 64, 16): (318, 152, 132),
    (128, 64, 64): (318, 152, 132),
    (128, 64, 256): (318, 152, 132),
    (128, 96, 4): (350, 145, 86),
    (128, 96, 64): (350, 179, 150),
    (256, 128, 4): (638, 233, 163),
    (256, 128, 16): (638, 267, 215),
    (256, 128, 64): (638, 268, 231),
}


def report(capsys, name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def paired_llrs(config, seed, count):
    """Frame ``t`` at Eb/N0 ``EBN0_CYCLE[t % 4]`` from the keyed per-frame streams."""
    D, Z = make_frames(config, seed, 0, count)
    X = bpsk_modulate(pac_encode_rows(D, config))
    sigma = np.array([ebn0_to_sigma(EBN0_CYCLE[t % 4], config.rate) for t in range(count)])[:, None]
    return D, channel_llr(X + sigma * Z, 1.0) / sigma**2


# -- criteria -----------------------------------------------------------------


def check_time_steps():
    bad = []
    for (n, k, L), row in TABLE.items():
        got = tuple(total_time_steps(CodeConfig.rm(n, k), L, v).total for v in ("list", "fast3", "fast4"))
        if got != row:
            bad.append(f"PAC({n},{k}) L={L}: {got} != {row}")
    return not bad, f"{len(TABLE) - len(bad)}/{len(TABLE)} rows exact" + ("; " + "; ".join(bad) if bad else "")


def check_equivalence(frames=EQUIV_FRAMES):
    codes = [("PAC(8,4)", PAC_8_4), ("PAC(64,32)", CodeConfig.rm(64, 32)), ("PAC(128,64)", CodeConfig.rm(128, 64))]
    total = bit_bad = pm_bad = 0
    worst = 0.0
    for seed, (_, cfg) in enumerate(codes):
        _, llrs = paired_llrs(cfg, seed, frames)
        for L in (1, 2, 4, 8):
            ref, fast = TreeDecoder(cfg, L), TreeDecoder(cfg, L, THREE_KINDS)
            for llr in llrs:
                a, b = ref.decode(llr), fast.decode(llr)
                total += 1
                bit_bad += not np.array_equal(a.bits, b.bits)
                pm_bad += not pm_close(a.pm, b.pm, 1e-9)
                if a.pm:
                    worst = max(worst, abs(a.pm - b.pm) / a.pm)
    ok = bit_bad == 0 and pm_bad == 0
    return ok, (f"{total} decodes over 3 codes x L in 1,2,4,8; {bit_bad} bit mismatches, "
                f"{pm_bad} pm mismatches, max rel pm diff {worst:.1e}")


def check_ml_oracle(frames=ML_FRAMES):
    messages = np.array(list(itertools.product((0, 1), repeat=4)), dtype=np.uint8)
    hypotheses = [insert_message(d, PAC_8_4) for d in messages]
    _, llrs = paired_llrs(PAC_8_4, 100, frames)
    dec = TreeDecoder(PAC_8_4, 16)
    bad = 0
    for llr in llrs:
        metrics = [forced_path_metric(llr, v, PAC_8_4) for v in hypotheses]
        res = dec.decode(llr)
        best = int(np.argmin(metrics))
        bad += not (np.array_equal(res.bits, messages[best]) and pm_close(res.pm, metrics[best]))
    return bad == 0, f"{frames - bad}/{frames} frames equal the exhaustive argmin"


def check_structure():
    failures = Counter()
    for n in range(0, 11):
        G = polar_matrix(n)
        failures["last row all ones"] += not G[-1].all()
        failures["row parity"] += not (G[0].sum() == 1 and G[0, 0] == 1 and not (G[1:].sum(axis=1) % 2).any())

    invocations = Counter()

    def hook(kind, d):
        invocations[kind] += 1
        if kind is NodeKind.REV:
            failures["rev complement"] += int(np.any(d["beta0"] ^ d["beta1"] != 1))
        elif kind is NodeKind.SPC:
            failures["spc parity"] += int(np.any(d["beta"].sum(axis=1) % 2 != d["u_first"]))

    for cfg, L in ((CodeConfig.rm(128, 64), 8), (CodeConfig.rm(256, 128), 4)):
        dec = TreeDecoder(cfg, L, FOUR_KINDS)
        dec.hook = hook
        for llr in paired_llrs(cfg, 200, NODE_FRAMES // 2)[1]:
            dec.decode(llr)

    rng = np.random.default_rng(300)
    for i in range(ROUNDTRIP_VECTORS):
        n = 1 << int(rng.integers(0, 11))
        u = rng.integers(0, 2, n, dtype=np.uint8)
        failures["involution"] += not np.array_equal(polar_transform(polar_transform(u)), u)
        c = (1,) + tuple(int(b) for b in rng.integers(0, 2, int(rng.integers(0, 7)))) + (1,)
        v = rng.integers(0, 2, int(rng.integers(1, 257)), dtype=np.uint8)
        failures["conv round-trip"] += not np.array_equal(conv_decode(conv_encode(v, c), c), v)

    ok = sum(failures.values()) == 0 and invocations[NodeKind.REV] > 0 and invocations[NodeKind.SPC] > 0
    return ok, (f"polar rows n<=10, {NODE_FRAMES} frames with {invocations[NodeKind.REV]} Rev and "
                f"{invocations[NodeKind.SPC]} SPC invocations, {ROUNDTRIP_VECTORS} round-trip vectors; "
                f"failures {dict(failures) if sum(failures.values()) else 0}")


def check_desk_fer():
    cfg = CodeConfig.rm(128, 64)
    # independent seeds, so the comparison is a genuine two-sample check
    a = run_fer(cfg, 4, "fast3", [2.5], min_errors=500, seed=11)[0]
    b = run_fer(cfg, 4, "fast4", [2.5], min_errors=500, seed=12)[0]
    sigma = np.hypot(binomial_sigma(a.fer, a.frames), binomial_sigma(b.fer, b.frames))
    gap = abs(a.fer - b.fer)
    ok = a.errors >= 500 and b.errors >= 500 and gap <= 3 * sigma
    return ok, (f"fast3 {a.errors}/{a.frames} = {a.fer:.4e}, fast4 {b.errors}/{b.frames} = {b.fer:.4e}, "
                f"|diff| = {gap / sigma:.2f} sigma")


def check_determinism(tmp_path):
    outputs = []
    for workers in (1, 8):
        out = tmp_path / f"w{workers}.csv"
        cmd = [sys.executable, "-m", "pacfast", "simulate", "--n", "64", "--k", "32", "--list-size", "4",
               "--variant", "fast3", "--ebn0", "1:1:3", "--min-errors", "40", "--seed", "7",
               "--workers", str(workers), "--out", str(out)]
        subprocess.run(cmd, check=True)
        outputs.append(out.read_bytes())
    ok = outputs[0] == outputs[1]
    return ok, f"workers 1 vs 8: {'byte-identical' if ok else 'different'} CSV ({len(outputs[0])} bytes)"


# -- pytest entry points -------------------------------------------------------


def test_time_step_table(capsys):
    assert report(capsys, "time-step table", *check_time_steps())


@pytest.mark.slow
def test_fast3_list_equivalence(capsys):
    assert report(capsys, "fast3/list equivalence", *check_equivalence())


def test_ml_oracle(capsys):
    assert report(capsys, "ML oracle", *check_ml_oracle())


def test_structural_properties(capsys):
    assert report(capsys, "structural properties", *check_structure())


@pytest.mark.slow
def test_desk_fer(capsys):
    assert report(capsys, "desk FER fast4 vs fast3", *check_desk_fer())


def test_simulate_determinism(capsys, tmp_path):
    assert report(capsys, "simulate determinism", *check_determinism(tmp_path))


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        results = [
            report(None, "time-step table", *check_time_steps()),
            report(None, "fast3/list equivalence", *check_equivalence()),
            report(None, "ML oracle", *check_ml_oracle()),
            report(None, "structural properties", *check_structure()),
            report(None, "desk FER fast4 vs fast3", *check_desk_fer()),
            report(None, "simulate determinism", *check_determinism(Path(tmp))),
        ]
    sys.exit(0 if all(results) else 1)

"""Monte-Carlo frame-error-rate simulation over BPSK / BI-AWGN."""

import csv
import io
import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._validation import ParameterError, check_list_size
from .code import pac_encode_rows
from .decoder import make_decoder, parse_variant

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("ebn0_db", "frames", "errors", "fer", "variant", "n", "k", "list_size", "seed")
CHUNK = 128


def bpsk_modulate(x):
    """Map bit 0 to +1 and bit 1 to -1."""
    return 1.0 - 2.0 * np.asarray(x, dtype=np.float64)


def ebn0_to_sigma(ebn0_db, rate):
    if rate <= 0:
        raise ParameterError("code rate must be positive to map Eb/N0 to a noise level")
    return math.sqrt(1.0 / (2.0 * rate * 10.0 ** (ebn0_db / 10.0)))


def awgn_channel(sym, sigma, seed=None):
    """Add white Gaussian noise of standard deviation ``sigma``.

    ``seed`` may be anything accepted by ``numpy.random.default_rng``.
    """
    if sigma < 0:
        raise ParameterError("sigma must be non-negative")
    sym = np.asarray(sym, dtype=np.float64)
    rng = np.random.default_rng(seed)
    return sym + sigma * rng.standard_normal(sym.shape)


def channel_llr(y, sigma):
    """LLR ``2 y / sigma^2``; positive values favour bit 0."""
    if sigma <= 0:
        raise ParameterError("sigma must be positive")
    return 2.0 * np.asarray(y, dtype=np.float64) / sigma**2


def frame_streams(seed, frame):
    """Independent data and noise generators for one frame index."""
    data = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(frame, 0)))
    noise = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(frame, 1)))
    return data, noise


def make_frames(config, seed, start, stop):
    """Messages and unit-variance noise for frames ``start .. stop - 1``."""
    count = stop - start
    D = np.empty((count, config.k), dtype=np.uint8)
    Z = np.empty((count, config.n))
    for j, frame in enumerate(range(start, stop)):
        data, noise = frame_streams(seed, frame)
        D[j] = data.integers(0, 2, config.k, dtype=np.uint8)
        Z[j] = noise.standard_normal(config.n)
    return D, Z


@dataclass
class FerRecord:
    ebn0_db: float
    frames: int
    errors: int
    fer: float
    wall_time_seconds: float = 0.0


def _frame_errors(decoder, config, sigma, seed, start, stop):
    D, Z = make_frames(config, seed, start, stop)
    X = pac_encode_rows(D, config)
    Y = bpsk_modulate(X) + sigma * Z
    errors = np.zeros(stop - start, dtype=bool)
    for j in range(stop - start):
        errors[j] = not np.array_equal(decoder.decode(channel_llr(Y[j], sigma)).bits, D[j])
    return errors


_worker = {}


def _init_worker(config, L, variant):
    _worker["decoder"] = make_decoder(config, L, variant)
    _worker["config"] = config


def _run_chunk(args):
    sigma, seed, start, stop = args
    return _frame_errors(_worker["decoder"], _worker["config"], sigma, seed, start, stop)


def _simulate_point(submit, config, ebn0, min_errors, max_frames, seed, wave):
    sigma = ebn0_to_sigma(ebn0, config.rate)
    frames = errors = 0
    next_start = 0
    while frames < max_frames and errors < min_errors:
        jobs = []
        for _ in range(wave):
            if next_start >= max_frames:
                break
            stop = min(next_start + CHUNK, max_frames)
            jobs.append(submit((sigma, seed, next_start, stop)))
            next_start = stop
        for job in jobs:
            flags = job() if callable(job) else job.result()
            if errors >= min_errors:
                continue
            cumulative = errors + np.cumsum(flags)
            hit = np.flatnonzero(cumulative >= min_errors)
            if hit.size:
                frames += int(hit[0]) + 1
                errors = min_errors
            else:
                frames += flags.size
                errors = int(cumulative[-1]) if flags.size else errors
    return frames, errors


def run_fer(config, L, variant, ebn0_list, min_errors=500, max_frames=10**7, seed=0, workers=1):
    """Simulate each Eb/N0 point until ``min_errors`` frame errors or ``max_frames`` frames.

    Frame ``t`` draws its message and noise from streams keyed by
    ``(seed, t)``, and a point stops at the exact frame where the error count
    reaches ``min_errors``. The records therefore do not depend on
    ``workers``, and different variants see the same frames.
    """
    L = check_list_size(L)
    variant = parse_variant(variant).value
    if not isinstance(min_errors, int) or min_errors < 1:
        raise ParameterError("min_errors must be a positive integer")
    if not isinstance(max_frames, int) or max_frames < 1:
        raise ParameterError("max_frames must be a positive integer")
    if workers < 1:
        raise ParameterError("workers must be >= 1")

    records = []
    if workers == 1:
        _init_worker(config, L, variant)
        pool = None

        def submit(args):
            return lambda: _run_chunk(args)
    else:
        pool = ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(config, L, variant))
        submit = lambda args: pool.submit(_run_chunk, args)  # noqa: E731
    try:
        for ebn0 in ebn0_list:
            t0 = time.perf_counter()
            frames, errors = _simulate_point(submit, config, ebn0, min_errors, max_frames, seed, workers)
            rec = FerRecord(float(ebn0), frames, errors, errors / frames, time.perf_counter() - t0)
            logger.info("%s L=%d %s Eb/N0=%.2f dB: %d/%d FER=%.3e", config, L, variant,
                        ebn0, errors, frames, rec.fer)
            records.append(rec)
    finally:
        if pool is not None:
            pool.shutdown()
    return records


def records_to_csv(records, variant, config, L, seed):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([repr(r.ebn0_db), r.frames, r.errors, repr(r.fer), variant,
                         config.n, config.k, L, seed])
    return buf.getvalue()


def records_to_json(records, variant, config, L, seed):
    payload = {
        "variant": variant,
        "n": config.n,
        "k": config.k,
        "list_size": L,
        "seed": seed,
        "records": [
            {"ebn0Db": r.ebn0_db, "frames": r.frames, "errors": r.errors, "fer": r.fer,
             "wallTimeSeconds": r.wall_time_seconds}
            for r in records
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def binomial_sigma(fer, frames):
    return math.sqrt(fer * (1.0 - fer) / frames)

"""Command-line interface: ``simulate``, ``latency``, ``profile``, ``encode-check``."""

import argparse
import logging
import sys

import numpy as np

from ._validation import ParameterError
from .code import DEFAULT_CONV, CodeConfig, pac_encode_rows, read_profile, rm_profile
from .decoder import TreeDecoder, Variant
from .latency import total_time_steps
from .plan import classify
from .sim import records_to_csv, records_to_json, run_fer

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_IO = 0, 1, 2, 3


def parse_bits(text):
    try:
        return tuple(int(b) for b in text.split(","))
    except ValueError:
        raise ParameterError(f"expected comma-separated bits, got {text!r}") from None


def parse_ebn0(text):
    """``start:step:stop`` (inclusive) or a single value."""
    try:
        parts = [float(p) for p in text.split(":")]
    except ValueError:
        raise ParameterError(f"bad Eb/N0 range {text!r}") from None
    if len(parts) == 1:
        return parts
    if len(parts) != 3 or parts[1] <= 0 or parts[2] < parts[0]:
        raise ParameterError(f"Eb/N0 range must be start:step:stop with step > 0, got {text!r}")
    start, step, stop = parts
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def load_config(args):
    conv = parse_bits(args.conv) if getattr(args, "conv", None) else DEFAULT_CONV
    spec = args.profile
    if spec == "rm":
        profile = rm_profile(args.n, args.k)
    elif spec.startswith("file:"):
        profile = read_profile(spec[len("file:"):])
        if profile.n != args.n or profile.k != args.k:
            raise ParameterError(f"profile file describes ({profile.n}, {profile.k}), not ({args.n}, {args.k})")
    else:
        raise ParameterError(f"--profile must be 'rm' or 'file:PATH', got {spec!r}")
    return CodeConfig.from_profile(profile, conv)


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_simulate(args):
    config = load_config(args)
    records = run_fer(config, args.list_size, args.variant, parse_ebn0(args.ebn0),
                      min_errors=args.min_errors, max_frames=args.max_frames,
                      seed=args.seed, workers=args.workers)
    render = records_to_csv if args.format == "csv" else records_to_json
    _emit(render(records, args.variant, config, args.list_size, args.seed), args.out)
    return EXIT_OK


def cmd_latency(args):
    config = load_config(args)
    variants = [v.value for v in Variant] if args.variant == "all" else [args.variant]
    reports = [total_time_steps(config, args.list_size, v) for v in variants]
    if args.format == "json":
        import json

        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit("\n".join(r.to_text() for r in reports), args.out)
    return EXIT_OK


def cmd_profile(args):
    config = load_config(args)
    text = config.profile.to_text()
    if args.plan:
        plan = classify(config.profile, Variant(args.plan).kinds)
        lines = [f"# {d.kind.value:<7} depth={d.depth} leaves={d.start}..{d.start + d.width - 1}"
                 for d in plan.nodes]
        text += "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_encode_check(args):
    """Noiseless loopback through every decoder variant."""
    config = load_config(args)
    rng = np.random.default_rng(args.seed)
    D = rng.integers(0, 2, (args.frames, config.k), dtype=np.uint8)
    llr = 20.0 * (1.0 - 2.0 * pac_encode_rows(D, config))
    ok = True
    for variant in Variant:
        decoder = TreeDecoder(config, args.list_size, variant.kinds)
        bad = sum(not np.array_equal(decoder.decode(row).bits, d) for row, d in zip(llr, D))
        ok &= bad == 0
        print(f"{variant.value:<6} {args.frames - bad}/{args.frames} frames recovered")
    return EXIT_OK if ok else EXIT_FAIL


def _code_args(p, with_conv=True):
    p.add_argument("--n", type=int, default=128, help="code length N")
    p.add_argument("--k", type=int, default=64, help="information length K")
    p.add_argument("--profile", default="rm", help="'rm' or 'file:PATH'")
    if with_conv:
        p.add_argument("--conv", default=",".join(map(str, DEFAULT_CONV)),
                       help="impulse response, comma-separated bits")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="pacfast", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    variants = [v.value for v in Variant]

    p = sub.add_parser("simulate", help="Monte-Carlo FER over BPSK/AWGN")
    _code_args(p)
    p.add_argument("--list-size", type=int, default=4)
    p.add_argument("--variant", choices=variants, default="fast3")
    p.add_argument("--ebn0", default="1:0.5:3", help="start:step:stop in dB, inclusive")
    p.add_argument("--min-errors", type=int, default=500)
    p.add_argument("--max-frames", type=int, default=10**7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("latency", help="time-step report")
    _code_args(p)
    p.add_argument("--list-size", type=int, default=4)
    p.add_argument("--variant", choices=variants + ["all"], default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_latency)

    p = sub.add_parser("profile", help="print a rate profile")
    _code_args(p, with_conv=False)
    p.add_argument("--plan", choices=("fast3", "fast4"), help="also list the node decomposition")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("encode-check", help="noiseless loopback through all decoders")
    _code_args(p)
    p.add_argument("--list-size", type=int, default=4)
    p.add_argument("--frames", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_encode_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Fast list decoders for polarization-adjusted convolutional (PAC) codes."""

from ._validation import ParameterError
from .code import (
    DEFAULT_CONV,
    CodeConfig,
    RateProfile,
    conv_bit_enc,
    conv_bit_inv_enc,
    conv_encode,
    pac_encode,
    polar_transform,
    rm_profile,
)
from .decoder import Variant, decode_fast_list, decode_list, forced_path_metric
from .estimators import PACDecoder, PACEncoder
from .latency import TimeStepReport, node_time_steps, total_time_steps
from .plan import NodeKind, classify
from .sim import FerRecord, awgn_channel, bpsk_modulate, channel_llr, run_fer

__all__ = [
    "DEFAULT_CONV",
    "CodeConfig",
    "FerRecord",
    "NodeKind",
    "PACDecoder",
    "PACEncoder",
    "ParameterError",
    "RateProfile",
    "TimeStepReport",
    "Variant",
    "awgn_channel",
    "bpsk_modulate",
    "channel_llr",
    "classify",
    "conv_bit_enc",
    "conv_bit_inv_enc",
    "conv_encode",
    "decode_fast_list",
    "decode_list",
    "forced_path_metric",
    "node_time_steps",
    "pac_encode",
    "polar_transform",
    "rm_profile",
    "run_fer",
    "total_time_steps",
]

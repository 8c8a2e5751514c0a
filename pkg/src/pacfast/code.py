"""PAC code construction and encoding.

A PAC code is fixed by ``(N, K, A, c)``: the message ``d`` is placed on the
information set ``A`` of an otherwise-zero vector ``v``, convolved with the
impulse response ``c`` to give ``u``, and polar transformed to give ``x``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from ._validation import ParameterError, check_bits, check_power_of_two

DEFAULT_CONV = (1, 0, 1, 1, 0, 1, 1)


@dataclass(frozen=True)
class RateProfile:
    """Information set of a length-``n`` message vector."""

    n: int
    info_set: tuple

    def __post_init__(self):
        check_power_of_two(self.n, "N", minimum=2)
        info = tuple(sorted(int(i) for i in self.info_set))
        if len(set(info)) != len(info):
            raise ParameterError("information indices must be distinct")
        if info and (info[0] < 0 or info[-1] >= self.n):
            raise ParameterError(f"information indices must lie in [0, {self.n})")
        object.__setattr__(self, "info_set", info)

    @property
    def k(self):
        return len(self.info_set)

    @property
    def frozen(self):
        """Boolean mask, True at frozen positions."""
        mask = np.ones(self.n, dtype=bool)
        mask[list(self.info_set)] = False
        return mask

    def to_text(self):
        lines = [f"{self.n} {self.k}"]
        if self.info_set:
            lines.append(" ".join(str(i) for i in self.info_set))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        # '#' starts a comment, so annotated output of `pacfast profile --plan` reads back
        tokens = " ".join(line.split("#", 1)[0] for line in text.splitlines()).split()
        if len(tokens) < 2:
            raise ParameterError("profile text must start with 'N K'")
        try:
            values = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParameterError(f"profile text contains a non-integer token: {exc}") from None
        n, k, info = values[0], values[1], values[2:]
        if len(info) != k:
            raise ParameterError(f"profile declares K={k} but lists {len(info)} indices")
        return cls(n, tuple(info))


def read_profile(path):
    with open(path) as fh:
        return RateProfile.from_text(fh.read())


def write_profile(profile, path):
    with open(path, "w") as fh:
        fh.write(profile.to_text())


def rm_profile(N, K):
    """Reed-Muller rate profile.

    Picks the ``K`` indices whose binary expansion has the largest Hamming
    weight. Among indices of equal weight the larger index wins.
    """
    check_power_of_two(N, "N", minimum=2)
    if not 0 <= K <= N:
        raise ParameterError(f"K must satisfy 0 <= K <= N, got K={K}, N={N}")
    order = sorted(range(N), key=lambda i: (bin(i).count("1"), i), reverse=True)
    return RateProfile(N, tuple(order[:K]))


def check_conv(c):
    c = tuple(int(b) for b in c)
    if not c or any(b not in (0, 1) for b in c):
        raise ParameterError("impulse response must be a non-empty 0/1 sequence")
    if c[0] != 1 or c[-1] != 1:
        raise ParameterError("impulse response must satisfy c[0] = c[m] = 1")
    return c


@dataclass(frozen=True)
class CodeConfig:
    """One PAC code ``(N, K, A, c)``."""

    n: int
    k: int
    info_set: tuple
    conv: tuple = DEFAULT_CONV

    def __post_init__(self):
        profile = RateProfile(self.n, self.info_set)
        if profile.k != self.k:
            raise ParameterError(f"|A| = {profile.k} does not match K = {self.k}")
        object.__setattr__(self, "info_set", profile.info_set)
        object.__setattr__(self, "conv", check_conv(self.conv))

    @classmethod
    def from_profile(cls, profile, conv=DEFAULT_CONV):
        return cls(profile.n, profile.k, profile.info_set, conv)

    @classmethod
    def rm(cls, N, K, conv=DEFAULT_CONV):
        return cls.from_profile(rm_profile(N, K), conv)

    @property
    def m(self):
        return len(self.conv) - 1

    @property
    def rate(self):
        return self.k / self.n

    @property
    def profile(self):
        return RateProfile(self.n, self.info_set)

    @cached_property
    def frozen(self):
        return self.profile.frozen

    @cached_property
    def packed(self):
        return packed_convolution(self.conv)

    def __str__(self):
        return f"PAC({self.n},{self.k})"


# -- convolution ---------------------------------------------------------------


def conv_bit_enc(v, s, c):
    """Push one bit through the shift register.

    ``s`` holds the ``m`` register bits, most recent input first. Returns the
    output bit and the new register contents.
    """
    u = v * c[0]
    for i in range(1, len(c)):
        if c[i]:
            u ^= s[i - 1]
    s_next = (v,) + tuple(s[:-1]) if len(s) else ()
    return u, s_next


def conv_bit_inv_enc(u, s, c):
    """Recover the input bit that makes :func:`conv_bit_enc` emit ``u``."""
    u_zero, _ = conv_bit_enc(0, s, c)
    v = 0 if u_zero == u else 1
    s_next = (v,) + tuple(s[:-1]) if len(s) else ()
    return v, s_next


def conv_encode(v, c):
    """Convolve ``v`` with ``c`` starting from the zero state (``u = vT``)."""
    c = check_conv(c)
    v = check_bits(v, name="v")
    s = (0,) * (len(c) - 1)
    u = np.empty_like(v)
    for i, bit in enumerate(v):
        u[i], s = conv_bit_enc(int(bit), s, c)
    return u


def conv_decode(u, c):
    """Inverse of :func:`conv_encode`."""
    c = check_conv(c)
    u = check_bits(u, name="u")
    s = (0,) * (len(c) - 1)
    v = np.empty_like(u)
    for i, bit in enumerate(u):
        v[i], s = conv_bit_inv_enc(int(bit), s, c)
    return v


def toeplitz_matrix(c, width):
    """Upper-triangular Toeplitz matrix ``T`` with ``T[i, i + j] = c[j]``."""
    T = np.zeros((width, width), dtype=np.uint8)
    for j, cj in enumerate(c):
        if cj and j < width:
            T += np.eye(width, k=j, dtype=np.uint8)
    return T


# -- polar transform -----------------------------------------------------------


def polar_matrix(n):
    """``P^{(x) n}`` for ``P = [[1, 0], [1, 1]]``."""
    P = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    G = np.ones((1, 1), dtype=np.uint8)
    for _ in range(n):
        G = np.kron(P, G)
    return G


def polar_transform_rows(u):
    """Apply the polar transform to every row of a 2-D bit array."""
    x = np.array(u, dtype=np.uint8, copy=True)
    rows, width = x.shape
    h = 1
    while h < width:
        view = x.reshape(rows, width // (2 * h), 2, h)
        view[:, :, 0, :] ^= view[:, :, 1, :]
        h *= 2
    return x


def polar_transform(u):
    """``x = u P_n`` over GF(2). The transform is its own inverse."""
    u = check_bits(u, name="u")
    check_power_of_two(u.size, "length of u")
    return polar_transform_rows(u.reshape(1, -1))[0]


# -- encoding ------------------------------------------------------------------


def insert_message(d, config):
    d = check_bits(d, config.k, name="d")
    v = np.zeros(config.n, dtype=np.uint8)
    v[list(config.info_set)] = d
    return v


def pac_encode(d, config):
    """Rate-profile, convolve and polar transform the message ``d``."""
    v = insert_message(d, config)
    return polar_transform(conv_encode(v, config.conv))


def pac_encode_rows(D, config):
    """Vectorised :func:`pac_encode` over the rows of ``D``."""
    D = np.asarray(D, dtype=np.uint8)
    V = np.zeros((D.shape[0], config.n), dtype=np.uint8)
    V[:, list(config.info_set)] = D
    U = (V.astype(np.int64) @ toeplitz_matrix(config.conv, config.n).astype(np.int64)) % 2
    return polar_transform_rows(U.astype(np.uint8))


# -- packed register arithmetic ------------------------------------------------


class PackedConvolution:
    """Shift-register arithmetic on integer-packed states.

    Bit ``j`` of a packed state is register cell ``s_j``. Block operations
    work on many paths at once and are exactly equivalent to repeated
    :func:`conv_bit_enc` / :func:`conv_bit_inv_enc` calls.
    """

    def __init__(self, c):
        self.c = check_conv(c)
        self.m = len(self.c) - 1
        self.mask = (1 << self.m) - 1
        self.taps = sum(1 << (j - 1) for j in range(1, self.m + 1) if self.c[j])
        states = np.arange(1 << self.m)
        self.parity = np.array([bin(s & self.taps).count("1") & 1 for s in states], dtype=np.uint8)
        self._blocks = {}

    def output(self, states):
        """Output bit for input 0 from each state."""
        return self.parity[states]

    def step(self, states, v):
        return ((states << 1) | v) & self.mask

    def _block(self, width):
        if width not in self._blocks:
            T = toeplitz_matrix(self.c, width).astype(np.int64)
            # inverse series of c(D) modulo 2, truncated to the block
            g = np.zeros(width, dtype=np.int64)
            g[0] = 1
            for k in range(1, width):
                g[k] = sum(self.c[j] * g[k - j] for j in range(1, min(k, self.m) + 1)) & 1
            Tinv = np.zeros((width, width), dtype=np.int64)
            for j in range(width):
                if g[j]:
                    Tinv += np.eye(width, k=j, dtype=np.int64)
            zero = np.zeros((1 << self.m, width), dtype=np.uint8)
            s = np.arange(1 << self.m)
            for i in range(width):
                zero[:, i] = self.parity[s]
                s = (s << 1) & self.mask
            weights = np.array(
                [1 << (width - 1 - j) if width - 1 - j < self.m else 0 for j in range(width)],
                dtype=np.int64,
            )
            self._blocks[width] = (T, Tinv, zero, weights)
        return self._blocks[width]

    def zero_response(self, states, width):
        """Outputs for ``width`` zero inputs from each state, shape (P, width)."""
        return self._block(width)[2][states]

    def advance(self, states, v_rows):
        """Register states after feeding the rows of ``v_rows``."""
        width = v_rows.shape[1]
        weights = self._block(width)[3]
        shifted = (states << width) & self.mask if width < self.m else 0
        return shifted | (v_rows.astype(np.int64) @ weights)

    def encode_block(self, v_rows, states):
        T, _, zero, _ = self._block(v_rows.shape[1])
        u = ((v_rows.astype(np.int64) @ T) & 1).astype(np.uint8) ^ zero[states]
        return u, self.advance(states, v_rows)

    def decode_block(self, u_rows, states):
        _, Tinv, zero, _ = self._block(u_rows.shape[1])
        v = (((u_rows ^ zero[states]).astype(np.int64) @ Tinv) & 1).astype(np.uint8)
        return v, self.advance(states, v)


@lru_cache(maxsize=None)
def packed_convolution(c):
    return PackedConvolution(c)


def pack_state(s):
    return sum(int(b) << j for j, b in enumerate(s))


def unpack_state(state, m):
    return tuple((int(state) >> j) & 1 for j in range(m))

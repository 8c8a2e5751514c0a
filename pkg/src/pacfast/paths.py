"""Path bookkeeping for list decoding.

All hypotheses live in one :class:`PathList` of row-aligned arrays so that
node decoders can update every path with a handful of array operations.
"""

from dataclasses import dataclass, field

import numpy as np

from .code import unpack_state


@dataclass(frozen=True)
class Path:
    """Read-only view of a single list entry."""

    pm: float
    state: tuple
    v: np.ndarray
    u: np.ndarray


@dataclass
class PathList:
    pm: np.ndarray  # (P,) float64
    state: np.ndarray  # (P,) int64 packed register
    v: np.ndarray  # (P, N) uint8 decided message bits
    u: np.ndarray  # (P, N) uint8 decided convolution outputs
    m: int = 0

    @classmethod
    def initial(cls, n, m):
        return cls(
            pm=np.zeros(1),
            state=np.zeros(1, dtype=np.int64),
            v=np.zeros((1, n), dtype=np.uint8),
            u=np.zeros((1, n), dtype=np.uint8),
            m=m,
        )

    def __len__(self):
        return self.pm.shape[0]

    def __getitem__(self, i):
        return Path(float(self.pm[i]), unpack_state(self.state[i], self.m), self.v[i].copy(), self.u[i].copy())

    def select(self, idx):
        return PathList(self.pm[idx], self.state[idx], self.v[idx], self.u[idx], self.m)


def survivors(pm, L):
    """Indices of the ``L`` smallest metrics, ties resolved by position."""
    order = np.argsort(pm, kind="stable")
    return order[:L]


def prune(paths, L):
    """Keep the ``L`` lowest-metric paths, in ascending metric order."""
    return paths.select(survivors(paths.pm, L))


def split(pm0, pm1, L):
    """Fork every path on one bit and prune back to at most ``L`` paths.

    Candidate ``l`` is the 0-branch of path ``l`` and candidate ``P + l`` its
    1-branch. Returns ``(parent, bit, pm)`` of the survivors.
    """
    P = pm0.shape[0]
    pm = np.concatenate([pm0, pm1])
    keep = survivors(pm, L)
    return keep % P, (keep >= P).astype(np.uint8), pm[keep]


@dataclass
class DecodeResult:
    bits: np.ndarray
    pm: float
    v: np.ndarray
    survivors: list = field(default_factory=list, repr=False)

    @property
    def survivor_pms(self):
        return [p.pm for p in self.survivors]

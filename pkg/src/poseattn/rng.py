"""Deterministic random streams.

Every source of randomness in this package flows from an explicit integer
seed through `make_rng`. Streams are keyed by (seed, *stream ids) so that
independent consumers (per-sample generation, shuffling, augmentation)
never share or reorder draws.
"""

from __future__ import annotations

import zlib

import numpy as np


def stream_id(name: str) -> int:
    """Stable integer id for a named stream."""
    return zlib.crc32(name.encode("utf-8"))


def make_rng(seed: int, *streams: int | str) -> np.random.Generator:
    """Counter-based generator for (seed, streams).

    Uses Philox so that per-index streams are cheap to derive and
    platform-independent for a fixed numpy version.
    """
    keys = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    for s in streams:
        keys.append(stream_id(s) if isinstance(s, str) else int(s) & 0xFFFFFFFFFFFFFFFF)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(keys)))

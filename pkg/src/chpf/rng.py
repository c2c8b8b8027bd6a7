"""Named random streams split from a single 64-bit master seed.

Every source of randomness in a run (diffusion, resampling, candidate
draws, scenario noise, ...) pulls from its own stream, so adding draws to
one subsystem never perturbs the sequence seen by another. Streams are
backed by the counter-based Philox generator, keyed on (master seed,
stream name), which makes a run reproducible from the seed alone.
"""

from __future__ import annotations

import zlib

import numpy as np

# Stream names used by the library. User code may key additional streams;
# anything not listed here just has to be spelled consistently.
DIFFUSION = "diffusion"
RESAMPLING = "resampling"
CANDIDATE = "candidate-sampling"
SCENARIO = "scenario-noise"
INIT = "initialization"
DETECTOR = "detector"


def _stream_key(master_seed: int, name: str) -> int:
    # crc32 keeps the key stable across processes (unlike hash()).
    return ((master_seed & 0xFFFFFFFFFFFFFFFF) << 32) ^ zlib.crc32(name.encode("utf-8"))


def stream(master_seed: int, name: str) -> np.random.Generator:
    """Return the generator for one named stream of ``master_seed``."""
    return np.random.Generator(np.random.Philox(key=_stream_key(master_seed, name)))


class RandomStreams:
    """Lazy bundle of named generators for one master seed.

    Each name maps to an independent Philox stream; repeated lookups of the
    same name return the same (stateful) generator object.
    """

    def __init__(self, master_seed: int):
        self.master_seed = int(master_seed)
        self._streams: dict[str, np.random.Generator] = {}

    def get(self, name: str) -> np.random.Generator:
        gen = self._streams.get(name)
        if gen is None:
            gen = stream(self.master_seed, name)
            self._streams[name] = gen
        return gen

    def __getitem__(self, name: str) -> np.random.Generator:
        return self.get(name)

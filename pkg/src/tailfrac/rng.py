"""Deterministic, splittable uniform random numbers.

Draw ``i`` of stream ``s`` under seed ``k`` is ``finalize(key(k, s) +
(i + 1) * GOLDEN)`` where ``finalize`` is the splitmix64 finalizer
(Steele, Lea and Flood, 2014) and ``key`` mixes the seed with the stream
index.  Every output word depends only on (seed, stream, index), so
replicates may run in any order or in parallel and still reproduce
bit-identically on any platform: there is no shared generator state.

Doubles are built from the top 53 bits of each word, giving the open
interval (0, 1); an exact zero (probability 2**-53) is redrawn from a
shifted word without consuming another counter position.
"""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_INV_2_53 = 2.0 ** -53


def check_seed(value, name: str = "seed") -> int:
    """Validate a 64-bit unsigned seed (or stream index) and return it as int."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if not 0 <= value < 2 ** 64:
        raise ValueError(f"{name} must lie in [0, 2**64), got {value}")
    return value


def _mix_int(z: int) -> int:
    """splitmix64 finalizer on a Python int, modulo 2**64."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _finalize(z: np.ndarray) -> np.ndarray:
    """splitmix64 finalizer, vectorized over a uint64 array."""
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _stream_key(seed: int, stream: int) -> int:
    # two finalizer passes decorrelate nearby (seed, stream) pairs
    return _mix_int(seed ^ _mix_int((stream + 1) * _GOLDEN))


def random_words(seed, n: int, stream=0) -> np.ndarray:
    """n pseudo-random uint64 words for the given (seed, stream)."""
    seed = check_seed(seed)
    stream = check_seed(stream, "stream")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    key = np.uint64(_stream_key(seed, stream))
    counters = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(_GOLDEN)
    return _finalize(key + counters)


def uniform_open(seed, n: int, stream=0) -> np.ndarray:
    """n doubles in the open interval (0, 1), one per counter position."""
    words = random_words(seed, n, stream)
    u = (words >> np.uint64(11)).astype(np.float64) * _INV_2_53
    zero = u == 0.0
    while zero.any():
        words[zero] = _finalize(words[zero] + np.uint64(_GOLDEN))
        u[zero] = (words[zero] >> np.uint64(11)).astype(np.float64) * _INV_2_53
        zero = u == 0.0
    return u

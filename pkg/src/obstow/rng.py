"""Counter-based random streams for reproducible, order-independent episodes.

Every random draw is a pure function of ``(seed, episode, step, channel,
counter)``, so episodes own independent substreams regardless of execution
order or batching.  The generator is a splitmix64-style cascade: each index is
folded in with an odd-constant increment followed by the splitmix64 finalizer
(a bijection on 64-bit words), and the result is mapped to a double in
``[0, 1)``.  All arithmetic is wrapping ``uint64``, which numpy evaluates
identically across platforms.
"""

from __future__ import annotations

import numpy as np

_GOLD = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

# Channel layout inside one (episode, step) cell.
BRANCH_CHANNEL = 0
NOISE_CHANNEL = 1
# Greedy candidate sample s uses channel GREEDY_CHANNEL_BASE + s.
GREEDY_CHANNEL_BASE = 8

_SHIFT_30 = np.uint64(30)
_SHIFT_27 = np.uint64(27)
_SHIFT_31 = np.uint64(31)
_SHIFT_11 = np.uint64(11)
_TO_UNIT = 2.0 ** -53


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _SHIFT_30)) * _MIX1
    z = (z ^ (z >> _SHIFT_27)) * _MIX2
    return z ^ (z >> _SHIFT_31)


def seed_key(seed: int) -> np.uint64:
    """Whiten a user seed into the root key of the stream family."""
    return _mix(np.uint64(np.uint64(seed & 0xFFFFFFFFFFFFFFFF) ^ _GOLD))


def _fold(state: np.ndarray, index: np.ndarray | np.uint64) -> np.ndarray:
    return _mix(state + _GOLD * index)


def uniform01(key: np.uint64, episode, step, channel, counter) -> np.ndarray:
    """Uniform doubles in [0, 1), one per broadcast element.

    ``episode`` and ``counter`` may be arrays; ``step`` and ``channel`` are
    usually scalars.  Identical index tuples always yield identical values.
    """
    ep = np.asarray(episode, dtype=np.uint64)
    ct = np.asarray(counter, dtype=np.uint64)
    z = _fold(np.broadcast_to(key, ep.shape).copy(), ep)
    z = _fold(z, np.uint64(step))
    z = _fold(z, np.uint64(channel))
    z = _fold(z, ct)
    return (z >> _SHIFT_11).astype(np.float64) * _TO_UNIT


def uniform_in_ball(
    key: np.uint64,
    episodes: np.ndarray,
    step: int,
    radius: float,
    dim: int,
    channel: int = NOISE_CHANNEL,
) -> np.ndarray:
    """Uniform sample strictly inside the open ball of given radius, per lane.

    Rejection sampling from the bounding cube; each lane advances its own
    attempt counter, so acceptance patterns never couple lanes.  Expected
    attempts stay below 2 for dim <= 3.
    """
    episodes = np.asarray(episodes, dtype=np.uint64)
    m = episodes.shape[0]
    out = np.empty((m, dim), dtype=np.float64)
    pending = np.arange(m)
    attempt = np.zeros(m, dtype=np.uint64)
    r2 = radius * radius
    while pending.size:
        eps_pending = episodes[pending]
        base = attempt[pending] * np.uint64(dim)
        cand = np.empty((pending.size, dim), dtype=np.float64)
        for axis in range(dim):
            u = uniform01(key, eps_pending, step, channel, base + np.uint64(axis))
            cand[:, axis] = (2.0 * u - 1.0) * radius
        accepted = (cand * cand).sum(axis=1) < r2
        out[pending[accepted]] = cand[accepted]
        attempt[pending] += np.uint64(1)
        pending = pending[~accepted]
    return out

"""Deterministic, label-split random streams.

Every stochastic routine in the package draws from a generator obtained
here, so a (seed, purpose-label) pair always yields the same stream no
matter which other streams were consumed before it.  Labels are hashed
with BLAKE2 (Python's ``hash`` is salted per process and unusable here).
"""

from __future__ import annotations

import hashlib

import numpy as np


def _label_entropy(label: object) -> int:
    digest = hashlib.blake2b(repr(label).encode("utf-8"), digest_size=16).digest()
    return int.from_bytes(digest, "big")


def seed_sequence(seed: int, *labels: object) -> np.random.SeedSequence:
    seed = int(seed)
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return np.random.SeedSequence([seed] + [_label_entropy(l) for l in labels])


def substream(seed: int, *labels: object) -> np.random.Generator:
    """Generator for the stream named by ``labels`` under ``seed``."""
    return np.random.default_rng(seed_sequence(seed, *labels))


def derive_seed(seed: int, *labels: object) -> int:
    """Collapse (seed, labels) to a plain integer seed, e.g. for per-row reruns."""
    return int(seed_sequence(seed, *labels).generate_state(1, np.uint64)[0])

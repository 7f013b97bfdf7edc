"""Shared random-sampling helpers for the test suite."""

import numpy as np


def random_tail(rng, n, mod_max=10.0):
    """Unstructured tail with entry moduli up to mod_max."""
    return [rng.uniform(0, mod_max) * np.exp(2j * np.pi * rng.random())
            for _ in range(n - 1)]


def random_typed_tail(rng, n, mod_lo=0.1, mod_hi=3.0, nilpotent_fraction=0.0):
    """Tail with a random type index k and nonzero moduli in [mod_lo, mod_hi]."""
    tail = [0j] * (n - 1)
    if rng.random() < nilpotent_fraction:
        return tail
    k = int(rng.integers(2, n + 1))
    for i in range(k, n + 1):
        if i == k or rng.random() > 0.3:
            modulus = mod_lo * (mod_hi / mod_lo) ** rng.random()
            tail[i - 2] = modulus * np.exp(2j * np.pi * rng.random())
    return tail

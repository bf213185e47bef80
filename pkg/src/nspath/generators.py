"""Seeded instance generators.

Randomness comes from NumPy's PCG64 bit generator (PCG-XSL-RR 128/64)
seeded with ``PCG64(seed)``. Each draw takes one raw 64-bit output ``r``
and uses ``(r >> 11) * 2**-53`` as a uniform double in [0, 1). Draw order
is part of the format, so corpora are reproducible anywhere:

* ``gen_gnp``: one draw per vertex pair ``(a, b)``, ``a < b``, in
  lexicographic order; the edge is present when the draw is ``< p``.
* ``gen_layered``: vertices are numbered layer by layer; for each pair of
  consecutive layers, one draw per ``(a, b)`` with ``a`` in the lower
  layer, both in increasing id order. Afterwards every vertex of a middle
  layer, in id order, lacking a neighbour in the previous (then next)
  layer is joined to the smallest id of that layer.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .formats import GraphDocument

_SCALE = 2.0 ** -53


class Uniform:
    """Uniform doubles from PCG64 raw output, independent of NumPy's float API."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def draw(self) -> float:
        return (int(self._bits.random_raw()) >> 11) * _SCALE

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + int(self.draw() * (hi - lo + 1))


def gen_gnp(n: int, p: float, seed: int) -> GraphDocument:
    if n < 2:
        raise ValueError("gen_gnp needs n >= 2")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = Uniform(seed)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.draw() < p]
    return GraphDocument(n, edges, 0, n - 1, f"gnp-n{n}-p{p:g}-s{seed}")


def gen_layered(widths: Sequence[int], p: float, seed: int) -> GraphDocument:
    widths = list(widths)
    if len(widths) < 2 or widths[0] != 1 or widths[-1] != 1 or min(widths) < 1:
        raise ValueError(f"widths must start and end with 1 and be positive: {widths}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = Uniform(seed)
    layers = []
    nxt = 0
    for w in widths:
        layers.append(list(range(nxt, nxt + w)))
        nxt += w
    edges = set()
    for lo, hi in zip(layers, layers[1:]):
        for a in lo:
            for b in hi:
                if rng.draw() < p:
                    edges.add((a, b))
    for i in range(1, len(layers) - 1):
        for x in layers[i]:
            if not any((a, x) in edges for a in layers[i - 1]):
                edges.add((layers[i - 1][0], x))
            if not any((x, b) in edges for b in layers[i + 1]):
                edges.add((x, layers[i + 1][0]))
    name = f"layered-w{'.'.join(map(str, widths))}-p{p:g}-s{seed}"
    return GraphDocument(nxt, sorted(edges), 0, nxt - 1, name)

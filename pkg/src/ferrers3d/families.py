"""Enumeration and sampling of diagram families inside a bounding box.

Diagrams are enumerated directly as monotone chains of layer partitions,
never by filtering point subsets; the count of all diagrams in a box has a
closed product form, used to refuse oversized sweeps upfront.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator

from .diagram import Diagram


def subpartitions(bound: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Every partition componentwise contained in ``bound`` (empty included),
    in a fixed deterministic order."""
    out: list[tuple[int, ...]] = [()]

    def rec(prefix: list[int], idx: int) -> None:
        if idx >= len(bound):
            return
        hi = bound[idx] if not prefix else min(bound[idx], prefix[-1])
        for h in range(1, hi + 1):
            prefix.append(h)
            out.append(tuple(prefix))
            rec(prefix, idx + 1)
            prefix.pop()

    rec([], 0)
    return out


def count_diagrams(a: int, b: int, c: int) -> int:
    """Number of nonempty diagrams inside [a] x [b] x [c] (box product
    formula minus the empty one)."""
    total = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                total *= Fraction(i + j + k - 1, i + j + k - 2)
    return int(total) - 1


def enumerate_diagrams(a: int, b: int, c: int) -> Iterator[Diagram]:
    """All nonempty diagrams inside the box, in a deterministic order."""
    tops = [p for p in subpartitions((c,) * b) if p]

    def rec(layers: list[tuple[int, ...]]) -> Iterator[Diagram]:
        yield Diagram(tuple(layers))
        if len(layers) == a:
            return
        for nxt in subpartitions(layers[-1]):
            if nxt:
                layers.append(nxt)
                yield from rec(layers)
                layers.pop()

    for top in tops:
        yield from rec([top])


def sample_diagrams(a: int, b: int, c: int, count: int, seed: int = 0) -> list[Diagram]:
    """Random diagrams inside the box (seeded, not uniform)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        layers: list[tuple[int, ...]] = []
        bound = (c,) * b
        while len(layers) < a:
            layer: list[int] = []
            cap = None
            for j in range(len(bound)):
                hi = bound[j] if cap is None else min(bound[j], cap)
                h = rng.randint(0, hi)
                if h == 0:
                    break
                layer.append(h)
                cap = h
            if not layer:
                break
            layers.append(tuple(layer))
            bound = tuple(layer)
        if not layers:
            layers = [(1,)]
        out.append(Diagram(tuple(layers)))
    return out

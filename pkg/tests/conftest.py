"""Shared helpers for the test suite."""

from __future__ import annotations

from ferrers3d import Point, from_points
from ferrers3d.diagram import Diagram


def partitions_up_to(cells: int) -> list[tuple[int, ...]]:
    """Every nonempty partition with at most the given number of cells."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        if prefix:
            out.append(tuple(prefix))
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(prefix, remaining - part, part)
            prefix.pop()

    rec([], cells, cells)
    return out


def permute_axes(diagram: Diagram, perm: tuple[int, int, int]) -> Diagram:
    """Diagram image under a coordinate permutation (always Ferrers)."""
    pts = [Point(*(tuple(p)[t] for t in perm)) for p in diagram.points()]
    return from_points(pts)

"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel only handles graphs of at most 64 vertices; larger
inputs silently use the pure implementation (the oracle's size limits make
that case rare).
"""

from __future__ import annotations

from typing import Sequence

from . import _purecomplex

try:
    from . import _fastcomplex  # type: ignore[attr-defined]
except ImportError:
    _fastcomplex = None

IMPLEMENTATION = "cython" if _fastcomplex is not None else "python"


def maximal_independent_sets(adj: Sequence[int]) -> list[int]:
    if _fastcomplex is not None and len(adj) <= 64:
        return _fastcomplex.maximal_independent_sets(list(adj))
    return _purecomplex.maximal_independent_sets(adj)


def count_independent_sets_by_size(adj: Sequence[int]) -> list[int]:
    if _fastcomplex is not None and len(adj) <= 64:
        return _fastcomplex.count_independent_sets_by_size(list(adj))
    return _purecomplex.count_independent_sets_by_size(adj)

"""Ground-truth oracles, independent of the shedding recursion.

Three routes: facet enumeration of the independence complex (f- and
h-vectors by exact counting), Hilbert-function counting of the toric ring
(distinct products of the degree-one generators), and a bounded-degree
check that the 2-minors rewrite every equal-image binomial to zero.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .diagram import Diagram, Point, has_projection_property
from .errors import InsufficientDegree, TooLarge
from .minors import PairGraph, leading_edges, two_minors

DEFAULT_FACET_LIMIT = 24
DEFAULT_PRODUCT_LIMIT = 5_000_000
DEFAULT_MONOMIAL_LIMIT = 2_000_000


@dataclass(frozen=True)
class InvariantsReport:
    """Ring dimension, regularity, multiplicity and reduction number, with
    the computation route recorded in ``source``."""

    ring_dim: int
    reg: int
    mult: int
    red_num: int
    source: str
    grobner_guarantee: bool = True


@dataclass(frozen=True)
class ComplexSummary:
    facets: tuple[frozenset[Point], ...]
    pure: bool
    f_vector: tuple[int, ...]
    h_vector: tuple[int, ...]
    complex_dim: int


@dataclass(frozen=True)
class HilbertTable:
    values: tuple[int, ...]


def _h_from_f(f_vector: Sequence[int], d: int) -> tuple[int, ...]:
    return tuple(
        sum(
            (-1) ** (k - i) * math.comb(d - i, k - i) * f_vector[i]
            for i in range(0, k + 1)
        )
        for k in range(0, d + 1)
    )


def complex_summary(
    points: Iterable[Point],
    edges: Optional[Iterable[frozenset[Point]]] = None,
    limit: int = DEFAULT_FACET_LIMIT,
) -> ComplexSummary:
    """Summary of the independence complex of the leading-pair graph on the
    collection (or of an explicitly given edge set on it)."""
    verts = sorted({Point(*p) for p in points})
    if len(verts) > limit:
        raise TooLarge(f"{len(verts)} vertices exceed the facet limit {limit}")
    edge_set = leading_edges(verts) if edges is None else set(edges)
    index = {p: t for t, p in enumerate(verts)}
    adj = [0] * len(verts)
    for e in edge_set:
        p, q = tuple(e)
        adj[index[p]] |= 1 << index[q]
        adj[index[q]] |= 1 << index[p]

    masks = kernels.maximal_independent_sets(adj)
    facets = tuple(
        frozenset(verts[t] for t in range(len(verts)) if mask >> t & 1) for mask in masks
    )
    counts = kernels.count_independent_sets_by_size(adj)
    d = max(len(f) for f in facets)
    f_vector = tuple(counts[: d + 1])
    h_vector = _h_from_f(f_vector, d)
    if sum(h_vector) != f_vector[-1]:
        raise RuntimeError("h-vector transform is inconsistent with the face counts")
    pure = all(len(f) == d for f in facets)
    return ComplexSummary(facets, pure, f_vector, h_vector, d - 1)


def facets(graph: PairGraph, limit: int = DEFAULT_FACET_LIMIT) -> ComplexSummary:
    """Facets and face counts of the independence complex of a pair graph."""
    return complex_summary(graph.vertices, graph.edges, limit)


def oracle_invariants(diagram: Diagram, limit: int = DEFAULT_FACET_LIMIT) -> InvariantsReport:
    """Invariants read off the h-vector of the enumerated complex.

    For projection-property diagrams the complex is pure and describes the
    toric ring itself; purity failure there is an internal error.  Other
    diagrams are summarized too, but only describe the quotient by the
    leading quadrics, so the report is flagged.
    """
    guaranteed = has_projection_property(diagram)
    summary = complex_summary(diagram.points(), limit=limit)
    if guaranteed and not summary.pure:
        raise RuntimeError("impure complex on a projection-property diagram")
    reg = max((t for t, h in enumerate(summary.h_vector) if h != 0), default=0)
    return InvariantsReport(
        ring_dim=summary.complex_dim + 1,
        reg=reg,
        mult=summary.f_vector[-1],
        red_num=reg,
        source="oracle-facets",
        grobner_guarantee=guaranteed,
    )


# ---------------------------------------------------------------------------
# Hilbert-function counting
# ---------------------------------------------------------------------------


_SLOT_BITS = 32


def _exponent(diagram: Diagram, p: Point) -> int:
    """Exponent vector of one generator, packed into one integer with a
    32-bit slot per coordinate value; packed addition is exact as long as
    every exponent stays below 2**32, which the degree guard ensures."""
    return (
        (1 << (_SLOT_BITS * (p.i - 1)))
        + (1 << (_SLOT_BITS * (diagram.a + p.j - 1)))
        + (1 << (_SLOT_BITS * (diagram.a + diagram.b + p.k - 1)))
    )


def hilbert_function(
    diagram: Diagram, degree: int, product_limit: int = DEFAULT_PRODUCT_LIMIT
) -> HilbertTable:
    """H(l) = number of distinct products of l generators, for l = 0..degree,
    by iterated set convolution of exponent vectors."""
    if degree >= 1 << (_SLOT_BITS - 1):
        raise TooLarge(f"degree {degree} would overflow the packed exponents")
    gens = [_exponent(diagram, p) for p in diagram.points()]
    level = {0}
    values = [1]
    work = 0
    for _ in range(degree):
        work += len(level) * len(gens)
        if work > product_limit:
            raise TooLarge(f"Hilbert counting would exceed {product_limit} products")
        level = {m + g for m in level for g in gens}
        values.append(len(level))
    return HilbertTable(tuple(values))


def hilbert_invariants(
    diagram: Diagram,
    degree: Optional[int] = None,
    slack: int = 2,
    product_limit: int = DEFAULT_PRODUCT_LIMIT,
) -> InvariantsReport:
    """Invariants fitted from the Hilbert function.

    The numerator of the Hilbert series against pole order d = a+b+c-2 is
    recovered by the d-fold backward difference of the table; its degree is
    the regularity (the ring is Cohen-Macaulay in the guaranteed regime) and
    its value at 1 the multiplicity.  The default table length is d plus the
    pairwise-minimum bound on the regularity plus slack, so the numerator
    must terminate visibly; if it does not, InsufficientDegree asks for a
    longer table rather than extrapolating.
    """
    a, b, c = diagram.a, diagram.b, diagram.c
    d = a + b + c - 2
    if degree is None:
        degree = d + (min(a + b, a + c, b + c) - 2) + slack
    table = hilbert_function(diagram, degree, product_limit)
    h = table.values
    numerator = [
        sum((-1) ** t * math.comb(d, t) * h[n - t] for t in range(0, min(n, d) + 1))
        for n in range(degree + 1)
    ]
    reg = max(n for n, val in enumerate(numerator) if val != 0)
    if reg > degree - slack:
        raise InsufficientDegree(
            f"numerator still nonzero at degree {reg} with table length {degree}; raise the degree"
        )
    mult = sum(numerator)
    if mult <= 0:
        raise RuntimeError("numerator sums to a nonpositive multiplicity; dimension mismatch")
    return InvariantsReport(
        ring_dim=d,
        reg=reg,
        mult=mult,
        red_num=reg,
        source="oracle-hilbert",
        grobner_guarantee=has_projection_property(diagram),
    )


# ---------------------------------------------------------------------------
# bounded-degree Groebner check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GBCheckReport:
    holds: bool
    witness: Optional[tuple[tuple[Point, ...], tuple[Point, ...]]]
    witness_degree: Optional[int]
    failing_degrees: tuple[int, ...]
    pairs_checked: int


def _image(monomial: Sequence[Point]) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    return (
        tuple(sorted(p.i for p in monomial)),
        tuple(sorted(p.j for p in monomial)),
        tuple(sorted(p.k for p in monomial)),
    )


def _normal_form(monomial: tuple[Point, ...], lead_map, cache) -> tuple[Point, ...]:
    """Greedy lex rewriting: while some leading pair divides the monomial,
    replace it by the lex-smallest trail of the first divisor in sorted
    order.  Each step strictly lowers the monomial, so this terminates; it
    is the division algorithm specialized to binomials."""
    seen = []
    cur = monomial
    while True:
        hit = cache.get(cur)
        if hit is not None:
            break
        seen.append(cur)
        support = sorted(set(cur))
        rewrite = None
        for p, q in itertools.combinations(support, 2):
            trails = lead_map.get(frozenset((p, q)))
            if trails:
                rewrite = (p, q, trails[0])
                break
        if rewrite is None:
            hit = cur
            break
        p, q, trail = rewrite
        rest = list(cur)
        rest.remove(p)
        rest.remove(q)
        cur = tuple(sorted(rest + list(trail)))
    for m in seen:
        cache[m] = hit
    return hit


def toric_gb_check(
    diagram: Diagram, max_degree: int, monomial_limit: int = DEFAULT_MONOMIAL_LIMIT
) -> GBCheckReport:
    """Do the 2-minors rewrite every equal-image binomial of degree at most
    max_degree to zero?

    Monomials in the point variables are grouped by their image under
    T_{i,j,k} -> x_i y_j z_k; within a group, all normal forms must agree.
    The divisor set is the raw minor list, deliberately without completion:
    failure exhibits a relation the quadrics cannot reach, and the lowest
    degree pair of distinct normal forms is reported as the witness.
    """
    pts = sorted(diagram.points())
    total = sum(math.comb(len(pts) + l - 1, l) for l in range(2, max_degree + 1))
    if total > monomial_limit:
        raise TooLarge(f"{total} monomials exceed the limit {monomial_limit}")

    lead_map: dict[frozenset[Point], list[tuple[Point, ...]]] = {}
    for minor in two_minors(pts):
        lead_map.setdefault(minor.lead, []).append(tuple(sorted(minor.trail)))
    for trails in lead_map.values():
        trails.sort()

    cache: dict[tuple[Point, ...], tuple[Point, ...]] = {}
    witness = None
    witness_degree = None
    failing = []
    pairs = 0
    for l in range(2, max_degree + 1):
        groups: dict[tuple, list[tuple[Point, ...]]] = {}
        for mono in itertools.combinations_with_replacement(pts, l):
            groups.setdefault(_image(mono), []).append(mono)
        degree_fails = False
        for members in groups.values():
            if len(members) < 2:
                continue
            pairs += math.comb(len(members), 2)
            forms = [_normal_form(m, lead_map, cache) for m in members]
            for t in range(1, len(members)):
                if forms[t] != forms[0]:
                    degree_fails = True
                    if witness is None:
                        witness = (members[0], members[t])
                        witness_degree = l
                    break
        if degree_fails:
            failing.append(l)
    return GBCheckReport(
        holds=not failing,
        witness=witness,
        witness_degree=witness_degree,
        failing_degrees=tuple(failing),
        pairs_checked=pairs,
    )

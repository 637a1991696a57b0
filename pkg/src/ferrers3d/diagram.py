"""Three-dimensional Ferrers diagrams.

A diagram is a finite set of positive lattice points closed under
componentwise decrease.  It is stored as a tuple of layers, one per
x-coordinate; layer ``i`` is a partition whose ``j``-th part is the largest
``k`` with ``(i, j, k)`` in the diagram.  The stored form is always
essential: every coordinate value between 1 and the bounding box occurs.

This module owns construction and validation, coordinate statistics
(alpha/beta/gamma), the six-zone split around a point, the projection and
strong projection properties, the lexicographic and induction orders on the
first layer, flips, reductions and plane profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidInput, NotFerrers, NotInDiagram


class Point(NamedTuple):
    i: int
    j: int
    k: int

    def flip(self) -> "Point":
        """Exchange the y and z coordinates."""
        return Point(self.i, self.k, self.j)


def _conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= t) for t in range(1, parts[0] + 1))


@dataclass(frozen=True)
class Diagram:
    """A three-dimensional Ferrers diagram in essential layer form.

    Use :func:`validate`, :func:`from_generators` or :func:`from_points` to
    construct one; the raw constructor performs no checking.
    """

    layers: tuple[tuple[int, ...], ...]

    # -- bounding box / essential dimensions --------------------------------

    @property
    def a(self) -> int:
        return len(self.layers)

    @property
    def b(self) -> int:
        return len(self.layers[0])

    @property
    def c(self) -> int:
        return self.layers[0][0]

    @property
    def size(self) -> int:
        return sum(sum(layer) for layer in self.layers)

    # -- membership and iteration -------------------------------------------

    def __contains__(self, p: object) -> bool:
        i, j, k = p  # type: ignore[misc]
        if i < 1 or j < 1 or k < 1 or i > len(self.layers):
            return False
        layer = self.layers[i - 1]
        return j <= len(layer) and k <= layer[j - 1]

    def height(self, i: int, j: int) -> int:
        """Largest k with (i, j, k) in the diagram, 0 if the column is empty."""
        if not 1 <= i <= len(self.layers):
            return 0
        layer = self.layers[i - 1]
        return layer[j - 1] if 1 <= j <= len(layer) else 0

    def points(self) -> Iterator[Point]:
        """All points in lexicographic order."""
        for i, layer in enumerate(self.layers, start=1):
            for j, h in enumerate(layer, start=1):
                for k in range(1, h + 1):
                    yield Point(i, j, k)

    def layer_points(self, i: int) -> tuple[Point, ...]:
        if not 1 <= i <= len(self.layers):
            return ()
        return tuple(
            Point(i, j, k)
            for j, h in enumerate(self.layers[i - 1], start=1)
            for k in range(1, h + 1)
        )

    # -- per-layer statistics -------------------------------------------------

    def layer_width(self, i: int) -> int:
        """Essential width of the x=i layer (number of columns), 0 if absent."""
        return len(self.layers[i - 1]) if 1 <= i <= len(self.layers) else 0

    def layer_height(self, i: int) -> int:
        """Essential height of the x=i layer (its tallest column), 0 if absent."""
        return self.layers[i - 1][0] if 1 <= i <= len(self.layers) else 0

    # -- derived diagrams -------------------------------------------------------

    def tail(self) -> "Diagram | None":
        """The part above the first layer, re-indexed to start at x=1."""
        if len(self.layers) == 1:
            return None
        return Diagram(self.layers[1:])

    def flip(self) -> "Diagram":
        """The image under (i, j, k) -> (i, k, j); conjugates every layer."""
        return Diagram(tuple(_conjugate(layer) for layer in self.layers))

    def issubset(self, other: "Diagram") -> bool:
        if len(self.layers) > len(other.layers):
            return False
        for mine, theirs in zip(self.layers, other.layers):
            if len(mine) > len(theirs):
                return False
            if any(h1 > h2 for h1, h2 in zip(mine, theirs)):
                return False
        return True

    def __str__(self) -> str:
        return "|".join(",".join(str(h) for h in layer) for layer in self.layers)


@dataclass(frozen=True)
class ZoneMap:
    """The six-way split of the points at or above a reference point's layer."""

    z1: frozenset[Point]
    z2: frozenset[Point]
    z3: frozenset[Point]
    z4: frozenset[Point]
    z5: frozenset[Point]
    z6: frozenset[Point]

    def zone(self, n: int) -> frozenset[Point]:
        return (self.z1, self.z2, self.z3, self.z4, self.z5, self.z6)[n - 1]

    def union(self) -> frozenset[Point]:
        return self.z1 | self.z2 | self.z3 | self.z4 | self.z5 | self.z6


@dataclass(frozen=True)
class OrderedPointList:
    """A total order on the first layer; flavor is "induction" or "lex"."""

    points: tuple[Point, ...]
    flavor: str


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def validate(layers: Iterable[Iterable[int]]) -> Diagram:
    """Build a diagram from layer height lists, checking all invariants.

    Raises NotFerrers (naming the violating coordinates) when heights grow
    along a row, layers grow along x, or an entry is nonpositive; raises
    InvalidInput on structurally empty data.
    """
    rows = tuple(tuple(layer) for layer in layers)
    if not rows:
        raise InvalidInput("a diagram needs at least one layer")
    for i, layer in enumerate(rows, start=1):
        if not layer:
            raise InvalidInput(f"layer {i} is empty")
        for j, h in enumerate(layer, start=1):
            if not isinstance(h, int) or h < 1:
                raise NotFerrers(f"height at (i={i}, j={j}) is {h}, expected a positive integer")
            if j > 1 and h > layer[j - 2]:
                raise NotFerrers(
                    f"heights increase along layer {i}: "
                    f"column {j - 1} has {layer[j - 2]}, column {j} has {h}"
                )
    for i in range(1, len(rows)):
        below, above = rows[i - 1], rows[i]
        if len(above) > len(below):
            raise NotFerrers(f"layer {i + 1} is wider than layer {i}")
        for j, h in enumerate(above, start=1):
            if h > below[j - 1]:
                raise NotFerrers(
                    f"column (i={i + 1}, j={j}) has height {h} above height {below[j - 1]}"
                )
    return Diagram(rows)


def box(a: int, b: int, c: int) -> Diagram:
    """The full rectangular diagram [a] x [b] x [c]."""
    if a < 1 or b < 1 or c < 1:
        raise InvalidInput("box dimensions must be positive")
    return Diagram(((c,) * b,) * a)


def from_generators(gens: Iterable[Sequence[int]]) -> Diagram:
    """Smallest Ferrers diagram containing every generator (downward closure)."""
    pts = [Point(*g) for g in gens]
    if not pts:
        raise InvalidInput("empty generator set")
    if any(p.i < 1 or p.j < 1 or p.k < 1 for p in pts):
        raise InvalidInput("generator coordinates must be positive")
    a = max(p.i for p in pts)
    layers = []
    for i in range(1, a + 1):
        covering = [p for p in pts if p.i >= i]
        width = max(p.j for p in covering)
        layers.append(tuple(max(p.k for p in covering if p.j >= j) for j in range(1, width + 1)))
    return Diagram(tuple(layers))


def from_points(points: Iterable[Sequence[int]]) -> Diagram:
    """Build a diagram from an exact point set; the set itself must already
    be downward closed and essential."""
    pts = {Point(*p) for p in points}
    if not pts:
        raise InvalidInput("empty point set")
    a = max(p.i for p in pts)
    layers = []
    for i in range(1, a + 1):
        cols: dict[int, int] = {}
        for p in pts:
            if p.i == i:
                cols[p.j] = max(cols.get(p.j, 0), p.k)
        if not cols or set(cols) != set(range(1, max(cols) + 1)):
            raise NotFerrers(f"layer {i} has missing columns")
        layers.append(tuple(cols[j] for j in range(1, max(cols) + 1)))
    diag = validate(layers)
    if diag.size != len(pts):
        raise NotFerrers("point set is not downward closed")
    return diag


def reduce_points(
    points: Iterable[Sequence[int]],
) -> tuple[Diagram, tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """Collapse empty coordinate slices of a point set and build the diagram.

    Returns the reduced diagram together with the sorted original values per
    axis; original value ``vals[axis][t-1]`` maps to coordinate ``t`` in the
    reduced diagram.  Raises NotFerrers if the collapsed set is still not
    downward closed.
    """
    pts = {Point(*p) for p in points}
    if not pts:
        raise InvalidInput("empty point set")
    ivals = tuple(sorted({p.i for p in pts}))
    jvals = tuple(sorted({p.j for p in pts}))
    kvals = tuple(sorted({p.k for p in pts}))
    imap = {v: t for t, v in enumerate(ivals, start=1)}
    jmap = {v: t for t, v in enumerate(jvals, start=1)}
    kmap = {v: t for t, v in enumerate(kvals, start=1)}
    reduced = {Point(imap[p.i], jmap[p.j], kmap[p.k]) for p in pts}
    return from_points(reduced), (ivals, jvals, kvals)


def essential_reduce(obj: "Diagram | Iterable[Sequence[int]]") -> Diagram:
    """Remove all empty coordinate slices.

    A diagram in layer form is already essential and passes through
    unchanged; a raw point set is collapsed per axis first.
    """
    if isinstance(obj, Diagram):
        return validate(obj.layers)
    return reduce_points(obj)[0]


def essential_dims(diagram: Diagram) -> tuple[int, int, int]:
    """Essential length, width and height (distinct i, j, k values)."""
    return diagram.a, diagram.b, diagram.c


# ---------------------------------------------------------------------------
# coordinate statistics and zones
# ---------------------------------------------------------------------------


def alpha_beta_gamma(diagram: Diagram, u: Point) -> tuple[int, int, int]:
    """Greatest coordinate reachable from u along each axis while staying
    in the diagram."""
    u = Point(*u)
    if u not in diagram:
        raise NotInDiagram(f"{tuple(u)} is not in the diagram")
    alpha = max(i for i in range(u.i, diagram.a + 1) if (i, u.j, u.k) in diagram)
    beta = max(j for j in range(u.j, diagram.b + 1) if (u.i, j, u.k) in diagram)
    gamma = diagram.height(u.i, u.j)
    return alpha, beta, gamma


def zones(diagram: Diagram, u: Point) -> ZoneMap:
    """Split the points with x-coordinate >= u.i into the six zones cut out
    by j <= j0 / j <= beta and k <= k0 / k <= gamma."""
    u = Point(*u)
    _, beta, gamma = alpha_beta_gamma(diagram, u)
    buckets: tuple[set[Point], ...] = (set(), set(), set(), set(), set(), set())
    for p in diagram.points():
        if p.i < u.i:
            continue
        if p.j <= u.j:
            if p.k > gamma:
                buckets[0].add(p)
            elif p.k > u.k:
                buckets[1].add(p)
            else:
                buckets[2].add(p)
        elif p.j <= beta:
            if p.k > u.k:
                buckets[3].add(p)
            else:
                buckets[4].add(p)
        else:
            buckets[5].add(p)
    return ZoneMap(*(frozenset(bucket) for bucket in buckets))


# ---------------------------------------------------------------------------
# projection properties
# ---------------------------------------------------------------------------


def has_projection_property(diagram: Diagram) -> bool:
    """Each layer covers the rectangular shadow of the next one."""
    for i in range(1, diagram.a):
        if (i, diagram.layer_width(i + 1), diagram.layer_height(i + 1)) not in diagram:
            return False
    return True


def projection_property_by_pairs(diagram: Diagram) -> bool:
    """Pairwise form of the projection property: any mixed pair (j1, k2)
    taken from two points of layer i+1 appears in layer i.  Quadratic; used
    to cross-check :func:`has_projection_property`."""
    for i in range(1, diagram.a):
        nxt = diagram.layer_points(i + 1)
        for p in nxt:
            for q in nxt:
                if (i, p.j, q.k) not in diagram:
                    return False
    return True


def has_strong_projection_property(diagram: Diagram) -> bool:
    """Projection property plus full-height corner columns: layer i must
    reach height c_i at column b_{i+1} and height c_{i+1} at column b_i
    (each requirement waived when the next layer's width/height is 1)."""
    for i in range(1, diagram.a):
        b_next = diagram.layer_width(i + 1)
        c_next = diagram.layer_height(i + 1)
        if b_next != 1 and (i, b_next, diagram.layer_height(i)) not in diagram:
            return False
        if c_next != 1 and (i, diagram.layer_width(i), c_next) not in diagram:
            return False
    return True


def strong_projection_by_zones(diagram: Diagram) -> bool:
    """Zone form of the strong projection property: no point of a deeper
    layer lies in zone 1 or zone 6 of any point.  Used as a test oracle."""
    for i in range(1, diagram.a):
        for u in diagram.layer_points(i):
            zm = zones(diagram, u)
            if any(p.i > i for p in zm.z1) or any(p.i > i for p in zm.z6):
                return False
    return True


def strong_projection_by_bounds(diagram: Diagram) -> bool:
    """Bound form of the strong projection property: the next layer's width
    and height never exceed beta and gamma of any point of the current
    layer.  Used as a test oracle."""
    for i in range(1, diagram.a):
        b_next = diagram.layer_width(i + 1)
        c_next = diagram.layer_height(i + 1)
        for u in diagram.layer_points(i):
            _, beta, gamma = alpha_beta_gamma(diagram, u)
            if b_next > beta or c_next > gamma:
                return False
    return True


# ---------------------------------------------------------------------------
# orders on the first layer
# ---------------------------------------------------------------------------


def first_stage_height(diagram: Diagram) -> int:
    """Height cutoff of the induction order's first stage: the essential
    height of the part above layer 1 (0 when there is no such part)."""
    return diagram.layer_height(2)


def induction_order(diagram: Diagram) -> OrderedPointList:
    """First-layer order used by the shedding recursion.

    Stage one walks the points whose height stays within the tail's height
    cutoff, column by column (lexicographically in (j, k)).  Stage two walks
    the remaining points row by row (lexicographically in (k, j)), matching
    a flip followed by the lexicographic order.  When the diagram has a
    single layer the cutoff is 0 and the whole layer is stage two.
    """
    c2 = first_stage_height(diagram)
    layer = diagram.layer_points(1)
    stage1 = sorted((p for p in layer if p.k <= c2), key=lambda p: (p.j, p.k))
    stage2 = sorted((p for p in layer if p.k > c2), key=lambda p: (p.k, p.j))
    return OrderedPointList(tuple(stage1 + stage2), "induction")


def lex_order(diagram: Diagram) -> OrderedPointList:
    """First-layer points in plain lexicographic order on (j, k)."""
    return OrderedPointList(tuple(sorted(diagram.layer_points(1))), "lex")


# ---------------------------------------------------------------------------
# profiles and JSON
# ---------------------------------------------------------------------------


def profile(diagram: Diagram, plane: str) -> tuple[int, ...]:
    """Shadow of the diagram on the xy or xz plane, as a partition."""
    if plane == "xy":
        return tuple(len(layer) for layer in diagram.layers)
    if plane == "xz":
        return tuple(layer[0] for layer in diagram.layers)
    raise InvalidInput(f"unknown profile plane {plane!r}, expected 'xy' or 'xz'")


def diagram_to_json(diagram: Diagram) -> dict:
    return {"layers": [list(layer) for layer in diagram.layers]}


def diagram_from_json(data: object) -> Diagram:
    """Parse ``{"layers": [[...], ...]}`` or ``{"generators": [[i,j,k], ...]}``.

    Exactly one of the two keys must be present and all entries must be
    integers >= 1.
    """
    if not isinstance(data, dict):
        raise InvalidInput("diagram JSON must be an object")
    keys = set(data) & {"layers", "generators"}
    if len(keys) != 1 or set(data) - {"layers", "generators"}:
        raise InvalidInput("diagram JSON needs exactly one of 'layers' or 'generators'")
    if "layers" in data:
        layers = data["layers"]
        if not isinstance(layers, list) or not all(isinstance(l, list) for l in layers):
            raise InvalidInput("'layers' must be a list of lists")
        return validate(layers)
    gens = data["generators"]
    if not isinstance(gens, list) or not all(
        isinstance(g, list) and len(g) == 3 and all(isinstance(v, int) for v in g) for g in gens
    ):
        raise InvalidInput("'generators' must be a list of [i, j, k] triples")
    return from_generators(gens)

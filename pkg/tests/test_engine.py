import pytest

from conftest import permute_axes
from ferrers3d import (
    Point,
    box,
    from_generators,
    has_projection_property,
    has_strong_projection_property,
    induction_order,
    oracle_invariants,
    validate,
)
from ferrers3d.engine import (
    INDUCTION,
    LEX,
    PAST_LAYER_1,
    Engine,
    SuffixState,
    canonical_key,
    realized_set,
    suffix_state_from_json,
    suffix_state_to_json,
)
from ferrers3d.errors import NotNormal, UnsupportedDiagram
from ferrers3d.families import enumerate_diagrams, sample_diagrams
from ferrers3d.minors import classify_point
from ferrers3d.oracle import complex_summary

CLOSURE = from_generators([(1, 3, 2), (2, 2, 3)])


@pytest.fixture(scope="module")
def engine():
    return Engine()


class TestInvariants:
    def test_full_box(self, engine):
        rep = engine.invariants(box(2, 2, 2))
        assert (rep.ring_dim, rep.mult, rep.reg, rep.red_num) == (4, 6, 2, 2)

    def test_single_point(self, engine):
        rep = engine.invariants(validate([[1]]))
        assert (rep.ring_dim, rep.mult, rep.reg) == (1, 1, 0)

    def test_flat_box(self, engine):
        rep = engine.invariants(box(2, 2, 1))
        assert (rep.ring_dim, rep.mult, rep.reg) == (3, 2, 1)

    def test_requires_projection_property(self, engine):
        bad = from_generators([(1, 1, 3), (2, 3, 1), (3, 2, 2)])
        with pytest.raises(UnsupportedDiagram):
            engine.invariants(bad)

    def test_lex_requires_strong(self, engine):
        assert has_projection_property(CLOSURE)
        with pytest.raises(UnsupportedDiagram):
            engine.invariants(CLOSURE, order=LEX)


class TestSuffixInvariants:
    def test_vertical_square_lex(self, engine):
        s = SuffixState(box(1, 2, 2), Point(1, 1, 1), LEX)
        assert engine.suffix_invariants(s) == (1, 2)

    def test_last_point_is_trivial(self, engine):
        # a one-point realized set is a cone over the empty complex
        for host, last, flavor in (
            (validate([[1]]), Point(1, 1, 1), INDUCTION),
            (validate([[2, 1]]), Point(1, 2, 1), "lex"),
            (validate([[3]]), Point(1, 1, 3), INDUCTION),
        ):
            s = SuffixState(host, last, flavor)
            assert len(realized_set(s)) == 1
            assert engine.suffix_invariants(s) == (0, 1)

    def test_flat_box_induction(self, engine):
        s = SuffixState(box(2, 2, 1), Point(1, 1, 1), INDUCTION)
        assert engine.suffix_invariants(s) == (1, 2)

    def test_shedding_is_monotone(self, engine):
        # invariants weakly increase when a point is prepended to a suffix
        for d in enumerate_diagrams(2, 2, 3):
            if not has_projection_property(d):
                continue
            order = induction_order(d).points
            values = []
            for u in order:
                values.append(engine.suffix_invariants(SuffixState(d, u, INDUCTION)))
            for later, earlier in zip(values[1:], values):
                assert earlier[0] >= later[0]
                assert earlier[1] >= later[1]


class TestLinkState:
    def test_flat_box_link(self, engine):
        s = SuffixState(box(2, 2, 1), Point(1, 1, 1), INDUCTION)
        link, ok = engine.link_state(s)
        assert ok
        back = realized_set(link)
        assert len(back) == 2
        assert engine.suffix_invariants(link) == (0, 1)

    def test_link_multiplicity_drop_pair(self, engine):
        # nested pair where the smaller diagram has the larger link
        u = Point(1, 3, 1)
        link1, ok1 = engine.link_state(SuffixState(CLOSURE, u, INDUCTION))
        link2, ok2 = engine.link_state(SuffixState(box(2, 3, 3), u, INDUCTION))
        assert ok1 and ok2
        assert engine.suffix_invariants(link1) == (1, 2)
        assert engine.suffix_invariants(link2) == (0, 1)

    def test_phantom_rejected(self, engine):
        s = SuffixState(box(2, 2, 1), Point(1, 2, 1), INDUCTION)
        with pytest.raises(NotNormal):
            engine.link_state(s)

    def test_links_validate_everywhere(self):
        eng = Engine()
        for d in enumerate_diagrams(3, 3, 3):
            if not has_projection_property(d):
                continue
            eng.invariants(d)
        assert eng.stats["fallbacks"] == 0
        assert eng.stats["link_checks"] > 0


class TestCanonicalKey:
    def test_equal_states(self):
        s1 = SuffixState(box(2, 2, 2), Point(1, 1, 2), INDUCTION)
        s2 = SuffixState(box(2, 2, 2), Point(1, 1, 2), INDUCTION)
        assert canonical_key(s1) == canonical_key(s2)

    def test_flavor_distinguishes(self):
        s1 = SuffixState(box(2, 2, 2), Point(1, 1, 2), INDUCTION)
        s2 = SuffixState(box(2, 2, 2), Point(1, 1, 2), LEX)
        assert canonical_key(s1) != canonical_key(s2)

    def test_json_round_trip(self):
        for start in (Point(1, 2, 1), PAST_LAYER_1):
            s = SuffixState(box(2, 3, 2), start, INDUCTION)
            again = suffix_state_from_json(suffix_state_to_json(s))
            assert canonical_key(again) == canonical_key(s)

    def test_translation_invariance(self):
        # suffixes that collapse to the same relabeled set share a key
        s1 = SuffixState(validate([[2, 2], [2, 2]]), PAST_LAYER_1, INDUCTION)
        s2 = SuffixState(validate([[2, 2]]), Point(1, 1, 1), INDUCTION)
        assert canonical_key(s1) != canonical_key(s2)  # start differs
        assert Engine().suffix_invariants(s1) == Engine().suffix_invariants(s2)


class TestAgainstOracle:
    def test_exhaustive_two_box(self, engine):
        for d in enumerate_diagrams(2, 2, 2):
            if not has_projection_property(d):
                continue
            rep = engine.invariants(d)
            ora = oracle_invariants(d)
            assert (rep.ring_dim, rep.reg, rep.mult) == (ora.ring_dim, ora.reg, ora.mult)

    def test_sampled_four_box(self, engine):
        seen = 0
        for d in sample_diagrams(4, 4, 4, 120, seed=7):
            if not has_projection_property(d) or d.size > 22:
                continue
            seen += 1
            rep = engine.invariants(d)
            ora = oracle_invariants(d)
            assert (rep.ring_dim, rep.reg, rep.mult) == (ora.ring_dim, ora.reg, ora.mult)
        assert seen >= 20

    def test_cone_soundness(self, engine):
        # a phantom shed deletes the apex from every facet and nothing else
        for d in enumerate_diagrams(2, 2, 3):
            if not has_projection_property(d):
                continue
            order = induction_order(d)
            pts = list(order.points)
            deep = [p for p in d.points() if p.i >= 2]
            for t, u in enumerate(pts):
                if classify_point(d, order, u) != "phantom":
                    continue
                suffix = frozenset(pts[t:]) | frozenset(deep)
                before = complex_summary(suffix)
                after = complex_summary(suffix - {u})
                assert all(u in f for f in before.facets)
                assert {f - {u} for f in before.facets} == set(after.facets)


class TestSymmetries:
    def test_lex_matches_induction_on_strong(self):
        eng1, eng2 = Engine(), Engine()
        for d in enumerate_diagrams(3, 3, 3):
            if not has_strong_projection_property(d):
                continue
            a = eng1.invariants(d, order=INDUCTION)
            b = eng2.invariants(d, order=LEX)
            assert (a.reg, a.mult) == (b.reg, b.mult)

    def test_axis_permutations(self, engine):
        perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
        for d in list(enumerate_diagrams(2, 3, 2)):
            if not has_projection_property(d):
                continue
            base = engine.invariants(d)
            for perm in perms:
                image = permute_axes(d, perm)
                if not has_projection_property(image):
                    continue
                other = engine.invariants(image)
                assert (other.ring_dim, other.reg, other.mult) == (
                    base.ring_dim, base.reg, base.mult,
                )


class TestCache:
    def test_lru_cap(self):
        eng = Engine(cache_cap=16)
        for d in list(enumerate_diagrams(2, 2, 2))[:10]:
            if has_projection_property(d):
                eng.invariants(d)
        assert len(eng._memo) <= 16

    def test_results_stable_under_cap(self):
        uncapped, capped = Engine(), Engine(cache_cap=8)
        for d in enumerate_diagrams(2, 2, 2):
            if not has_projection_property(d):
                continue
            a, b = uncapped.invariants(d), capped.invariants(d)
            assert (a.reg, a.mult) == (b.reg, b.mult)

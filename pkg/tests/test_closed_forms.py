import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partitions_up_to
from ferrers3d import (
    box,
    ferrers2d_multiplicity,
    ferrers2d_regularity,
    from_generators,
    has_strong_projection_property,
    mu_bound,
    oracle_invariants,
    profile_bounds,
    rect_multiplicity,
    rect_regularity,
    reduction_number,
    segre_combine,
    validate,
)
from ferrers3d.closed_forms import Ambiguous, SegreFactor, as_partition
from ferrers3d.engine import Engine
from ferrers3d.errors import HypothesisFailed, InvalidInput, UnsupportedDiagram
from ferrers3d.families import enumerate_diagrams

CLOSURE = from_generators([(1, 3, 2), (2, 2, 3)])


class TestRectangular:
    def test_values(self):
        assert rect_multiplicity(2, 2, 2) == 6
        assert rect_multiplicity(1, 1, 1) == 1
        assert rect_multiplicity(2, 3, 4) == 60
        assert rect_regularity(2, 2, 2) == 2
        assert rect_regularity(1, 1, 7) == 0
        assert rect_regularity(4, 3, 2) == 3

    def test_symmetry(self):
        for a, b, c in itertools.product(range(1, 5), repeat=3):
            for perm in itertools.permutations((a, b, c)):
                assert rect_multiplicity(*perm) == rect_multiplicity(a, b, c)
                assert rect_regularity(*perm) == rect_regularity(a, b, c)

    def test_matches_engine_and_oracle_small(self):
        eng = Engine()
        for a, b, c in itertools.product(range(1, 4), repeat=3):
            rep = eng.invariants(box(a, b, c))
            assert rep.reg == rect_regularity(a, b, c)
            assert rep.mult == rect_multiplicity(a, b, c)
            if a * b * c <= 18:
                ora = oracle_invariants(box(a, b, c))
                assert (ora.reg, ora.mult) == (rep.reg, rep.mult)


class TestFerrers2D:
    def test_regularity_examples(self):
        assert ferrers2d_regularity((3, 3)) == 1
        assert ferrers2d_regularity((2, 1)) == 0
        assert ferrers2d_regularity((3, 2, 1)) == 1

    def test_multiplicity_examples(self):
        assert ferrers2d_multiplicity((2, 2)) == 2
        assert ferrers2d_multiplicity((3, 2, 1)) == 2
        assert ferrers2d_multiplicity((9,)) == 1

    def test_partition_validation(self):
        with pytest.raises(InvalidInput):
            as_partition(())
        with pytest.raises(InvalidInput):
            as_partition((1, 2))
        with pytest.raises(InvalidInput):
            as_partition((2, 0))

    def test_ambiguous_case(self):
        amb = ferrers2d_regularity((3, 3, 2, 2))
        assert isinstance(amb, Ambiguous)
        assert amb.candidates() == (3, 2)
        amb = ferrers2d_regularity((5, 3, 2, 2))
        assert amb.candidates() == (3, 2)

    def test_coinciding_candidates_resolve(self):
        assert ferrers2d_regularity((3, 3, 2)) == 2

    def test_against_oracle_small(self):
        for lam in partitions_up_to(8):
            rep = oracle_invariants(validate([list(lam)]))
            assert ferrers2d_multiplicity(lam) == rep.mult
            reg = ferrers2d_regularity(lam)
            if isinstance(reg, Ambiguous):
                assert rep.reg in reg.candidates()
            else:
                assert reg == rep.reg

    def test_engine_matches_flat_sweep(self):
        # single-layer diagrams are two-dimensional; the recursion must
        # reproduce both flat formulas
        eng = Engine()
        for d in enumerate_diagrams(1, 3, 3):
            lam = d.layers[0]
            rep = eng.invariants(d)
            assert rep.mult == ferrers2d_multiplicity(lam)
            reg = ferrers2d_regularity(lam)
            if not isinstance(reg, Ambiguous):
                assert rep.reg == reg


class TestMuBound:
    def test_values(self):
        assert mu_bound(box(2, 2, 2)) == 2
        assert mu_bound(CLOSURE) == 3
        assert mu_bound(validate([[1]])) == 0


class TestSegre:
    def test_two_factors(self):
        out = segre_combine([SegreFactor(2, 0, 1), SegreFactor(3, 0, 1)])
        assert (out.dim, out.reg, out.mult) == (4, 1, 3)

    def test_identity(self):
        f = SegreFactor(5, 2, 7)
        assert segre_combine([f]) == f

    def test_three_polynomial_rings(self):
        out = segre_combine([SegreFactor(2, 0, 1)] * 3)
        assert (out.dim, out.reg, out.mult) == (4, 2, 6)

    def test_reproduces_rectangular(self):
        for a, b, c in itertools.product(range(1, 6), repeat=3):
            out = segre_combine([SegreFactor(a, 0, 1), SegreFactor(b, 0, 1), SegreFactor(c, 0, 1)])
            assert out.dim == a + b + c - 2
            assert out.mult == rect_multiplicity(a, b, c)
            if (a, b, c) != (1, 1, 1):
                assert out.reg == rect_regularity(a, b, c)

    def test_dimension_one_rule(self):
        out = segre_combine([SegreFactor(1, 0, 1), SegreFactor(1, 0, 1)])
        assert (out.dim, out.reg) == (1, 0)

    def test_hypothesis_failure(self):
        with pytest.raises(HypothesisFailed):
            segre_combine([SegreFactor(2, 2, 1), SegreFactor(3, 0, 1)])

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.tuples(st.integers(1, 5), st.integers(0, 3)), min_size=2, max_size=4))
    def test_associativity(self, raw):
        factors = [SegreFactor(d, min(r, d - 1), 1) for d, r in raw]
        whole = segre_combine(factors)
        paired = segre_combine([segre_combine(factors[:2])] + factors[2:])
        assert whole == paired


class TestProfileBounds:
    def test_box_is_tight(self):
        eng = Engine()
        for a, b, c in [(2, 2, 2), (2, 3, 3), (3, 2, 4)]:
            pb = profile_bounds(box(a, b, c))
            rep = eng.invariants(box(a, b, c))
            assert pb.reg_bound == rep.reg
            assert pb.mult_bound == rep.mult

    def test_flat_box(self):
        pb = profile_bounds(box(2, 2, 1))
        assert pb.box_mult_bound == 2
        assert pb.mult_bound == 2

    def test_staircase_box_bound(self):
        pb = profile_bounds(validate([[2, 1], [1]]))
        assert pb.box_mult_bound == 6

    def test_requires_strong(self):
        with pytest.raises(UnsupportedDiagram):
            profile_bounds(CLOSURE)

    def test_bounds_hold_in_three_box(self):
        eng = Engine()
        for d in enumerate_diagrams(3, 3, 3):
            if not has_strong_projection_property(d):
                continue
            rep = eng.invariants(d)
            pb = profile_bounds(d)
            assert rep.reg <= pb.reg_bound
            assert rep.mult <= pb.mult_bound


class TestReductionNumber:
    def test_values(self):
        assert reduction_number(box(2, 2, 2)) == 2
        assert reduction_number(validate([[1]])) == 0
        assert reduction_number(box(1, 2, 3)) == 1

    def test_matches_regularity(self):
        eng = Engine()
        for d in list(enumerate_diagrams(2, 2, 2)):
            if not has_strong_projection_property(d):
                continue
            assert reduction_number(d) == eng.invariants(d).reg

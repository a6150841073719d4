import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dynnikov import (
    ArcIntersections,
    DynnikovCoords,
    ElementaryCurve,
    InvalidCoordinatesError,
    MalformedInputError,
    NotDisjointError,
    ReducedCoords,
    arc_intersections,
    ceil_half,
    disjoint_union,
    elementary_coords,
    extend,
    from_arcs,
    reduce,
)
from conftest import valid_coords
import oracles

L12 = DynnikovCoords(3, (0, 0, 0), (-1, 1, 0))
L23 = DynnikovCoords(3, (0, 0, 0), (0, -1, 1))
EMPTY3 = DynnikovCoords.empty(3)


def test_ceil_half_rounds_toward_positive_infinity():
    assert [ceil_half(i) for i in (-3, -2, -1, 0, 1, 2, 3)] == [-1, -1, 0, 0, 1, 1, 2]


class TestExtend:
    def test_single_round_curve(self):
        assert extend(ReducedCoords(3, (0, 1))) == L12

    def test_empty(self):
        assert extend(ReducedCoords(3, (0, 0))) == EMPTY3

    def test_two_nested_curves(self):
        # forced b[0]: oracle gives -max(1, 0 + 1 + 1) = -2
        assert oracles.b0_of([0, 0], [1, 1]) == -2
        assert extend(ReducedCoords(4, (0, 0, 1, 1))) == DynnikovCoords(
            4, (0, 0, 0, 0), (-2, 1, 1, 0)
        )

    def test_wrong_length_rejected(self):
        with pytest.raises(MalformedInputError):
            ReducedCoords(3, (0, 1, 2))


class TestReduce:
    def test_single_round_curve(self):
        assert reduce(L12) == ReducedCoords(3, (0, 1))

    def test_slicing(self):
        c = DynnikovCoords(4, (0, 0, 0, 0), (-2, 1, 1, 0))
        assert reduce(c) == ReducedCoords(4, (0, 0, 1, 1))

    def test_empty(self):
        assert reduce(EMPTY3) == ReducedCoords(3, (0, 0))

    def test_invalid_coords_rejected(self):
        with pytest.raises(InvalidCoordinatesError):
            reduce(DynnikovCoords(3, (1, 0, 0), (0, 0, 0)))


class TestArcIntersections:
    def test_single_round_curve(self):
        assert oracles.alpha_of([0, 0, 0], [-1, 1, 0]) == [1, 1, 1, 1, 0, 0]
        assert oracles.beta_of([-1, 1, 0]) == [0, 2, 0, 0]
        arcs = arc_intersections(L12)
        assert arcs.alpha == (1, 1, 1, 1, 0, 0)
        assert arcs.beta == (0, 2, 0, 0)
        assert arcs.alpha_at(-1) == 1 and arcs.alpha_at(4) == 0

    def test_empty(self):
        arcs = arc_intersections(EMPTY3)
        assert arcs.alpha == (0,) * 6
        assert arcs.beta == (0,) * 4

    def test_twisted_curve(self):
        a, b = (0, -1, 0), (-1, 0, 1)
        assert oracles.alpha_of(list(a), list(b)) == [1, 1, 2, 0, 1, 1]
        assert oracles.beta_of(list(b)) == [0, 2, 2, 0]
        arcs = arc_intersections(DynnikovCoords(3, a, b))
        assert arcs.alpha == (1, 1, 2, 0, 1, 1)
        assert arcs.beta == (0, 2, 2, 0)
        assert arcs.validate() == []


class TestFromArcs:
    def test_inverse_of_round_curve_arcs(self):
        x = ArcIntersections(3, (1, 1, 1, 1, 0, 0), (0, 2, 0, 0))
        assert from_arcs(x) == L12

    def test_zero(self):
        assert from_arcs(ArcIntersections(3, (0,) * 6, (0,) * 4)) == EMPTY3

    def test_round_trip_twisted(self):
        c = DynnikovCoords(3, (0, -1, 0), (-1, 0, 1))
        assert from_arcs(arc_intersections(c)) == c

    def test_parity_violation_rejected(self):
        with pytest.raises(MalformedInputError):
            from_arcs(ArcIntersections(3, (1, 0, 1, 1, 0, 0), (0, 2, 0, 0)))


class TestElementaryCoords:
    def test_leftmost_pair(self):
        assert elementary_coords(ElementaryCurve(1, 2), 3) == L12

    def test_rightmost_pair(self):
        assert elementary_coords(ElementaryCurve(2, 3), 3) == L23

    def test_all_punctures_rejected(self):
        with pytest.raises(MalformedInputError):
            elementary_coords(ElementaryCurve(1, 3), 3)

    def test_backwards_pair_rejected(self):
        with pytest.raises(MalformedInputError):
            ElementaryCurve(2, 2)

    def test_out_of_range_rejected(self):
        with pytest.raises(MalformedInputError):
            elementary_coords(ElementaryCurve(2, 5), 4)


class TestNorm:
    def test_round_curve(self):
        assert L12.norm() == 2

    def test_empty(self):
        assert EMPTY3.norm() == 0

    def test_mixed_signs(self):
        assert DynnikovCoords(3, (0, -1, 0), (-1, 0, 1)).norm() == 3


class TestIsRelaxed:
    def test_round_curve(self):
        assert L12.is_relaxed()

    def test_twisted(self):
        assert not DynnikovCoords(3, (0, 1, 0), (-1, 0, 1)).is_relaxed()

    def test_empty(self):
        assert EMPTY3.is_relaxed()


class TestDisjointUnion:
    def test_nested_round_curves(self):
        u = disjoint_union(
            elementary_coords(ElementaryCurve(1, 2), 4),
            elementary_coords(ElementaryCurve(1, 3), 4),
        )
        assert u == DynnikovCoords(4, (0, 0, 0, 0), (-2, 1, 1, 0))

    def test_empty_is_identity(self):
        assert disjoint_union(L12, EMPTY3) == L12

    def test_linked_curves_rejected(self):
        assert oracles.linked((1, 2), (2, 3))
        with pytest.raises(NotDisjointError):
            disjoint_union(L12, L23)

    def test_mismatched_n_rejected(self):
        with pytest.raises(MalformedInputError):
            disjoint_union(L12, DynnikovCoords.empty(4))


class TestValidate:
    def test_round_curve_valid(self):
        assert L12.validate() == []

    def test_wrong_b0(self):
        report = DynnikovCoords(3, (0, 0, 0), (-2, 1, 1)).validate()
        assert any("b[0]" in line and "-1" in line for line in report)

    def test_nonzero_a0(self):
        report = DynnikovCoords(3, (1, 0, 0), (0, 0, 0)).validate()
        assert any("a[0]" in line for line in report)

    def test_positive_prefix_sum(self):
        report = DynnikovCoords(3, (0, 0, 0), (1, -1, 0)).validate()
        assert any("prefix" in line for line in report)

    def test_structural_errors_raised_at_construction(self):
        with pytest.raises(MalformedInputError):
            DynnikovCoords(2, (0, 0), (0, 0))
        with pytest.raises(MalformedInputError):
            DynnikovCoords(3, (0, 0), (0, 0, 0))
        with pytest.raises(MalformedInputError):
            DynnikovCoords(3, (0.5, 0, 0), (0, 0, 0))


@given(valid_coords())
def test_round_trip_reduce_extend(c):
    assert extend(reduce(c)) == c


@given(valid_coords())
def test_round_trip_arcs(c):
    assert from_arcs(arc_intersections(c)) == c


@given(valid_coords(max_entry=10**6))
@settings(max_examples=50)
def test_round_trips_with_large_entries(c):
    assert extend(reduce(c)) == c
    assert from_arcs(arc_intersections(c)) == c


@given(st.integers(3, 10), st.data())
def test_every_reduced_vector_extends_to_valid_coords(n, data):
    values = data.draw(
        st.lists(st.integers(-100, 100), min_size=2 * n - 4, max_size=2 * n - 4)
    )
    c = extend(ReducedCoords(n, values))
    assert c.validate() == []
    assert c.norm() >= sum(abs(v) for v in values)


@given(valid_coords())
def test_arc_output_invariants(c):
    arcs = arc_intersections(c)
    assert arcs.validate() == []
    assert arcs.beta == tuple(oracles.beta_of(list(c.b)))
    assert arcs.alpha == tuple(oracles.alpha_of(list(c.a), list(c.b)))

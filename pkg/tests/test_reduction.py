from fractions import Fraction

import pytest

from ellsurf.constants import ContractionOrder, StepKind
from ellsurf.exceptions import UnrecognizedGraph, UnsupportedCover
from ellsurf.kodaira import KodairaType
from ellsurf import reduction
from ellsurf.reduction import FiberGraph


@pytest.mark.parametrize('text', (
    'I0', 'I1', 'II', 'I2', 'I3', 'III', 'IV', 'I0*', 'I1*', 'IV*', 'III*', 'II*',
))
def test_kodaira_graph_round_trip(text):
    kodaira_type = KodairaType.parse(text)
    graph = reduction.kodaira_graph(kodaira_type)

    assert reduction.classify(graph) == kodaira_type
    assert graph.is_fiber_consistent()
    assert graph.euler_number() == kodaira_type.euler


def test_classify__unrecognized():
    graph = FiberGraph().add_component('A').add_component('B').add_edge('A', 'B')

    with pytest.raises(UnrecognizedGraph):
        reduction.classify(graph)


class TestCyclicCover(object):
    def test_degree_three(self):
        target = reduction.cyclic_cover_ivstar(3)

        assert target.node("E'")['self_intersection'] == -6
        assert target.node("E'")['genus'] == 1
        assert len(target.cones) == 3
        assert target.node("D1'")['self_intersection'] == Fraction(-2, 3)
        assert target.section == "C1'"
        assert target.section_square == -3

    def test_degree_two(self):
        target = reduction.cyclic_cover_ivstar(2)

        assert target.node("E'")['self_intersection'] == -1
        assert target.node("E'")['multiplicity'] == 3
        assert target.cones == []

    def test_unsupported_degree(self):
        with pytest.raises(UnsupportedCover):
            reduction.cyclic_cover_ivstar(4)


def test_resolve_cone():
    target = reduction.resolve_cone(reduction.cyclic_cover_ivstar(3))

    assert target.cones == []
    assert target.node("D1'")['self_intersection'] == -1
    assert target.node("C1'")['self_intersection'] == -1
    for label in ('E1', 'E2', 'E3'):
        assert target.node(label)['self_intersection'] == -3
        assert target.node(label)['multiplicity'] == 1
    assert target.is_fiber_consistent()


@pytest.mark.parametrize('order', (ContractionOrder.Lowest, ContractionOrder.Highest))
@pytest.mark.parametrize('degree, expected, euler', (
    (3, 'I0', 0),
    (2, 'IV', 4),
))
def test_reduce_ivstar(order, degree, expected, euler):
    trace, kodaira_type = reduction.reduce_ivstar(degree, order)

    assert str(kodaira_type) == expected
    assert trace.graph.euler_number() == euler
    assert all(kind is StepKind.BlowDown for kind, _, _ in list(trace)[2 if degree == 3 else 1:])


def test_reduce_ivstar__trace_kinds():
    trace, _ = reduction.reduce_ivstar(3)
    kinds = [kind for kind, _, _ in trace]

    assert kinds[:3] == [StepKind.CyclicCover, StepKind.NormalizeResolve, StepKind.BlowDown]
    assert trace.to_resources()[0].kind == 'CYCLIC_COVER'


@pytest.mark.parametrize('degree', (1, 3))
def test_track_section_degL(degree):
    assert reduction.track_section_degL(degree) == 1


def test_cone_normalization_certificate():
    assert reduction.cone_normalization_certificate().holds


def test_blow_down():
    graph = FiberGraph()
    graph.add_component('A').add_component('B', self_intersection=-1).add_component('C')
    graph.add_edge('A', 'B').add_edge('B', 'C')

    target = reduction.blow_down(graph, 'B')

    assert 'B' not in target
    assert target.intersection('A', 'A') == -1
    assert target.intersection('C', 'C') == -1
    assert target.intersection('A', 'C') == 1


def test_to_dot():
    target = reduction.cyclic_cover_ivstar(3).to_dot()

    assert target.startswith('graph fiber {')
    assert 'style=dashed' in target
    assert 'style=bold' in target

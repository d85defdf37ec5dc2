# -*- coding: utf-8 -*-
"""
Semistable Reduction
~~~~~~~~~~~~~~~~~~~~

Dual graphs of fibres, cyclic base change of the IV* fibre, resolution of the
cone points it creates, contraction of (-1)-curves and tracking of the zero
section's self-intersection (which yields the degree of the fundamental line
bundle).

Intersection numbers are exact rationals: the cover creates cyclic quotient
singularities, across which the intersection numbers of the preimage curves
are fractional.

"""
import itertools
import logging
from fractions import Fraction
from math import gcd

import networkx as nx
import sympy
from sympy import symbols

from .constants import ContractionOrder, StepKind
from .exceptions import NonIntegral, UnrecognizedGraph, UnsupportedCover
from .kodaira import KodairaType
from .resources import Certificate, GraphVertex, TraceStep

# Imports for typing support
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple  # noqa

logger = logging.getLogger(__name__)


class FiberGraph(object):
    """
    Weighted dual graph of a fibre.

    Nodes carry ``genus``, ``self_intersection``, ``multiplicity`` and an
    optional ``singularity`` ('node' or 'cusp') of an irreducible fibre. An
    edge carries ``weight``, the total intersection number, and ``points``,
    the number of distinct intersection points. Curves passing through one
    common point are listed in *concurrency*.

    """
    __slots__ = ('graph', 'section', 'section_square', 'concurrency')

    def __init__(self, section=None, section_square=None):
        self.graph = nx.Graph()
        self.section = section
        self.section_square = Fraction(section_square) if section_square is not None else None
        self.concurrency = []  # type: List[FrozenSet[str]]

    def __repr__(self):
        return "FiberGraph({} components)".format(len(self))

    def __len__(self):
        return self.graph.number_of_nodes()

    def __contains__(self, label):
        return label in self.graph

    def add_component(self, label, genus=0, self_intersection=-2, multiplicity=1, singularity=None):
        self.graph.add_node(
            label, genus=genus, self_intersection=Fraction(self_intersection),
            multiplicity=multiplicity, singularity=singularity
        )
        return self

    def add_edge(self, a, b, weight=1, points=1):
        self.graph.add_edge(a, b, weight=Fraction(weight), points=points)
        return self

    def add_concurrency(self, labels):
        labels = frozenset(labels)
        if len(labels) > 2 and labels not in self.concurrency:
            self.concurrency.append(labels)

    def copy(self):
        # type: () -> FiberGraph
        result = FiberGraph(self.section, self.section_square)
        result.graph = self.graph.copy()
        result.concurrency = list(self.concurrency)
        return result

    def labels(self):
        return sorted(self.graph.nodes)

    def node(self, label):
        return self.graph.nodes[label]

    def intersection(self, a, b):
        # type: (str, str) -> Fraction
        if a == b:
            return self.node(a)['self_intersection']
        if self.graph.has_edge(a, b):
            return self.graph.edges[a, b]['weight']
        return Fraction(0)

    @property
    def cones(self):
        # type: () -> List[Tuple[str, str]]
        """
        Incidences with non-integral intersection number.
        """
        return sorted(
            tuple(sorted((a, b))) for a, b, data in self.graph.edges(data=True) if data['weight'].denominator != 1
        )

    def fiber_dot(self, label):
        # type: (str) -> Fraction
        return sum(
            (self.node(other)['multiplicity'] * self.intersection(label, other) for other in self.graph.nodes),
            Fraction(0)
        )

    def fiber_square(self):
        # type: () -> Fraction
        return sum((self.node(label)['multiplicity'] * self.fiber_dot(label) for label in self.graph.nodes),
                   Fraction(0))

    def is_fiber_consistent(self):
        """
        The fibre meets each of its components trivially.
        """
        return all(self.fiber_dot(label) == 0 for label in self.graph.nodes)

    def euler_number(self):
        # type: () -> int
        total = 0
        for label in self.graph.nodes:
            data = self.node(label)
            total += 2 - 2 * data['genus'] - (1 if data['singularity'] == 'node' else 0)
        for a, b, data in self.graph.edges(data=True):
            if not any(a in group and b in group for group in self.concurrency):
                total -= data['points']
        for group in self.concurrency:
            total -= len(group) - 1
        return total

    def vertices(self):
        # type: () -> List[GraphVertex]
        return [
            GraphVertex(
                label=label, genus=self.node(label)['genus'],
                self_intersection=str(self.node(label)['self_intersection']),
                multiplicity=self.node(label)['multiplicity'],
            )
            for label in self.labels()
        ]

    def comparison_graph(self):
        # type: () -> nx.Graph
        """
        Copy with a point node joined to each concurrent set of curves.
        """
        graph = self.graph.copy()
        for node in graph.nodes:
            graph.nodes[node]['kind'] = 'curve'
        for index, group in enumerate(self.concurrency):
            point = ('point', index)
            graph.add_node(point, kind='point')
            for label in group:
                graph.add_edge(point, label, weight=None, points=None)
        return graph

    def to_dot(self, name='fiber'):
        # type: (str) -> str
        lines = ["graph {} {{".format(name)]
        for label in self.labels():
            data = self.node(label)
            genus = ", g={}".format(data['genus']) if data['genus'] else ''
            attributes = 'label="{} (m={}, {}{})"'.format(label, data['multiplicity'], data['self_intersection'], genus)
            if label == self.section:
                attributes += ', style=bold'
            lines.append('  "{}" [{}];'.format(label, attributes))
        for a, b, data in sorted(self.graph.edges(data=True)):
            style = ', style=dashed' if data['weight'].denominator != 1 else ''
            lines.append('  "{}" -- "{}" [label="{}"{}];'.format(a, b, data['weight'], style))
        for group in self.concurrency:
            lines.append('  // concurrent: {}'.format(', '.join(sorted(group))))
        lines.append("}")
        return '\n'.join(lines)


def _node_match(a, b):
    keys = ('kind', 'genus', 'self_intersection', 'multiplicity', 'singularity')
    return all(a.get(k) == b.get(k) for k in keys)


def _edge_match(a, b):
    return a.get('weight') == b.get('weight') and a.get('points') == b.get('points')


def _chain(graph, labels, multiplicities):
    for label, multiplicity in zip(labels, multiplicities):
        graph.add_component(label, multiplicity=multiplicity)
    for a, b in zip(labels, labels[1:]):
        graph.add_edge(a, b)


def kodaira_graph(kodaira_type):
    # type: (KodairaType) -> FiberGraph
    """
    Reference dual graph of a Kodaira fibre.
    """
    family, n = kodaira_type.family, kodaira_type.n
    graph = FiberGraph()

    if family == 'I' and n == 0:
        graph.add_component('F', genus=1, self_intersection=0)
    elif family == 'I' and n == 1:
        graph.add_component('F', self_intersection=0, singularity='node')
    elif family == 'II':
        graph.add_component('F', self_intersection=0, singularity='cusp')
    elif family == 'I' and n == 2:
        _chain(graph, ['C0', 'C1'], [1, 1])
        graph.graph.edges['C0', 'C1'].update(weight=Fraction(2), points=2)
    elif family == 'I':
        labels = ["C{}".format(i) for i in range(n)]
        _chain(graph, labels, [1] * n)
        graph.add_edge(labels[-1], labels[0])
    elif family == 'III':
        _chain(graph, ['C0', 'C1'], [1, 1])
        graph.graph.edges['C0', 'C1'].update(weight=Fraction(2), points=1)
    elif family == 'IV':
        labels = ['C0', 'C1', 'C2']
        for label in labels:
            graph.add_component(label)
        for a, b in itertools.combinations(labels, 2):
            graph.add_edge(a, b)
        graph.add_concurrency(labels)
    elif family == 'I*':
        spine = ["B{}".format(i) for i in range(n + 1)]
        _chain(graph, spine, [2] * (n + 1))
        for leaf, anchor in (('A1', spine[0]), ('A2', spine[0]), ('A3', spine[-1]), ('A4', spine[-1])):
            graph.add_component(leaf, multiplicity=1).add_edge(leaf, anchor)
    elif family == 'IV*':
        return iv_star_graph(section=False)
    elif family == 'III*':
        _chain(graph, ['A1', 'A2', 'A3', 'Z', 'B3', 'B2', 'B1'], [1, 2, 3, 4, 3, 2, 1])
        graph.add_component('C', multiplicity=2).add_edge('C', 'Z')
    elif family == 'II*':
        _chain(graph, ['A1', 'A2', 'A3', 'A4', 'A5', 'Z', 'B4', 'B2'], [1, 2, 3, 4, 5, 6, 4, 2])
        graph.add_component('C', multiplicity=3).add_edge('C', 'Z')
    return graph


def iv_star_graph(section=True):
    # type: (bool) -> FiberGraph
    """
    The IV* fibre: centre E of multiplicity 3, arms D_i (2) and C_i (1).

    The zero section of a rational elliptic surface meets C1 and has
    self-intersection -1.
    """
    graph = FiberGraph(section='C1', section_square=-1) if section else FiberGraph()
    graph.add_component('E', multiplicity=3)
    for i in (1, 2, 3):
        d, c = "D{}".format(i), "C{}".format(i)
        graph.add_component(d, multiplicity=2).add_component(c, multiplicity=1)
        graph.add_edge('E', d).add_edge(d, c)
    return graph


def _candidate_types(euler):
    candidates = [KodairaType('I', euler)]
    fixed = {2: 'II', 3: 'III', 4: 'IV', 8: 'IV*', 9: 'III*', 10: 'II*'}
    if euler in fixed:
        candidates.append(KodairaType(fixed[euler]))
    if euler >= 6:
        candidates.append(KodairaType('I*', euler - 6))
    return sorted(candidates)


def classify(graph):
    # type: (FiberGraph) -> KodairaType
    """
    Match a relatively minimal fibre against the Kodaira reference graphs.
    """
    comparison = graph.comparison_graph()
    for candidate in _candidate_types(graph.euler_number()):
        reference = kodaira_graph(candidate).comparison_graph()
        if nx.is_isomorphic(comparison, reference, node_match=_node_match, edge_match=_edge_match):
            return candidate
    raise UnrecognizedGraph(
        "Graph does not match a Kodaira fibre",
        meta={'euler': graph.euler_number(), 'vertices': [v.to_dict() for v in graph.vertices()]}
    )


def cyclic_cover(graph, degree):
    # type: (FiberGraph, int) -> FiberGraph
    """
    Normalised pull back of a fibre under a base change of *degree* totally
    ramified at its place.

    A component of multiplicity m has preimage of multiplicity m/k mapping
    with degree k = gcd(m, d); with c = d/k its self-intersection becomes
    ``d C^2 / c^2``. Over an intersection point of C and W lie
    gcd(m_C, m_W, d) points.
    """
    cover = FiberGraph(
        section=graph.section + "'" if graph.section else None,
        section_square=degree * graph.section_square if graph.section_square is not None else None
    )

    def factors(label):
        m = graph.node(label)['multiplicity']
        k = gcd(m, degree)
        return m, k, degree // k

    for label in graph.labels():
        data = graph.node(label)
        m, k, c = factors(label)
        ramification = 0
        for other in graph.graph.neighbors(label):
            over = gcd(gcd(m, graph.node(other)['multiplicity']), degree)
            ramification += (k - over) * graph.graph.edges[label, other]['points']
        euler_char = k * (2 - 2 * data['genus']) - ramification
        cover.add_component(
            label + "'",
            genus=(2 - euler_char) // 2,
            self_intersection=Fraction(degree) * data['self_intersection'] / (c * c),
            multiplicity=m // k,
        )

    for a, b, data in graph.graph.edges(data=True):
        m_a, _, c_a = factors(a)
        m_b, _, c_b = factors(b)
        over = gcd(gcd(m_a, m_b), degree)
        cover.add_edge(a + "'", b + "'", weight=degree * data['weight'] / (c_a * c_b), points=data['points'] * over)

    for group in graph.concurrency:
        cover.add_concurrency(label + "'" for label in group)
    return cover


def cyclic_cover_ivstar(degree):
    # type: (int) -> FiberGraph
    if degree not in (2, 3):
        raise UnsupportedCover("Cyclic covers of IV* are implemented for degree 2 and 3", meta={'degree': degree})
    cover = cyclic_cover(iv_star_graph(), degree)
    logger.debug("IV* under degree %d: %d components, %d cone points", degree, len(cover), len(cover.cones))
    return cover


def resolve_cone(graph):
    # type: (FiberGraph) -> FiberGraph
    """
    Blow up each cone point: a (-3)-curve E_i of multiplicity (m_C + m_W)/3
    replaces the incidence, and the two curves drop by 1/3.
    """
    result = graph.copy()
    for index, (a, b) in enumerate(graph.cones, start=1):
        total = graph.node(a)['multiplicity'] + graph.node(b)['multiplicity']
        if total % 3:
            raise NonIntegral(
                "Exceptional multiplicity ({})/3 is not integral".format(total), meta={'incidence': [a, b]}
            )
        label = "E{}".format(index)
        result.graph.remove_edge(a, b)
        for end in (a, b):
            result.node(end)['self_intersection'] -= Fraction(1, 3)
        result.add_component(label, self_intersection=-3, multiplicity=total // 3)
        result.add_edge(label, a).add_edge(label, b)
    return result


def cone_normalization_certificate():
    # type: () -> Certificate
    """
    The normalisation of ``t^3 = x^2 y`` is the cone over the twisted cubic:
    ``u = xy/t`` satisfies ``ut = xy``, ``u^2 = yt`` and ``t^2 = xu``.
    """
    t, x, y, u = symbols('t x y u')
    chain = sympy.expand(t * (t ** 2 - x * u) + x * (u * t - x * y) - (t ** 3 - x ** 2 * y)) == 0

    # on the surface y = t^3 / x^2
    u_value = x * y / t
    on_surface = {y: t ** 3 / x ** 2}
    relations = {
        'ut=xy': sympy.simplify((u_value * t - x * y).subs(on_surface)) == 0,
        'u^2=yt': sympy.simplify((u_value ** 2 - y * t).subs(on_surface)) == 0,
        't^2=xu': sympy.simplify((t ** 2 - x * u_value).subs(on_surface)) == 0,
    }
    return Certificate(
        name='cone-normalization',
        holds=chain and all(relations.values()),
        detail={'rewriting_chain': chain, 'relations': relations, 'integral_equation': 'u^2 - y*t = 0'}
    )


def _contraction_candidates(graph):
    return [
        label for label in graph.labels()
        if graph.node(label)['genus'] == 0 and graph.node(label)['self_intersection'] == -1
        and graph.node(label)['singularity'] is None
    ]


def blow_down(graph, label):
    # type: (FiberGraph, str) -> FiberGraph
    """
    Contract the (-1)-curve *label*.
    """
    result = graph.copy()
    neighbours = sorted(graph.graph.neighbors(label))
    weights = {other: graph.graph.edges[label, other]['weight'] for other in neighbours}

    for other in neighbours:
        result.node(other)['self_intersection'] += weights[other] ** 2
    for a, b in itertools.combinations(neighbours, 2):
        extra = weights[a] * weights[b]
        if result.graph.has_edge(a, b):
            edge = result.graph.edges[a, b]
            edge['weight'] += extra
            edge['points'] += 1
        else:
            result.add_edge(a, b, weight=extra)

    result.graph.remove_node(label)
    result.concurrency = [group - {label} for group in graph.concurrency if len(group - {label}) > 2]
    if len(neighbours) > 2:
        result.add_concurrency(neighbours)

    if graph.section == label:
        simple = [other for other in neighbours if graph.node(other)['multiplicity'] == 1]
        result.section = simple[0] if simple else None
        result.section_square = graph.section_square + 1
    return result


class ReductionTrace(object):
    """
    Ordered record of reduction steps with a graph snapshot after each.
    """
    __slots__ = ('steps',)

    def __init__(self):
        self.steps = []  # type: List[Tuple[StepKind, str, FiberGraph]]

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def record(self, kind, detail, graph):
        logger.debug("%s: %s", kind.value, detail)
        self.steps.append((kind, detail, graph.copy()))

    @property
    def graph(self):
        return self.steps[-1][2] if self.steps else None

    def section_squares(self):
        return [graph.section_square for _, _, graph in self.steps]

    def to_resources(self):
        return [
            TraceStep(
                kind=kind.value, detail=detail, vertices=graph.vertices(),
                section_square=str(graph.section_square) if graph.section_square is not None else None,
            )
            for kind, detail, graph in self.steps
        ]


def contract_all(graph, order=ContractionOrder.Lowest, trace=None):
    # type: (FiberGraph, ContractionOrder, Optional[ReductionTrace]) -> Tuple[FiberGraph, KodairaType]
    """
    Contract genus 0 (-1)-curves until none remain, then classify.
    """
    order = ContractionOrder(order)
    while True:
        candidates = _contraction_candidates(graph)
        if not candidates:
            break
        label = candidates[0] if order is ContractionOrder.Lowest else candidates[-1]
        graph = blow_down(graph, label)
        if trace is not None:
            trace.record(StepKind.BlowDown, "blow down {}".format(label), graph)
    return graph, classify(graph)


def reduce_ivstar(degree, order=ContractionOrder.Lowest):
    # type: (int, ContractionOrder) -> Tuple[ReductionTrace, KodairaType]
    """
    Full reduction of IV* under a cyclic base change of *degree*.
    """
    trace = ReductionTrace()
    graph = cyclic_cover_ivstar(degree)
    trace.record(StepKind.CyclicCover, "cyclic cover of degree {}".format(degree), graph)
    cones = len(graph.cones)
    if cones:
        graph = resolve_cone(graph)
        trace.record(StepKind.NormalizeResolve, "resolve {} cone point(s)".format(cones), graph)
    _, kodaira_type = contract_all(graph, order, trace)
    return trace, kodaira_type


def track_section_degL(degree=3):  # noqa: N802
    # type: (int) -> int
    """
    ``deg L = -sigma^2`` for the section on the reduced surface.
    """
    if degree == 1:
        return -int(iv_star_graph().section_square)
    trace, _ = reduce_ivstar(degree)
    square = trace.graph.section_square
    if square.denominator != 1:
        raise NonIntegral("Section self-intersection {} is not integral".format(square))
    return -int(square)

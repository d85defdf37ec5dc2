# -*- coding: utf-8 -*-
"""
Hurwitz Tuples
~~~~~~~~~~~~~~

Monodromy of triple covers of the line branched over ``0``, ``oo`` and two
moving points: tuples ``(sigma_0, tau_1, tau_2, sigma_oo)`` of permutations
with product one, their classes under simultaneous conjugation and the
action of braids on them.

Products are functional composition, ``(g h)(i) = g(h(i))``, which is
sympy's ``Permutation.rmul``.

"""
import itertools
import logging
import re

import networkx as nx
import sympy
from sympy import Symbol, symbols
from sympy.combinatorics import Permutation, PermutationGroup

from .basechange import branch_points_of_Ea
from .constants import CollisionLimit
from .exceptions import ExcludedParameter, UnsupportedCover
from .resources import Certificate, HurwitzOrbit
from .utils import parse_rational

# Imports for typing support
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple  # noqa

logger = logging.getLogger(__name__)

MAX_DEGREE = 6
"""
Largest symmetric group enumerated.
"""

EXCLUDED_PARAMETERS = (0, 1)

CYCLE_RE = re.compile(r'\(([\d ]*)\)')


def perm(cycles, degree=3):
    # type: (Sequence[Sequence[int]], int) -> Permutation
    """
    Permutation of ``{0, ..., degree - 1}`` from 1-based cycles.
    """
    cycles = [[i - 1 for i in cycle] for cycle in cycles if len(cycle) > 1]
    if not cycles:
        return Permutation(list(range(degree)))
    return Permutation(cycles, size=degree)


def parse_perm(text, degree=3):
    # type: (str, int) -> Permutation
    """
    Parse cycle notation such as ``(1 2 3)`` or ``(123)``.
    """
    cycles = []
    for body in CYCLE_RE.findall(text):
        tokens = body.split() if ' ' in body.strip() else list(body)
        cycles.append([int(token) for token in tokens])
    return perm(cycles, degree)


def cycle_string(permutation):
    # type: (Permutation) -> str
    """
    1-based cycle notation, ``()`` for the identity.
    """
    return ''.join(
        "({})".format(' '.join(str(i + 1) for i in cycle)) for cycle in permutation.cyclic_form
    ) or '()'


def compose(*permutations):
    # type: (*Permutation) -> Permutation
    return Permutation.rmul(*permutations)


def conjugate(g, permutation):
    # type: (Permutation, Permutation) -> Permutation
    return compose(g, permutation, ~g)


def is_full_cycle(permutation):
    cycles = permutation.cyclic_form
    return len(cycles) == 1 and len(cycles[0]) == permutation.size


def is_transposition(permutation):
    cycles = permutation.cyclic_form
    return len(cycles) == 1 and len(cycles[0]) == 2


class HurwitzTuple(object):
    """
    Ordered tuple of permutations, the local monodromies around the branch
    points in order.
    """
    __slots__ = ('perms',)

    @classmethod
    def from_cycles(cls, cycles, degree=3):
        # type: (Iterable[Sequence[Sequence[int]]], int) -> HurwitzTuple
        return cls(perm(c, degree) for c in cycles)

    @classmethod
    def parse(cls, text, degree=3):
        # type: (str, int) -> HurwitzTuple
        """
        Parse ``(1 2 3); (1 2); (2 3); (1 2 3)``.
        """
        return cls(parse_perm(part, degree) for part in text.split(';'))

    def __init__(self, perms):
        self.perms = tuple(perms)

    def __repr__(self):
        return "HurwitzTuple({})".format(', '.join(self.cycle_strings()))

    def __str__(self):
        return "({})".format(', '.join(self.cycle_strings()))

    def __iter__(self):
        return iter(self.perms)

    def __len__(self):
        return len(self.perms)

    def __getitem__(self, index):
        return self.perms[index]

    def __eq__(self, other):
        if isinstance(other, HurwitzTuple):
            return self.array_forms() == other.array_forms()
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.array_forms())

    @property
    def degree(self):
        return self.perms[0].size

    def array_forms(self):
        return tuple(tuple(p.array_form) for p in self.perms)

    def cycle_strings(self):
        # type: () -> List[str]
        return [cycle_string(p) for p in self.perms]

    def product(self):
        # type: () -> Permutation
        return compose(*self.perms)

    def is_transitive(self):
        return PermutationGroup(list(self.perms)).is_transitive()

    def is_valid(self):
        """
        Boundary entries full cycles, inner entries transpositions, product
        one and transitive.
        """
        boundary = is_full_cycle(self.perms[0]) and is_full_cycle(self.perms[-1])
        inner = all(is_transposition(p) for p in self.perms[1:-1])
        return boundary and inner and self.product().is_Identity and self.is_transitive()

    def conjugate(self, g):
        # type: (Permutation) -> HurwitzTuple
        return HurwitzTuple(conjugate(g, p) for p in self.perms)

    def conjugates(self):
        return {self.conjugate(Permutation(list(g))) for g in itertools.permutations(range(self.degree))}

    def class_key(self):
        # type: () -> Tuple[str, ...]
        """
        Lexicographically least cycle notation over the conjugacy orbit.
        """
        return min(tuple(t.cycle_strings()) for t in self.conjugates())

    def canonical(self):
        # type: () -> HurwitzTuple
        return min(self.conjugates(), key=lambda t: tuple(t.cycle_strings()))


def enumerate_tuples(degree=3, require_transitive=True):
    # type: (int, bool) -> List[HurwitzTuple]
    """
    Every tuple ``(sigma_0, tau_1, tau_2, sigma_oo)`` with full cycles at the
    ends, transpositions inside and product one.
    """
    if not 2 < degree <= MAX_DEGREE:
        raise UnsupportedCover("Hurwitz enumeration supports degree 3 to {}".format(MAX_DEGREE),
                               meta={'degree': degree})
    elements = [Permutation(list(p)) for p in itertools.permutations(range(degree))]
    cycles = [p for p in elements if is_full_cycle(p)]
    transpositions = [p for p in elements if is_transposition(p)]

    result = []
    for sigma_0, tau_1, tau_2 in itertools.product(cycles, transpositions, transpositions):
        sigma_oo = ~compose(sigma_0, tau_1, tau_2)
        if not is_full_cycle(sigma_oo):
            continue
        candidate = HurwitzTuple((sigma_0, tau_1, tau_2, sigma_oo))
        if require_transitive and not candidate.is_transitive():
            continue
        result.append(candidate)
    logger.debug("S_%d: %d Hurwitz tuples", degree, len(result))
    return result


class HurwitzClasses(object):
    """
    Raw tuples grouped into classes modulo simultaneous conjugation.
    """
    __slots__ = ('tuples', 'classes')

    def __init__(self, tuples):
        self.tuples = list(tuples)
        classes = {}
        for t in self.tuples:
            classes.setdefault(t.class_key(), []).append(t)
        self.classes = dict(sorted(classes.items()))

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes.items())

    @property
    def representatives(self):
        # type: () -> List[HurwitzTuple]
        return [HurwitzTuple.parse('; '.join(key), self.degree) for key in self.classes]

    @property
    def degree(self):
        return self.tuples[0].degree if self.tuples else 3

    def class_of(self, t):
        # type: (HurwitzTuple) -> int
        """
        Index of the class containing *t*.
        """
        return list(self.classes).index(t.class_key())

    def to_resources(self):
        return [
            HurwitzOrbit(
                representative=list(key), size=len(members),
                limit=collide_transpositions(members[0]).value,
            )
            for key, members in self
        ]


def enumerate_classes(degree=3):
    # type: (int) -> HurwitzClasses
    return HurwitzClasses(enumerate_tuples(degree))


def braid_move(t, i, inverse=False):
    # type: (HurwitzTuple, int, bool) -> HurwitzTuple
    """
    Standard braid generator on positions ``i`` and ``i + 1`` (1-based):
    ``(g, h) -> (g h g^-1, g)``, or ``(h, h^-1 g h)`` for the inverse.
    """
    if not 1 <= i < len(t):
        raise IndexError("Braid index {} out of range for a {}-tuple".format(i, len(t)))
    perms = list(t.perms)
    g, h = perms[i - 1], perms[i]
    if inverse:
        perms[i - 1], perms[i] = h, conjugate(~h, g)
    else:
        perms[i - 1], perms[i] = conjugate(g, h), g
    return HurwitzTuple(perms)


def pure_generator(i):
    # type: (int) -> Callable[[HurwitzTuple], HurwitzTuple]
    """
    The full twist ``sigma_i^2``.
    """
    def move(t):
        return braid_move(braid_move(t, i), i)
    move.__name__ = "sigma_{}^2".format(i)
    return move


def full_twist(t):
    # type: (HurwitzTuple) -> HurwitzTuple
    """
    ``(sigma_1 ... sigma_{n-1})^n``, which acts as conjugation by the product
    of the tuple.
    """
    for _ in range(len(t)):
        for i in range(1, len(t)):
            t = braid_move(t, i)
    return t


def braid_orbits(tuples, moves):
    # type: (Iterable[HurwitzTuple], Iterable[Callable]) -> List[List[HurwitzTuple]]
    """
    Orbits of a finite set of tuples under the group generated by *moves*.
    """
    graph = nx.Graph()
    moves = list(moves)
    for t in tuples:
        graph.add_node(t)
        for move in moves:
            graph.add_edge(t, move(t))
    orbits = [sorted(component, key=lambda t: t.cycle_strings()) for component in nx.connected_components(graph)]
    return sorted(orbits, key=lambda orbit: (len(orbit), orbit[0].cycle_strings()))


LOOPS = (
    (1, "loop of a simple branch point around 0"),
    (2, "loop around the diagonal (simple branch points collide)"),
    (3, "loop of a simple branch point around oo"),
)


def loop_dictionary(classes=None):
    # type: (HurwitzClasses) -> List[Dict[str, Any]]
    """
    Orbit structure of the raw tuples under each pure generator, and whether
    it preserves or exchanges the conjugacy classes.
    """
    classes = classes or enumerate_classes()
    result = []
    for i, loop in LOOPS:
        move = pure_generator(i)
        orbits = braid_orbits(classes.tuples, [move])
        action = {classes.class_of(t): classes.class_of(move(t)) for t in classes.tuples}
        result.append({
            'generator': move.__name__,
            'loop': loop,
            'orbit_sizes': sorted(len(o) for o in orbits),
            'class_action': 'preserves' if all(k == v for k, v in action.items()) else 'exchanges',
        })
        logger.debug("%s: %s", move.__name__, result[-1]['class_action'])
    return result


def collide_transpositions(t):
    # type: (HurwitzTuple) -> CollisionLimit
    """
    Limit of the cover as the two simple branch points collide: smooth when
    ``tau_1 tau_2`` is a 3-cycle, nodal when it is trivial.
    """
    merged = compose(t[1], t[2])
    return CollisionLimit.Nodal if merged.is_Identity else CollisionLimit.Smooth


class PhiImage(object):
    """
    The unordered pair of branch points of ``E_a`` as coordinates
    ``(u, v) = (product, sum)``.
    """
    __slots__ = ('parameter', 'u', 'v', 'quadratic')

    def __init__(self, parameter, u, v, quadratic):
        self.parameter = parameter
        self.u = u
        self.v = v
        self.quadratic = quadratic

    def __repr__(self):
        return "PhiImage(a={}, u={}, v={})".format(self.parameter, self.u, self.v)

    @property
    def discriminant(self):
        return sympy.expand(self.v ** 2 - 4 * self.u)

    def is_consistent(self):
        """
        Same quadratic as the branch points computed from the trisection.
        """
        quadratic = self.quadratic
        return sympy.expand(quadratic.root_sum - self.v) == 0 and sympy.expand(quadratic.root_product - self.u) == 0

    def to_dict(self):
        return {
            'a': str(self.parameter), 'u': str(self.u), 'v': str(self.v),
            'quadratic': "r^2 - ({})*r + ({})".format(self.v, self.u),
        }


def phi_map(a=None):
    # type: (Any) -> PhiImage
    """
    ``a -> ((1 - a)^2, 2 + 2a)``; formal in ``a`` when *a* is None.

    :raises ExcludedParameter: for ``a`` in ``{0, 1}``.

    """
    if a is None:
        parameter = Symbol('a')
    else:
        parameter = parse_rational(a)
        if parameter in EXCLUDED_PARAMETERS:
            raise ExcludedParameter("a = {} is excluded from the family".format(parameter), meta={'a': str(parameter)})
    u = sympy.expand((1 - parameter) ** 2)
    v = sympy.expand(2 + 2 * parameter)
    return PhiImage(parameter, u, v, branch_points_of_Ea(a))


def phi_image_conic():
    # type: () -> Certificate
    """
    The closure of the image of ``phi`` is the conic ``4UW = (4W - V)^2``,
    tangent to ``U = 0`` at ``V = 4W`` and to ``W = 0``.
    """
    U, V, W = symbols('U V W')
    conic = 4 * U * W - (4 * W - V) ** 2
    image = phi_map()
    on_conic = sympy.expand(conic.subs({U: image.u, V: image.v, W: 1})) == 0

    along_u = sympy.Poly(conic.subs({U: 0, W: 1}), V)
    along_w = sympy.Poly(conic.subs({W: 0, U: 1}), V)
    tangent_u = sympy.gcd(along_u, along_u.diff(V)).degree() == 1 and along_u.eval(4) == 0
    tangent_w = sympy.gcd(along_w, along_w.diff(V)).degree() == 1

    return Certificate(
        name='phi-image-conic',
        holds=on_conic and tangent_u and tangent_w,
        detail={
            'conic': '4*U*W - (4*W - V)^2',
            'parametrisation': ['(1 - a)^2', '2 + 2*a', '1'],
            'tangent_to_U=0_at_V=4W': tangent_u,
            'tangent_to_W=0': tangent_w,
        }
    )

# -*- coding: utf-8 -*-
"""
Kodaira Fibres
~~~~~~~~~~~~~~

Kodaira fibre types with their numeric attributes, Tate's algorithm at a
place (residue characteristic zero), fibre configurations of a model and the
global numerology of the resulting surface.

"""
import collections
import logging
import re
from fractions import Fraction

import numpy as np

from .constants import INFINITE
from .exactalg import INFINITY, Place, RationalFunction, ResidueField, factor_disc, format_polynomial, valuation
from .exceptions import BadComponent, DegreeViolation, NotRelativelyMinimal
from .resources import FiberEntry, SurfaceSummary
from .weierstrass import WeierstrassModel, chart_at_infinity, ea_family, std_invariants

# Imports for typing support
from typing import Dict, Iterable, List, Optional, Tuple, Union  # noqa

logger = logging.getLogger(__name__)

FAMILY_ORDER = ('I', 'II', 'III', 'IV', 'I*', 'IV*', 'III*', 'II*')

TYPE_RE = re.compile(r'^I(\d+)(\*?)$')

# family: (euler, components, monodromy, root lattice)
FIXED_TYPES = {
    'II': (2, 1, ((1, 1), (-1, 0)), None),
    'III': (3, 2, ((0, 1), (-1, 0)), ('A', 1)),
    'IV': (4, 3, ((0, 1), (-1, -1)), ('A', 2)),
    'IV*': (8, 7, ((-1, -1), (1, 0)), ('E', 6)),
    'III*': (9, 8, ((0, -1), (1, 0)), ('E', 7)),
    'II*': (10, 9, ((0, -1), (1, 1)), ('E', 8)),
}

LATTICE_DISCRIMINANT = {'E': {6: 3, 7: 2, 8: 1}}

# Height contributions of additive fibres: (same component, different components)
CONTRIBUTIONS = {
    'III': (Fraction(1, 2), None),
    'IV': (Fraction(2, 3), Fraction(1, 3)),
    'IV*': (Fraction(4, 3), Fraction(2, 3)),
    'III*': (Fraction(3, 2), None),
}


class KodairaType(object):
    """
    A Kodaira fibre type: ``I_n`` (n >= 0), II, III, IV, ``I_n*``, IV*, III* or II*.
    """
    __slots__ = ('family', 'n')

    @classmethod
    def parse(cls, text):
        # type: (str) -> KodairaType
        text = str(text).strip()
        match = TYPE_RE.match(text)
        if match:
            n, star = match.groups()
            return cls('I*' if star else 'I', int(n))
        if text in FIXED_TYPES:
            return cls(text)
        raise ValueError("Unknown Kodaira type: {!r}".format(text))

    def __init__(self, family, n=0):
        # type: (str, int) -> None
        if family not in FAMILY_ORDER:
            raise ValueError("Unknown family: {!r}".format(family))
        if n < 0:
            raise ValueError("Index must be non-negative")
        self.family = family
        self.n = n if family in ('I', 'I*') else 0

    def __str__(self):
        if self.family == 'I':
            return "I{}".format(self.n)
        if self.family == 'I*':
            return "I{}*".format(self.n)
        return self.family

    def __repr__(self):
        return "KodairaType({!r})".format(str(self))

    def __eq__(self, other):
        if isinstance(other, KodairaType):
            return (self.family, self.n) == (other.family, other.n)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.family, self.n))

    @property
    def sort_key(self):
        return FAMILY_ORDER.index(self.family), self.n

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    @property
    def is_smooth(self):
        return self.family == 'I' and self.n == 0

    @property
    def is_semistable(self):
        return self.family == 'I'

    @property
    def euler(self):
        # type: () -> int
        if self.family == 'I':
            return self.n
        if self.family == 'I*':
            return self.n + 6
        return FIXED_TYPES[self.family][0]

    @property
    def components(self):
        # type: () -> int
        if self.family == 'I':
            return max(self.n, 1)
        if self.family == 'I*':
            return self.n + 5
        return FIXED_TYPES[self.family][1]

    @property
    def monodromy_matrix(self):
        # type: () -> np.ndarray
        if self.family == 'I':
            return np.array([[1, self.n], [0, 1]], dtype=np.int64)
        if self.family == 'I*':
            return -np.array([[1, self.n], [0, 1]], dtype=np.int64)
        return np.array(FIXED_TYPES[self.family][2], dtype=np.int64)

    @property
    def monodromy_order(self):
        # type: () -> Union[int, float]
        """
        Multiplicative order of the monodromy, or ``INFINITE``.
        """
        matrix = self.monodromy_matrix
        identity = np.identity(2, dtype=np.int64)
        power = identity
        for order in range(1, 13):
            power = power.dot(matrix)
            if np.array_equal(power, identity):
                return order
        return INFINITE

    @property
    def root_lattice(self):
        # type: () -> Optional[Tuple[str, int]]
        """
        Root lattice spanned by the components missing the zero section.
        """
        if self.family == 'I':
            return ('A', self.n - 1) if self.n >= 2 else None
        if self.family == 'I*':
            return 'D', self.n + 4
        return FIXED_TYPES[self.family][3]

    @property
    def discriminant(self):
        # type: () -> int
        lattice = self.root_lattice
        if lattice is None:
            return 1
        kind, rank = lattice
        if kind == 'A':
            return rank + 1
        if kind == 'D':
            return 4
        return LATTICE_DISCRIMINANT[kind][rank]

    @property
    def simple_components(self):
        # type: () -> List[int]
        """
        Indices of the non-identity components of multiplicity one.

        For ``I_n*`` component 1 is the near component and 2, 3 the far ones.
        """
        if self.family == 'I':
            return list(range(1, self.n))
        if self.family == 'I*':
            return [1, 2, 3]
        return {'III': [1], 'IV': [1, 2], 'IV*': [1, 2], 'III*': [1]}.get(self.family, [])

    def height_contribution(self, i, j=None):
        # type: (int, Optional[int]) -> Fraction
        """
        Correction term of the height pairing for sections meeting
        components *i* and *j* (``j`` defaults to ``i``).
        """
        j = i if j is None else j
        valid = [0] + self.simple_components
        if i not in valid or j not in valid:
            raise BadComponent(
                "Component ({}, {}) is not a simple component of {}".format(i, j, self),
                meta={'type': str(self), 'valid': valid}
            )
        if i == 0 or j == 0:
            return Fraction(0)

        if self.family == 'I':
            i, j = min(i, j), max(i, j)
            return Fraction(i * (self.n - j), self.n)
        if self.family == 'I*':
            if i == j:
                return Fraction(1) if i == 1 else 1 + Fraction(self.n, 4)
            if 1 in (i, j):
                return Fraction(1, 2)
            return Fraction(1, 2) + Fraction(self.n, 4)

        same, different = CONTRIBUTIONS[self.family]
        return same if i == j else different


I0 = KodairaType('I', 0)

ADDITIVE_BY_DISCRIMINANT = {
    2: KodairaType('II'),
    3: KodairaType('III'),
    4: KodairaType('IV'),
    6: KodairaType('I*', 0),
    8: KodairaType('IV*'),
    9: KodairaType('III*'),
    10: KodairaType('II*'),
}


def monodromy_order(kodaira_type):
    # type: (KodairaType) -> Union[int, float]
    return kodaira_type.monodromy_order


class LocalReduction(object):
    """
    Result of Tate's algorithm at a place.
    """
    __slots__ = ('place', 'type', 'model', 'discriminant_valuation', 'shifts', 'j_residue')

    def __init__(self, place, kodaira_type, model, discriminant_valuation, shifts, j_residue=None):
        self.place = place
        self.type = kodaira_type
        self.model = model
        self.discriminant_valuation = discriminant_valuation
        self.shifts = shifts
        self.j_residue = j_residue

    def __repr__(self):
        return "LocalReduction({}, {}, v(D)={})".format(self.place, self.type, self.discriminant_valuation)


def _rescale(model, place):
    # type: (WeierstrassModel, Place) -> WeierstrassModel
    """
    Divide out the uniformiser: ``a_i -> a_i / pi^i``. When the long form is
    not integral after rescaling, use the short form built from c4, c6.
    """
    coefficients = model.coefficients
    pi = RationalFunction(place.as_poly(coefficients[0].gen, coefficients[0].domain))

    if all(valuation(a, place) >= i for a, i in zip(coefficients, (1, 2, 3, 4, 6))):
        return model.replace([a / pi ** i for a, i in zip(coefficients, (1, 2, 3, 4, 6))])

    invariants = std_invariants(model)
    zero = coefficients[0] * 0
    return model.replace([
        zero, zero, zero,
        -27 * invariants.c4 / pi ** 4,
        -54 * invariants.c6 / pi ** 6,
    ])


def _read_type(v4, discriminant_valuation):
    if discriminant_valuation == 0:
        return I0
    if v4 == 0:
        return KodairaType('I', discriminant_valuation)
    if 3 * v4 < discriminant_valuation:
        return KodairaType('I*', discriminant_valuation - 6)
    try:
        return ADDITIVE_BY_DISCRIMINANT[discriminant_valuation]
    except KeyError:
        raise NotRelativelyMinimal(
            "No Kodaira type with v(c4)={} and v(D)={}".format(v4, discriminant_valuation)
        )


def tate_local(model, place):
    # type: (WeierstrassModel, Place) -> LocalReduction
    """
    Run Tate's algorithm at *place*, minimalising first.

    At infinity the algorithm runs at the origin of the other chart.
    """
    if place.is_infinity:
        model = chart_at_infinity(model)
        local_place = Place.linear(0, model.variable)
    else:
        local_place = place

    invariants = std_invariants(model)
    shifts = 0
    while True:
        v4 = valuation(invariants.c4, local_place)
        v6 = valuation(invariants.c6, local_place)
        vd = valuation(invariants.discriminant, local_place)
        if not (v4 >= 4 and v6 >= 6 and vd >= 12):
            break
        model = _rescale(model, local_place)
        invariants = std_invariants(model)
        shifts += 1

    kodaira_type = _read_type(v4, vd)
    logger.debug("Tate at %s: v(c4)=%s v(D)=%s shifts=%d -> %s", place, v4, vd, shifts, kodaira_type)

    j_residue = None
    if valuation(invariants.j, local_place) >= 0:
        field = ResidueField(local_place.polynomial)
        j_residue = format_polynomial(field.evaluate(invariants.j))

    return LocalReduction(place, kodaira_type, model, vd, shifts, j_residue)


ConfigEntry = collections.namedtuple('ConfigEntry', 'place type multiplicity')


class FiberConfig(object):
    """
    Singular fibres of an elliptic surface over a base curve of genus *genus*.
    """
    __slots__ = ('entries', 'genus')

    def __init__(self, entries=None, genus=0):
        # type: (Iterable[Tuple[Place, KodairaType, int]], int) -> None
        self.entries = [ConfigEntry(*e) for e in (entries or [])]
        self.genus = genus

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "FiberConfig({!r}, genus={})".format(self.summary(), self.genus)

    def __eq__(self, other):
        if isinstance(other, FiberConfig):
            return self.type_counts() == other.type_counts() and self.genus == other.genus
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    @property
    def euler_total(self):
        return sum(e.type.euler * e.multiplicity for e in self.entries)

    def type_counts(self):
        # type: () -> Dict[KodairaType, int]
        """
        Number of geometric fibres of each type.
        """
        counts = collections.Counter()
        for entry in self.entries:
            counts[entry.type] += entry.multiplicity
        return dict(counts)

    def types(self):
        # type: () -> List[KodairaType]
        """
        Geometric fibre types, sorted.
        """
        return sorted(t for t, count in self.type_counts().items() for _ in range(count))

    def summary(self):
        """
        Compact form such as ``2I3 + I6``.
        """
        counts = self.type_counts()
        if not counts:
            return 'none'
        return ' + '.join(
            "{}{}".format(count if count > 1 else '', kodaira_type)
            for kodaira_type, count in sorted(counts.items())
        )

    def entry_for(self, place):
        # type: (Place) -> Optional[ConfigEntry]
        for entry in self.entries:
            if entry.place == place:
                return entry

    def to_resources(self):
        return [FiberEntry(place=str(e.place), type=str(e.type), mult=e.multiplicity) for e in self.entries]


def full_config(model):
    # type: (WeierstrassModel) -> FiberConfig
    """
    Every singular fibre of the model over the projective line.
    """
    invariants = std_invariants(model)
    discriminant = invariants.discriminant
    if not discriminant.is_polynomial:
        raise DegreeViolation("Model coefficients must be polynomial", meta={'discriminant': discriminant.to_text()})

    factorization = factor_disc(discriminant.numerator).require_complete()
    places = [Place.from_polynomial(factor) for factor, _ in factorization] + [INFINITY]

    entries = []
    for place in places:
        local = tate_local(model, place)
        if not local.type.is_smooth:
            entries.append((place, local.type, place.degree))
    config = FiberConfig(entries, genus=0)
    logger.info("Configuration of model over %s: %s", model.variable, config.summary())
    return config


class SurfaceInvariants(object):
    """
    Global invariants of a relatively minimal elliptic surface with section.
    """
    __slots__ = ('chi', 'deg_l', 'p_g', 'q', 'h11', 'classification', 'moduli_dimension', 'j_degree', 'genus')

    def __init__(self, chi, deg_l, genus, j_degree):
        self.chi = chi
        self.deg_l = deg_l
        self.genus = genus
        self.q = genus
        self.p_g = deg_l + genus - 1
        self.h11 = 10 * deg_l + 2 * genus
        self.moduli_dimension = moduli_dimension(deg_l, genus)
        self.j_degree = j_degree
        self.classification = classify_surface(genus, deg_l)

    def __repr__(self):
        return "SurfaceInvariants(chi={}, deg_l={}, p_g={}, q={}, h11={}, {!r})".format(
            self.chi, self.deg_l, self.p_g, self.q, self.h11, self.classification)

    def to_resource(self):
        return SurfaceSummary(
            chi=self.chi, deg_l=self.deg_l, p_g=self.p_g, q=self.q, h11=self.h11,
            moduli_dimension=self.moduli_dimension, j_degree=self.j_degree, classification=self.classification,
        )


def moduli_dimension(deg_l, genus):
    return 10 * deg_l + 2 * genus - 2


def classify_surface(genus, deg_l):
    return {
        (0, 1): 'rational',
        (0, 2): 'K3',
        (1, 1): 'elliptic-elliptic',
    }.get((genus, deg_l), "({},{})".format(genus, deg_l))


def surface_invariants(config):
    # type: (FiberConfig) -> SurfaceInvariants
    chi = config.euler_total
    if chi <= 0 or chi % 12:
        raise NotRelativelyMinimal(
            "Euler number {} is not a positive multiple of 12".format(chi),
            meta={'configuration': config.summary()}
        )
    j_degree = sum(e.type.n * e.multiplicity for e in config if e.type.family in ('I', 'I*'))
    return SurfaceInvariants(chi, chi // 12, config.genus, j_degree)


def config_summary(config):
    # type: (FiberConfig) -> str
    return config.summary()


def base_curve_degenerations():
    # type: () -> List[Tuple[Place, KodairaType, Union[int, float]]]
    """
    Degenerations of the family {E_a} over the a-line with their monodromy orders.
    """
    return [(e.place, e.type, e.type.monodromy_order) for e in full_config(ea_family())]

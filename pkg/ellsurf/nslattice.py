# -*- coding: utf-8 -*-
"""
Neron-Severi Lattices
~~~~~~~~~~~~~~~~~~~~~

Shioda-Tate accounting, discriminants of the trivial lattice, finite
quadratic forms and their isotropic quotients, the Mordell-Weil height
pairing and the bounded primitivity search.

Discriminant forms use the negative sign convention throughout: the
generator of ``A_n`` has ``q = -n/(n+1)`` modulo 2.

"""
import itertools
import logging
from fractions import Fraction
from functools import reduce

import numpy as np
import sympy
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .constants import PRIMITIVITY_COEFF_BOUND, PRIMITIVITY_H_MAX, PRIMITIVITY_N_MAX
from .exceptions import ExceedsH11, NonIntegral
from .kodaira import FiberConfig, KodairaType, surface_invariants
from .resources import IsotropicQuotient, SearchCertificate

# Imports for typing support
from typing import Dict, Iterable, List, Optional, Sequence, Tuple  # noqa

logger = logging.getLogger(__name__)


class RootBlock(object):
    """
    An ADE root lattice ``A_n``, ``D_n``, ``E_n`` or the hyperbolic plane ``U``.
    """
    __slots__ = ('kind', 'rank')

    @classmethod
    def from_type(cls, kodaira_type):
        # type: (KodairaType) -> Optional[RootBlock]
        lattice = kodaira_type.root_lattice
        if lattice is not None:
            return cls(*lattice)

    def __init__(self, kind, rank):
        # type: (str, int) -> None
        if kind not in ('A', 'D', 'E', 'U'):
            raise ValueError("Unknown root lattice: {}".format(kind))
        self.kind = kind
        self.rank = rank

    def __str__(self):
        return 'U' if self.kind == 'U' else "{}{}".format(self.kind, self.rank)

    def __repr__(self):
        return "RootBlock({!r})".format(str(self))

    def __eq__(self, other):
        if isinstance(other, RootBlock):
            return (self.kind, self.rank) == (other.kind, other.rank)
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.rank))

    @property
    def discriminant(self):
        # type: () -> int
        if self.kind == 'A':
            return self.rank + 1
        if self.kind == 'D':
            return 4
        if self.kind == 'E':
            return 9 - self.rank
        return 1

    def gram(self):
        # type: () -> np.ndarray
        """
        Negative definite Gram matrix on the simple roots (A_n only).
        """
        if self.kind != 'A':
            raise ValueError("Gram matrix only implemented for A_n")
        n = self.rank
        return -2 * np.identity(n, dtype=np.int64) + np.eye(n, k=1, dtype=np.int64) + np.eye(n, k=-1, dtype=np.int64)

    def discriminant_form(self):
        # type: () -> FiniteQuadForm
        n = self.rank
        if self.kind == 'A':
            return FiniteQuadForm([n + 1], [[Fraction(-n, n + 1)]])
        if self.kind == 'D':
            if n % 2:
                return FiniteQuadForm([4], [[Fraction(-n, 4)]])
            b = Fraction(-(n - 2), 4)
            return FiniteQuadForm([2, 2], [[Fraction(-n, 4), b], [b, Fraction(-n, 4)]])
        if self.kind == 'E' and n == 6:
            return FiniteQuadForm([3], [[Fraction(-4, 3)]])
        if self.kind == 'E' and n == 7:
            return FiniteQuadForm([2], [[Fraction(-3, 2)]])
        return FiniteQuadForm([], [])


U = RootBlock('U', 2)


def root_blocks(config):
    # type: (FiberConfig) -> List[RootBlock]
    """
    Root lattice of each geometric singular fibre.
    """
    blocks = []
    for entry in config:
        block = RootBlock.from_type(entry.type)
        if block is not None:
            blocks.extend([block] * entry.multiplicity)
    return blocks


def trivial_lattice(config):
    # type: (FiberConfig) -> List[RootBlock]
    return [U] + root_blocks(config)


def _mod(value, modulus):
    return value - modulus * (value // modulus)


class FiniteQuadForm(object):
    """
    A finite abelian group ``Z/k_1 + ... + Z/k_m`` with a quadratic form.

    *gram* holds ``q(e_i)`` modulo 2 on the diagonal and ``b(e_i, e_j)``
    modulo 1 off it.
    """
    __slots__ = ('orders', 'gram')

    def __init__(self, orders, gram):
        # type: (Sequence[int], Sequence[Sequence[Fraction]]) -> None
        self.orders = tuple(int(k) for k in orders)
        size = len(self.orders)
        self.gram = tuple(
            tuple(_mod(Fraction(gram[i][j]), 2 if i == j else 1) for j in range(size))
            for i in range(size)
        )

    @classmethod
    def from_blocks(cls, blocks):
        # type: (Iterable[RootBlock]) -> FiniteQuadForm
        return reduce(lambda a, b: a.direct_sum(b), (b.discriminant_form() for b in blocks), cls([], []))

    def __repr__(self):
        return "FiniteQuadForm(orders={})".format(self.orders)

    @property
    def order(self):
        result = 1
        for k in self.orders:
            result *= k
        return result

    def direct_sum(self, other):
        # type: (FiniteQuadForm) -> FiniteQuadForm
        size = len(self.orders) + len(other.orders)
        gram = [[Fraction(0)] * size for _ in range(size)]
        offset = len(self.orders)
        for i, row in enumerate(self.gram):
            for j, value in enumerate(row):
                gram[i][j] = value
        for i, row in enumerate(other.gram):
            for j, value in enumerate(row):
                gram[offset + i][offset + j] = value
        return FiniteQuadForm(self.orders + other.orders, gram)

    def elements(self):
        return itertools.product(*(range(k) for k in self.orders))

    def normalize(self, x):
        return tuple(v % k for v, k in zip(x, self.orders))

    def add(self, x, y):
        return self.normalize(a + b for a, b in zip(x, y))

    def scale(self, m, x):
        return self.normalize(m * v for v in x)

    def q(self, x):
        # type: (Sequence[int]) -> Fraction
        value = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                value += xi * xi * self.gram[i][i]
                for j in range(i + 1, len(x)):
                    value += 2 * xi * x[j] * self.gram[i][j]
        return _mod(value, 2)

    def b(self, x, y):
        # type: (Sequence[int], Sequence[int]) -> Fraction
        value = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    value += xi * yj * self.gram[i][j]
        return _mod(value, 1)

    def element_order(self, x):
        # type: (Sequence[int]) -> int
        result = 1
        for v, k in zip(x, self.orders):
            result = sympy.ilcm(result, k // sympy.igcd(v, k))
        return int(result)

    def group_structure(self):
        return group_structure(self.element_order(x) for x in self.elements())


def discriminant_form(blocks):
    # type: (Iterable[RootBlock]) -> FiniteQuadForm
    return FiniteQuadForm.from_blocks(blocks)


def group_structure(orders):
    # type: (Iterable[int]) -> Tuple[int, ...]
    """
    Invariant factors of a finite abelian group from the orders of its elements.
    """
    orders = list(orders)
    size = len(orders)
    divisors = []
    for p in sympy.primefactors(size):
        full = sympy.multiplicity(p, size)
        previous_exponent, ranks = 0, []
        k = 1
        while previous_exponent < full:
            count = sum(1 for o in orders if (p ** k) % o == 0)
            exponent = sympy.multiplicity(p, count)
            ranks.append(exponent - previous_exponent)
            previous_exponent = exponent
            k += 1
        ranks.append(0)
        for k in range(1, len(ranks)):
            divisors.extend([p ** k] * (ranks[k - 1] - ranks[k]))

    if not divisors:
        return ()
    factors = invariant_factors(Matrix.diag(*divisors), domain=ZZ)
    return tuple(int(f) for f in factors if int(f) != 1)


def format_structure(structure):
    # type: (Sequence[int]) -> str
    return ' + '.join("Z{}".format(k) for k in structure) if structure else '0'


class Quotient(object):
    """
    An isotropic cyclic subgroup *K* with the structure of ``K^perp / K``.
    """
    __slots__ = ('generator', 'subgroup', 'perp_order', 'structure')

    def __init__(self, generator, subgroup, perp_order, structure):
        self.generator = generator
        self.subgroup = subgroup
        self.perp_order = perp_order
        self.structure = structure

    def __repr__(self):
        return "Quotient({}, {})".format(self.generator, format_structure(self.structure))

    @property
    def order(self):
        return self.perp_order // len(self.subgroup)

    def to_resource(self):
        return IsotropicQuotient(
            generator=list(self.generator), perp_order=self.perp_order, structure=list(self.structure)
        )


def _coset_order(form, y, subgroup):
    m = 1
    while form.scale(m, y) not in subgroup:
        m += 1
    return m


def isotropic_quotients(form, prime):
    # type: (FiniteQuadForm, int) -> List[Quotient]
    """
    Every isotropic subgroup of order *prime* and the structure of its quotient.
    """
    if form.order % prime:
        raise ValueError("{} does not divide the order {}".format(prime, form.order))

    results = []
    seen = set()
    elements = list(form.elements())
    for x in elements:
        if form.element_order(x) != prime or form.q(x) != 0:
            continue
        subgroup = frozenset(form.scale(m, x) for m in range(prime))
        if subgroup in seen:
            continue
        seen.add(subgroup)

        perp = [y for y in elements if form.b(x, y) == 0]
        representatives = {min(form.add(y, k) for k in subgroup) for y in perp}
        structure = group_structure(_coset_order(form, y, subgroup) for y in representatives)
        results.append(Quotient(x, subgroup, len(perp), structure))

    logger.debug("%d isotropic subgroups of order %d in %r", len(results), prime, form)
    return results


def shioda_tate_rho(config, rank, h11=None):
    # type: (FiberConfig, int, Optional[int]) -> int
    """
    Picard number ``2 + r + sum(m_v - 1)``.
    """
    if rank < 0:
        raise ValueError("Mordell-Weil rank must be non-negative")
    rho = 2 + rank + sum((e.type.components - 1) * e.multiplicity for e in config)
    if h11 is None:
        h11 = surface_invariants(config).h11
    if rho > h11:
        raise ExceedsH11(
            "Picard number {} exceeds h11 = {}".format(rho, h11),
            meta={'configuration': config.summary(), 'rank': rank}
        )
    return rho


def ns_discriminant(config, torsion_order, mw_gram_det=1):
    # type: (FiberConfig, int, int) -> int
    """
    ``|disc NS| = prod(disc root blocks) * det(MW lattice) / |torsion|^2``.
    """
    product = 1
    for block in root_blocks(config):
        product *= block.discriminant
    value = Fraction(product * mw_gram_det, torsion_order ** 2)
    if value.denominator != 1:
        raise NonIntegral(
            "Discriminant {} is not integral".format(value),
            meta={'configuration': config.summary(), 'torsion': torsion_order}
        )
    return value.numerator


def mw_height(chi, p_dot_o, contribs=()):
    # type: (int, int, Iterable[Tuple[KodairaType, int]]) -> Fraction
    """
    Height ``2 chi + 2 P.O - sum contr_v(P)`` of a section.
    """
    return Fraction(2 * chi + 2 * p_dot_o) - sum(
        (kodaira_type.height_contribution(i) for kodaira_type, i in contribs), Fraction(0)
    )


def height_pairing(chi, p_dot_o, q_dot_o, p_dot_q, contribs=()):
    # type: (int, int, int, int, Iterable[Tuple[KodairaType, int, int]]) -> Fraction
    """
    ``<P, Q> = chi + P.O + Q.O - P.Q - sum contr_v(P, Q)``.
    """
    return Fraction(chi + p_dot_o + q_dot_o - p_dot_q) - sum(
        (kodaira_type.height_contribution(i, j) for kodaira_type, i, j in contribs), Fraction(0)
    )


# Root blocks of Y_a orthogonal to U: four A2 from the I3 fibres and the A1
# spanned by the Mordell-Weil generator.
PRIMITIVITY_BLOCKS = (RootBlock('A', 2),) * 4 + (RootBlock('A', 1),)


def _incidences(block):
    """
    Incidence vectors of a section with the non-identity simple roots of *block*.
    """
    yield np.zeros(block.rank, dtype=np.int64)
    for i in range(block.rank):
        vector = np.zeros(block.rank, dtype=np.int64)
        vector[i] = 1
        yield vector


def _block_solutions(block, n, delta, bound):
    """
    Box vectors ``r`` with ``G r = -n delta``; returns (solutions, examined).
    """
    gram = block.gram()
    axes = np.meshgrid(*([np.arange(-bound, bound + 1)] * block.rank), indexing='ij')
    vectors = np.stack([a.ravel() for a in axes], axis=1)
    images = vectors.dot(gram.T)
    mask = np.all(images == -n * delta, axis=1)
    return vectors[mask], len(vectors)


def primitivity_search(n_max=PRIMITIVITY_N_MAX, h_max=PRIMITIVITY_H_MAX, coeff_bound=PRIMITIVITY_COEFF_BOUND,
                       blocks=PRIMITIVITY_BLOCKS):
    # type: (int, int, int, Sequence[RootBlock]) -> SearchCertificate
    """
    Search for ``P = n Sigma0 - (n - 1) C0 + kF + R`` with
    ``2n^2(h + 1) - 2 = R.R + 2n Sigma0.R``.

    Only admissible R are considered: P has height 2 so meets identity
    components only, forcing ``R.Theta = -n [Sigma0 meets Theta]`` on every
    non-identity component. Every incidence pattern of Sigma0 is tried.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")

    block_patterns = [list(_incidences(block)) for block in blocks]
    pattern_count = 1
    for patterns in block_patterns:
        pattern_count *= len(patterns)

    examined = admissible = excluded = 0
    solutions = []
    for n in range(2, n_max + 1):
        # per block: list of (R.R, Sigma0.R) for each admissible (pattern, r)
        block_values = []
        for block, patterns in zip(blocks, block_patterns):
            gram = block.gram()
            values = []
            for delta in patterns:
                found, count = _block_solutions(block, n, delta, coeff_bound)
                examined += count
                for r in found:
                    values.append((int(r.dot(gram).dot(r)), int(delta.dot(r))))
            block_values.append(values)

        for combination in itertools.product(*block_values):
            admissible += 1
            r_square = sum(v[0] for v in combination)
            sigma_dot_r = sum(v[1] for v in combination)
            rhs = r_square + 2 * n * sigma_dot_r
            for h in range(h_max + 1):
                if n % 3 == 0 and rhs % 3 == 0:
                    excluded += 1
                    continue
                if 2 * n * n * (h + 1) - 2 == rhs:
                    solutions.append({'n': n, 'h': h, 'r_square': r_square, 'sigma_dot_r': sigma_dot_r})

    logger.info("Primitivity search: %d patterns, %d vectors, %d admissible, %d solutions",
                pattern_count, examined, admissible, len(solutions))
    return SearchCertificate(
        n_max=n_max, h_max=h_max, coeff_bound=coeff_bound, patterns=pattern_count,
        vectors_examined=examined, admissible=admissible, mod3_excluded=excluded, solutions=solutions,
    )

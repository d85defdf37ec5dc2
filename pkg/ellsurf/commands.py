"""
Commands
~~~~~~~~

Each command runs one pipeline and reports its claims.

"""
import argparse
import math
from collections import namedtuple
from fractions import Fraction

import sympy
from sympy import Rational, Symbol

from .basechange import (
    BranchProfile, branch_collisions, cross_validate, hesse_cover, rh_genus, transported_config, y0_profile,
    ya_profile, zprime_profile,
)
from .constants import ATKIN_LEHNER_SAMPLES, ATKIN_LEHNER_TOLERANCE, DEFAULT_TERMS, DEFAULT_TOLERANCE, INFINITE
from .constants import MODULAR_LEVEL, ContractionOrder
from .containers import CommandGroup
from .data_structures import ReportBuilder
from .decorators import flag, option
from .exactalg import RationalFunction, format_expr
from .exceptions import ExcludedParameter, UsageError
from .hurwitz import enumerate_classes, full_twist, loop_dictionary, phi_image_conic, phi_map
from .kodaira import KodairaType, base_curve_degenerations, full_config, surface_invariants
from .nslattice import (
    U, RootBlock, discriminant_form, format_structure, isotropic_quotients, mw_height, ns_discriminant,
    primitivity_search, shioda_tate_rho,
)
from .qseries import (
    LEVEL_11_FORM, BinaryQF, atkin_lehner_check, eval_upper_half, fixed_point_classes, level_11_quotient,
    locate_theta_zero, shioda_modular_config, theta_qf,
)
from .reduction import cone_normalization_certificate, cyclic_cover_ivstar, reduce_ivstar, resolve_cone
from .reduction import track_section_degL
from .trisection import (
    class_and_genus, disc_factorization, extract_trisection, induced_profile, plane_image, tangency_parameters,
)
from .utils import format_complex, parse_complex, parse_rational
from .weierstrass import (
    certify_ea, certify_xprime, describe, ea_limit_curve, ea_model, hesse_model, j_degree, quotient_identity_check,
    std_invariants, xprime_model,
)

commands = CommandGroup(name='commands')

MIN_TERMS = 20


def _order(value):
    return 'INFINITE' if value == INFINITE else value


def _less_than(computed, expected):
    return computed < expected


def _greater_than(computed, expected):
    return computed > expected


def _form(value):
    try:
        return BinaryQF.parse(value)
    except ExcludedParameter as ex:
        raise argparse.ArgumentTypeError(str(ex))


@commands.command(name='hesse')
def hesse():
    """
    Singular fibres of the Hesse pencil, recovered from its quotient by the cube map.
    """
    builder = ReportBuilder("Hesse pencil", 'hesse')
    anchor = 'hesse-pencil'

    model = hesse_model()
    config = full_config(model)
    invariants = surface_invariants(config)
    builder.check('configuration', anchor, config.summary(), '4I3')
    builder.check('euler-number', anchor, config.euler_total, 12)
    builder.check('j-degree', anchor, j_degree(model), 12)
    builder.check('classification', anchor, invariants.classification, 'rational')
    builder.check('h11', anchor, invariants.h11, 10)

    u = Symbol('u')
    validation = cross_validate(xprime_model(), RationalFunction.coerce(u ** 3, 'u'), hesse_cover())
    builder.check('cube-map-pullback', 'quotient-cover', validation.symbolic.summary(), '4I3')
    builder.check('cube-map-transport', 'quotient-cover', validation.combinatorial.summary(), '4I3')

    builder.add_data(model=describe(model), fibers=config.to_resources(), cross_validation=validation.to_dict())
    return builder.build()


@commands.command(name='quotient')
def quotient():
    """
    The quotient surface X', the curves E_a and their J-invariant.
    """
    builder = ReportBuilder("Quotient surface X'", 'quotient')
    anchor = 'quotient-surface'

    model = xprime_model()
    config = full_config(model)
    builder.check('configuration', anchor, config.summary(), 'I1 + I3 + IV*')
    builder.check('euler-number', anchor, config.euler_total, 12)
    for certificate in (certify_xprime(), quotient_identity_check(), certify_ea()):
        builder.check(certificate.name, anchor, certificate.holds, True)

    a = Symbol('a')
    j = std_invariants(ea_model()).j.constant_value()
    expected = 27 * a * (a + 8) ** 3 / (a - 1) ** 3
    identity = sympy.cancel(j - expected) == 0
    builder.check(
        'j-invariant', 'curve-E_a', format_expr(sympy.factor(j)), format_expr(expected),
        predicate=lambda *_: identity
    )
    builder.check('j-invariant-at-4', 'curve-E_a', std_invariants(ea_model(4)).j.constant_value(), 4 * 1728)
    builder.check('limit-curve-j-zero', 'curve-E_a', std_invariants(ea_limit_curve()).c4.is_zero, True)

    degenerations = {str(kodaira_type): _order(order) for _, kodaira_type, order in base_curve_degenerations()}
    builder.check('base-degenerations', 'family-E_a', degenerations, {'IV*': 3, 'I3': 'INFINITE', 'I1': 'INFINITE'})

    builder.add_data(model=describe(model), fibers=config.to_resources())
    return builder.build()


@commands.command(name='trisection')
@option('a', parse_rational, "Parameter of the trisection as p/q.", default=Rational(4), metavar='p/q')
def trisection(a):
    """
    The trisection y = a of the Hesse pencil: discriminant, tangency and genus.
    """
    a = parse_rational(a)
    builder = ReportBuilder("Trisection at a = {}".format(a), 'trisection')
    anchor = 'trisection'

    formal = disc_factorization()
    builder.check('discriminant-identity', anchor, formal.certificate.holds, True)
    builder.check('tangency-parameters', anchor, sorted(tangency_parameters()), [4])

    genus = class_and_genus()
    builder.check('class', anchor, str(genus.curve_class), '3C0 + 3F')
    builder.check('self-intersection', anchor, genus.self_intersection, 9)
    builder.check('arithmetic-genus', anchor, genus.arithmetic_genus, 4)
    builder.check('geometric-genus', anchor, genus.genus, 1)
    builder.check('torsion-section-dot', anchor, genus.torsion_dot, 3)

    image = plane_image()
    builder.check('plane-degree', 'plane-image', image.degree, 9)
    builder.check('plane-genus', 'plane-image', image.genus, 1)
    builder.info('printed-formula-genus', 'plane-image', image.printed_formula_genus)

    curve = extract_trisection(a)
    specialised = disc_factorization(a)
    profile = induced_profile(a)
    builder.info('discriminant-roots', anchor, [str(r) for r in specialised.roots()])
    builder.check('induced-cover-genus', anchor, rh_genus(profile), 1)
    builder.info('tangent-to-fibres', anchor, a in tangency_parameters())

    builder.add_data(
        curve=curve.to_dict(), discriminant=specialised.to_dict(), formal=formal.to_dict(),
        induced_profile=str(profile), class_and_genus=genus.to_dict(), plane_image=image.to_dict(),
    )
    return builder.build()


SurfaceExpectation = namedtuple('SurfaceExpectation', 'summary classification genus rank rho collisions disc')


def _expectation(a):
    # type: (Rational) -> SurfaceExpectation
    # rank is the assumed Mordell-Weil rank, the rest are reference values
    if a == 0:
        return SurfaceExpectation('I3 + I9', 'elliptic-elliptic', 1, 0, 12, ['1'], 3)
    if a == 1:
        return SurfaceExpectation('4I3 + IV + IV*', 'K3', 0, 0, 18, ['0'], None)
    if a == 4:
        return SurfaceExpectation('2I3 + I6', 'elliptic-elliptic', 1, 1, 12, ['1'], 12)
    return SurfaceExpectation('4I3', 'elliptic-elliptic', 1, 1, 11, [], 18)


@commands.command(name='surface', suite=[{'a': Rational(v)} for v in (4, 7, 0, 1)])
@option('a', parse_rational, "Parameter of the surface Y_a as p/q.", default=Rational(4), metavar='p/q')
@option('rank', int, "Mordell-Weil rank assumed for the Shioda-Tate table, not computed; "
                        "defaults to 1, or 0 at a in {0, 1}.", metavar='N')
def surface(a, rank):
    """
    The surface Y_a: branch profile, fibre configuration and Shioda-Tate table.

    The Mordell-Weil rank is an input; the expected Picard number follows it.
    """
    a = parse_rational(a)
    builder = ReportBuilder("Surface Y_a at a = {}".format(a), 'surface')
    anchor = 'surface-Y_a'
    expected = _expectation(a)
    if rank is None:
        rank = expected.rank
    if rank < 0:
        raise UsageError("Rank must be non-negative", meta={'rank': rank})

    profile = ya_profile(a)
    config = transported_config(full_config(xprime_model()), profile)
    invariants = surface_invariants(config)
    builder.info('branch-profile', anchor, str(profile))
    builder.check('branch-collisions', anchor, [p.short() for p in branch_collisions(a)], expected.collisions)
    builder.check('base-genus', anchor, config.genus, expected.genus)
    builder.check('configuration', anchor, config.summary(), expected.summary)
    builder.check('classification', anchor, invariants.classification, expected.classification)
    builder.check('h11', anchor, invariants.h11, 10 * invariants.deg_l + 2 * expected.genus)
    builder.check(
        'moduli-dimension', anchor, invariants.moduli_dimension, 10 * invariants.deg_l + 2 * expected.genus - 2
    )

    rho = shioda_tate_rho(config, rank, invariants.h11)
    builder.info('mordell-weil-rank-assumed', anchor, rank)
    builder.check('picard-number', anchor, rho, expected.rho - expected.rank + rank)
    if rank:
        height = mw_height(invariants.deg_l, 0)
        builder.check('section-height', anchor, height, 2)
    if expected.disc is not None and rank == expected.rank:
        disc = ns_discriminant(config, 3, mw_gram_det=2 if rank else 1)
        builder.check('ns-discriminant', anchor, disc, expected.disc)

    builder.add_data(
        a=str(a), rank=rank, profile=str(profile), fibers=config.to_resources(), invariants=invariants.to_resource(),
    )
    return builder.build()


@commands.command(name='basechange')
@option('profile', str, "Branch profile, eg 'd=3; 0:3; inf:3; 9:2+1; 1:2+1'.", metavar='profile')
def basechange(profile):
    """
    Base change of X' along named rational covers, or along a given branch profile.
    """
    builder = ReportBuilder("Base change of X'", 'basechange')
    anchor = 'base-change'
    model = xprime_model()
    config = full_config(model)

    if profile is not None:
        parsed = BranchProfile.parse(profile)
        transported = transported_config(config, parsed)
        invariants = surface_invariants(transported)
        builder.info('profile', anchor, str(parsed))
        builder.info('base-genus', anchor, transported.genus)
        builder.info('configuration', anchor, transported.summary())
        builder.info('classification', anchor, invariants.classification)
        builder.info('h11', anchor, invariants.h11)
        builder.add_data(fibers=transported.to_resources(), invariants=invariants.to_resource())
        return builder.build()

    u = Symbol('u')
    cube = cross_validate(model, RationalFunction.coerce(u ** 3, 'u'))
    builder.check('cube-map-profile', anchor, str(cube.profile), str(hesse_cover()),
                  predicate=lambda *_: cube.profile == hesse_cover())
    builder.check('cube-map-configuration', anchor, cube.symbolic.summary(), '4I3')

    normalisation = cross_validate(model, RationalFunction.coerce(3 * u ** 2 - u ** 3, 'u'))
    k3 = surface_invariants(normalisation.symbolic)
    builder.check('normalisation-profile', anchor, str(normalisation.profile), str(zprime_profile()),
                  predicate=lambda *_: normalisation.profile == zprime_profile())
    builder.check('normalisation-configuration', anchor, normalisation.symbolic.summary(), '4I3 + IV + IV*')
    builder.check('normalisation-classification', anchor, k3.classification, 'K3')
    builder.check('normalisation-deg-l', anchor, k3.deg_l, 2)
    builder.check('normalisation-h11', anchor, k3.h11, 20)

    galois = transported_config(config, y0_profile())
    builder.check('galois-configuration', anchor, galois.summary(), 'I3 + I9')
    builder.check('galois-genus', anchor, galois.genus, 1)
    builder.check('galois-picard-number', anchor, shioda_tate_rho(galois, 0), 12)
    builder.check('galois-ns-discriminant', anchor, ns_discriminant(galois, 3), 3)

    builder.add_data(cube=cube.to_dict(), normalisation=normalisation.to_dict(), galois=galois.to_resources())
    return builder.build()


A1, A2, A5 = RootBlock('A', 1), RootBlock('A', 2), RootBlock('A', 5)

LATTICE_FAMILIES = (
    ('rank-zero', (U,) + (A2,) * 4, (3, 3)),
    ('rank-one', (U,) + (A2,) * 4 + (A1,), (3, 6)),
    ('collision', (U, A2, A2, A5, A1), (2, 6)),
)


@commands.command(name='lattice')
def lattice():
    """
    Discriminant groups, Mordell-Weil heights and the primitivity search.
    """
    builder = ReportBuilder("Neron-Severi lattices", 'lattice')
    anchor = 'discriminant-forms'

    quotients = {}
    for name, blocks, structure in LATTICE_FAMILIES:
        form = discriminant_form(blocks)
        found = isotropic_quotients(form, 3)
        structures = sorted({tuple(q.structure) for q in found})
        builder.check(
            "isotropic-quotient-{}".format(name), anchor, [format_structure(s) for s in structures],
            format_structure(structure), predicate=lambda computed, expected: expected in computed
        )
        builder.check(
            "quotient-order-{}".format(name), anchor, sorted({q.order for q in found}), [form.order // 9]
        )
        quotients[name] = [q.to_resource() for q in found]

    builder.check('height-A1', 'mordell-weil', mw_height(1, 0), 2)
    builder.check('contribution-I6', 'mordell-weil', KodairaType('I', 6).height_contribution(2), Fraction(4, 3))

    certificate = primitivity_search()
    builder.check('primitivity-solutions', 'primitivity', certificate.solutions, [])
    builder.info('primitivity-box', 'primitivity', {
        'n_max': certificate.n_max, 'h_max': certificate.h_max, 'coeff_bound': certificate.coeff_bound,
        'admissible': certificate.admissible, 'mod3_excluded': certificate.mod3_excluded,
    })

    builder.add_data(quotients=quotients, primitivity=certificate)
    return builder.build()


@commands.command(name='reduction', suite=[{'order': order.value} for order in ContractionOrder])
@option('order', str, "Which (-1)-curve to contract first.", default=ContractionOrder.Lowest.value,
        choices=[order.value for order in ContractionOrder])
def reduction(order):
    """
    Semistable reduction of a IV* fibre under cyclic base change of degree 2 and 3.
    """
    order = ContractionOrder(order)
    builder = ReportBuilder("Reduction of IV* ({} first)".format(order.value), 'reduction')
    anchor = 'fibre-IV*'

    cover = cyclic_cover_ivstar(3)
    centre = cover.node("E'")
    builder.check('cover-centre-square', anchor, centre['self_intersection'], -6)
    builder.check('cover-centre-genus', anchor, centre['genus'], 1)
    builder.check('cone-points', anchor, len(cover.cones), 3)

    resolved = resolve_cone(cover)
    arms = ["D{}'".format(i) for i in (1, 2, 3)]
    exceptional = ["E{}".format(i) for i in (1, 2, 3)]
    builder.check('resolved-arm-squares', anchor, [resolved.node(label)['self_intersection'] for label in arms],
                  [-1] * 3)
    builder.check('exceptional-squares', anchor,
                  [resolved.node(label)['self_intersection'] for label in exceptional], [-3] * 3)
    builder.check('resolved-fibre-consistent', anchor, resolved.is_fiber_consistent(), True)
    builder.check('cone-normalization', anchor, cone_normalization_certificate().holds, True)

    traces = {}
    for degree, expected, euler in ((2, 'IV', 4), (3, 'I0', 0)):
        trace, kodaira_type = reduce_ivstar(degree, order)
        builder.check("reduced-type-d{}".format(degree), anchor, str(kodaira_type), expected)
        builder.check("reduced-euler-d{}".format(degree), anchor, trace.graph.euler_number(), euler)
        traces["d{}".format(degree)] = {'steps': trace.to_resources(), 'dot': trace.graph.to_dot()}

    builder.check('section-deg-l', anchor, track_section_degL(3), 1)
    builder.add_data(traces=traces)
    return builder.build()


@commands.command(name='qseries', suite=[{'check_zero': True}])
@option('terms', int, "Truncation order of the q-expansions.", default=DEFAULT_TERMS, metavar='N')
@option('tau', parse_complex, "Extra point 're,im' at which to evaluate.", metavar='re,im')
@option('form', _form, "Binary quadratic form 'a,b,c' of discriminant -11.", default=LEVEL_11_FORM,
        metavar='a,b,c')
@option('tolerance', float, "Threshold for a numerical zero.", default=DEFAULT_TOLERANCE)
@flag('check-zero', "Locate the zero of the theta series among the Atkin-Lehner fixed points.")
def qseries(terms, tau, form, tolerance, check_zero):
    """
    Theta series of level 11, its Atkin-Lehner behaviour and the canonical fibre.
    """
    if terms < MIN_TERMS:
        raise UsageError("At least {} terms are needed".format(MIN_TERMS), meta={'terms': terms})
    if form.discriminant != -MODULAR_LEVEL:
        raise UsageError("Form must have discriminant -{}".format(MODULAR_LEVEL), meta={'form': str(form)})

    builder = ReportBuilder("Theta series of {}".format(form), 'qseries')
    anchor = 'modular-level-11'

    theta = theta_qf(form, terms)
    builder.check('representation-numbers', anchor, [theta[1], theta[3]], [2, 4])
    builder.check('theta-coefficients', anchor, [theta[n] for n in range(min(31, terms))],
                  [form.representations(n) for n in range(min(31, terms))])
    builder.check('theta-at-infinity', anchor, theta[0], 1)

    fricke = 0.0
    for s in ATKIN_LEHNER_SAMPLES:
        image = eval_upper_half(theta, 1j / (MODULAR_LEVEL * s)).value
        scaled = math.sqrt(MODULAR_LEVEL) * s * eval_upper_half(theta, 1j * s).value
        fricke = max(fricke, abs(image - scaled))
    builder.check('theta-weight-one', anchor, fricke, ATKIN_LEHNER_TOLERANCE, predicate=_less_than)

    centre = eval_upper_half(theta, 1j / math.sqrt(MODULAR_LEVEL))
    builder.info('theta-at-fixed-point', anchor, format_complex(centre.value), '> 1')

    zeros, classes = [], {}
    if check_zero:
        zeros = locate_theta_zero(form, terms, tolerance)
        classes = fixed_point_classes([point for point, _ in zeros])
        target = complex(0.5, 0.5 / math.sqrt(MODULAR_LEVEL))
        smallest = min((zero.modulus for _, zero in zeros), default=math.inf)
        builder.check('theta-zero-classes', 'canonical-fibre', len(classes), 1)
        builder.check('theta-zero-point', 'canonical-fibre', [format_complex(p.tau) for p, _ in zeros],
                      format_complex(target),
                      predicate=lambda *_: any(abs(p.tau - target) < 1e-9 for p, _ in zeros))
        builder.check('theta-zero-modulus', 'canonical-fibre', smallest, tolerance, predicate=_less_than)

    quotient = level_11_quotient(form, terms)
    builder.check('quotient-valuation', anchor, quotient.valuation, -1)
    deviation = atkin_lehner_check(quotient)
    builder.check('atkin-lehner-invariance', anchor, deviation, ATKIN_LEHNER_TOLERANCE, predicate=_less_than)
    control = atkin_lehner_check(theta)
    builder.check('atkin-lehner-control', anchor, control, 1e-2, predicate=_greater_than)

    config = shioda_modular_config()
    invariants = surface_invariants(config)
    builder.check('modular-classification', 'modular-surface', invariants.classification, 'elliptic-elliptic')
    builder.check('modular-picard-number', 'modular-surface', shioda_tate_rho(config, 0), 12)
    builder.check('modular-j-degree', 'modular-surface', invariants.j_degree, 12)

    evaluations = []
    if tau is not None:
        for series in (theta, quotient):
            evaluations.append(eval_upper_half(series, tau).to_resource())
    builder.add_data(
        theta=theta.to_dict(12), quotient=quotient.to_dict(12), growth=list(quotient.growth_rate()),
        zeros=[zero.to_resource() for _, zero in zeros],
        fixed_point_classes=[
            {'class': str(key), 'points': [str(p) for p in points]} for key, points in classes.items()
        ],
        evaluations=evaluations,
    )
    return builder.build()


@commands.command(name='hurwitz')
@option('degree', int, "Degree of the triple cover family.", default=3, metavar='N')
def hurwitz(degree):
    """
    Hurwitz tuples of the triple covers, their braid orbits and collision limits.
    """
    builder = ReportBuilder("Hurwitz classes of degree {}".format(degree), 'hurwitz')
    anchor = 'hurwitz-space'

    classes = enumerate_classes(degree)
    if degree != 3:
        builder.info('tuple-count', anchor, len(classes.tuples))
        builder.info('class-count', anchor, len(classes))
        builder.add_data(classes=classes.to_resources())
        return builder.build()

    builder.check('tuple-count', anchor, len(classes.tuples), 12)
    builder.check('class-count', anchor, len(classes), 2)
    builder.check('representatives', anchor, [list(key) for key in classes.classes], [
        ['(1 2 3)', '(1 2)', '(1 2)', '(1 3 2)'],
        ['(1 2 3)', '(1 2)', '(2 3)', '(1 2 3)'],
    ])
    builder.check('collision-limits', anchor, [orbit.limit for orbit in classes.to_resources()],
                  ['NODAL_LIMIT', 'SMOOTH_LIMIT'])
    builder.check('full-twist-trivial', anchor, all(full_twist(t) == t for t in classes.tuples), True)

    loops = loop_dictionary(classes)
    builder.check('loop-action', anchor, {loop['generator']: loop['class_action'] for loop in loops}, {
        'sigma_1^2': 'exchanges', 'sigma_2^2': 'preserves', 'sigma_3^2': 'exchanges',
    })

    conic = phi_image_conic()
    builder.check('phi-image-conic', 'branch-map', conic.holds, True)
    builder.check('phi-consistent', 'branch-map', phi_map(4).is_consistent(), True)

    builder.add_data(classes=classes.to_resources(), loops=loops, conic=conic)
    return builder.build()

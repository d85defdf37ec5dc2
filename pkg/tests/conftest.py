import random

import pytest
from sympy import Rational, Symbol

from ellsurf.basechange import ya_config
from ellsurf.kodaira import full_config
from ellsurf.weierstrass import hesse_model, xprime_model


@pytest.fixture
def hesse():
    return hesse_model()


@pytest.fixture
def xprime():
    return xprime_model()


@pytest.fixture
def hesse_config(hesse):
    return full_config(hesse)


@pytest.fixture
def xprime_config(xprime):
    return full_config(xprime)


@pytest.fixture(params=[4, 7, 0, 1])
def surface_config(request):
    return request.param, ya_config(request.param)


def _random_polynomial(rng, degree, variable):
    return sum(rng.randint(-5, 5) * variable ** i for i in range(degree + 1))


@pytest.fixture(params=range(6))
def unit_transform(request):
    """
    Seeded coordinate change ``(u, r, s, w)`` with a constant unit ``u`` and
    ``r``, ``s``, ``w`` of degree at most 2, 1 and 3 so the degree bound of a
    ``d = 1`` model survives.
    """
    rng = random.Random(request.param)
    t = Symbol('t')
    u = Rational(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return u, _random_polynomial(rng, 2, t), _random_polynomial(rng, 1, t), _random_polynomial(rng, 3, t)

import random
from fractions import Fraction

import pytest

from sepred.unipoly import UniPoly


@pytest.fixture
def rng():
    return random.Random(20250809)


def random_unipoly(rng, degree, height=9, field=None, nonzero_lc=True):
    coeffs = [Fraction(rng.randrange(-height, height + 1)) for _ in range(degree + 1)]
    if nonzero_lc:
        while coeffs[-1] == 0:
            coeffs[-1] = Fraction(rng.randrange(-height, height + 1))
    if field is not None:
        coeffs = [field.from_rational(c) for c in coeffs]
    return UniPoly(field, coeffs)


def random_nf_poly(rng, degree, field, height=9):
    d = field.degree
    coeffs = [field.element([rng.randrange(-height, height + 1) for _ in range(d)])
              for _ in range(degree + 1)]
    while coeffs[-1].is_zero():
        coeffs[-1] = field.element([rng.randrange(-height, height + 1) for _ in range(d)])
    return UniPoly(field, coeffs)

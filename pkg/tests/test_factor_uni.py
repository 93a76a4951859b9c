from fractions import Fraction

import pytest

from conftest import random_nf_poly, random_unipoly
from sepred.factor_uni import factor_nf, factor_q, norm_poly, rational_roots
from sepred.numberfield import nf_new
from sepred.parsing import parse_unipoly, format_poly
from sepred.unipoly import UniPoly

x = UniPoly.x()


def test_factor_q_paper_identity():
    # X^4 + 4Y^4 specialized at Y = 1
    fl = factor_q(x ** 4 + 4)
    polys = [format_poly(p) for p, _ in fl.factors]
    assert polys == ["x^2 - 2*x + 2", "x^2 + 2*x + 2"]


def test_factor_q_examples():
    assert factor_q(x ** 2 - 2).is_irreducible()
    fl = factor_q(x ** 6 - 1)
    assert [p.degree() for p, _ in fl.factors] == [1, 1, 2, 2]
    assert fl.expand() == x ** 6 - 1


def test_factor_q_roundtrip_random(rng):
    # oracle: expanding the factorization reproduces the input exactly
    for _ in range(200):
        f = random_unipoly(rng, rng.randrange(1, 13), 9)
        assert factor_q(f).expand() == f


def test_factor_q_vs_sympy(rng):
    sympy = pytest.importorskip("sympy")
    X = sympy.symbols("x")
    for _ in range(40):
        f = random_unipoly(rng, rng.randrange(1, 11), 9)
        expr = sum(sympy.Rational(c.numerator, c.denominator) * X ** i
                   for i, c in enumerate(f.coeffs))
        _, sy_factors = sympy.factor_list(expr)
        sy_degs = sorted([sympy.degree(p, X)] * m for p, m in sy_factors)
        sy_flat = sorted(d for block in sy_degs for d in block)
        my_flat = sorted(p.degree() for p, m in factor_q(f).factors for _ in range(m))
        assert my_flat == sy_flat


def test_factor_nf_examples():
    K = nf_new(parse_unipoly("x^2 + x + 2"))
    a = K.gen()
    f = parse_unipoly("x^2 + x + 2", field=K)
    fl = factor_nf(f)
    roots = sorted([-p.constant_coeff() for p, _ in fl.factors], key=lambda u: tuple(u.coeffs))
    assert set(map(str, (r for r in roots))) == {str(a), str(-1 - a)} or len(fl.factors) == 2
    K2 = nf_new(parse_unipoly("x^2 - 2"), label="s")
    assert len(factor_nf(parse_unipoly("x^2 - 2", field=K2)).factors) == 2
    assert factor_nf(parse_unipoly("x^2 + 1", field=K2)).is_irreducible()


def test_factor_nf_roundtrip_random(rng):
    K = nf_new(parse_unipoly("x^2 - 3"))
    for _ in range(25):
        f = random_nf_poly(rng, rng.randrange(1, 6), K, 5)
        fl = factor_nf(f)
        assert fl.expand(K) == f
        for p, _ in fl.factors:
            assert p.is_monic()


def test_factor_nf_quartic_field(rng):
    K = nf_new(parse_unipoly("x^4 + x^3 + 2*x^2 - 4*x + 3"))
    a = K.gen()
    # product of two known linears plus an irreducible quadratic
    f = (UniPoly.x(K) - UniPoly.const(a, K)) * (UniPoly.x(K) + UniPoly.const(a * a, K))
    fl = factor_nf(f)
    assert fl.expand(K) == f and len(fl.factors) == 2


def test_rational_roots_examples():
    assert rational_roots(x ** 2 - 4) == [-2, 2]
    assert rational_roots(2 * x - 1) == [Fraction(1, 2)]
    assert rational_roots(x ** 2 + 1) == []
    assert rational_roots((x - 1) ** 2 * x) == [0, 1, 1]


def test_norm_poly_degree_and_value():
    K = nf_new(parse_unipoly("x^2 - 2"), label="s")
    s = K.gen()
    f = UniPoly.x(K) - UniPoly.const(s, K)
    n = norm_poly(f)
    # norm of (x - s) is (x - s)(x + s) = x^2 - 2
    assert n == x ** 2 - 2


def test_factor_q_high_multiplicity():
    f = (x - 1) ** 3 * (x ** 2 + 1) ** 2
    fl = factor_q(f.scale(Fraction(3, 7)))
    assert fl.expand() == f.scale(Fraction(3, 7))
    assert sorted(m for _, m in fl.factors) == [2, 3]

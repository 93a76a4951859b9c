from fractions import Fraction

import pytest

from conftest import random_nf_poly, random_unipoly
from sepred.modres import resultant_crt
from sepred.numberfield import nf_new
from sepred.parsing import parse_unipoly, format_poly
from sepred.unipoly import (UniPoly, branch_loci_equal, critical_value_poly,
                            discriminant, interpolate, poly_gcd, poly_xgcd,
                            resultant, resultant_pure, simply_branched,
                            squarefree_decomposition, squarefree_part)
from sepred.factor_uni import rational_roots

x = UniPoly.x()


def test_arith_examples():
    assert poly_gcd(x ** 2 - 1, x ** 2 - 2 * x + 1) == x - 1
    q, r = (x ** 3).divmod(x - 1)
    assert q == x ** 2 + x + 1 and r == UniPoly.const(1)
    assert (x ** 4 - 4 * x ** 2 + 2).derivative() == 4 * x ** 3 - 8 * x


def test_compose_examples():
    t2 = x ** 2 - 2
    assert t2.compose(t2) == x ** 4 - 4 * x ** 2 + 2
    f = 3 * x ** 5 - x + 1
    assert x.compose(f) == f and f.compose(x) == f
    assert (x ** 3).compose(x ** 2) == x ** 6


def test_squarefree_examples():
    _, parts = squarefree_decomposition((x - 1) ** 2 * (x + 2))
    assert parts == [(x + 2, 1), (x - 1, 2)]
    _, parts = squarefree_decomposition(x ** 5)
    assert parts == [(x, 5)]
    _, parts = squarefree_decomposition(x ** 2 + 1)
    assert parts == [(x ** 2 + 1, 1)]


def test_squarefree_reassembles(rng):
    for _ in range(25):
        f = random_unipoly(rng, rng.randrange(1, 7), 5)
        g = random_unipoly(rng, rng.randrange(1, 4), 5)
        prod = f * f * g
        unit, parts = squarefree_decomposition(prod)
        acc = UniPoly.const(unit)
        for p, m in parts:
            acc = acc * p ** m
        assert acc == prod


def test_xgcd_bezout(rng):
    for _ in range(20):
        a = random_unipoly(rng, rng.randrange(1, 6))
        b = random_unipoly(rng, rng.randrange(1, 6))
        g, s, t = poly_xgcd(a, b)
        assert s * a + t * b == g


def test_critical_value_examples():
    cvp = critical_value_poly(x ** 2)
    assert cvp == x  # single critical value 0
    t4 = x ** 4 - 4 * x ** 2 + 2
    assert sorted(set(rational_roots(critical_value_poly(t4)))) == [-2, 2]
    assert sorted(set(rational_roots(critical_value_poly(x ** 3 - 3 * x)))) == [-2, 2]


def test_simply_branched_examples():
    assert simply_branched(x ** 3 - 3 * x)
    assert not simply_branched(x ** 3)
    assert not simply_branched(x ** 4 - 4 * x ** 2 + 2)  # critical values collide


def test_branch_loci_examples():
    t4 = x ** 4 - 4 * x ** 2 + 2
    assert branch_loci_equal(t4, -t4)
    assert branch_loci_equal(x ** 2, x ** 3)
    assert not branch_loci_equal(x ** 2, x ** 2 + 1)


def test_resultant_engines_agree_rational(rng):
    for _ in range(30):
        a = random_unipoly(rng, rng.randrange(1, 7))
        b = random_unipoly(rng, rng.randrange(1, 7))
        assert resultant_crt(a, b) == resultant_pure(a, b)


def test_resultant_engines_agree_quartic_field(rng):
    K = nf_new(parse_unipoly("x^4 + x^3 + 2*x^2 - 4*x + 3"))
    for _ in range(15):
        a = random_nf_poly(rng, rng.randrange(1, 4), K, 5)
        b = random_nf_poly(rng, rng.randrange(1, 4), K, 5)
        assert resultant_crt(a, b) == resultant_pure(a, b)


def test_resultant_vs_root_products():
    # Res(f, g) = lc(f)^deg(g) * prod g(root_i) for f with known roots
    f = (x - 2) * (x + 3)
    g = x ** 2 + 1
    assert resultant(f, g) == g.eval(2) * g.eval(-3)


def test_discriminant_example():
    assert discriminant(x ** 2 - 4) == 16  # b^2 - 4ac for x^2 - 4
    assert discriminant(x ** 2 + x + 2) == -7


def test_interpolate_roundtrip(rng):
    f = random_unipoly(rng, 5)
    pts = [Fraction(i) for i in range(6)]
    vals = [f.eval(p) for p in pts]
    assert interpolate(None, pts, vals) == f


def test_content_primitive():
    f = UniPoly(None, [Fraction(2, 3), Fraction(4, 3)])
    c, p = f.content_and_primitive()
    assert c * Fraction(1) == Fraction(2, 3) and p == UniPoly(None, [1, 2])
    assert p.scale(c) == f


def test_format_parse_roundtrip(rng):
    for _ in range(10):
        f = random_unipoly(rng, rng.randrange(0, 6))
        assert parse_unipoly(format_poly(f)) == f

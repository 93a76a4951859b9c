from fractions import Fraction

import pytest

from sepred.bipoly import separated
from sepred.factor_bi import factor_bi
from sepred.families import (BadParameters, DEG13_CONJ_IMAGE, DEG13_MINPOLY,
                             DataUnavailable, chebyshev, chebyshev_H,
                             conjugation, dickson, dickson_pair,
                             exceptional_pair, field_a7, field_deg13,
                             genus0_P, named_extension_fields, period_data_13,
                             verify_family)
from sepred.parsing import format_poly
from sepred.unipoly import UniPoly, branch_loci_equal

x = UniPoly.x()


def test_chebyshev_examples():
    assert chebyshev(2) == x ** 2 - 2
    assert chebyshev(4) == x ** 4 - 4 * x ** 2 + 2
    assert chebyshev(1) == x
    assert chebyshev(0) == UniPoly.const(2)


def test_dickson_examples():
    assert dickson(3, 1) == chebyshev(3)
    assert dickson(7, 0) == x ** 7
    assert format_poly(dickson(4, 1)) == "x^4 - 4*x^2 + 2"


# Laurent-dict oracle for the defining identities


def _laurent_mul(a, b):
    out = {}
    for i, ci in a.items():
        for j, cj in b.items():
            out[i + j] = out.get(i + j, Fraction(0)) + ci * cj
    return {k: v for k, v in out.items() if v}


def _laurent_eval_poly(p, point):
    acc = {}
    for c in reversed(p.coeffs):
        acc = _laurent_mul(acc, point)
        acc[0] = acc.get(0, Fraction(0)) + Fraction(c)
    return {k: v for k, v in acc.items() if v}


def test_defining_identities_laurent():
    # T_n(X + 1/X) * X^n = X^(2n) + 1 and the Dickson analogue, exactly
    for n in range(1, 13):
        point = {1: Fraction(1), -1: Fraction(1)}
        val = _laurent_eval_poly(chebyshev(n), point)
        shifted = {k + n: v for k, v in val.items()}
        assert shifted == {2 * n: Fraction(1), 0: Fraction(1)}
    alpha = Fraction(3)
    for n in range(1, 13):
        point = {1: Fraction(1), -1: alpha}
        val = _laurent_eval_poly(dickson(n, alpha), point)
        shifted = {k + n: v for k, v in val.items()}
        assert shifted == {2 * n: Fraction(1), 0: alpha ** n}


def test_composition_laws():
    for m, n in ((2, 3), (3, 2), (2, 6), (4, 3), (2, 12), (3, 8)):
        if m * n <= 24:
            assert chebyshev(m * n) == chebyshev(m).compose(chebyshev(n))
    alpha = Fraction(2)
    for m, n in ((2, 3), (3, 2), (2, 4), (4, 2), (2, 2), (3, 3)):
        lhs = dickson(m * n, alpha)
        rhs = dickson(m, alpha ** n).compose(dickson(n, alpha))
        assert lhs == rhs


def test_period_oracle_matches_frozen_constants():
    mp, conj = period_data_13()
    assert tuple(mp) == tuple(Fraction(c) for c in DEG13_MINPOLY)
    assert tuple(conj) == DEG13_CONJ_IMAGE


def test_conjugation_involution_deg13():
    K = field_deg13()
    sigma = conjugation(K)
    a = K.gen()
    assert sigma(sigma(a)) == a and sigma(a) != a


def test_exceptional_pair_deg7():
    pair = exceptional_pair("Deg7_237")
    a = pair.field.gen()
    xx = UniPoly.x(pair.field)
    assert pair.h1 == xx * (xx + 1) ** 3 * (xx + a + 3) ** 3
    assert pair.h1.degree() == pair.h2.degree() == 7
    assert branch_loci_equal(pair.h1, pair.h2)
    pair2 = exceptional_pair("Deg7_247")
    assert pair2.h1 == xx ** 4 * (xx - 2) ** 2 * (xx - UniPoly.const(a, pair2.field))


def test_exceptional_pair_factor_degrees_deg7():
    for tag in ("Deg7_237", "Deg7_247"):
        rep = verify_family(tag)
        assert rep["ok"], rep
        assert rep["x_degrees"] == [3, 4]


def test_missing_degrees_flagged():
    for tag in ("Deg11", "Deg15", "Deg21", "Deg31", 11):
        with pytest.raises(DataUnavailable):
            exceptional_pair(tag)


def test_dickson_pair_examples():
    pair = dickson_pair(1)
    assert pair.h1 == x ** 4 - 4 * x ** 2 + 2
    assert pair.h2 == UniPoly(None, [Fraction(-1, 4)]) * (x ** 4 - 8 * x ** 2 + 8)
    pair0 = dickson_pair(0)
    assert pair0.h1 == x ** 4 and pair0.h2 == x ** 4 * Fraction(-1, 4)


def test_dickson_identity_symbolic():
    rep = verify_family("Dickson4")
    assert rep["identity_holds"] and rep["ok"]
    # numeric cross-checks over Q: a degree-2 identity in alpha needs 3 points
    for alpha in (1, 2, 3):
        rep = verify_family("Dickson4", Fraction(alpha))
        assert rep["identity_holds"]


def test_genus0_P_examples():
    assert genus0_P(2) == x ** 5 + 5 * x ** 4 + 40 * x ** 3
    assert genus0_P(1, 1, 3) == x * (x - 1) ** 3
    with pytest.raises(BadParameters):
        genus0_P(1, 2, 2)
    with pytest.raises(BadParameters):
        genus0_P(1, 1, 2)  # a + b < 4
    p3 = genus0_P(3)
    assert p3.degree() == 7 and p3.field == field_a7()


def test_chebyshev_H_examples():
    H, K = chebyshev_H(3)
    assert K is None  # 2cos(pi/3) = 1 is rational
    from sepred.parsing import format_bipoly
    assert format_bipoly(H) == "X^2 - X*Y + Y^2 - 3"
    H4, K4 = chebyshev_H(4)
    assert K4.minpoly == (Fraction(-2), Fraction(0), Fraction(1))  # c = sqrt(2)
    H6, K6 = chebyshev_H(6)
    assert K6.minpoly == (Fraction(-3), Fraction(0), Fraction(1))  # c = sqrt(3)


def test_chebyshev_H_divisibility():
    from sepred.bipoly import divides_bi
    from sepred.families import _verify_chebyshev_H
    for (n, m, d) in ((3, 3, 3), (6, 3, 3), (4, 4, 4), (8, 4, 4)):
        H, K = chebyshev_H(d)
        lhs = H.subst_unipolys(chebyshev(n // d), chebyshev(m // d))
        tn = chebyshev(n) if K is None else chebyshev(n).map_to_field(K)
        tm = chebyshev(m) if K is None else chebyshev(m).map_to_field(K)
        assert divides_bi(lhs, separated(tn, -tm)), (n, m, d)


def test_named_pairs_satisfy_min_red_necessary_conditions():
    # equal degrees and equal branch loci (the two Galois-closure corollaries)
    pairs = [dickson_pair(Fraction(2)), dickson_pair(Fraction(-1)),
             exceptional_pair("Deg7_237"), exceptional_pair("Deg7_247")]
    for pair in pairs:
        assert pair.h1.degree() == pair.h2.degree()
        assert branch_loci_equal(pair.h1, pair.h2)
        assert not factor_bi(separated(pair.h1, pair.h2)).is_irreducible()


def test_gamma_is_branch_point_deg7():
    pair = exceptional_pair("Deg7_237")
    # gamma is a critical value: h1 - gamma has a repeated root
    from sepred.unipoly import poly_gcd
    shifted = pair.h1 - UniPoly.const(pair.gamma, pair.field)
    assert poly_gcd(shifted, shifted.derivative()).degree() > 0


def test_named_extension_fields():
    fields = named_extension_fields(8)
    labels = [f.minpoly for f in fields]
    assert len(labels) == len(set(labels))
    assert field_sqrt2_minpoly_present(fields)


def field_sqrt2_minpoly_present(fields):
    return any(f.minpoly == (Fraction(-2), Fraction(0), Fraction(1)) for f in fields)

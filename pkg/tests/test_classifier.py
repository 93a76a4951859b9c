from fractions import Fraction

import pytest

from conftest import random_unipoly
from sepred.bipoly import separated
from sepred.classifier import (PreconditionViolated, classify,
                               genus0_reduced_check, minimal_reducible_refinement,
                               mn_problem_check, rightmost_degrees_not_coprime)
from sepred.factor_bi import is_irreducible_bi
from sepred.families import chebyshev, dickson, dickson_pair, exceptional_pair, field_sqrt2
from sepred.unipoly import UniPoly

x = UniPoly.x()
T4 = chebyshev(4)


def test_classify_common_left_factor():
    f = (x ** 3) ** 2
    g = (x ** 3 + 1) ** 2
    v = classify(f, g)
    assert v.case == "CommonLeftFactor" and v.reducible
    assert v.data["h"].degree() == 2
    assert v.verify(f, g)


def test_classify_dickson_pair():
    pair = dickson_pair(1)
    v = classify(pair.h1, pair.h2)
    assert v.case == "DicksonPair" and v.data["alpha"] == 1
    assert v.verify(pair.h1, pair.h2)


def test_classify_chebyshev_needs_sqrt2():
    v = classify(T4, -T4)
    assert v.case == "Irreducible" and not v.reducible
    K = field_sqrt2()
    f, g = T4.map_to_field(K), (-T4).map_to_field(K)
    v2 = classify(f, g)
    assert v2.reducible and v2.case == "DicksonPair"
    assert v2.verify(f, g)
    # witness: g composes through the linear map sqrt(2)*X
    assert v2.data["g1"].degree() == 1


def test_classify_extension_search():
    v = classify(T4, -T4, extensions="auto")
    assert v.case == "Irreducible"
    assert v.extension and v.extension["case"] == "DicksonPair"


def test_classify_exceptional_pair():
    pair = exceptional_pair("Deg7_237")
    v = classify(pair.h1, pair.h2)
    assert v.case == "ExceptionalPair" and v.data["tag"] == "Deg7_237"
    assert v.verify(pair.h1, pair.h2)


def test_classify_exceptional_with_inner():
    pair = exceptional_pair("Deg7_247")
    K = pair.field
    lam = UniPoly(K, [1, 2])  # 2X + 1
    f = pair.h1.compose(lam)
    g = pair.h2.compose(lam).compose(UniPoly.x(K) + UniPoly.const(1, K))
    v = classify(f, g)
    assert v.reducible and v.case in ("ExceptionalPair", "CommonLeftFactor")
    assert v.verify(f, g)


def test_classify_power_pair_alpha_zero():
    f = x ** 4
    g = (x ** 4).scale(Fraction(-1, 4))
    v = classify(f, g)
    assert v.reducible and v.case == "DicksonPair" and v.data["alpha"] == 0
    assert v.verify(f, g)


def test_minimal_refinement_example():
    K = field_sqrt2()
    f = T4.map_to_field(K).compose(UniPoly.x(K) ** 2)
    g = (-T4).map_to_field(K).compose(UniPoly.x(K) ** 3)
    cert = minimal_reducible_refinement(f, g)
    assert cert is not None
    assert cert.f_tilde.degree() == 4 and cert.g_tilde.degree() == 4
    assert cert.equal_degree and cert.branch_loci_match
    assert rightmost_degrees_not_coprime(cert.f_tilde, cert.g_tilde)


def test_minimal_refinement_diagonal_and_irreducible():
    cert = minimal_reducible_refinement(x ** 2, x ** 2)
    assert cert.f_tilde == x ** 2 and cert.ok()
    assert minimal_reducible_refinement(x ** 2, x ** 2 + 1) is None


def test_genus0_checks():
    assert genus0_reduced_check(1, (4, 4, 4))["ok"]
    assert genus0_reduced_check(1, (6, 3, 3))["ok"]
    assert genus0_reduced_check(2, "P2")["ok"]
    assert genus0_reduced_check(2, "P1")["ok"]
    with pytest.raises(PreconditionViolated):
        genus0_reduced_check(1, (5, 5, 2))


def test_mn_problem_examples():
    P = x ** 3 - 3 * x + 1
    Q = x ** 2 - x
    assert mn_problem_check(P, Q, x ** 2, x ** 2) is True
    with pytest.raises(PreconditionViolated):
        mn_problem_check(x ** 3 - 3 * x, x ** 3 - 3 * x, x ** 2, x ** 2)
    with pytest.raises(PreconditionViolated):
        mn_problem_check(x ** 3, x ** 2, x ** 2, x ** 2)
    # n = 3 with overlapping branch loci is rejected
    with pytest.raises(PreconditionViolated):
        mn_problem_check(x ** 3 - 3 * x, x ** 2 - 4, x, x)


def test_classifier_oracle_agreement_quick(rng):
    # a fast slice of the acceptance equivalence run
    from test_acceptance import constructed_pair, random_pair
    for i in range(12):
        f, g = constructed_pair(rng, (i % 3) + 1)
        v = classify(f, g)
        assert v.case != "Inconsistent"
        assert v.reducible == (not is_irreducible_bi(separated(f, g)))
        if v.reducible:
            assert v.verify(f, g)
    for _ in range(12):
        f, g = random_pair(rng)
        v = classify(f, g)
        assert v.case != "Inconsistent"


def test_degree_precondition():
    with pytest.raises(PreconditionViolated):
        classify(x, x ** 2)

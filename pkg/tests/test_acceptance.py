"""Acceptance suite: one test per criterion, each printing a pass/fail line
(run with `pytest tests/test_acceptance.py -v -s`).  All checks are exact;
the stated runtime budgets are asserted."""

import random
import time
from fractions import Fraction
from math import gcd

import pytest

from conftest import random_unipoly
from sepred.bipoly import divides_bi, separated
from sepred.classifier import (classify, minimal_reducible_refinement,
                               mn_problem_check, rightmost_degrees_not_coprime,
                               PreconditionViolated)
from sepred.factor_bi import factor_bi, is_irreducible_bi
from sepred.families import (chebyshev, chebyshev_H, dickson, dickson_pair,
                             exceptional_pair, verify_family)
from sepred.groups import PermGroup
from sepred.grouplab import (agl1, all_subgroups_upto, cyclic_group,
                             enumerate_deg8_full_cycle, nilpotency_class,
                             prop54_two_action_scan, socle_bruteforce,
                             socle_solvable, symmetric_group,
                             verify_index_lemma, wreath, base_intersection,
                             HypothesisFailed, _rowreduce)
from sepred.parsing import format_bipoly
from sepred.perms import cycle_type
from sepred.scan import predicted_red, residual_analysis, scan_red, stability_scan
from sepred.unipoly import UniPoly, branch_loci_equal, simply_branched

x = UniPoly.x()


def _report(num, ok, detail, elapsed):
    print("\n[%s] criterion %d: %s (%.1fs)" % ("PASS" if ok else "FAIL", num, detail, elapsed))
    assert ok, "criterion %d failed: %s" % (num, detail)


# -- criterion 1: the quartic Dickson identity, alpha an indeterminate -------


def test_criterion_1_dickson_identity():
    t0 = time.time()
    rep = verify_family("Dickson4")
    elapsed = time.time() - t0
    ok = rep["identity_holds"] and rep["ok"] and elapsed < 1.0
    _report(1, ok, "facD4al identity exact with indeterminate alpha", elapsed)


# -- criterion 2: the paper's factorizations through the oracle --------------


def test_criterion_2_oracle_reproduces_factorizations():
    t0 = time.time()
    from sepred.parsing import parse_bipoly
    fl = factor_bi(parse_bipoly("X^4 + 4*Y^4"))
    quads = [format_bipoly(p) for p, _ in fl.factors]
    ok = quads == ["X^2 - 2*X*Y + 2*Y^2", "X^2 + 2*X*Y + 2*Y^2"]
    rep7 = verify_family("Deg7_237")
    ok = ok and rep7["x_degrees"] == [3, 4]
    rep13 = verify_family("Deg13_2313")
    ok = ok and rep13["x_degrees"] == [4, 9]
    elapsed = time.time() - t0
    ok = ok and elapsed < 600
    _report(2, ok, "X^4+4Y^4 quadratics; Deg7 {3,4}; Deg13 {4,9}", elapsed)


# -- criterion 3 and 4: classifier/oracle equivalence and certificates -------


def random_pair(rng, maxdeg=8):
    f = random_unipoly(rng, rng.randrange(2, maxdeg + 1), 20)
    g = random_unipoly(rng, rng.randrange(2, maxdeg + 1), 20)
    return f, g


def _random_inner(rng, maxdeg, field=None, height=20):
    d = rng.randrange(1, maxdeg + 1)
    p = random_unipoly(rng, d, height, field=field)
    while p.degree() < 1:
        p = random_unipoly(rng, d, height, field=field)
    return p


def constructed_pair(rng, case):
    """A reducible pair built from one of the classification's three cases,
    composed with random inner polynomials (degrees <= 16, height <= 20)."""
    if case == 1:
        h = _random_inner(rng, 3, height=20)
        while h.degree() < 2:
            h = _random_inner(rng, 3, height=20)
        cap = 16 // h.degree()
        return h.compose(_random_inner(rng, min(4, cap))), \
            h.compose(_random_inner(rng, min(4, cap)))
    if case == 3:
        alpha = Fraction(rng.randrange(-20, 21))
        mu_a = Fraction(rng.choice([1, 2, -1, 3, -5]))
        mu_b = Fraction(rng.randrange(-20, 21))
        pair = dickson_pair(alpha)
        left_f = pair.h1.scale(mu_a) + UniPoly.const(mu_b)
        left_g = pair.h2.scale(mu_a) + UniPoly.const(mu_b)
        return left_f.compose(_random_inner(rng, 4)), \
            left_g.compose(_random_inner(rng, 4))
    # case 2: a stored degree-7 pair behind a shared linear map over Q(a)
    pair = exceptional_pair(rng.choice(["Deg7_237", "Deg7_247"]))
    K = pair.field
    a = K.gen()
    lam = UniPoly(K, [K.element([rng.randrange(-3, 4), rng.randrange(-2, 3)]),
                      K.from_rational(rng.choice([1, 2, -1]))])
    mu_a = K.from_rational(rng.choice([1, -1, 3]))
    mu_b = K.element([rng.randrange(-5, 6), rng.randrange(-3, 4)])
    left_f = pair.h1.compose(lam).scale(mu_a) + UniPoly.const(mu_b, K)
    left_g = pair.h2.compose(lam).scale(mu_a) + UniPoly.const(mu_b, K)
    inner_deg = rng.choice([1, 1, 2])
    f1 = _random_inner(rng, inner_deg, field=K, height=4)
    g1 = _random_inner(rng, inner_deg, field=K, height=4)
    return left_f.compose(f1), left_g.compose(g1)


def test_criterion_3_and_4_classifier_oracle_equivalence():
    rng = random.Random(20260809)
    t0 = time.time()
    inconsistent = 0
    disagreements = 0
    unverified = 0
    certificates = []
    plan = [1] * 85 + [3] * 85 + [2] * 30
    rng.shuffle(plan)
    for case in plan:
        f, g = constructed_pair(rng, case)
        v = classify(f, g)
        if v.case == "Inconsistent":
            inconsistent += 1
            continue
        oracle_bit = not v.oracle_factors.is_irreducible()
        if v.reducible != oracle_bit or not v.reducible:
            disagreements += 1  # constructed pairs are reducible by design
            continue
        if not v.verify(f, g):
            unverified += 1
        if f.field is None and f.degree() <= 12 and g.degree() <= 12 \
                and len(certificates) < 60:
            cert = minimal_reducible_refinement(f, g)
            if cert is not None:
                certificates.append(cert)
    for _ in range(200):
        f, g = random_pair(rng)
        v = classify(f, g)
        if v.case == "Inconsistent":
            inconsistent += 1
            continue
        if v.reducible != (not is_irreducible_bi(separated(f, g))):
            disagreements += 1
        if v.reducible and not v.verify(f, g):
            unverified += 1
    elapsed = time.time() - t0
    ok3 = inconsistent == 0 and disagreements == 0 and unverified == 0 and elapsed < 1800
    _report(3, ok3,
            "400 pairs: %d inconsistent, %d disagreements, %d unverified witnesses, "
            "%d certificates collected" % (inconsistent, disagreements, unverified,
                                           len(certificates)), elapsed)

    t0 = time.time()
    failures = 0
    for cert in certificates:
        if not (cert.equal_degree and cert.branch_loci_match):
            failures += 1
            continue
        if not rightmost_degrees_not_coprime(cert.f_tilde, cert.g_tilde):
            failures += 1
    # a couple of certificates over Q(a) as well
    for tag in ("Deg7_237", "Deg7_247"):
        pair = exceptional_pair(tag)
        cert = minimal_reducible_refinement(pair.h1, pair.h2)
        if cert is None or not (cert.equal_degree and cert.branch_loci_match
                                and rightmost_degrees_not_coprime(cert.f_tilde, cert.g_tilde)):
            failures += 1
    elapsed4 = time.time() - t0
    _report(4, failures == 0,
            "%d certificates: equal degree, equal branch locus, non-coprime "
            "rightmost degrees" % (len(certificates) + 2), elapsed4)


# -- criterion 5: Chebyshev genus-0 divisibility ------------------------------


def test_criterion_5_chebyshev_divisibility():
    t0 = time.time()
    ok = True
    for (n, m, d) in ((3, 3, 3), (6, 3, 3), (4, 4, 4), (8, 4, 4), (5, 5, 5)):
        H, K = chebyshev_H(d)
        lhs = H.subst_unipolys(chebyshev(n // d), chebyshev(m // d))
        tn = chebyshev(n) if K is None else chebyshev(n).map_to_field(K)
        tm = chebyshev(m) if K is None else chebyshev(m).map_to_field(K)
        ok = ok and divides_bi(lhs, separated(tn, -tm))
    elapsed = time.time() - t0
    ok = ok and elapsed < 10
    _report(5, ok, "H(T_{n/d}, T_{m/d}) divides T_n(X)+T_m(Y) over Q(2cos pi/d)", elapsed)


# -- criterion 6: the group lemma suite ---------------------------------------


def _random_index_instance(rng):
    q = rng.choice([2, 3, 5])
    d = rng.randrange(2, 6)
    n = q * d
    # sigma: top d-cycle with random translations
    shifts = [rng.randrange(q) for _ in range(d)]
    img = [0] * n
    for j in range(d):
        for i in range(q):
            img[j * q + i] = ((j + 1) % d) * q + (i + shifts[j]) % q
    sigma = tuple(img)
    gens = [sigma]
    # a random base translation
    tr = list(range(n))
    j0 = rng.randrange(d)
    for i in range(q):
        tr[j0 * q + i] = j0 * q + (i + 1) % q
    gens.append(tuple(tr))
    if q > 2 and rng.random() < 0.7:
        g = 2 if q == 3 else rng.choice([2, 3])
        mult = list(range(n))
        j1 = rng.randrange(d)
        for i in range(q):
            mult[j1 * q + i] = j1 * q + (g * i) % q
        gens.append(tuple(mult))
    if d > 2 and rng.random() < 0.5:
        sw = list(range(n))
        for i in range(q):
            sw[0 * q + i], sw[1 * q + i] = sw[1 * q + i], sw[0 * q + i]
        gens.append(tuple(sw))
    G = PermGroup(n, gens)
    if G.order() > 400000:
        return None
    N = G.normal_closure([sigma])
    return G, N, sigma, q


def test_criterion_6_group_lemma_suite():
    rng = random.Random(1234)
    t0 = time.time()
    done = 0
    failures = 0
    while done < 50:
        inst = _random_index_instance(rng)
        if inst is None:
            continue
        G, N, sigma, q = inst
        try:
            rep = verify_index_lemma(G, N, sigma, q)
        except HypothesisFailed:
            continue
        if not rep["ok"]:
            failures += 1
        done += 1
    # nilpotency-class bound of the wreath tower
    W = wreath(cyclic_group(2), cyclic_group(4))
    cls = nilpotency_class(W)
    _, vectors = base_intersection(W, 2)
    rank = len(_rowreduce(vectors, 2))
    nilp_ok = cls == 4 and cls >= rank
    # socle vs brute force on the test groups
    socle_ok = True
    test_groups = []
    A3 = agl1(3)
    diag3 = PermGroup(6, [tuple(list(g) + [v + 3 for v in g]) for g in A3.gens])
    test_groups.append((diag3, 3, "agl1"))
    C3sq = PermGroup(6, [tuple([1, 2, 0, 3, 4, 5]), tuple([0, 1, 2, 4, 5, 3])])
    test_groups.append((C3sq, 3, "agl1"))
    S4 = symmetric_group(4)
    diag_s4 = PermGroup(8, [tuple(list(g) + [v + 4 for v in g]) for g in S4.gens])
    test_groups.append((diag_s4, 2, "s4"))
    A5g = agl1(5)
    diag5 = PermGroup(10, [tuple(list(g) + [v + 5 for v in g]) for g in A5g.gens])
    test_groups.append((diag5, 5, "agl1"))
    for K, q, ctx in test_groups:
        grp, _ = socle_solvable(K, q, ctx)
        if not socle_bruteforce(K).same_group(grp):
            socle_ok = False
    elapsed = time.time() - t0
    ok = failures == 0 and nilp_ok and socle_ok and elapsed < 300
    _report(6, ok, "50 index-lemma instances, nilpotency class 4, socles match "
            "brute force", elapsed)


# -- criterion 7: the degree-8 search ------------------------------------------


def test_criterion_7_degree8_search():
    t0 = time.time()
    groups, labeled = enumerate_deg8_full_cycle()
    c8 = tuple((i + 1) % 8 for i in range(8))
    structural = all(G.is_transitive() and G.contains(c8) for G in groups)
    reports = prop54_two_action_scan(groups)
    survivors = [r for r in reports if not r["refinement_found"]]
    elapsed = time.time() - t0
    ok = structural and len(groups) >= 18 and not survivors and elapsed < 1800
    _report(7, ok, "%d subgroups (%d classes), %d reducible two-action "
            "configurations, 0 survivors" % (len(groups), len(labeled), len(reports)),
            elapsed)


# -- criterion 8: scanner ground truth -------------------------------------------


def test_criterion_8_scanner_ground_truth():
    t0 = time.time()
    ok = scan_red(x ** 4, 20).reducible_a == [-4, 0, 1, 4, 9, 16]
    report, _ = residual_analysis(x ** 4, 20)
    ok = ok and report.residual == [-4]
    diff = stability_scan(x ** 2, 2, 100)["difference"]
    ok = ok and -4 in diff and -64 in diff
    # cubes: empty residual, stable from 500 to 2000
    for f in (x ** 3, (x ** 3 + 2 * x).compose(x ** 3 - x + 3)):
        r500 = scan_red(f, 500)
        p500 = {a for a, _ in predicted_red(f, 500)}
        res500 = [a for a in r500.reducible_a if a not in p500]
        r2000 = scan_red(f, 2000)
        p2000 = {a for a, _ in predicted_red(f, 2000)}
        res2000 = [a for a in r2000.reducible_a if a not in p2000]
        ok = ok and res500 == [] and res2000 == []
    elapsed = time.time() - t0
    ok = ok and elapsed < 600
    _report(8, ok, "x^4/x^3 ground truths, stability counterexamples, residual "
            "empty and stable at N=500 and N=2000", elapsed)


# -- criterion 9: (m,n)-problem spot checks ---------------------------------------


def _random_simply_branched(rng, degree):
    while True:
        p = random_unipoly(rng, degree, 6)
        if p.degree() == degree and simply_branched(p):
            return p


def test_criterion_9_mn_problem():
    rng = random.Random(99)
    t0 = time.time()
    inners = [x ** 2, x ** 3, x ** 2 + x]
    done = 0
    failures = 0
    while done < 20:
        m = rng.randrange(2, 6)
        n = rng.randrange(max(m, 3), 6)
        P = _random_simply_branched(rng, n)
        Q = _random_simply_branched(rng, m)
        f = rng.choice(inners)
        g = rng.choice(inners)
        try:
            result = mn_problem_check(P, Q, f, g)
        except PreconditionViolated:
            continue
        if result is not True:
            failures += 1
        done += 1
    elapsed = time.time() - t0
    ok = failures == 0 and elapsed < 900
    _report(9, ok, "20 simply-branched (P,Q) spot checks all irreducible", elapsed)

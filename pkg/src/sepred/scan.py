"""Integer scanners for reducible fibers.

scan_red factors every fiber f(X) - a exhaustively; predicted_red lists the
fibers explained by rational points under nonlinear left factors (the
value-set prediction); residual_analysis reports the difference together
with the degree-2/4 exclusion flag and the degree-5 two-orbit signature
flag; stability_scan compares an iterate's reducible fibers with the base
polynomial's.

A fiber counts as reducible when f(X) - a has more than one irreducible
factor counted with multiplicity (a repeated root makes the fiber
reducible).
"""

import time
from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .decompose import complete_decompositions, left_factors, linearly_related
from .factor_uni import factor_q, rational_roots
from .unipoly import UniPoly


class SizeLimit(ValueError):
    pass


@dataclass
class ScanReport:
    f: UniPoly
    N: int
    reducible_a: list
    predicted_a: list  # sorted list of (a, provenance labels)
    residual: list
    factor_counts: dict
    elapsed: float

    def predicted_set(self):
        return [a for a, _ in self.predicted_a]

    def to_json(self):
        from .parsing import format_poly
        return {
            "f": format_poly(self.f),
            "N": self.N,
            "reducible_a": self.reducible_a,
            "predicted_a": [{"a": a, "from": labels} for a, labels in self.predicted_a],
            "residual": self.residual,
            "fibers_factored": len(self.factor_counts),
            "elapsed_sec": round(self.elapsed, 3),
        }


def _fiber_reducible(f, a):
    fl = factor_q(f - UniPoly.const(a, None))
    return fl.n_factors() > 1, fl.n_factors()


def scan_red(f, N, threads=1):
    """Exhaustive factorization of f(X) - a over |a| <= N."""
    if f.degree() < 2 or N < 1:
        raise ValueError("need deg(f) >= 2 and N >= 1")
    t0 = time.time()
    reducible = []
    counts = {}
    values = range(-N, N + 1)
    if threads > 1:
        results = _parallel_fibers(f, list(values), threads)
    else:
        results = [(a,) + _fiber_reducible(f, a) for a in values]
    for a, red, cnt in results:
        counts[a] = cnt
        if red:
            reducible.append(a)
    return ScanReport(f, N, sorted(reducible), [], [], counts, time.time() - t0)


def _parallel_fibers(f, values, threads):
    from concurrent.futures import ProcessPoolExecutor
    chunks = [values[i::threads] for i in range(threads)]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        futures = [ex.submit(_fiber_chunk, f, chunk) for chunk in chunks]
        out = []
        for fut in futures:
            out.extend(fut.result())
    out.sort(key=lambda t: t[0])
    return out


def _fiber_chunk(f, values):
    return [(a,) + _fiber_reducible(f, a) for a in values]


def nonlinear_left_factor_representatives(f):
    """All nonlinear left factors up to right-linear equivalence (which
    leaves the value set f1(Q) invariant), labeled by degree; leftmost
    factors of every complete decomposition are included."""
    reps = []

    def add(p, label):
        # right-linear dedup: p ~ q when p = q o nu (same value sets)
        for q, _ in reps:
            if q.degree() == p.degree() and linearly_related(p, q, right_only=True) is not None:
                return
        reps.append((p, label))

    for h, _ in left_factors(f):
        if h.degree() >= 2:
            add(h, "left factor deg %d" % h.degree())
    for dec in complete_decompositions(f):
        lead = dec.factors[0]
        if lead.degree() >= 2:
            add(lead, "leftmost indecomposable deg %d" % lead.degree())
    return reps


def predicted_red(f, N):
    """For each nonlinear left factor f1, the integers a in [-N, N] with a
    rational f1-preimage; annotated with provenance."""
    if f.degree() < 2 or N < 1:
        raise ValueError("need deg(f) >= 2 and N >= 1")
    reps = nonlinear_left_factor_representatives(f)
    hits = {}
    for f1, label in reps:
        for a in range(-N, N + 1):
            if rational_roots(f1 - UniPoly.const(a, None)):
                hits.setdefault(a, []).append(label)
    return sorted(hits.items())


def residual_analysis(f, N, probe_trials=40, seed=0):
    """scan minus predicted, with the structural flags the dichotomy needs:
    whether f factors through a degree-2/4 indecomposable (infinite residual
    allowed), and whether a degree-5 left factor shows the two-orbit
    A5/S5-type signature."""
    report = scan_red(f, N)
    predicted = predicted_red(f, N)
    predicted_set = {a for a, _ in predicted}
    residual = [a for a in report.reducible_a if a not in predicted_set]
    flags = {
        "factors_through_deg2_or_4": _factors_through_small(f),
        "degree5_two_orbit_flag": _degree5_flag(f, probe_trials, seed),
    }
    report.predicted_a = predicted
    report.residual = residual
    return report, flags


def _factors_through_small(f):
    degs = set()
    for dec in complete_decompositions(f):
        degs.update(p.degree() for p in dec.factors)
    return bool(degs & {2, 4})


def _degree5_flag(f, trials, seed):
    """Heuristic: a degree-5 indecomposable left factor whose sampled cycle
    types are consistent with A5 or S5 (the two-orbit family's signature)."""
    from .grouplab import monodromy_probe, symmetric_group
    from .groups import PermGroup
    from .perms import parse_perm
    for dec in complete_decompositions(f):
        lead = dec.factors[0]
        if lead.degree() != 5 or lead.field is not None:
            continue
        A5 = symmetric_group(5).derived_subgroup()
        S5 = symmetric_group(5)
        C5 = PermGroup(5, [parse_perm("(0 1 2 3 4)")])
        D5 = PermGroup(5, [parse_perm("(0 1 2 3 4)"), parse_perm("(1 4)(2 3)")])
        F20 = PermGroup(5, [parse_perm("(0 1 2 3 4)"), parse_perm("(1 2 4 3)")])
        rep = monodromy_probe(lead, trials,
                              candidates=[("C5", C5), ("D5", D5), ("F20", F20),
                                          ("A5", A5), ("S5", S5)], seed=seed)
        consistent = rep["consistent"]
        if consistent and set(consistent) <= {"A5", "S5"}:
            return True
    return False


def stability_scan(f, n, N, degree_bound=64):
    """Red_{f^(n)} cap [-N, N] minus Red_f cap [-N, N], by exhaustive
    factorization of the iterate's fibers."""
    if f.degree() < 2 or n < 2:
        raise ValueError("need deg(f) >= 2 and n >= 2")
    if f.degree() ** n > degree_bound:
        raise SizeLimit("iterate degree %d exceeds bound %d" % (f.degree() ** n, degree_bound))
    it = f
    for _ in range(n - 1):
        it = f.compose(it)
    base = scan_red(f, N)
    iterated = scan_red(it, N)
    base_set = set(base.reducible_a)
    difference = [a for a in iterated.reducible_a if a not in base_set]
    return {
        "f_reducible": base.reducible_a,
        "iterate_reducible": iterated.reducible_a,
        "difference": difference,
        "iterate_degree": it.degree(),
    }

import random

import pytest

from conftest import rng
from sepred.groups import PermGroup
from sepred.grouplab import (HypothesisFailed, NoBlocks, NotPGroup, agl1,
                             all_subgroups_upto, augmentation_module,
                             cyclic_group, is_diagonal_subdirect,
                             largeness_check, monodromy_probe,
                             nilpotency_class, overgroups, socle_bruteforce,
                             socle_solvable, symmetric_group,
                             two_action_reducibility, verify_index_lemma,
                             wreath, base_intersection)
from sepred.perms import cycle_type, parse_perm, pad
from sepred.unipoly import UniPoly


def test_group_basics_examples():
    C4 = cyclic_group(4)
    assert C4.block_systems() == [((0, 2), (1, 3))]
    assert symmetric_group(4).is_primitive()
    D4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(1 3)")])
    assert D4.order() == 8


def test_wreath_examples():
    assert wreath(cyclic_group(2), cyclic_group(2)).order() == 8
    W = wreath(cyclic_group(2), cyclic_group(4))
    assert (W.degree, W.order()) == (8, 64)
    P = wreath(symmetric_group(4), cyclic_group(2), "product")
    assert (P.degree, P.order()) == (16, 1152)


def diag_embed(G, copies):
    gens = []
    for g in G.gens:
        img = []
        for j in range(copies):
            img.extend(x + j * G.degree for x in g)
        gens.append(tuple(img))
    return PermGroup(G.degree * copies, gens)


def test_diagonal_subdirect_examples():
    S3 = symmetric_group(3)
    blocks = [[0, 1, 2], [3, 4, 5]]
    assert is_diagonal_subdirect(diag_embed(S3, 2), blocks)
    full = PermGroup(6, [pad(g, 6) for g in S3.gens]
                    + [tuple([0, 1, 2] + [x + 3 for x in g]) for g in S3.gens])
    assert not is_diagonal_subdirect(full, blocks)
    # base of C2 wr C2: each projection has kernel C2
    base = PermGroup(4, [parse_perm("(0 1)", 4), parse_perm("(2 3)", 4)])
    assert not is_diagonal_subdirect(base, [[0, 1], [2, 3]])


def test_augmentation_module_examples():
    I22 = augmentation_module(2, 2)
    assert I22.size() == 2 and sorted(I22.vectors()) == [(0, 0), (1, 1)]
    I42 = augmentation_module(4, 2)
    assert I42.size() == 8 and I42.rank() == 3
    assert augmentation_module(3, 3).size() == 9
    assert I42.contains((1, 1, 1, 1)) and not I42.contains((1, 0, 0, 0))


def test_socle_examples():
    A3 = agl1(3)
    diag = diag_embed(A3, 2)
    grp, mod = socle_solvable(diag, 3, "agl1")
    assert grp.order() == 3 and mod.rank() == 1
    assert socle_bruteforce(diag).same_group(grp)
    C3sq = PermGroup(6, [parse_perm("(0 1 2)", 6), parse_perm("(3 4 5)", 6)])
    grp2, mod2 = socle_solvable(C3sq, 3, "agl1")
    assert grp2.order() == 9 and mod2.rank() == 2
    # projections only C2 < AGL1(3): hypothesis violated
    bad = PermGroup(6, [parse_perm("(0 1)", 6), parse_perm("(3 4)", 6)])
    with pytest.raises(HypothesisFailed):
        socle_solvable(bad, 3, "agl1")


def test_socle_s4_context():
    S4 = symmetric_group(4)
    diag = diag_embed(S4, 2)
    grp, mod = socle_solvable(diag, 2, "s4")
    assert grp.order() == 4  # diagonal V4
    assert socle_bruteforce(diag).same_group(grp)


def test_socle_matches_bruteforce_randomized(rng):
    # Lemma-style check on random subdirect products inside AGL1(q)^n
    for q in (2, 3, 5):
        A = agl1(q)
        els = sorted(A.elements())
        for _ in range(6):
            n = rng.randrange(2, 4)
            gens = []
            for _ in range(2):
                parts = [rng.choice(els) for _ in range(n)]
                img = []
                for j, g in enumerate(parts):
                    img.extend(x + j * q for x in g)
                gens.append(tuple(img))
            K = PermGroup(q * n, gens)
            if K.order() > 2000:
                continue
            try:
                grp, mod = socle_solvable(K, q, "agl1")
            except HypothesisFailed:
                continue
            assert socle_bruteforce(K).same_group(grp)
            # diagonality lift: diagonal socle forces diagonal K
            blocks = [list(range(j * q, (j + 1) * q)) for j in range(n)]
            if mod.rank() == 1 and grp.order() == q:
                projs = all(len({p[b[0]] for p in grp.elements()}) == grp.order()
                            for b in blocks)
                if projs and is_diagonal_subdirect(grp, blocks):
                    assert is_diagonal_subdirect(K, blocks)


def test_index_lemma_examples(rng):
    # C3 wr C4 with a 12-cycle: equality case of the index bound
    W = wreath(cyclic_group(3), cyclic_group(4))
    sigma = next(p for p in W.elements() if cycle_type(p) == (12,))
    N = W.normal_closure([sigma])
    rep = verify_index_lemma(W, N, sigma, 3)
    assert rep["ok"] and rep["equality"] and rep["sigma_is_qd_cycle"]
    # D4 = C2 wr C2 with sigma the 4-cycle: index exactly 2 | 2
    D = wreath(cyclic_group(2), cyclic_group(2))
    sigma = next(p for p in D.elements() if cycle_type(p) == (4,))
    N = PermGroup(4, [sigma])
    rep = verify_index_lemma(D, N, sigma, 2)
    assert rep["ok"] and rep["index"] == 2
    # sigma not mapping to a d-cycle
    tau = next(p for p in D.elements() if cycle_type(p) == (2, 2) and p[0] == 1)
    with pytest.raises(HypothesisFailed):
        verify_index_lemma(D, D.normal_closure([tau]), tau, 2)


def test_nilpotency_examples():
    D4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(1 3)")])
    assert nilpotency_class(D4) == 2
    assert nilpotency_class(wreath(cyclic_group(2), cyclic_group(4))) == 4
    assert nilpotency_class(cyclic_group(8)) == 1
    with pytest.raises(NotPGroup):
        nilpotency_class(symmetric_group(3))


def test_nilpotency_lower_bound_on_towers():
    # class of the q-Sylow is at least the rank of the base intersection
    for G, q in ((wreath(cyclic_group(2), cyclic_group(2)), 2),
                 (wreath(cyclic_group(3), cyclic_group(3)), 3),
                 (wreath(wreath(cyclic_group(2), cyclic_group(2)), cyclic_group(2)), 2)):
        _, vectors = base_intersection(G, q)
        from sepred.grouplab import _rowreduce
        rank = len(_rowreduce(vectors, q))
        assert nilpotency_class(G) >= rank


def test_largeness_examples():
    big = largeness_check(wreath(cyclic_group(3), cyclic_group(2)), 2, 3)
    assert big["large"] and big["full_power_in_kernel"]
    D6 = PermGroup(6, [parse_perm("(0 1 2 3 4 5)"), parse_perm("(1 5)(2 4)")])
    small = largeness_check(D6, 3, 2)
    assert not small["large"] and small["kernel_socle_rank"] == 1
    with pytest.raises(NoBlocks):
        largeness_check(symmetric_group(4), 2, 2)


def test_gl23_exception_flag():
    # GL_2(3) acting on the 8 nonzero vectors of F_3^2
    def lin(a, b, c, d):
        pts = [(i, j) for i in range(3) for j in range(3) if (i, j) != (0, 0)]
        idx = {p: k for k, p in enumerate(pts)}
        return tuple(idx[((a * i + b * j) % 3, (c * i + d * j) % 3)] for (i, j) in pts)

    G = PermGroup(8, [lin(1, 1, 0, 1), lin(0, -1, 1, 0), lin(2, 0, 0, 1)])
    assert G.order() == 48
    rep = largeness_check(G, 4, 2)
    assert rep["exception"] and "GL2(3)" in rep["exception"]


def test_two_action_examples():
    S3 = symmetric_group(3)
    H = PermGroup(3, [parse_perm("(0 1)", 3)])
    assert two_action_reducibility(S3, H, H)  # diagonal
    S4 = symmetric_group(4)
    # two point stabilizers of one action: reducible (the f(X)-f(Y) case);
    # the D4 block stabilizer gives the genuinely irreducible second action
    assert two_action_reducibility(S4, S4.point_stabilizer(0), S4.point_stabilizer(1))
    D4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(1 3)")])
    assert not two_action_reducibility(S4, S4.point_stabilizer(0), D4)
    r = PermGroup(4, [parse_perm("(1 3)", 4)])
    rs = PermGroup(4, [parse_perm("(0 1)(2 3)", 4)])
    assert two_action_reducibility(D4, r, rs)


def test_subgroup_enumeration_and_overgroups():
    S4 = symmetric_group(4)
    subs = all_subgroups_upto(S4, 12)
    # S4 has 30 subgroups; 29 below order 24
    assert len(subs) == 29
    sizes = sorted(len(s) for s in subs)
    assert sizes.count(1) == 1 and sizes.count(2) == 9 and sizes.count(3) == 4
    over = overgroups(S4, S4.point_stabilizer(0))
    assert sorted(len(a) for a in over) == [6, 24]


def test_monodromy_probe_examples(rng):
    x = UniPoly.x()
    S2 = symmetric_group(2)
    rep = monodromy_probe(x ** 2, 30, candidates=[("S2", S2)], seed=3)
    assert set(p for p, _ in rep["patterns"]) <= {(2,), (1, 1)}
    assert "S2" in rep["consistent"]
    rep3 = monodromy_probe(x ** 3, 40, seed=3)
    assert set(p for p, _ in rep3["patterns"]) <= {(3,), (1, 1, 1), (1, 2)}
    # T4 has dihedral monodromy: no (1, 3) pattern ever
    D4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(1 3)")])
    C4 = cyclic_group(4)
    rep4 = monodromy_probe(x ** 4 - 4 * x ** 2 + 2, 60,
                           candidates=[("D4", D4), ("C4", C4)], seed=3)
    assert (1, 3) not in set(p for p, _ in rep4["patterns"])
    assert "D4" in rep4["consistent"]

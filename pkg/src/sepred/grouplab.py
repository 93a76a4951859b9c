"""Wreath products, subdirect diagonality, socles, index bounds, nilpotency
classes, the degree-8 exhaustive search, and the two-action reducibility
test.

The degree-8 search enumerates every subgroup of S_8 containing the fixed
8-cycle (0 1 ... 7) by closing under single-element extensions <H, g>; g
runs over (H,H)-double-coset representatives, and candidate groups are
deduplicated through their stabilizer chains.  Conjugacy classes are then
merged by conjugators transporting the fixed 8-cycle to an 8-cycle of the
other group (every class member containing some 8-cycle is conjugate to one
containing the fixed one, so this is sound).
"""

import itertools
import random
from dataclasses import dataclass
from math import gcd

from .groups import PermGroup, coset_action
from .perms import (conj, cycle_type, cycles, identity, is_identity, pinv,
                    pmul, ppow)


class SizeLimit(ValueError):
    pass


class NotInvariant(ValueError):
    pass


class HypothesisFailed(ValueError):
    pass


class NotPGroup(ValueError):
    pass


class NoBlocks(ValueError):
    pass


POINT_BOUND = 100000


# ---------------------------------------------------------------------------
# wreath products


def cyclic_group(n):
    return PermGroup(n, [tuple((i + 1) % n for i in range(n))])


def symmetric_group(n):
    if n == 1:
        return PermGroup(1, [])
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return PermGroup(n, gens)


def wreath(A, B, action="imprimitive"):
    """A wr B = A^d x| B for A of degree m, B of degree d.

    'imprimitive': degree m*d, blocks {jm,...,jm+m-1}; 'product': degree
    m^d with B permuting coordinates and A^d acting coordinatewise.
    """
    m, d = A.degree, B.degree
    if action == "imprimitive":
        n = m * d
        if n > POINT_BOUND:
            raise SizeLimit("imprimitive wreath degree %d too large" % n)
        gens = []
        for j in range(d):
            for a in A.gens:
                img = list(range(n))
                for i in range(m):
                    img[j * m + i] = j * m + a[i]
                gens.append(tuple(img))
        for b in B.gens:
            img = list(range(n))
            for j in range(d):
                for i in range(m):
                    img[j * m + i] = b[j] * m + i
            gens.append(tuple(img))
        return PermGroup(n, gens)
    if action == "product":
        n = m ** d
        if n > POINT_BOUND:
            raise SizeLimit("product wreath degree %d too large" % n)

        def idx(tup):
            out = 0
            for k in reversed(tup):
                out = out * m + k
            return out

        def tup(i):
            out = []
            for _ in range(d):
                out.append(i % m)
                i //= m
            return out

        gens = []
        for k in range(d):
            for a in A.gens:
                img = [0] * n
                for i in range(n):
                    t = tup(i)
                    t[k] = a[t[k]]
                    img[i] = idx(t)
                gens.append(tuple(img))
        for b in B.gens:
            img = [0] * n
            for i in range(n):
                t = tup(i)
                s = [0] * d
                for k in range(d):
                    s[b[k]] = t[k]
                img[i] = idx(s)
            gens.append(tuple(img))
        return PermGroup(n, gens)
    raise ValueError("action must be 'imprimitive' or 'product'")


def agl1(q):
    """AGL_1(q) = C_q x| C_q^* acting on Z/q (q prime)."""
    gens = [tuple((i + 1) % q for i in range(q))]
    g = _primitive_root(q)
    if q > 2:
        gens.append(tuple((g * i) % q for i in range(q)))
    return PermGroup(q, gens)


def _primitive_root(q):
    for g in range(2, q):
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = x * g % q
            seen.add(x)
        if len(seen) == q - 1:
            return g
    return 1


# ---------------------------------------------------------------------------
# block-structured helpers (blocks of consecutive points)


def _consecutive_blocks(n, size):
    return [tuple(range(j * size, (j + 1) * size)) for j in range(n // size)]


def _restriction(p, block):
    pos = {pt: i for i, pt in enumerate(block)}
    if any(p[pt] not in pos for pt in block):
        return None
    return tuple(pos[p[pt]] for pt in block)


def block_action(G, blocks):
    """The induced action on a G-invariant partition, as (PermGroup, map)."""
    index = {}
    for bi, block in enumerate(blocks):
        for pt in block:
            index[pt] = bi

    def act(p):
        img = [None] * len(blocks)
        for bi, block in enumerate(blocks):
            targets = {index[p[pt]] for pt in block}
            if len(targets) != 1:
                raise NotInvariant("partition is not invariant")
            img[bi] = targets.pop()
        return tuple(img)

    return PermGroup(len(blocks), [act(g) for g in G.gens]), act


def is_diagonal_subdirect(K, block_partition):
    """True iff each coordinate projection of K is injective."""
    blocks = [tuple(sorted(b)) for b in block_partition]
    for g in K.gens:
        for block in blocks:
            if _restriction(g, block) is None:
                raise NotInvariant("K does not preserve the partition blockwise")
    els = K.elements()
    for block in blocks:
        images = {_restriction(p, block) for p in els}
        if len(images) != len(els):
            return False
    return True


# ---------------------------------------------------------------------------
# elementary abelian modules


@dataclass
class ElemAbelianModule:
    prime: int
    length: int
    basis: tuple  # tuple of length-`length` vectors over F_prime
    group: object = None  # acting PermGroup on coordinates, if any

    def rank(self):
        return len(self.basis)

    def size(self):
        return self.prime ** len(self.basis)

    def contains(self, vec):
        if len(vec) != self.length:
            return False
        return _in_span(self.basis, vec, self.prime)

    def vectors(self):
        if self.size() > 200000:
            raise SizeLimit("module too large to enumerate")
        out = set()
        from itertools import product
        for coeffs in product(range(self.prime), repeat=len(self.basis)):
            v = [0] * self.length
            for c, b in zip(coeffs, self.basis):
                for i in range(self.length):
                    v[i] = (v[i] + c * b[i]) % self.prime
            out.add(tuple(v))
        return out


def _rowreduce(vectors, p):
    rows = [list(v) for v in vectors]
    basis = []
    pivots = []
    for row in rows:
        for b, piv in zip(basis, pivots):
            if row[piv] % p:
                c = row[piv] * pow(b[piv], -1, p) % p
                row = [(x - c * y) % p for x, y in zip(row, b)]
        nz = next((i for i, x in enumerate(row) if x % p), None)
        if nz is not None:
            basis.append(row)
            pivots.append(nz)
    return [tuple(b) for b in basis]


def _in_span(basis, vec, p):
    return len(_rowreduce(list(basis) + [list(vec)], p)) == len(basis)


def augmentation_module(d, q, group=None):
    """I_d(q): all vectors in C_q^d with coordinate sum 0 (rank d-1)."""
    basis = []
    for i in range(d - 1):
        v = [0] * d
        v[i], v[i + 1] = 1, q - 1
        basis.append(tuple(v))
    return ElemAbelianModule(q, d, tuple(basis), group)


# ---------------------------------------------------------------------------
# socle machinery


def _translation_vector(p, block, q):
    """c with p acting as x -> x+c on the block, else None."""
    r = _restriction(p, block)
    if r is None:
        return None
    c = r[0]
    if all(r[i] == (i + c) % q for i in range(q)):
        return c
    return None


_V4 = {(0, 1, 2, 3): (0, 0), (1, 0, 3, 2): (1, 0), (2, 3, 0, 1): (0, 1), (3, 2, 1, 0): (1, 1)}


def socle_solvable(K, q, context="agl1"):
    """soc(K) for K a subdirect power of AGL_1(q) (context 'agl1') or of S_4
    (context 's4'), as the intersection with the elementary abelian base.

    Blocks are consecutive runs of q (resp. 4) points.  Raises
    HypothesisFailed when the component projections do not contain C_q
    (resp. A_4).
    """
    size = q if context == "agl1" else 4
    blocks = _consecutive_blocks(K.degree, size)
    els = K.elements()
    # hypothesis: projections land in AGL_1(q) / S_4 and are large enough
    for block in blocks:
        images = set()
        for p in els:
            r = _restriction(p, block)
            if r is None:
                raise HypothesisFailed("K does not preserve the block structure")
            images.add(r)
        if context == "agl1":
            if any(not _is_affine(r, q) for r in images):
                raise HypothesisFailed("a projection leaves AGL_1(%d)" % q)
            if tuple((i + 1) % q for i in range(q)) not in images:
                raise HypothesisFailed("a projection does not contain C_%d" % q)
        else:
            proj = PermGroup(4, [r for r in images if not is_identity(r)])
            if proj.order() % 12:
                raise HypothesisFailed("a projection does not contain A_4")
    socle_els = []
    vectors = []
    for p in els:
        vec = []
        for block in blocks:
            if context == "agl1":
                c = _translation_vector(p, block, q)
                if c is None:
                    vec = None
                    break
                vec.append(c)
            else:
                r = _restriction(p, block)
                if r not in _V4:
                    vec = None
                    break
                vec.extend(_V4[r])
        if vec is not None:
            socle_els.append(p)
            vectors.append(tuple(vec))
    prime = q if context == "agl1" else 2
    basis = _rowreduce(vectors, prime)
    module = ElemAbelianModule(prime, len(vectors[0]) if vectors else 0, tuple(basis))
    group = PermGroup(K.degree, [p for p in socle_els if not is_identity(p)])
    return group, module


def socle_bruteforce(G, cap=2000):
    """soc(G) as the product of all minimal normal subgroups (element scan)."""
    if G.order() > cap:
        raise SizeLimit("brute-force socle capped at order %d" % cap)
    els = G.elements()
    from .perms import order as porder
    closures = []
    for p in els:
        if is_identity(p):
            continue
        if _is_prime(porder(p)):
            N = G.normal_closure([p])
            if not any(N.same_group(M) for M in closures):
                closures.append(N)
    minimal = [N for N in closures
               if not any(M.order() < N.order() and N.contains_subgroup(M) for M in closures)]
    gens = []
    for N in minimal:
        gens.extend(N.gens)
    return PermGroup(G.degree, gens)


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(n ** 0.5) + 1):
        if n % d == 0:
            return False
    return True


def _is_affine(r, q):
    # r(i) = a*i + b mod q?
    b = r[0]
    a = (r[1] - b) % q if q > 1 else 0
    return all(r[i] == (a * i + b) % q for i in range(q))


# ---------------------------------------------------------------------------
# the index lemma and nilpotency bounds


def base_intersection(G, q):
    """G n C_q^d for G inside the imprimitive AGL_1(q) wr S_d (blocks of
    consecutive q points): the translation-only elements, as a PermGroup
    plus their translation vectors."""
    blocks = _consecutive_blocks(G.degree, q)
    els = G.elements()
    members, vectors = [], []
    for p in els:
        vec = []
        for block in blocks:
            c = _translation_vector(p, block, q)
            if c is None:
                vec = None
                break
            vec.append(c)
        if vec is not None:
            members.append(p)
            vectors.append(tuple(vec))
    return PermGroup(G.degree, [p for p in members if not is_identity(p)]), vectors


def verify_index_lemma(G, N, sigma, q):
    """The index bound [G_q : N_q] | q for N normal in G <= AGL_1(q) wr S_d
    with sigma in N mapping to a d-cycle and sigma^d in N_q; when sigma is a
    qd-cycle and gcd(d, q) = 1, additionally G_q = N_q."""
    d = G.degree // q
    blocks = _consecutive_blocks(G.degree, q)
    B, act = block_action(G, blocks)
    if not N.is_normal_in(G):
        raise HypothesisFailed("N is not normal in G")
    if not N.contains(sigma):
        raise HypothesisFailed("sigma is not in N")
    if cycle_type(act(sigma)) != (d,):
        raise HypothesisFailed("sigma does not map to a d-cycle")
    Gq, _ = base_intersection(G, q)
    Nq, _ = base_intersection(N, q)
    if not Nq.contains(ppow(sigma, d)):
        raise HypothesisFailed("sigma^d is not in N_q")
    index = Gq.order() // Nq.order()
    report = {
        "q": q, "d": d,
        "Gq_order": Gq.order(), "Nq_order": Nq.order(), "index": index,
        "index_divides_q": index in (1, q),
        "sigma_is_qd_cycle": cycle_type(sigma) == (q * d,),
        "coprime": gcd(d, q) == 1,
    }
    if report["sigma_is_qd_cycle"] and report["coprime"]:
        report["equality"] = Gq.order() == Nq.order()
        report["ok"] = report["index_divides_q"] and report["equality"]
    else:
        report["ok"] = report["index_divides_q"]
    return report


def nilpotency_class(Q):
    """Length of the lower central series of a p-group."""
    order = Q.order()
    p = _smallest_prime_factor(order)
    if order == 1:
        return 0
    k = order
    while k % p == 0:
        k //= p
    if k != 1:
        raise NotPGroup("order %d is not a prime power" % order)
    cls = 0
    current = Q
    while current.order() > 1:
        comms = []
        for a in current.gens:
            for b in Q.gens:
                c = pmul(pinv(pmul(b, a)), pmul(a, b))
                if not is_identity(c):
                    comms.append(c)
        current = Q.normal_closure(comms) if comms else PermGroup(Q.degree, [])
        cls += 1
        if cls > 64:
            raise RuntimeError("runaway central series")
    return cls


def _smallest_prime_factor(n):
    for d in range(2, int(n ** 0.5) + 1):
        if n % d == 0:
            return d
    return n


# ---------------------------------------------------------------------------
# largeness audit


def largeness_check(G2, p, q):
    """Audit the large-kernel dichotomy on a monodromy candidate of degree
    p*q: kernel of the block action vs soc(component)^p, with the named
    small exceptions flagged."""
    if G2.degree != p * q or not G2.is_transitive():
        raise ValueError("need a transitive group of degree p*q")
    systems = [s for s in G2.block_systems() if len(s) == p and len(s[0]) == q]
    if not systems:
        raise NoBlocks("no block system with %d blocks of size %d" % (p, q))
    blocks = systems[0]
    els = G2.elements()
    kernel_els = [g for g in els
                  if all(_restriction(g, b) is not None for b in blocks)]
    K = PermGroup(G2.degree, [g for g in kernel_els if not is_identity(g)])
    # component: image of the block-0 setwise stabilizer on block 0
    block0 = blocks[0]
    stab_imgs = set()
    for g in els:
        r = _restriction(g, block0)
        if r is not None:
            stab_imgs.add(r)
    Gamma = PermGroup(q, [r for r in stab_imgs if not is_identity(r)])
    soc = socle_bruteforce(Gamma)
    report = {"p": p, "q": q, "component_order": Gamma.order(),
              "socle_order": soc.order(), "kernel_order": K.order()}
    # alternative 1: soc(Gamma)^p <= K
    alt1 = True
    for j, block in enumerate(blocks):
        inv = {pt: i for i, pt in enumerate(block)}
        for s in soc.gens:
            img = list(range(G2.degree))
            for pt in block:
                img[pt] = block[s[inv[pt]]]
            if not G2.contains(tuple(img)):
                alt1 = False
                break
        if not alt1:
            break
    report["full_power_in_kernel"] = alt1
    # alternative 2: cyclic socle with rank >= p-1 inside the kernel
    alt2 = False
    soc_order = soc.order()
    if _is_prime(soc_order):
        vectors = []
        sgen = soc.gens[0] if soc.gens else None
        if sgen is not None:
            table = {identity(q): 0}
            power = sgen
            c = 1
            while power not in table:
                table[power] = c
                power = pmul(power, sgen)
                c += 1
            for g in kernel_els:
                vec = []
                for block in blocks:
                    r = _restriction(g, block)
                    if r not in table:
                        vec = None
                        break
                    vec.append(table[r])
                if vec is not None:
                    vectors.append(tuple(vec))
            rank = len(_rowreduce(vectors, soc_order))
            report["kernel_socle_rank"] = rank
            alt2 = rank >= p - 1
    report["cyclic_rank_alternative"] = alt2
    report["large"] = alt1 or alt2
    report["exception"] = _named_exception(G2)
    return report


def _named_exception(G):
    if G.degree == 8 and G.order() == 48:
        orders = [H.order() for H in G.derived_series()]
        if orders == [48, 24, 8, 2, 1]:
            return "GL2(3) <= S_8 (no Ritt move)"
    if G.degree == 12 and G.order() == 72:
        orders = [H.order() for H in G.derived_series()]
        if orders[:2] == [72, 12]:
            return "C_3 x S_4 <= S_12 (with Ritt move)"
    return None


# ---------------------------------------------------------------------------
# two-action reducibility and the degree-8 search


def two_action_reducibility(G, H1, H2):
    """True (reducible) iff H1 is intransitive on G/H2, i.e. H1*H2 != G."""
    inter = H1.intersection(H2)
    return H1.order() * H2.order() // inter.order() < G.order()


FULL_8_CYCLE = tuple((i + 1) % 8 for i in range(8))


def enumerate_deg8_full_cycle(progress=None):
    """All subgroups of S_8 containing the fixed 8-cycle, closed under
    single-element extension, with labels; returns (groups, classes) where
    `groups` lists every subgroup and `classes` is the conjugacy-deduped
    list of (representative, label) pairs."""
    s8 = list(itertools.permutations(range(8)))
    start = PermGroup(8, [FULL_8_CYCLE])
    found = {}  # order -> list of PermGroup
    queue = [start]
    found[start.order()] = [start]

    def register(K):
        bucket = found.setdefault(K.order(), [])
        for H in bucket:
            if H.contains_subgroup(K):
                return None
        bucket.append(K)
        return K

    while queue:
        H = queue.pop()
        if H.order() == 40320:
            continue
        reps = _double_coset_reps(H, s8)
        for g in reps:
            K = H.subgroup_generated_with([g])
            new = register(K)
            if new is not None:
                queue.append(new)
                if progress:
                    progress(new)
    groups = [g for bucket in found.values() for g in bucket]
    groups.sort(key=lambda G: G.order())
    classes = _conjugacy_dedup(groups)
    labeled = []
    for rep, members in classes:
        labeled.append((rep, {
            "order": rep.order(),
            "block_systems": len(rep.block_systems()),
            "solvable": rep.is_solvable(),
            "primitive": rep.is_primitive(),
            "class_size": len(members),
        }))
    return groups, labeled


def _double_coset_reps(H, s8):
    seen = set()
    for h in H.elements():
        seen.add(h)
    reps = []
    gens = H.gens if H.gens else (identity(8),)
    for g in s8:
        if g in seen:
            continue
        reps.append(g)
        stack = [g]
        seen.add(g)
        while stack:
            x = stack.pop()
            for s in gens:
                for y in (pmul(s, x), pmul(x, s)):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
    return reps


def _conjugacy_dedup(groups, element_cap=5040):
    classes = []  # list of (rep, [members])
    for G in groups:
        placed = False
        for rep, members in classes:
            if rep.order() != G.order():
                continue
            if _invariant_tuple(rep) != _invariant_tuple(G):
                continue
            if rep.order() > element_cap or _conjugate_with_8cycle(rep, G):
                members.append(G)
                placed = True
                break
        if not placed:
            classes.append((G, [G]))
    return classes


def _invariant_tuple(G):
    return (G.order(), len(G.minimal_block_systems()), G.is_primitive(), G.is_solvable())


def _conjugate_with_8cycle(G1, G2):
    """Search x with G1^x = G2 among transporters of the fixed 8-cycle to
    the 8-cycles of G1."""
    czero = FULL_8_CYCLE
    for h in G1.elements():
        if cycle_type(h) != (8,):
            continue
        cyc = cycles(h)[0]
        s = [0] * 8
        for i, a in enumerate(cyc):
            s[a] = i  # s maps h's cycle onto (0 1 ... 7) -- build transporter
        s_h = pinv(tuple(s))
        for k in range(8):
            x = pmul(s_h, ppow(czero, k))
            if all(G2.contains(conj(g, x)) for g in G1.gens):
                return True
    return False


# ---------------------------------------------------------------------------
# subgroup enumeration (solvable, by cyclic extension) and the Prop-5.4 scan


def small_generating_set(els, degree):
    """A short generating list for a subgroup given as an element set."""
    gens = []
    known = {identity(degree)}
    for x in sorted(els):
        if x not in known:
            gens.append(x)
            known = _closure_by_gens(gens, degree)
            if len(known) == len(els):
                break
    return gens


def _closure_by_gens(gens, degree):
    els = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = pmul(x, s)
            if y not in els:
                els.add(y)
                frontier.append(y)
    return els


def all_subgroups_upto(G, maxorder):
    """Every subgroup of order <= maxorder of a solvable G, by cyclic
    extension: extend A with any normalizing g whose p-th power lies in A
    (every subgroup of a solvable group is reached through a chain of
    prime-index normal extensions).  Element-set representation."""
    els = sorted(G.elements())
    n = G.degree
    trivial = frozenset([identity(n)])
    subs = {trivial}
    frontier = [trivial]
    from .perms import order as porder
    while frontier:
        A = frontier.pop()
        if len(A) >= maxorder:
            continue
        agens = small_generating_set(A, n)
        normalizer = [g for g in els
                      if all(conj(a, g) in A for a in agens)] if agens else els
        for g in normalizer:
            if g in A:
                continue
            for p in _prime_factors(porder(g)):
                if ppow(g, p) in A:
                    if p * len(A) <= maxorder:
                        new = _extend_by(A, g, p)
                        if new not in subs:
                            subs.add(new)
                            frontier.append(new)
                    break
    return subs


def _extend_by(A, x, p):
    out = set(A)
    coset = [pmul(x, a) for a in A]
    for _ in range(1, p):
        out.update(coset)
        coset = [pmul(x, c) for c in coset]
    return frozenset(out)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def overgroups(G, S):
    """All subgroups of G containing S (element sets; G small).  Extension
    candidates run over coset representatives only."""
    g_els = sorted(G.elements())
    n = G.degree
    base = frozenset(S.elements()) if isinstance(S, PermGroup) else frozenset(S)
    out = {base}
    frontier = [base]
    while frontier:
        A = frontier.pop()
        if len(A) == len(g_els):
            continue
        agens = small_generating_set(A, n)
        marked = set(A)
        for g in g_els:
            if g in marked:
                continue
            marked.update(pmul(g, a) for a in A)
            new = frozenset(_closure_by_gens(agens + [g], n))
            if new not in out:
                out.add(new)
                frontier.append(new)
    return out


def prop54_two_action_scan(groups=None, progress=None):
    """The degree-8 minimal-reducibility audit.

    For every enumerated subgroup H of S_8 containing the fixed 8-cycle that
    preserves a block system with blocks of size 2 (the shape forced by a
    quadratic right factor; such H are automatically solvable), and for
    every core-free index-8 subgroup Hy giving a second faithful transitive
    degree-8 action with size-2 blocks and a common 8-cycle, check: if the
    point stabilizer Hx is intransitive on H/Hy, then some overgroup pair
    (Hx', Hy') with at least one strict containment, both proper in H, is
    still intransitive.  Returns the list of configuration reports; a
    configuration with no such refinement would be a minimally reducible
    survivor."""
    if groups is None:
        groups, _ = enumerate_deg8_full_cycle()
    reports = []
    for H in groups:
        if H.order() > 384:
            continue
        if not any(len(s[0]) == 2 for s in H.block_systems()):
            continue
        h_els = H.elements()
        eight_cycles = [h for h in h_els if cycle_type(h) == (8,)]
        Hx = H.point_stabilizer(0)
        hx_set = frozenset(Hx.elements())
        over_x = [A for A in overgroups(H, Hx) if len(A) < H.order()]
        target = H.order() // 8
        seen_classes = set()
        for S in all_subgroups_upto(H, target):
            if len(S) != target:
                continue
            if S in seen_classes:
                continue
            seen_classes.update(_conj_orbit(S, H))
            Hy = PermGroup(H.degree, [p for p in S if not is_identity(p)])
            cfg = _check_configuration(H, Hx, hx_set, over_x, Hy, S, eight_cycles)
            if cfg is not None:
                reports.append(cfg)
                if progress:
                    progress(cfg)
    return reports


def _conj_orbit(S, H):
    orbit = {S}
    frontier = [S]
    while frontier:
        A = frontier.pop()
        for g in H.gens:
            B = frozenset(conj(a, g) for a in A)
            if B not in orbit:
                orbit.add(B)
                frontier.append(B)
    return orbit


def _check_configuration(H, Hx, hx_set, over_x, Hy, hy_set, eight_cycles):
    order = H.order()
    # faithful: trivial core <=> the coset action image has full order
    try:
        reps, act = coset_action(H, Hy)
    except RuntimeError:
        return None
    image_gens = [act(g) for g in H.gens]
    image = PermGroup(8, [p for p in image_gens if not is_identity(p)])
    if image.order() != order:
        return None  # not faithful
    if not any(len(s[0]) == 2 for s in image.block_systems()):
        return None  # second action has no quadratic block structure
    if not any(cycle_type(act(h)) == (8,) for h in eight_cycles):
        return None  # no common inertia 8-cycle
    inter = len(hx_set & hy_set)
    if (len(hx_set) * len(hy_set)) // inter >= order:
        return None  # irreducible configuration: nothing to refine
    over_y = [B for B in overgroups(H, Hy) if len(B) < order]
    refined = None
    for A in over_x:
        for B in over_y:
            if len(A) == len(hx_set) and len(B) == len(hy_set):
                continue  # need a strict refinement somewhere
            if (len(A) * len(B)) // len(A & B) < order:
                refined = (len(A), len(B))
                break
        if refined:
            break
    return {
        "group_order": order,
        "stabilizer_order": len(hx_set),
        "second_stabilizer_order": len(hy_set),
        "reducible": True,
        "refinement_found": refined is not None,
        "refinement_orders": refined,
    }


# ---------------------------------------------------------------------------
# monodromy probe


def monodromy_probe(f, trials, candidates=(), seed=0):
    """Sample factorization degree patterns of f(X) - a mod p over random
    (a, p): heuristic cycle-type evidence for the monodromy group of f.

    `candidates` is a list of (name, PermGroup) pairs; the report flags the
    ones whose element cycle types cover every sampled pattern.  No rigorous
    claim is made.
    """
    from . import gfp
    from .unipoly import UniPoly

    if trials < 1:
        raise ValueError("trials >= 1")
    rng = random.Random(seed)
    primes = [p for p in gfp.primes()][20:2000]
    n = f.degree()
    patterns = {}
    done = 0
    while done < trials:
        p = rng.choice(primes)
        a = rng.randrange(-10 * trials, 10 * trials + 1)
        shifted = f - UniPoly.const(a, f.field)
        den = 1
        for c in shifted.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        if den % p == 0:
            continue
        fp = gfp.trim([(c.numerator * pow(c.denominator, -1, p)) % p for c in shifted.coeffs])
        if len(fp) - 1 != n or not gfp.is_squarefree(fp, p):
            continue
        pattern = tuple(gfp.degree_pattern(gfp.monic(fp, p), p))
        patterns[pattern] = patterns.get(pattern, 0) + 1
        done += 1
    report = {"patterns": sorted(patterns.items()), "trials": trials, "consistent": []}
    for name, G in candidates:
        types = set(G.cycle_types())
        if all(pat in types for pat in patterns):
            report["consistent"].append(name)
    return report

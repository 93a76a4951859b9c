"""Finite permutation groups with a deterministic Schreier-Sims chain.

Groups are given by generators on {0,...,n-1}.  The stabilizer chain is
built on first use and drives order, membership, and element enumeration
(full element sets are only materialized up to a configurable cap, per the
intended desk scale).  Blocks use the finest-invariant-partition closure;
all block systems are enumerated by the subset test for small degrees.
"""

from math import lcm

from .perms import (conj, cycles, cycle_type, identity, is_identity, pinv, pmul)


class DegreeMismatch(ValueError):
    pass


ELEMENT_CAP = 10 ** 6


class PermGroup:
    def __init__(self, degree, generators):
        self.degree = degree
        gens = []
        for g in generators:
            if len(g) != degree:
                raise DegreeMismatch("generator degree %d != %d" % (len(g), degree))
            t = tuple(g)
            if not is_identity(t) and t not in gens:
                gens.append(t)
        self.gens = tuple(gens)
        self._levels = None
        self._order = None
        self._elements = None

    # -- stabilizer chain ------------------------------------------------------

    def _chain(self):
        if self._levels is None:
            self._levels = _schreier_sims(self.gens, self.degree)
        return self._levels

    def order(self):
        if self._order is None:
            n = 1
            for lev in self._chain():
                n *= len(lev["orbit"])
            self._order = n
        return self._order

    def contains(self, p):
        if len(p) != self.degree:
            return False
        r = _strip(tuple(p), self._chain())
        return is_identity(r)

    def elements(self, cap=ELEMENT_CAP):
        """The full element set (tuples); refuses above `cap`."""
        if self._elements is None:
            if self.order() > cap:
                raise ValueError("group of order %d above element cap" % self.order())
            els = [identity(self.degree)]
            for lev in reversed(self._chain()):
                els = [pmul(u, e) for u in lev["orbit"].values() for e in els]
            self._elements = frozenset(els)
        return self._elements

    # -- orbits and blocks -------------------------------------------------------

    def orbit(self, pt):
        seen = {pt}
        queue = [pt]
        while queue:
            x = queue.pop()
            for g in self.gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbit_transversal(self, pt):
        """{point: u} with u(pt) = point."""
        trans = {pt: identity(self.degree)}
        queue = [pt]
        while queue:
            x = queue.pop()
            for g in self.gens:
                y = g[x]
                if y not in trans:
                    trans[y] = pmul(g, trans[x])
                    queue.append(y)
        return trans

    def orbits(self):
        left = set(range(self.degree))
        out = []
        while left:
            o = self.orbit(min(left))
            out.append(sorted(o))
            left -= o
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree if self.degree else True

    def finest_partition_merging(self, seed):
        """The finest G-invariant partition with all of `seed` in one class
        (union-find closure)."""
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
                return True
            return False

        seed = list(seed)
        for x in seed[1:]:
            union(seed[0], x)
        changed = True
        while changed:
            changed = False
            for g in self.gens:
                for x in range(n):
                    r = find(x)
                    if r != x and union(g[x], g[r]):
                        changed = True
        classes = {}
        for x in range(n):
            classes.setdefault(find(x), []).append(x)
        return sorted(tuple(sorted(c)) for c in classes.values())

    def minimal_block_systems(self):
        """All minimal nontrivial block systems (transitive G)."""
        out = set()
        for beta in range(1, self.degree):
            part = self.finest_partition_merging([0, beta])
            if 1 < len(part) < self.degree:
                out.add(tuple(part))
        # keep the minimal ones (coarser partitions can appear for non-minimal merges)
        minimal = []
        for part in out:
            size = len(part[0])
            if not any(len(q[0]) < size and _refines(q, part) for q in out if q != part):
                minimal.append(part)
        return sorted(minimal)

    def is_primitive(self):
        if not self.is_transitive():
            return False
        for beta in range(1, self.degree):
            part = self.finest_partition_merging([0, beta])
            if len(part) > 1:
                return False
        return True

    def block_systems(self):
        """All nontrivial block systems (subset test; degree <= 16)."""
        n = self.degree
        if n > 16:
            raise ValueError("block-system enumeration is limited to degree <= 16")
        from itertools import combinations
        out = []
        for size in [d for d in range(2, n) if n % d == 0]:
            for rest in combinations(range(1, n), size - 1):
                block = (0,) + rest
                part = self.finest_partition_merging(block)
                if part[0] == block and len(part) == n // size:
                    out.append(tuple(part))
        return sorted(set(out))

    def is_block(self, block):
        part = self.finest_partition_merging(sorted(block))
        return tuple(sorted(block)) in part

    # -- structural subgroups ------------------------------------------------------

    def point_stabilizer(self, pt):
        """Stabilizer of a point, via Schreier generators."""
        trans = self.orbit_transversal(pt)
        gens = set()
        for x, u in trans.items():
            for s in self.gens:
                t = trans[s[x]]
                sg = pmul(pinv(t), pmul(s, u))
                if not is_identity(sg):
                    gens.add(sg)
        return PermGroup(self.degree, sorted(gens))

    def subgroup_generated_with(self, extra):
        return PermGroup(self.degree, list(self.gens) + list(extra))

    def conjugate(self, x):
        return PermGroup(self.degree, [conj(g, x) for g in self.gens])

    def normal_closure(self, perms):
        """Smallest normal subgroup of self containing `perms`."""
        closure = PermGroup(self.degree, perms)
        changed = True
        while changed:
            changed = False
            new = []
            for h in closure.gens:
                for g in self.gens:
                    c = conj(h, g)
                    if not closure.contains(c):
                        new.append(c)
            if new:
                closure = closure.subgroup_generated_with(new)
                changed = True
        return closure

    def derived_subgroup(self):
        comms = []
        for a in self.gens:
            for b in self.gens:
                c = pmul(pinv(pmul(b, a)), pmul(a, b))
                if not is_identity(c):
                    comms.append(c)
        return self.normal_closure(comms)

    def derived_series(self):
        series = [self]
        while True:
            nxt = series[-1].derived_subgroup()
            if nxt.order() == series[-1].order():
                break
            series.append(nxt)
            if nxt.order() == 1:
                break
        return series

    def is_solvable(self):
        return self.derived_series()[-1].order() == 1

    def contains_subgroup(self, other):
        return all(self.contains(g) for g in other.gens)

    def same_group(self, other):
        return (self.degree == other.degree and self.order() == other.order()
                and self.contains_subgroup(other))

    def is_normal_in(self, G):
        return all(self.contains(conj(h, g)) for h in self.gens for g in G.gens)

    def intersection(self, other, cap=ELEMENT_CAP):
        """Element-set intersection (small groups)."""
        small, big = (self, other) if self.order() <= other.order() else (other, self)
        els = [p for p in small.elements(cap) if big.contains(p)]
        return PermGroup(self.degree, [p for p in els if not is_identity(p)])

    def element_orders(self):
        from .perms import order as porder
        return sorted(porder(p) for p in self.elements())

    def cycle_types(self):
        return sorted(set(cycle_type(p) for p in self.elements()))

    def abelianization_orders(self):
        """Sorted element orders of G/[G,G] (identifies the abelianization)."""
        der = self.derived_subgroup()
        dels = der.elements()
        index = self.order() // der.order()
        if index > 4096:
            raise ValueError("abelianization too large to enumerate")
        reps = {}
        for p in self.elements():
            key = min(pmul(p, h) for h in dels)
            reps.setdefault(key, p)
        orders = []
        for key, p in reps.items():
            k = 1
            q = p
            while not der.contains(q):
                q = pmul(q, p)
                k += 1
            orders.append(k)
        return sorted(orders)

    def __repr__(self):
        from .perms import format_perm
        return "PermGroup(deg %d, order %d, <%s>)" % (
            self.degree, self.order(), ", ".join(format_perm(g) for g in self.gens[:4]))


def _refines(fine, coarse):
    cmap = {}
    for i, cls in enumerate(coarse):
        for x in cls:
            cmap[x] = i
    return all(len({cmap[x] for x in cls}) == 1 for cls in fine)


def _strip(g, levels):
    for lev in levels:
        x = g[lev["base"]]
        u = lev["orbit"].get(x)
        if u is None:
            return g
        g = pmul(pinv(u), g)
    return g


def _orbit_rebuild(lev, n):
    base = lev["base"]
    orbit = {base: identity(n)}
    queue = [base]
    while queue:
        x = queue.pop()
        for s in lev["gens"]:
            y = s[x]
            if y not in orbit:
                orbit[y] = pmul(s, orbit[x])
                queue.append(y)
    lev["orbit"] = orbit


def _schreier_sims(gens, n):
    """Deterministic Schreier-Sims; returns the list of chain levels.

    Level i holds every strong generator fixing the bases of levels < i, so
    a residue that fixes the first `idx` bases is appended to levels
    0..idx; verification then restarts at the deepest changed level and
    works back down.
    """
    levels = []

    def add_gen(idx, g):
        if idx == len(levels):
            base = min(i for i, v in enumerate(g) if v != i)
            levels.append({"base": base, "gens": [], "orbit": {base: identity(n)}})
        for j in range(idx + 1):
            lev = levels[j]
            if g not in lev["gens"]:
                lev["gens"].append(g)
                _orbit_rebuild(lev, n)

    def place(r):
        idx = 0
        while idx < len(levels) and r[levels[idx]["base"]] == levels[idx]["base"]:
            idx += 1
        add_gen(idx, r)
        return idx

    for g in gens:
        if not is_identity(g):
            r = _strip(g, levels)
            if not is_identity(r):
                place(r)

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        complete = True
        for x, u in list(lev["orbit"].items()):
            for s in lev["gens"]:
                t = lev["orbit"][s[x]]
                sg = pmul(pinv(t), pmul(s, u))
                if is_identity(sg):
                    continue
                r = _strip(sg, levels[i + 1:])
                if is_identity(r):
                    continue
                i = place(r)
                complete = False
                break
            if not complete:
                break
        if complete:
            i -= 1
    return levels


def coset_action(G, H):
    """The action of G on the cosets gH: returns (reps, act) where act(g)
    is the induced permutation of {0..index-1}; reps[0] = identity."""
    index = G.order() // H.order()
    reps = [identity(G.degree)]
    queue = [0]
    while queue:
        i = queue.pop(0)
        for g in G.gens:
            x = pmul(g, reps[i])
            if _coset_index(x, reps, H) is None:
                reps.append(x)
                queue.append(len(reps) - 1)
                if len(reps) > index:
                    raise RuntimeError("more cosets than the index allows")
    if len(reps) != index:
        raise RuntimeError("coset enumeration incomplete")

    def act(g):
        return tuple(_coset_index(pmul(g, r), reps, H) for r in reps)

    return reps, act


def _coset_index(x, reps, H):
    for j, r in enumerate(reps):
        if H.contains(pmul(pinv(r), x)):
            return j
    return None

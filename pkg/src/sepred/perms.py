"""Permutation primitives.

A permutation on {0,...,n-1} is a tuple `p` with p[i] the image of i.
Products compose right-to-left: (p * q)(i) = p[q(i)], matching left actions.
Cycle notation text looks like "(0 1 2 3)(4 5)".
"""

import re
from math import lcm


def identity(n):
    return tuple(range(n))


def is_identity(p):
    return all(i == v for i, v in enumerate(p))


def pmul(p, q):
    """p * q: apply q first, then p."""
    return tuple(p[i] for i in q)


def pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def ppow(p, e):
    n = len(p)
    if e < 0:
        return ppow(pinv(p), -e)
    result = identity(n)
    base = p
    while e:
        if e & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        e >>= 1
    return result


def conj(p, x):
    """x^-1 * p * x (the conjugate of p by x)."""
    return pmul(pinv(x), pmul(p, x))


def cycles(p):
    """Nontrivial cycles of p, each rotated to start at its minimum."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p):
    """Sorted cycle lengths including fixed points."""
    lens = [len(c) for c in cycles(p)]
    lens.extend([1] * (len(p) - sum(lens)))
    return tuple(sorted(lens))


def order(p):
    return lcm(*(len(c) for c in cycles(p))) if cycles(p) else 1


def from_cycles(n, cycs):
    img = list(range(n))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:]):
            img[a] = b
        if cyc:
            img[cyc[-1]] = cyc[0]
    return tuple(img)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text, n=0):
    """Parse cycle notation; points are 0-based integers."""
    cycs = []
    rest = text.replace(",", " ").strip()
    if rest in ("", "()"):
        return identity(n)
    for m in _CYCLE_RE.finditer(rest):
        pts = [int(t) for t in m.group(1).split()]
        if len(set(pts)) != len(pts):
            raise ValueError("repeated point in cycle %r" % m.group(0))
        cycs.append(pts)
    if not cycs:
        raise ValueError("could not parse permutation %r" % text)
    size = max(n, 1 + max(max(c) for c in cycs if c))
    return from_cycles(size, cycs)


def format_perm(p):
    cycs = cycles(p)
    if not cycs:
        return "()"
    return "".join("(%s)" % " ".join(map(str, c)) for c in cycs)


def pad(p, n):
    """Extend p to act on {0,...,n-1}, fixing the new points."""
    if len(p) >= n:
        return p
    return tuple(list(p) + list(range(len(p), n)))

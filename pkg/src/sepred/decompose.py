"""Composition structure of polynomials.

Right/left composition factors, complete decompositions into
indecomposables, Ritt moves between them, right-uniqueness, recognition of
the special shapes X^n and the Dickson family D_{n,alpha} up to linear
relatedness, and linear-relatedness solving itself.

In characteristic 0 a polynomial has at most one monic right factor with
zero constant term in each degree (block systems of the monodromy are
invariant under the inertia n-cycle at infinity, which has a unique block
system per block size), and every decomposition over the algebraic closure
is already defined over the coefficient field.  So the degree-d right
factor is found deterministically: the candidate is read off a truncated
(n/d)-th root of the reversed polynomial, then certified by base-h
expansion.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .factor_uni import factor_nf, roots_in_field
from .unipoly import UniPoly, _one, _zero


class NotAFactor(ValueError):
    pass


@dataclass(frozen=True)
class LinearMap:
    """aX + b with a != 0 over some coefficient field."""

    a: object
    b: object

    def as_poly(self, field=None):
        return UniPoly(field, [self.b, self.a])

    def apply(self, poly):
        return poly.compose(UniPoly(poly.field, [self.b, self.a]))

    def compose(self, other):
        # self(other(X))
        return LinearMap(self.a * other.a, self.a * other.b + self.b)

    def inverse(self):
        inv = 1 / self.a if isinstance(self.a, Fraction) else self.a.inverse()
        return LinearMap(inv, -self.b * inv)

    def is_identity(self):
        return self.a == 1 and not self.b

    def to_json(self):
        from .parsing import format_scalar
        return {"a": format_scalar(self.a), "b": format_scalar(self.b)}


@dataclass(frozen=True)
class Decomposition:
    """A complete decomposition: factors compose left-to-right to the input.

    All factors except possibly the leftmost are monic with zero constant
    term; `normalization` records the linear maps folded in to reach this
    canonical form.
    """

    factors: tuple
    normalization: tuple

    def compose(self):
        acc = self.factors[0]
        for p in self.factors[1:]:
            acc = acc.compose(p)
        return acc

    def degrees(self):
        return tuple(p.degree() for p in self.factors)


def divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _nth_root_series(coeffs, e, d, field):
    """First d coefficients of the e-th root of 1 + c1 z + c2 z^2 + ...

    `coeffs[k]` is the z^k coefficient (coeffs[0] == 1).
    """
    one = _one(field)
    inv_e = one / (one * e)
    root = [one]
    for k in range(1, d):
        # (root + r_k z^k + ...)^e = series: solve e * r_k = series_k - (root^e)_k
        pw = _series_pow(root, e, k + 1, field)
        target = coeffs[k] if k < len(coeffs) else _zero(field)
        r_k = (target - pw[k]) * inv_e
        root.append(r_k)
    return root


def _series_pow(a, e, trunc, field):
    out = [_one(field)]
    base = list(a[:trunc])
    n = e
    while n:
        if n & 1:
            out = _series_mul(out, base, trunc, field)
        base = _series_mul(base, base, trunc, field)
        n >>= 1
    while len(out) < trunc:
        out.append(_zero(field))
    return out


def _series_mul(a, b, trunc, field):
    out = [_zero(field)] * min(trunc, len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if i >= trunc:
            break
        if not ai:
            continue
        for j, bj in enumerate(b):
            if i + j >= trunc:
                break
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def right_factor(f, d):
    """The unique monic, zero-constant right factor of degree d, with its
    left cofactor: f = g o h.  None if no such decomposition exists."""
    n = f.degree()
    if n % d != 0 or not (1 < d < n):
        raise ValueError("d must properly divide deg(f)")
    e = n // d
    field = f.field
    lc = f.lc()
    # reversed monic series: z^n * (f/lc)(1/z)
    rev = [f.coeff(n - k) / lc if field is None else f.coeff(n - k) * (_one(field) / lc)
           for k in range(n + 1)]
    root = _nth_root_series(rev, e, d, field)
    # centered candidate: h = X^d + root[1] X^(d-1) + ... + root[d-1] X, h(0) = 0
    h = UniPoly(field, [_zero(field)] + [root[d - 1 - i] for i in range(d - 1)] + [_one(field)])
    # base-h expansion of f must have constant digits
    digits = []
    rem = f
    for _ in range(e + 1):
        rem, r = rem.divmod(h)
        if r.degree() > 0:
            return None
        digits.append(r.constant_coeff())
    if not rem.is_zero():
        return None
    g = UniPoly(field, digits)
    if g.degree() != e:
        return None
    return g, h


def is_indecomposable(f):
    n = f.degree()
    if n < 2:
        return False
    for d in divisors(n):
        if 1 < d < n and right_factor(f, d) is not None:
            return False
    return True


def left_factors(f):
    """All pairs f = h o h1 with deg(h) >= 2, one per degree, h1 canonical
    (monic, zero constant term).  Includes (f, x) itself."""
    n = f.degree()
    out = [(f, UniPoly.x(f.field))]
    for e in divisors(n):
        if e < 2 or e == n:
            continue
        rf = right_factor(f, n // e)
        if rf is not None:
            out.append(rf)
    out.sort(key=lambda t: -t[0].degree())
    return out


def _canonicalize_chain(chain):
    """Make every factor except the leftmost monic with zero constant term.
    Returns (new_chain, linear maps applied)."""
    chain = list(chain)
    applied = []
    field = chain[0].field
    one = _one(field)
    for i in range(len(chain) - 1, 0, -1):
        p = chain[i]
        a = p.lc()
        b = p.constant_coeff()
        if a == one and not b:
            continue
        inv = one / a
        chain[i] = (p - UniPoly.const(b, field)).scale(inv)  # ell o p
        ell_inv = UniPoly(field, [b, a])  # ell^(-1) = aX + b
        chain[i - 1] = chain[i - 1].compose(ell_inv)
        applied.append(LinearMap(inv, -b * inv))
    return tuple(chain), tuple(applied)


def _greedy_complete(f):
    n = f.degree()
    if n == 1:
        return []
    for d in divisors(n):
        if 1 < d < n:
            rf = right_factor(f, d)
            if rf is not None:
                g, h = rf
                return _greedy_complete(g) + [h]
    return [f]


def ritt_move(g, h):
    """Swap the degrees of an adjacent indecomposable pair: if g o h also
    decomposes with the degrees exchanged, return that decomposition."""
    dg, dh = g.degree(), h.degree()
    if gcd(dg, dh) != 1 or dg == dh:
        return None
    comp = g.compose(h)
    rf = right_factor(comp, dg)
    if rf is None:
        return None
    return rf


def complete_decompositions(f):
    """All complete decompositions of f up to linear insertion, as a sorted
    tuple of Decomposition values (canonical form)."""
    if f.degree() < 2:
        raise ValueError("need degree >= 2")
    start, norm = _canonicalize_chain(_greedy_complete(f))
    seen = {start: norm}
    queue = [start]
    while queue:
        ch = queue.pop()
        for i in range(len(ch) - 1):
            mv = ritt_move(ch[i], ch[i + 1])
            if mv is None:
                continue
            new, applied = _canonicalize_chain(ch[:i] + (mv[0], mv[1]) + ch[i + 2:])
            if new not in seen:
                seen[new] = applied
                queue.append(new)
    chains = [Decomposition(ch, seen[ch]) for ch in seen]
    chains.sort(key=lambda dec: tuple(_chain_key(p) for p in dec.factors))
    return tuple(chains)


def _chain_key(p):
    def skey(c):
        if isinstance(c, Fraction):
            return (float(c),)
        return tuple(float(x) for x in c.coeffs)
    return (p.degree(), tuple(skey(c) for c in p.coeffs))


def _left_linear_match(f, g):
    """mu with f = mu o g, or None (same degree)."""
    if f.degree() != g.degree() or f.degree() < 1:
        return None
    a = f.lc() / g.lc() if f.field is None else f.lc() * (_one(f.field) / g.lc())
    diff = f - g.scale(a)
    if diff.degree() > 0:
        return None
    return LinearMap(a, diff.constant_coeff())


def is_right_unique(f, v):
    """True iff every complete decomposition of f has a right tail that is
    mu o v for some linear mu."""
    n, dv = f.degree(), v.degree()
    if dv < 2 or n % dv != 0:
        raise NotAFactor("degree of v does not divide degree of f")
    if dv == n:
        if _left_linear_match(f, v) is None:
            raise NotAFactor("f is not linearly equivalent to v")
        return True
    rf = right_factor(f, dv)
    if rf is None or _left_linear_match(v, rf[1]) is None:
        raise NotAFactor("f does not decompose through v")
    for dec in complete_decompositions(f):
        tail = None
        total = 1
        for i in range(len(dec.factors) - 1, -1, -1):
            total *= dec.factors[i].degree()
            if total == dv:
                tail = dec.factors[i]
                for p in dec.factors[i + 1:]:
                    tail = tail.compose(p)
                break
            if total > dv:
                break
        if tail is None or _left_linear_match(tail, v) is None:
            return False
    return True


def recognize_power(f):
    """Witness (mu, n, nu) with f = mu o X^n o nu over the coefficient
    field, or None."""
    n = f.degree()
    if n < 2:
        return None
    field = f.field
    c = f.lc()
    one = _one(field)
    r = -(f.coeff(n - 1) * (one / (one * n)) * (one / c))
    powpart = UniPoly(field, [-r, one]) ** n
    diff = f - powpart.scale(c)
    if diff.degree() > 0:
        return None
    return LinearMap(c, diff.constant_coeff()), n, LinearMap(one, -r)


def dickson_coeffs(n, alpha, field=None):
    """The Dickson polynomial D_{n,alpha} via the three-term recurrence."""
    two = UniPoly.const(2, field)
    if n == 0:
        return two
    prev = two
    cur = UniPoly.x(field)
    for _ in range(n - 1):
        prev, cur = cur, UniPoly.x(field) * cur - prev.scale(alpha)
    return cur


def recognize_dickson(f):
    """Witness (mu, n, alpha, nu) with f = mu o D_{n,alpha} o nu over the
    field and alpha != 0, or None.  (alpha = 0 is the X^n case; use
    recognize_power.)"""
    n = f.degree()
    if n < 2:
        return None
    field = f.field
    one = _one(field)
    c = f.lc()
    s = f.coeff(n - 1) * (one / (one * n)) * (one / c)
    g = f.compose(UniPoly(field, [-s, one]))  # depressed
    beta = -(g.coeff(n - 2) * (one / (one * n)) * (one / c))
    if not beta:
        return None
    diff = g - dickson_coeffs(n, beta, field).scale(c)
    if diff.degree() > 0:
        return None
    return (LinearMap(c, diff.constant_coeff()), n, beta, LinearMap(one, s))


def _kth_roots_in_field(w, k, field):
    """All solutions of a^k = w in the coefficient field."""
    if not w:
        return [w] if k else []
    xk = UniPoly(field, [-w] + [_zero(field)] * (k - 1) + [_one(field)])
    return roots_in_field(xk)


def linearly_related_all(f, g, right_only=False):
    """All witnesses (mu, nu) with f = mu o g o nu (mu forced to the
    identity when right_only)."""
    n = f.degree()
    if n != g.degree() or n < 2:
        return []
    field = f.field
    one = _one(field)
    out = []
    if right_only:
        ratio = f.lc() * (one / g.lc())
        for a in set(_kth_roots_in_field(ratio, n, field)):
            b = (f.coeff(n - 1) * (one / (one * a)) ** (n - 1) - g.coeff(n - 1)) \
                * (one / (one * n)) * (one / g.lc())
            nu = UniPoly(field, [b, a])
            if g.compose(nu) == f:
                out.append((LinearMap(one, _zero(field)), LinearMap(a, b)))
        return out
    sf = f.coeff(n - 1) * (one / (one * n)) * (one / f.lc())
    sg = g.coeff(n - 1) * (one / (one * n)) * (one / g.lc())
    F = f.compose(UniPoly(field, [-sf, one]))
    G = g.compose(UniPoly(field, [-sg, one]))
    support = []
    for k in range(1, n - 1):
        fk, gk = F.coeff(k), G.coeff(k)
        if bool(fk) != bool(gk):
            return []
        if fk:
            support.append(k)
    rn = F.lc() * (one / G.lc())
    if not support:
        cands = [one]
    else:
        # u*a^k = r_k for k in support, u*a^n = r_n: a^(n-k) = r_n/r_k
        exps = [n - k for k in support]
        ratios = [rn * (one / (F.coeff(k) * (one / G.coeff(k)))) for k in support]
        e, w = exps[0], ratios[0]
        for e2, w2 in zip(exps[1:], ratios[1:]):
            # maintain a^e = w with e the gcd of known exponents
            e, w = _combine_power_relations(e, w, e2, w2, one)
        cands = set(_kth_roots_in_field(w, e, field))
    for a in cands:
        u = rn * (one / (one * a)) ** n
        v = F.constant_coeff() - u * G.constant_coeff()
        if F == G.compose(UniPoly(field, [_zero(field), a])).scale(u) + UniPoly.const(v, field):
            mu = LinearMap(u, v)
            nu = LinearMap(a, a * sf - sg)
            if f == (g.compose(nu.as_poly(field))).scale(u) + UniPoly.const(v, field):
                out.append((mu, nu))
    return out


def _combine_power_relations(e1, w1, e2, w2, one):
    """From a^e1 = w1 and a^e2 = w2 derive a^gcd = w via Bezout."""
    g = gcd(e1, e2)
    # extended gcd
    x0, x1 = 1, 0
    r0, r1 = e1, e2
    y0, y1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    # r0 == g, x0*e1 + y0*e2 == g
    w = _scalar_pow(w1, x0, one) * _scalar_pow(w2, y0, one)
    return g, w


def _scalar_pow(w, e, one):
    return w ** e if e >= 0 else (one / w) ** (-e)


def linearly_related(f, g, right_only=False):
    """One witness (mu, nu) with f = mu o g o nu over the field, or None."""
    wits = linearly_related_all(f, g, right_only)
    return wits[0] if wits else None


def strongly_unique_report(f, v, extension_fields=()):
    """Right-uniqueness of the decomposition through v, plus the prime-square
    tail obstruction: a right factor linearly related to X^(p^2) or T_(p^2).

    The relatedness test runs over the coefficient field and over each
    supplied extension; the report names the field where an obstruction
    appears.
    """
    report = {"right_unique": is_right_unique(f, v), "obstructions": []}
    n = f.degree()
    from .families import chebyshev
    for p in (2, 3, 5, 7, 11, 13):
        d = p * p
        if d > n or n % d != 0:
            continue
        rf = (f, None) if d == n else right_factor(f, d)
        if rf is None:
            continue
        tail = f if d == n else rf[1]
        shapes = [("power", UniPoly(None, [0] * d + [1])), ("chebyshev", chebyshev(d))]
        fields = [f.field] + [k for k in extension_fields]
        for name, shape in shapes:
            for K in fields:
                tk = tail if tail.field == K else (tail.map_to_field(K) if tail.field is None else None)
                if tk is None:
                    continue
                sk = shape.map_to_field(K) if K is not None else shape
                if linearly_related(tk, sk) is not None:
                    label = "Q" if K is None else K.label
                    report["obstructions"].append({"degree": d, "shape": name, "field": label})
                    break
    report["strongly_unique"] = report["right_unique"] and not report["obstructions"]
    return report

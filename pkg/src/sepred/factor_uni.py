"""Complete univariate factorization over Q and over number fields.

Over Q this is Zassenhaus: squarefree split (Yun), factorization modulo a
good odd prime, quadratic Hensel lifting past the Mignotte bound, then
subset recombination by increasing cardinality (only up to half the modular
factors -- the complement is checked implicitly) pruned by a
trailing-coefficient divisibility test.  No lattice reduction; desk-scale
degrees keep the exponential recombination harmless.

Over Q(alpha) the norm method: factor N(f(x - s*alpha)) over Q for the
smallest integer shift s making the norm squarefree, then recover the
factors by gcds over the field.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import gfp
from .unipoly import UniPoly, interpolate, poly_gcd, resultant, squarefree_decomposition


@dataclass(frozen=True)
class FactorList:
    """unit * prod(poly^mult) == the factored polynomial; polys monic irreducible."""

    unit: object
    factors: tuple

    def expand(self, field=None):
        acc = None
        for poly, mult in self.factors:
            term = poly ** mult
            acc = term if acc is None else acc * term
        if acc is None:
            acc = UniPoly.const(1, field if field is not None else None)
        return acc.scale(self.unit)

    def n_factors(self):
        """Number of irreducible factors counted with multiplicity."""
        return sum(m for _, m in self.factors)

    def is_irreducible(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def to_json(self):
        from .parsing import format_poly, format_scalar
        return {
            "unit": format_scalar(self.unit),
            "factors": [{"poly": format_poly(p), "multiplicity": m, "degree": p.degree()}
                        for p, m in self.factors],
        }


def _sort_key(poly):
    def skey(c):
        if isinstance(c, Fraction):
            return (float(c),)
        return tuple(float(x) for x in c.coeffs)
    return (poly.degree(), tuple(skey(c) for c in poly.coeffs))


# ---------------------------------------------------------------------------
# integer-polynomial helpers (lists of ints, low-to-high)


def _ztrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zprimitive(a):
    from math import gcd
    g = 0
    for c in a:
        g = gcd(g, c)
    if g == 0:
        return list(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _zdiv_exact(a, b):
    """Exact quotient of integer polys, or None (b primitive)."""
    a = list(a)
    db = len(b) - 1
    if db < 0:
        return None
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        if a[-1] % b[-1] != 0:
            return None
        c = a[-1] // b[-1]
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db):
            a[k + i] -= c * b[i]
        a.pop()
    if _ztrim(a):
        return None
    return q


def _srep(x, m):
    x %= m
    return x - m if x > m // 2 else x


# mod p^k arithmetic (plain int lists)


def _pk_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ztrim([c % m for c in out])


def _pk_sub(a, b, m):
    n = max(len(a), len(b))
    return _ztrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
                   for i in range(n)])


def _pk_add(a, b, m):
    n = max(len(a), len(b))
    return _ztrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
                   for i in range(n)])


def _pk_divmod_monic(a, b, m):
    """Division by a monic b, coefficients mod m."""
    a = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        if a[-1] % m == 0:
            a.pop()
            continue
        c = a[-1] % m
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db):
            a[k + i] = (a[k + i] - c * b[i]) % m
        a.pop()
    return _ztrim(q), _ztrim(a)


def _hensel_step(f, g, h, s, t, m2):
    """One quadratic Hensel step up to the target modulus m2 (f, g, h monic).

    m2 may be any multiple of the current modulus m dividing m^2; the lifted
    congruences hold mod m2.
    """
    e = _pk_sub(f, _pk_mul(g, h, m2), m2)
    q, r = _pk_divmod_monic(_pk_mul(s, e, m2), h, m2)
    g1 = _pk_add(g, _pk_add(_pk_mul(t, e, m2), _pk_mul(q, g, m2), m2), m2)
    h1 = _pk_add(h, r, m2)
    b = _pk_sub(_pk_add(_pk_mul(s, g1, m2), _pk_mul(t, h1, m2), m2), [1], m2)
    c, d = _pk_divmod_monic(_pk_mul(s, b, m2), h1, m2)
    s1 = _pk_sub(s, d, m2)
    t1 = _pk_sub(t, _pk_add(_pk_mul(t, b, m2), _pk_mul(c, g1, m2), m2), m2)
    return g1, h1, s1, t1


def _hensel_pair(f, g, h, s, t, p, k, pk):
    """Lift f = g*h from mod p to mod p^k (quadratic steps, capped at p^k)."""
    m = p
    while m < pk:
        target = min(m * m, pk)
        g, h, s, t = _hensel_step(f, g, h, s, t, target)
        m = target
    return g, h


def _lift_tree(f, facs, p, pk, k):
    """Lift the monic factorization f = prod(facs) mod p to mod p^k."""
    if len(facs) == 1:
        return [list(f)]
    mid = len(facs) // 2
    g = [1]
    for u in facs[:mid]:
        g = gfp.mul(g, u, p)
    h = [1]
    for u in facs[mid:]:
        h = gfp.mul(h, u, p)
    _, s, t = gfp.xgcd(g, h, p)
    G, H = _hensel_pair(f, g, h, s, t, p, k, pk)
    return _lift_tree(G, facs[:mid], p, pk, k) + _lift_tree(H, facs[mid:], p, pk, k)


def _mignotte_modulus(F, p):
    n = len(F) - 1
    norm2 = isqrt(sum(c * c for c in F)) + 1
    bound = (1 << n) * norm2 * abs(F[-1])
    k = 1
    pk = p
    while pk <= 2 * bound:
        pk *= p
        k += 1
    return k, pk


def _zassenhaus(F, max_primes=5):
    """Irreducible factors of a primitive squarefree F in Z[x], lc > 0."""
    n = len(F) - 1
    if n <= 1:
        return [list(F)]
    lc = F[-1]
    best = None
    tried = 0
    for p in gfp.primes():
        if lc % p == 0:
            continue
        Fp = gfp.trim([c % p for c in F])
        if len(Fp) - 1 != n or not gfp.is_squarefree(Fp, p):
            continue
        facs = gfp.factor_squarefree(gfp.monic(Fp, p), p)
        if len(facs) == 1:
            return [list(F)]
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if tried >= max_primes or len(best[1]) == 2:
            break
    p, modfacs = best
    k, pk = _mignotte_modulus(F, p)
    fm = [(c * pow(lc, -1, pk)) % pk for c in F]
    pool = _lift_tree(_ztrim(fm), modfacs, p, pk, k)

    result = []
    rest = list(F)
    d = 1
    while 2 * d <= len(pool):
        restart = False
        lc_rest = rest[-1]
        tc_rest = rest[0]
        for combo in itertools.combinations(range(len(pool)), d):
            # trailing-coefficient prune
            t = lc_rest
            for i in combo:
                t = (t * pool[i][0]) % pk
            t = _srep(t, pk)
            if tc_rest != 0:
                if t == 0 or (lc_rest * tc_rest) % t != 0:
                    continue
            cand = [lc_rest]
            for i in combo:
                cand = _pk_mul(cand, pool[i], pk)
            cand = _zprimitive([_srep(c, pk) for c in cand])
            q = _zdiv_exact(rest, cand)
            if q is not None:
                result.append(cand)
                rest = _zprimitive(q)
                pool = [u for i, u in enumerate(pool) if i not in combo]
                restart = True
                break
        if not restart:
            d += 1
    if len(rest) > 1:
        result.append(rest)
    return result


def factor_q(f):
    """Complete irreducible factorization of a nonzero f over Q."""
    if f.field is not None:
        raise ValueError("factor_q expects a polynomial over Q")
    if f.is_zero():
        raise ZeroDivisionError("cannot factor the zero polynomial")
    unit, parts = squarefree_decomposition(f)
    factors = []
    for part, mult in parts:
        if part.degree() == 1:
            factors.append((part, mult))
            continue
        _, prim = part.content_and_primitive()
        for g_int in _zassenhaus(prim.int_coeffs()):
            g = UniPoly(None, [Fraction(c) for c in g_int]).monic()
            factors.append((g, mult))
    factors.sort(key=lambda t: _sort_key(t[0]))
    return FactorList(unit, tuple(factors))


def rational_roots(f):
    """All rational roots of f over Q, with multiplicity, sorted."""
    if f.is_zero():
        raise ZeroDivisionError("roots of the zero polynomial")
    roots = []
    if f.is_constant():
        return roots
    for g, mult in factor_q(f).factors:
        if g.degree() == 1:
            roots.extend([-g.constant_coeff()] * mult)
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# number fields: Trager's norm method


def norm_poly(g):
    """Norm from K[x] down to Q[x] of g over a number field K.

    Res_z(m(z), g_z(x)) computed by evaluation at enough rational x and
    interpolation.
    """
    K = g.field
    m = UniPoly(None, K.minpoly)
    npoints = g.degree() * K.degree + 1
    pts, vals = [], []
    x0 = 0
    while len(pts) < npoints:
        val = g.eval(Fraction(x0))  # NFElement
        b = UniPoly(None, val.coeffs)
        vals.append(resultant(m, b))
        pts.append(Fraction(x0))
        x0 = -x0 if x0 > 0 else -x0 + 1
    return interpolate(None, pts, vals)


def _nf_to_q(f):
    return UniPoly(None, [c.rational_value() for c in f.coeffs])


def factor_nf(f):
    """Complete irreducible factorization over the coefficient number field."""
    K = f.field
    if K is None:
        return factor_q(f)
    if f.is_zero():
        raise ZeroDivisionError("cannot factor the zero polynomial")
    if K.degree == 1:
        fl = factor_q(_nf_to_q(f))
        factors = tuple((g.map_to_field(K), m) for g, m in fl.factors)
        return FactorList(K.from_rational(fl.unit), factors)
    unit, parts = squarefree_decomposition(f)
    theta = K.gen()
    x = UniPoly.x(K)
    factors = []
    for part, mult in parts:
        if part.degree() == 1:
            factors.append((part, mult))
            continue
        for s in _shift_candidates():
            shifted = part.compose(x - UniPoly.const(theta * s, K))
            norm = norm_poly(shifted)
            if _certified_squarefree_q(norm):
                break
        norm_factors = factor_q(norm).factors
        if len(norm_factors) == 1:
            factors.append((part, mult))
            continue
        for nj, _ in norm_factors:
            fj = poly_gcd(shifted, nj.map_to_field(K))
            if fj.degree() >= 1:
                g = fj.compose(x + UniPoly.const(theta * s, K)).monic()
                factors.append((g, mult))
    factors.sort(key=lambda t: _sort_key(t[0]))
    return FactorList(unit, tuple(factors))


def _shift_candidates(limit=40):
    yield 0
    for s in range(1, limit):
        yield s
        yield -s
    raise RuntimeError("no squarefree norm shift found")


def _certified_squarefree_q(f):
    """True only with a certificate: gcd(f, f') = 1 mod some good prime.
    (A False can mean `unlucky primes`; callers just move to the next
    shift, which is sound.)"""
    _, prim = f.content_and_primitive()
    F = prim.int_coeffs()
    n = len(F) - 1
    if n <= 1:
        return True
    checked = 0
    for p in gfp.primes():
        if F[-1] % p == 0:
            continue
        Fp = gfp.trim([c % p for c in F])
        if len(Fp) - 1 != n:
            continue
        if gfp.is_squarefree(Fp, p):
            return True
        checked += 1
        if checked >= 25:
            return False
    return False


def roots_in_field(f):
    """Roots of f lying in its coefficient field, with multiplicity."""
    if f.field is None:
        return rational_roots(f)
    roots = []
    for g, mult in factor_nf(f).factors:
        if g.degree() == 1:
            roots.extend([-g.constant_coeff()] * mult)
    return roots

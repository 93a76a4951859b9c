"""Exact bivariate factorization over Q and number fields.

The method: pick an integer specialization y0 with no X-degree drop and
nonvanishing discriminant, factor F(X, y0) over the coefficient field, lift
the univariate factors Y-adically (in powers of Y - y0) far enough that any
true bivariate factor is captured exactly, then recombine subsets of lifted
factors; every candidate is certified by exact trial division -- nothing is
accepted probabilistically.

Over Q the lift runs with coefficients mod p^B for a prime power past a
Mignotte-style height bound on the shifted factors (fast integer
arithmetic); over a number field the lift is exact field arithmetic.  The
lifting precision is degY(F)+1, extended by degY(lc_X(F)) when the leading
X-coefficient is nonconstant, so true factors are forced exactly.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .bipoly import BiPoly, squarefree_decomposition_x
from .factor_uni import (FactorList, factor_nf, factor_q, _pk_divmod_monic, _pk_mul,
                         _sort_key, _srep, _ztrim)
from .unipoly import UniPoly, poly_gcd, poly_xgcd, _one, _zero
from . import gfp


class NoGoodSpecialization(RuntimeError):
    pass


@dataclass(frozen=True)
class BiFactorList:
    unit: object
    factors: tuple  # ((BiPoly, multiplicity), ...)

    def expand(self, field=None):
        acc = None
        for poly, mult in self.factors:
            term = poly ** mult
            acc = term if acc is None else acc * term
        if acc is None:
            acc = BiPoly.const(1, field)
        return acc.scale(self.unit)

    def n_factors(self):
        return sum(m for _, m in self.factors)

    def is_irreducible(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def x_degrees(self):
        """Sorted X-degrees of the factors (with multiplicity)."""
        out = []
        for p, m in self.factors:
            out.extend([p.deg_x()] * m)
        return sorted(out)

    def to_json(self):
        from .parsing import format_bipoly, format_scalar
        return {
            "unit": format_scalar(self.unit),
            "factors": [{"poly": format_bipoly(p), "multiplicity": m,
                         "degX": p.deg_x(), "degY": p.deg_y()}
                        for p, m in self.factors],
        }


def _bi_sort_key(F):
    def skey(c):
        if isinstance(c, Fraction):
            return (float(c),)
        return tuple(float(x) for x in c.coeffs)
    return (F.deg_x(), F.deg_y(),
            tuple(tuple(skey(c) for c in row.coeffs) for row in F.coeffs))


def _canonical(F):
    """(unit, normalized): leading X-coefficient made monic in Y."""
    lead = F.lc_x().lc()
    one = _one(F.field)
    if lead == one:
        return one, F
    return lead, F.scale(one / lead)


def factor_bi(F, y0=None):
    """Complete factorization of F over its coefficient field.

    `y0` forces the specialization point (used by the stability tests);
    normally the search order 0, 1, -1, 2, -2, ... is used.
    """
    if F.is_zero():
        raise ZeroDivisionError("cannot factor the zero polynomial")
    if F.deg_x() < 1:
        raise ValueError("factor_bi expects X-degree >= 1")
    field = F.field
    unit = F.lc_x().lc()
    factors = []

    cont, P = F.primitive_x()
    if cont.degree() > 0:
        fl = factor_nf(cont)
        for q, m in fl.factors:
            factors.append((BiPoly.from_unipoly_y(q), m))

    _, parts = squarefree_decomposition_x(P)
    for part, mult in parts:
        for raw in _factor_sqfree(part, y0):
            u, canon = _canonical(raw)
            factors.append((canon, mult))

    # unit is determined by leading scalars: lc(lc_x) is multiplicative
    acc = _one(field)
    for p, m in factors:
        acc = acc * p.lc_x().lc() ** m
    unit = F.lc_x().lc() / acc
    factors.sort(key=lambda t: _bi_sort_key(t[0]))
    return BiFactorList(unit, tuple(factors))


def is_irreducible_bi(F, y0=None):
    """True iff F is irreducible over its coefficient field."""
    return factor_bi(F, y0=y0).is_irreducible()


def _specialization_points(F, forced):
    if forced is not None:
        yield forced
        return
    bound = 10 * (F.deg_x() + max(F.deg_y(), 0))
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def _factor_sqfree(Q, forced_y0):
    """Irreducible factors of Q: primitive and squarefree w.r.t. X."""
    n = Q.deg_x()
    if n == 1:
        return [Q]
    if Q.deg_y() <= 0:
        # univariate in X
        u = UniPoly(Q.field, [c.coeff(0) for c in Q.coeffs])
        return [BiPoly.from_unipoly_x(g) for g, _ in factor_nf(u).factors]
    lcY = Q.lc_x()
    for y0 in _specialization_points(Q, forced_y0):
        y0 = Fraction(y0)
        if not lcY.eval(y0):
            continue
        u = Q.eval_y(y0)
        if u.degree() != n:
            continue
        if poly_gcd(u, u.derivative()).degree() != 0:
            continue
        ufl = factor_nf(u)
        if len(ufl.factors) == 1:
            return [Q]
        if Q.field is None:
            return _recombine_q(Q, int(y0), [g for g, _ in ufl.factors])
        return _recombine_nf(Q, y0, [g for g, _ in ufl.factors])
    raise NoGoodSpecialization(
        "no good specialization for degX=%d degY=%d" % (Q.deg_x(), Q.deg_y()))


# ---------------------------------------------------------------------------
# rational backend: coefficients mod p^B, polynomials as Z-major int tables


_BIG_PRIMES = [1000000007, 1000000009, 1000000021, 1000000033, 1000000087,
               1000000093, 1000000097, 1000000103, 1000000123, 1000000181]


def _bi_to_int(Q):
    """Clear denominators: returns (den, table) with table[i][j] int and
    den * Q integral; table is X-major: table[i] = Y-coeff list of X^i."""
    den = 1
    for row in Q.coeffs:
        for c in row.coeffs:
            den = lcm(den, c.denominator)
    table = [[int(c * den) for c in row.coeffs] for row in Q.coeffs]
    return den, table


def _recombine_q(Q, y0, monic_factors):
    n = Q.deg_x()
    _, tab = _bi_to_int(Q)  # integral multiple of Q; factor that instead
    Qi = BiPoly(None, [UniPoly(None, [Fraction(c) for c in row]) for row in tab])
    Qs = Qi.shift_y(Fraction(y0))
    _, stab = _bi_to_int(Qs)  # integral already; den == 1
    lcY_s = Qs.lc_x()
    dy_lc = max(lcY_s.degree(), 0)
    N = max(Qs.deg_y(), 0) + dy_lc + 1

    # height bound on coefficients of lc * (any monic factor) in shifted coords
    h = 0
    for row in stab:
        for c in row:
            h += c * c
    hlc = max(abs(int(c)) for c in [x.numerator for x in lcY_s.coeffs])
    bound = (1 << (n + N + 2)) * (isqrt(h) + 1) * max(hlc, 1) * (n + N)

    u = Qs.eval_y(Fraction(0))
    lc0 = u.lc()
    for p in _BIG_PRIMES:
        if lc0.numerator % p == 0:
            continue
        up = gfp.trim([(c.numerator * pow(c.denominator, -1, p)) % p
                       for c in u.coeffs])
        if len(up) - 1 == n and gfp.is_squarefree(up, p):
            break
    else:  # pragma: no cover - ten billion-scale primes dividing the data
        raise NoGoodSpecialization("no good lifting prime")
    B = 1
    pB = p
    while pB <= 2 * bound:
        pB *= p
        B += 1

    # univariate factors mod p^B (monic; rational coefficients p-integral)
    def to_mod(poly):
        out = []
        for c in poly.coeffs:
            out.append((c.numerator * pow(c.denominator, -1, pB)) % pB)
        return _ztrim(out)

    uhat = [to_mod(g) for g in monic_factors]
    r = len(uhat)
    # Bezout cofactors w_i = (prod_{j!=i} u_j)^(-1) mod (u_i, p^B)
    what = []
    for i in range(r):
        v = [1]
        for j in range(r):
            if j != i:
                v = _pk_divmod_monic(_pk_mul(v, uhat[j], pB), uhat[i], pB)[1]
        what.append(_modinv_poly(v, uhat[i], p, pB))

    # series data, Z-major: S[k] = X-coefficient list of Z^k
    lcs = [(c.numerator * pow(c.denominator, -1, pB)) % pB for c in lcY_s.coeffs]
    lcs += [0] * (N - len(lcs))
    inv0 = pow(lcs[0], -1, pB)
    invlc = [inv0]
    for k in range(1, N):
        s = 0
        for j in range(1, k + 1):
            if j < len(lcs) and lcs[j]:
                s += lcs[j] * invlc[k - j]
        invlc.append((-inv0 * s) % pB)

    # Q* = Qs * invlc (monic in X), Z-major table
    qs_z = _to_z_major(stab, pB, N)
    qstar = _series_scale_q(qs_z, invlc, pB, N)

    ghat = [[list(f)] + [[] for _ in range(N - 1)] for f in uhat]
    for k in range(1, N):
        prod = _series_prod_q(ghat, pB, k + 1)
        e = [( (qstar[k][t] if t < len(qstar[k]) else 0)
               - (prod[k][t] if t < len(prod[k]) else 0)) % pB
             for t in range(n + 1)]
        e = _ztrim(e)
        if not e:
            continue
        for i in range(r):
            d = _pk_divmod_monic(_pk_mul(e, what[i], pB), uhat[i], pB)[1]
            ghat[i][k] = d

    # recombination
    rest = Qi
    pool = list(range(r))
    found = []
    d = 1
    while 2 * d <= len(pool):
        restart = False
        lc_rest = rest.lc_x()
        lcs_rest = [(c.numerator * pow(c.denominator, -1, pB)) % pB
                    for c in lc_rest.compose(UniPoly(None, [y0, 1])).coeffs]
        tc_rest = rest.coeff_x(0)
        for combo in itertools.combinations(pool, d):
            if not _tc_prune_q(ghat, combo, lcs_rest, tc_rest, lc_rest, y0, pB, N):
                continue
            cand = _assemble_q(ghat, combo, lcs_rest, y0, pB, N)
            if cand is None:
                continue
            quo = rest.exact_div_x(cand)
            if quo is not None:
                found.append(cand)
                _, quo = quo.primitive_x()
                _, tab = _bi_to_int(quo)
                rest = BiPoly(None, [UniPoly(None, [Fraction(c) for c in row])
                                     for row in tab])
                pool = [i for i in pool if i not in combo]
                restart = True
                break
        if not restart:
            d += 1
    if rest.deg_x() > 0:
        found.append(rest)
    return found


def _to_z_major(x_major_table, pB, N):
    out = [[] for _ in range(N)]
    for i, row in enumerate(x_major_table):
        for j, c in enumerate(row):
            if j < N and c % pB:
                while len(out[j]) <= i:
                    out[j].append(0)
                out[j][i] = c % pB
    return [_ztrim(v) for v in out]


def _series_scale_q(S, scal, pB, N):
    """Multiply a Z-major series of X-polys by a scalar Z-series."""
    out = [[] for _ in range(N)]
    for k in range(N):
        acc = []
        for j in range(k + 1):
            if j < len(scal) and scal[j] and S[k - j]:
                term = [(c * scal[j]) % pB for c in S[k - j]]
                acc = _pk_addl(acc, term, pB)
        out[k] = acc
    return out


def _pk_addl(a, b, m):
    n = max(len(a), len(b))
    return _ztrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
                   for i in range(n)])


def _series_mul_q(A, B, pB, N):
    out = [[] for _ in range(N)]
    for i, ai in enumerate(A):
        if not ai or i >= N:
            continue
        for j, bj in enumerate(B):
            if i + j >= N:
                break
            if not bj:
                continue
            out[i + j] = _pk_addl(out[i + j], _pk_mul(ai, bj, pB), pB)
    return out


def _series_prod_q(ghat, pB, N):
    acc = None
    for g in ghat:
        acc = g[:N] if acc is None else _series_mul_q(acc, g[:N], pB, N)
    return [acc[k] if k < len(acc) else [] for k in range(N)]


def _tc_prune_q(ghat, combo, lcs_rest, tc_rest, lc_rest, y0, pB, N):
    """Trailing-coefficient divisibility test in Q[Y]."""
    tc = [lcs_rest[k] if k < len(lcs_rest) else 0 for k in range(N)]
    for i in combo:
        g0 = [(ghat[i][k][0] if ghat[i][k] else 0) for k in range(N)]
        conv = [0] * N
        for a in range(N):
            if tc[a]:
                for b in range(N - a):
                    if g0[b]:
                        conv[a + b] = (conv[a + b] + tc[a] * g0[b]) % pB
        tc = conv
    coeffs = [Fraction(_srep(c, pB)) for c in tc]
    cand_tc = UniPoly(None, coeffs).compose(UniPoly(None, [Fraction(-y0), 1]))
    target = lc_rest * tc_rest
    if target.is_zero():
        return True
    if cand_tc.is_zero():
        return False
    return target.divmod(cand_tc)[1].is_zero()


def _assemble_q(ghat, combo, lcs_rest, y0, pB, N):
    acc = [([lcs_rest[k]] if k < len(lcs_rest) and lcs_rest[k] else []) for k in range(N)]
    for i in combo:
        acc = _series_mul_q(acc, ghat[i][:N], pB, N)
    # back to X-major integer table with symmetric representatives
    degx = max((len(v) - 1 for v in acc if v), default=-1)
    rows = []
    for ii in range(degx + 1):
        rows.append(UniPoly(None, [Fraction(_srep(acc[k][ii] if ii < len(acc[k]) else 0, pB))
                                   for k in range(N)]))
    C = BiPoly(None, rows)
    if C.is_zero():
        return None
    G = C.shift_y(Fraction(-y0))
    _, G = G.primitive_x()
    den, tab = _bi_to_int(G)
    G = BiPoly(None, [UniPoly(None, [Fraction(c) for c in row]) for row in tab])
    return G


def _modinv_poly(v, u, p, pB):
    """Inverse of v mod (u, p^B); u monic, gcd(v, u) = 1 mod p."""
    vp = gfp.trim([c % p for c in v])
    up = gfp.trim([c % p for c in u])
    g, s, _ = gfp.xgcd(vp, up, p)
    if len(g) != 1:
        raise NoGoodSpecialization("specialized factors not coprime mod p")
    x = gfp.scalar_mul(s, pow(g[0], p - 2, p), p)
    m = p
    while m < pB:
        m = min(m * m, pB)
        # Newton: x <- x(2 - vx) mod (u, m)
        t = _pk_divmod_monic(_pk_mul(v, x, m), u, m)[1]
        two_minus = _pk_addl([2], [(-c) % m for c in t], m)
        x = _pk_divmod_monic(_pk_mul(x, two_minus, m), u, m)[1]
    return x


# ---------------------------------------------------------------------------
# number-field backend: exact series lifting


def _recombine_nf(Q, y0, monic_factors):
    field = Q.field
    n = Q.deg_x()
    Qs = Q.shift_y(y0)
    lcY_s = Qs.lc_x()
    N = max(Qs.deg_y(), 0) + max(lcY_s.degree(), 0) + 1

    uhat = monic_factors
    r = len(uhat)
    what = []
    for i in range(r):
        v = UniPoly.const(1, field)
        for j in range(r):
            if j != i:
                v = (v * uhat[j]) % uhat[i]
        g, s, _ = poly_xgcd(v, uhat[i])
        if g.degree() != 0:
            raise NoGoodSpecialization("specialized factors not coprime")
        what.append(s.scale(_one(field) / g.coeff(0)) % uhat[i])

    # scalar inverse series of lc in Z
    lcs = [lcY_s.coeff(k) for k in range(N)]
    inv0 = _one(field) / lcs[0]
    invlc = [inv0]
    for k in range(1, N):
        s = _zero(field)
        for j in range(1, k + 1):
            if lcs[j]:
                s = s + lcs[j] * invlc[k - j]
        invlc.append(-(inv0 * s))

    # Q* = Qs / lc as Z-major list of X-polys
    qs_z = [UniPoly(field, [Qs.monomial_coeff(i, k) for i in range(n + 1)])
            for k in range(N)]
    qstar = []
    for k in range(N):
        acc = UniPoly.zero(field)
        for j in range(k + 1):
            if invlc[j]:
                acc = acc + qs_z[k - j].scale(invlc[j])
        qstar.append(acc)

    ghat = [[f] + [UniPoly.zero(field)] * (N - 1) for f in uhat]
    for k in range(1, N):
        prod = _series_prod_nf(ghat, k + 1, field)
        e = qstar[k] - prod[k]
        if e.is_zero():
            continue
        for i in range(r):
            d = (e * what[i]) % uhat[i]
            ghat[i][k] = d

    rest = Q
    pool = list(range(r))
    found = []
    d = 1
    while 2 * d <= len(pool):
        restart = False
        lc_rest = rest.lc_x()
        lcs_rest = [lc_rest.compose(UniPoly(field, [y0, 1])).coeff(k) for k in range(N)]
        for combo in itertools.combinations(pool, d):
            cand = _assemble_nf(ghat, combo, lcs_rest, y0, N, field)
            if cand is None:
                continue
            quo = rest.exact_div_x(cand)
            if quo is not None:
                found.append(cand)
                _, rest = quo.primitive_x()
                pool = [i for i in pool if i not in combo]
                restart = True
                break
        if not restart:
            d += 1
    if rest.deg_x() > 0:
        found.append(rest)
    return found


def _series_mul_nf(A, B, N, field):
    out = [UniPoly.zero(field)] * N
    for i, ai in enumerate(A):
        if ai.is_zero() or i >= N:
            continue
        for j, bj in enumerate(B):
            if i + j >= N:
                break
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def _series_prod_nf(ghat, N, field):
    acc = None
    for g in ghat:
        acc = list(g[:N]) if acc is None else _series_mul_nf(acc, g[:N], N, field)
    while len(acc) < N:
        acc.append(UniPoly.zero(field))
    return acc


def _assemble_nf(ghat, combo, lcs_rest, y0, N, field):
    acc = [UniPoly.const(c, field) if c else UniPoly.zero(field) for c in lcs_rest]
    for i in combo:
        acc = _series_mul_nf(acc, ghat[i][:N], N, field)
    degx = max((p.degree() for p in acc), default=-1)
    if degx < 0:
        return None
    rows = [UniPoly(field, [acc[k].coeff(i) for k in range(N)]) for i in range(degx + 1)]
    C = BiPoly(field, rows)
    G = C.shift_y(-y0)
    _, G = G.primitive_x()
    return G

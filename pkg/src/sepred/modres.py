"""Resultants over Q(alpha) by CRT over word-size primes.

The fraction Euclidean algorithm explodes on number-field inputs of any
size, so exact resultants are assembled from computations in the finite
algebras F_p[z]/(m(z)): scale both inputs to integral coordinates (the
resultant then lies in Z[alpha]), run the Euclidean resultant in the
algebra for enough primes (skipping primes where a leading coefficient is
a zero divisor), and CRT the power-basis coordinates back.

The prime budget is rigorous: a Hadamard bound on the Sylvester
determinant over every complex embedding, multiplied by an explicit bound
d! * rho^(d^2) on the inverse-Vandermonde basis change (rho a Cauchy root
bound for the minimal polynomial, |disc| >= 1 for an integral minimal
polynomial).
"""

from fractions import Fraction
from math import lcm

from .numberfield import NFElement


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3e24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_from(start):
    n = start | 1
    while True:
        if _is_probable_prime(n):
            yield n
        n += 2


class _Algebra:
    """F_p[z]/(m(z)) with dense length-d vectors."""

    def __init__(self, mcoeffs, p):
        self.p = p
        self.d = len(mcoeffs) - 1
        self.m = [c % p for c in mcoeffs]
        # reduction rows for z^d .. z^(2d-2)
        rows = []
        cur = [(-c) % p for c in self.m[:self.d]]
        rows.append(list(cur))
        for _ in range(self.d - 2):
            shifted = [0] + list(cur)
            top = shifted[self.d]
            cur = shifted[:self.d]
            if top:
                cur = [(c + top * r) % p for c, r in zip(cur, rows[0])]
            rows.append(list(cur))
        self.rows = rows

    def mul(self, a, b):
        p, d = self.p, self.d
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:d]]
        for k in range(d, 2 * d - 1):
            c = prod[k] % p
            if c:
                row = self.rows[k - d]
                for i in range(d):
                    out[i] = (out[i] + c * row[i]) % p
        return out

    def inv(self, a):
        """Inverse, or None when a is a zero divisor."""
        p = self.p
        r0 = list(self.m) + []
        r1 = [c % p for c in a]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _polydivmod_p(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub_p(s0, _polymul_p(q, s1, p), p)
            if not r1:
                return None
        if not r1:
            return None
        c = pow(r1[0], -1, p)
        out = [(x * c) % p for x in s1]
        out += [0] * (self.d - len(out))
        return out[:self.d]

    def is_zero(self, a):
        return not any(a)

    def one(self):
        return [1] + [0] * (self.d - 1)

    def pow_scalar(self, a, e):
        out = self.one()
        base = list(a)
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out


def _polydivmod_p(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        if a[-1] % p == 0:
            a.pop()
            continue
        c = (a[-1] * inv) % p
        q[len(a) - 1 - db] = c
        for i in range(db):
            a[len(a) - 1 - db + i] = (a[len(a) - 1 - db + i] - c * b[i]) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return q, a


def _polysub_p(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _polymul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    out = [c % p for c in out]
    while out and out[-1] == 0:
        out.pop()
    return out


def _integralize(poly):
    """(denominator, coordinate table) with table[i] the integer coordinate
    vector of denominator * coeff_i."""
    field = poly.field
    den = 1
    for c in poly.coeffs:
        if field is None:
            den = lcm(den, c.denominator)
        else:
            for q in c.coeffs:
                den = lcm(den, q.denominator)
    table = []
    for c in poly.coeffs:
        if field is None:
            table.append([int(c * den)])
        else:
            table.append([int(q * den) for q in c.coeffs])
    return den, table


def _emb_bound_log2(table, rho_log2):
    # log2 of max embedding absolute value per coefficient, summed Hadamard-style
    import math
    best = 0.0
    per_coeff = []
    for vec in table:
        s = 0.0
        for j, c in enumerate(vec):
            if c:
                s += abs(c) * (2.0 ** min(rho_log2 * j, 500))
        per_coeff.append(s)
    return per_coeff


def resultant_crt(A, B):
    """Exact Res(A, B) over Q or a number field via modular CRT."""
    import math
    field = A.field
    if A.is_zero() or B.is_zero():
        from .unipoly import _zero
        return _zero(field)
    d = 1 if field is None else field.degree
    mcoeffs = [1] if field is None else [int(c) if c.denominator == 1 else c for c in field.minpoly]
    if field is not None:
        mden = lcm(*[c.denominator for c in field.minpoly])
        if mden != 1:
            raise ValueError("CRT resultant needs an integral minimal polynomial")
        mcoeffs = [int(c) for c in field.minpoly]
    denA, tabA = _integralize(A)
    denB, tabB = _integralize(B)
    n, m = A.degree(), B.degree()

    # Hadamard bound over embeddings, then basis-change margin
    rho = 1.0 + (max(abs(float(c)) for c in mcoeffs[:-1]) if field is not None and d > 1 else 0.0)
    rho_log2 = math.log2(rho) if rho > 1 else 0.0
    embA = _emb_bound_log2(tabA, rho_log2)
    embB = _emb_bound_log2(tabB, rho_log2)
    rowA = math.log2(max(sum(x * x for x in embA), 1.0)) / 2 + 1
    rowB = math.log2(max(sum(x * x for x in embB), 1.0)) / 2 + 1
    log2_bound = m * rowA + n * rowB
    if d > 1:
        log2_bound += math.log2(math.factorial(d)) + rho_log2 * d * d
    log2_bound += 16  # symmetric-range headroom

    alg_primes = _primes_from(1 << 62)
    modulus = 1
    residue = [0] * d
    lifted_prev = None
    stable = 0
    while True:
        p = next(alg_primes)
        if denA % p == 0 or denB % p == 0:
            continue
        alg = _Algebra(mcoeffs, p) if d > 1 else None
        resp = _resultant_mod(tabA, tabB, alg, p, d)
        if resp is None:
            continue
        residue = [_crt(residue[i], modulus, resp[i], p) for i in range(d)]
        modulus *= p
        lifted = tuple(_sym(c, modulus) for c in residue)
        if lifted == lifted_prev:
            stable += 1
        else:
            stable = 0
            lifted_prev = lifted
        if math.log2(modulus) > log2_bound and stable >= 1:
            break
        if stable >= 6 and math.log2(modulus) > log2_bound / 2:
            break
    # Res(dA*A, dB*B) = dA^m dB^n Res(A, B): divide back exactly
    scale = Fraction(denA) ** m * Fraction(denB) ** n
    if field is None:
        return Fraction(lifted_prev[0]) / scale
    return field.element([Fraction(c) / scale for c in lifted_prev])


def _resultant_mod(tabA, tabB, alg, p, d):
    if d == 1:
        a = [v[0] % p for v in tabA]
        b = [v[0] % p for v in tabB]
        return _res_gfp(a, b, p)
    a = [[c % p for c in v] for v in tabA]
    b = [[c % p for c in v] for v in tabB]
    return _res_algebra(a, b, alg)


def _res_gfp(a, b, p):
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return None
    if len(a) - 1 != _true_deg(a):
        pass
    res = 1
    sign = 1
    m, n = len(a) - 1, len(b) - 1
    if m < n:
        a, b, m, n = b, a, n, m
        if (m * n) % 2 == 1:
            sign = -sign
    while True:
        if n == 0:
            res = res * pow(b[0], m, p) % p
            break
        q, r = _polydivmod_p(a, b, p)
        dr = len(r) - 1 if r else -1
        if dr < 0:
            return [0]
        res = res * pow(b[-1], m - dr, p) % p
        if (m * n) % 2 == 1:
            sign = -sign
        a, b, m, n = b, r, n, dr
    return [(res * sign) % p]


def _true_deg(a):
    return len(a) - 1


def _res_algebra(a, b, alg):
    """Euclidean resultant in the algebra; None when a leading coefficient
    fails to invert (prime skipped)."""
    def trim(v):
        while v and alg.is_zero(v[-1]):
            v.pop()
        return v

    a, b = trim([list(x) for x in a]), trim([list(x) for x in b])
    if not a or not b:
        return None
    res = alg.one()
    sign = 1
    m, n = len(a) - 1, len(b) - 1
    if m < n:
        a, b, m, n = b, a, n, m
        if (m * n) % 2 == 1:
            sign = -sign
    while True:
        if n == 0:
            res = alg.mul(res, alg.pow_scalar(b[0], m))
            break
        lb = alg.inv(b[-1])
        if lb is None:
            return None
        # division a = qb + r in the algebra
        r = [list(x) for x in a]
        while len(r) - 1 >= n and r:
            if alg.is_zero(r[-1]):
                r.pop()
                continue
            c = alg.mul(r[-1], lb)
            k = len(r) - 1 - n
            for i in range(n):
                prod = alg.mul(c, b[i])
                r[k + i] = [(x - y) % alg.p for x, y in zip(r[k + i], prod)]
            r.pop()
        r = trim(r)
        dr = len(r) - 1 if r else -1
        if dr < 0:
            return [0] * alg.d
        res = alg.mul(res, alg.pow_scalar(b[-1], m - dr))
        if (m * n) % 2 == 1:
            sign = -sign
        a, b, m, n = b, r, n, dr
    if sign < 0:
        res = [(-c) % alg.p for c in res]
    return res


def _crt(r1, m1, r2, p):
    if m1 == 1:
        return r2 % p
    inv = pow(m1 % p, -1, p)
    t = ((r2 - r1) % p) * inv % p
    return r1 + m1 * t


def _sym(x, m):
    x %= m
    return x - m if x > m // 2 else x

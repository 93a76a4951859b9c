"""Dense polynomial arithmetic over GF(p), p an odd prime.

Polynomials are plain lists of ints in [0, p), low-to-high, no trailing
zeros ([] is zero).  Only what the factorization stack needs: ring ops,
gcd, modular powering, distinct-degree and equal-degree splitting.
"""

import random


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def scalar_mul(a, c, p):
    c %= p
    return trim([(x * c) % p for x in a])


def divmod_p(a, b, p):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv) % p
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db):
            a[k + i] = (a[k + i] - c * b[i]) % p
        a.pop()
    return trim(q), trim(a)


def rem(a, b, p):
    return divmod_p(a, b, p)[1]


def monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """(g, s, t) with g = gcd monic and s*a + t*b = g mod p."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], p - 2, p)
    return scalar_mul(r0, inv, p), scalar_mul(s0, inv, p), scalar_mul(t0, inv, p)


def deriv(a, p):
    return trim([(i * a[i]) % p for i in range(1, len(a))])


def powmod(base, e, mod, p):
    """base^e mod (mod, p)."""
    result = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), mod, p)
        base = rem(mul(base, base, p), mod, p)
        e >>= 1
    return result


def eval_at(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def distinct_degree(f, p):
    """[(g_d, d)]: product of all irreducible factors of degree d.
    f must be squarefree monic."""
    out = []
    h = [0, 1]  # x
    rest = list(f)
    d = 0
    while len(rest) - 1 > 2 * d:
        d += 1
        h = powmod(h, p, rest, p)
        g = gcd(sub(h, [0, 1], p), rest, p)
        if len(g) > 1:
            out.append((g, d))
            rest = divmod_p(rest, g, p)[0]
            h = rem(h, rest, p)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def equal_degree(f, d, p, rng):
    """Split a squarefree monic f that is a product of degree-d irreducibles
    (Cantor-Zassenhaus, p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p ** d - 1) // 2
    while True:
        r = trim([rng.randrange(p) for _ in range(n)] + [1])
        g = gcd(r, f, p)
        if not (1 < len(g) < len(f)):
            h = powmod(r, e, f, p)
            g = gcd(sub(h, [1], p), f, p)
            if not (1 < len(g) < len(f)):
                continue
        other = divmod_p(f, g, p)[0]
        return equal_degree(g, d, p, rng) + equal_degree(other, d, p, rng)


def factor_squarefree(f, p, seed=0):
    """Irreducible monic factors of a squarefree monic f over GF(p)."""
    rng = random.Random(seed ^ (p * 1000003) ^ len(f))
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    out.sort()
    return out


def degree_pattern(f, p):
    """Multiset of irreducible factor degrees of squarefree monic f.
    Distinct-degree only; no equal-degree splitting needed."""
    pattern = []
    for g, d in distinct_degree(f, p):
        pattern.extend([d] * ((len(g) - 1) // d))
    return sorted(pattern)


def is_squarefree(f, p):
    return len(gcd(f, deriv(f, p), p)) == 1


_SMALL_PRIME_LIMIT = 10000
_sieve = None


def primes():
    """Iterate over odd primes below a fixed desk-scale limit."""
    global _sieve
    if _sieve is None:
        lim = _SMALL_PRIME_LIMIT
        mark = bytearray([1]) * lim
        mark[0:2] = b"\x00\x00"
        for i in range(2, int(lim ** 0.5) + 1):
            if mark[i]:
                mark[i * i:: i] = bytearray(len(mark[i * i:: i]))
        _sieve = [i for i in range(3, lim) if mark[i]]
    return iter(_sieve)

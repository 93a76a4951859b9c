"""Dense univariate polynomials over Q or a number field.

A UniPoly stores its coefficient field (`None` for Q, else a NumberField)
and a low-to-high tuple of coefficients (Fraction for Q, NFElement for a
number field).  The zero polynomial has an empty tuple; otherwise the leading
coefficient is nonzero.  Polynomials are immutable and hashable.

Besides ring arithmetic this module carries the machinery the rest of the
package leans on: monic gcd/xgcd, composition, Yun's squarefree
decomposition, resultants, Lagrange interpolation, and the branch-locus
computations (critical-value polynomial, simple branching, branch-locus
comparison).
"""

from fractions import Fraction

from .numberfield import FieldMismatch, NFElement


def _zero(field):
    return Fraction(0) if field is None else field.zero()


def _one(field):
    return Fraction(1) if field is None else field.one()


def _coerce_scalar(field, c):
    if field is None:
        if type(c) is Fraction:
            return c
        if isinstance(c, NFElement):
            if c.field.degree == 1 or c.is_rational():
                return c.rational_value()
            raise FieldMismatch("cannot coerce a proper field element into Q")
        return Fraction(c)
    if isinstance(c, NFElement):
        if c.field == field:
            return c
        if c.is_rational():
            return field.from_rational(c.rational_value())
        raise FieldMismatch("scalar from a different field")
    return field.from_rational(c)


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [_coerce_scalar(field, c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field=None):
        return cls(field, [])

    @classmethod
    def const(cls, c, field=None):
        return cls(field, [c])

    @classmethod
    def x(cls, field=None):
        return cls(field, [0, 1])

    @classmethod
    def from_roots(cls, roots, field=None):
        p = cls.const(1, field)
        x = cls.x(field)
        for r in roots:
            p = p * (x - cls.const(r, field))
        return p

    # -- basic queries --------------------------------------------------------

    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        if not self.coeffs:
            return _zero(self.field)
        return self.coeffs[-1]

    def constant_coeff(self):
        if not self.coeffs:
            return _zero(self.field)
        return self.coeffs[0]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _zero(self.field)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == _one(self.field)

    # -- ring structure --------------------------------------------------------

    def _check(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                # allow mixing Q-polys into K-polys
                if other.field is None:
                    return other.map_to_field(self.field)
                if self.field is None:
                    raise FieldMismatch("polynomials over different fields")
                raise FieldMismatch("polynomials over different fields")
            return other
        return UniPoly.const(other, self.field)

    def __add__(self, other):
        o = self._check(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly.zero(self.field)
        out = [_zero(self.field)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly.const(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = _coerce_scalar(self.field, c)
        return UniPoly(self.field, [a * c for a in self.coeffs])

    def shift(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly(self.field, [_zero(self.field)] * k + list(self.coeffs))

    def divmod(self, other):
        o = self._check(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree()
        q = [_zero(self.field)] * max(len(rem) - db, 0)
        if o.is_constant():
            inv = _one(self.field) / o.coeffs[0]
            return UniPoly(self.field, [c * inv for c in rem]), UniPoly.zero(self.field)
        inv = _one(self.field) / o.lc()
        while len(rem) - 1 >= db:
            if not rem[-1]:
                rem.pop()
                continue
            c = rem[-1] * inv
            k = len(rem) - 1 - db
            q[k] = c
            for i in range(db):
                rem[k + i] = rem[k + i] - c * o.coeffs[i]
            rem.pop()
        return UniPoly(self.field, q), UniPoly(self.field, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        from .parsing import format_poly
        return "UniPoly(%s)" % format_poly(self)

    # -- calculus and evaluation ------------------------------------------------

    def derivative(self):
        if len(self.coeffs) <= 1:
            return UniPoly.zero(self.field)
        out = [self.coeffs[i] * i for i in range(1, len(self.coeffs))]
        return UniPoly(self.field, out)

    def eval(self, v):
        """Evaluate at a scalar of the coefficient field (Horner)."""
        v = _coerce_scalar(self.field, v)
        acc = _zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner):
        """self(inner(X)); inner may be UniPoly or scalar."""
        if not isinstance(inner, UniPoly):
            return UniPoly.const(self.eval(inner), self.field)
        inner = self._check(inner)
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(c, self.field)
        return acc

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        inv = _one(self.field) / self.lc()
        return self.scale(inv)

    def map_coeffs(self, fn, field=None):
        return UniPoly(self.field if field is None else field,
                       [fn(c) for c in self.coeffs])

    def map_to_field(self, field):
        """Reinterpret a Q-polynomial over a number field."""
        if self.field == field:
            return self
        if self.field is not None:
            raise FieldMismatch("can only lift Q-polynomials into a field")
        return UniPoly(field, [field.from_rational(c) for c in self.coeffs])

    # -- Q-specific helpers -------------------------------------------------------

    def content_and_primitive(self):
        """Over Q: write self = content * primitive with primitive in Z[x],
        positive leading coefficient and coprime integer coefficients."""
        if self.field is not None:
            raise FieldMismatch("content/primitive is for Q-polynomials")
        if self.is_zero():
            return Fraction(0), self
        from math import gcd, lcm
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        prim = UniPoly(None, [Fraction(v // g) for v in ints])
        return Fraction(g, den), prim

    def int_coeffs(self):
        """Integer coefficient list of a Z[x] polynomial (raises otherwise)."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("polynomial is not integral")
            out.append(c.numerator)
        return out


# -- gcd machinery ------------------------------------------------------------


def poly_gcd(a, b):
    """Monic gcd over the coefficient field (remainders renormalized monic
    each step to keep coefficient growth subresultant-sized)."""
    if a.field is None and b.field is None and (a.degree() > 8 or b.degree() > 8):
        return _poly_gcd_q_int(a, b)
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()
    if a.is_zero():
        return a
    return a.monic()


def _poly_gcd_q_int(a, b):
    """Gcd of Q-polynomials through the primitive PRS over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    _, pa = a.content_and_primitive()
    _, pb = b.content_and_primitive()
    g = gcd_z(pa.int_coeffs(), pb.int_coeffs())
    return UniPoly(None, [Fraction(c) for c in g]).monic()


def gcd_z(a, b):
    """Primitive-PRS gcd of integer coefficient lists (primitive output,
    positive leading coefficient); fraction-free with content stripping."""
    from math import gcd as igcd

    def prim(v):
        g = 0
        for c in v:
            g = igcd(g, c)
        if g == 0:
            return list(v)
        if v[-1] < 0:
            g = -g
        return [c // g for c in v]

    def prem(u, v):
        # pseudo-remainder of u by v
        u = list(u)
        dv = len(v) - 1
        lc = v[-1]
        while len(u) - 1 >= dv and u:
            if u[-1] == 0:
                u.pop()
                continue
            top = u[-1]
            k = len(u) - 1 - dv
            u = [c * lc for c in u]
            for i in range(dv + 1):
                u[k + i] -= top * v[i]
            while u and u[-1] == 0:
                u.pop()
        return u

    a, b = prim(a), prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prim(prem(a, b))
        a, b = b, r
    return prim(a)


def poly_xgcd(a, b):
    """(g, s, t) with g monic, s*a + t*b = g."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1, field), UniPoly.zero(field)
    t0, t1 = UniPoly.zero(field), UniPoly.const(1, field)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = _one(field) / r0.lc()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_part(f):
    if f.degree() <= 0:
        return f.monic()
    g = poly_gcd(f, f.derivative())
    if g.degree() <= 0:
        return f.monic()
    return f.exact_div(g).monic()


def squarefree_decomposition(f):
    """Yun's algorithm: f = unit * prod a_i^i with the a_i squarefree,
    monic and pairwise coprime.  Returns (unit, [(a_i, i), ...]) skipping
    trivial a_i."""
    if f.is_zero():
        raise ZeroDivisionError("squarefree decomposition of zero")
    unit = f.lc()
    f = f.monic()
    parts = []
    if f.degree() == 0:
        return unit, parts
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    i = 1
    while b.degree() > 0:
        d = c - b.derivative()
        a_i = poly_gcd(b, d)
        if a_i.degree() > 0:
            parts.append((a_i, i))
        b = b.exact_div(a_i)
        if d.is_zero():
            break
        c = d.exact_div(a_i)
        i += 1
    return unit, parts


# -- resultants and interpolation ------------------------------------------------


def resultant(a, b):
    """Res(a, b) over the coefficient field.

    Small inputs run the straight Euclidean recursion; larger ones (where
    exact fraction growth bites) go through the modular CRT engine."""
    heavy = (a.degree() + b.degree() > 40 if a.field is None
             else a.degree() + b.degree() > 10)
    if heavy and not a.is_zero() and not b.is_zero():
        from .modres import resultant_crt
        return resultant_crt(a, b)
    return resultant_pure(a, b)


def resultant_pure(a, b):
    """Res(a, b) by the Euclidean recursion (reference implementation)."""
    field = a.field
    one = _one(field)
    m, n = a.degree(), b.degree()
    if m < 0 or n < 0:
        return _zero(field)
    sign = one
    res = one
    # keep deg(a) >= deg(b)
    if m < n:
        a, b, m, n = b, a, n, m
        if (m * n) % 2 == 1:
            sign = -sign
    while True:
        if n == 0:
            res = res * b.lc() ** m
            break
        r = a % b
        dr = r.degree()
        if dr < 0:
            return _zero(field)
        res = res * b.lc() ** (m - dr)
        if (m * n) % 2 == 1:
            sign = -sign
        a, b, m, n = b, r, n, dr
    return sign * res


def discriminant(f):
    n = f.degree()
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * (r / f.lc())


def interpolate(field, points, values):
    """Lagrange interpolation through (points[i], values[i]); scalars of `field`."""
    x = UniPoly.x(field)
    acc = UniPoly.zero(field)
    for i, (xi, yi) in enumerate(zip(points, values)):
        num = UniPoly.const(1, field)
        den = _one(field)
        xi = _coerce_scalar(field, xi)
        for j, xj in enumerate(points):
            if j == i:
                continue
            xj = _coerce_scalar(field, xj)
            num = num * (x - UniPoly.const(xj, field))
            den = den * (xi - xj)
        acc = acc + num.scale(_coerce_scalar(field, yi) / den)
    return acc


# -- branch loci -------------------------------------------------------------------


def critical_value_poly(f):
    """Res_X(f(X) - T, f'(X)) as a monic polynomial in T.

    Its roots are exactly the finite critical values of f.  Computed by
    evaluation at T = 0..deg(f)-1 and interpolation (f' has constant
    coefficients, so every specialization is a plain resultant over the
    field).
    """
    n = f.degree()
    if n < 2:
        raise ValueError("critical values need degree >= 2")
    df = f.derivative()
    pts, vals = [], []
    for t in range(n):
        ft = f - UniPoly.const(t, f.field)
        pts.append(t)
        vals.append(resultant(ft, df))
    cvp = interpolate(f.field, pts, vals)
    if cvp.is_zero():
        raise ValueError("degenerate critical-value polynomial")
    return cvp.monic()


def simply_branched(f):
    """True iff every finite branch point of f has a unique ramified
    preimage of ramification index 2: f' squarefree and all critical
    values distinct."""
    n = f.degree()
    if n < 2:
        raise ValueError("simple branching needs degree >= 2")
    df = f.derivative()
    if poly_gcd(df, df.derivative()).degree() > 0:
        return False
    cvp = critical_value_poly(f)
    return squarefree_part(cvp).degree() == n - 1


def branch_loci_equal(f, g):
    """True iff f and g have the same finite critical values (as sets)."""
    cf = squarefree_part(critical_value_poly(f))
    cg = squarefree_part(critical_value_poly(g))
    return cf == cg

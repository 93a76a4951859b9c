"""Exact arithmetic in simple number fields Q(alpha).

Rational scalars are `fractions.Fraction` throughout the package (arbitrary
precision, always reduced, positive denominator -- exactly the canonical form
we need).  A `NumberField` is Q[x]/(m(x)) for a monic irreducible m over Q;
its elements are coefficient vectors of length deg(m) in the power basis.
Degree-1 fields are allowed and behave as a wrapper around Q, so code can be
generic over "Q or Q(alpha)".

Fields are value objects: two fields with the same minimal polynomial are
interchangeable (and compare equal).
"""

from fractions import Fraction


class FieldMismatch(ValueError):
    pass


class Reducible(ValueError):
    """Raised when a would-be minimal polynomial factors over Q."""

    def __init__(self, factors):
        super().__init__("minimal polynomial is reducible over Q")
        self.factors = factors


class NotARoot(ValueError):
    pass


def parse_rational(text):
    """Parse a rational like '-4/9' into a Fraction."""
    return Fraction(text.strip().replace(" ", ""))


def format_rational(q):
    return str(Fraction(q))


class NumberField:
    """Q(alpha) given by a monic irreducible minimal polynomial over Q.

    `minpoly` is stored as a low-to-high tuple of Fractions, including the
    leading 1.  Irreducibility is checked at construction (via the univariate
    factorizer), unless the caller passes ``trusted=True``.
    """

    __slots__ = ("minpoly", "degree", "label", "_redrows", "_hash")

    def __init__(self, minpoly_coeffs, label="a", trusted=False):
        coeffs = tuple(Fraction(c) for c in minpoly_coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self.label = label
        self._redrows = None
        self._hash = hash(self.minpoly)
        if not trusted and self.degree > 1:
            self._check_irreducible()

    def _check_irreducible(self):
        from .factor_uni import factor_q
        from .unipoly import UniPoly

        m = UniPoly(None, self.minpoly)
        fl = factor_q(m)
        if len(fl.factors) != 1 or fl.factors[0][1] != 1:
            raise Reducible([p for p, _ in fl.factors])

    # -- construction of elements ------------------------------------------

    def element(self, coeffs):
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            _, vec = _polydiv(vec, list(self.minpoly))
        vec.extend([Fraction(0)] * (self.degree - len(vec)))
        return NFElement(self, tuple(vec[: self.degree]))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def from_rational(self, q):
        return self.element([Fraction(q)])

    def gen(self):
        if self.degree == 1:
            # alpha is the root of a degree-1 minpoly x + c, i.e. -c
            return self.element([-self.minpoly[0]])
        return self.element([0, 1])

    # -- internal reduction -------------------------------------------------

    def _reduction_rows(self):
        # row k = representation of x^(degree+k) mod minpoly, k = 0..degree-2
        if self._redrows is None:
            d = self.degree
            rows = []
            cur = [-c for c in self.minpoly[:d]]  # x^d
            rows.append(list(cur))
            for _ in range(d - 2):
                shifted = [Fraction(0)] + list(cur)  # multiply by x
                top = shifted[d]
                cur = shifted[:d]
                if top:
                    cur = [c + top * r for c, r in zip(cur, rows[0])]
                rows.append(list(cur))
            self._redrows = rows
        return self._redrows

    def _reduce(self, vec):
        d = self.degree
        if len(vec) <= d:
            return list(vec) + [Fraction(0)] * (d - len(vec))
        rows = self._reduction_rows()
        out = list(vec[:d])
        for k, c in enumerate(vec[d:]):
            if c:
                row = rows[k]
                for i in range(d):
                    out[i] += c * row[i]
        return out

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if other is None:
            return False
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly == other.minpoly

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "NumberField(%s, %r)" % (list(self.minpoly), self.label)


class NFElement:
    """An element of a NumberField, as a reduced power-basis vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational: %s" % (self,))
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = len(a)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return NFElement(self.field, tuple(self.field._reduce(prod)))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        # xgcd of self (as a poly in alpha) with the minimal polynomial
        m = list(self.field.minpoly)
        a = list(self.coeffs)
        while a and not a[-1]:
            a.pop()
        # invariants: s * self == r (mod minpoly)
        r0, s0 = m, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while len(r1) > 1:
            q, rem = _polydiv(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
            if not r1:
                raise ZeroDivisionError("element shares a factor with minpoly")
        c = r1[0]
        inv = [x / c for x in s1]
        return self.field.element(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "<%s>" % (format_nf_element(self),)


def format_nf_element(u, gen=None):
    """Render an NFElement like '3*a + 1/2'."""
    gen = gen or u.field.label
    terms = []
    for i in range(u.field.degree - 1, -1, -1):
        c = u.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(format_rational(c))
        else:
            var = gen if i == 1 else "%s^%d" % (gen, i)
            if c == 1:
                terms.append(var)
            elif c == -1:
                terms.append("-" + var)
            else:
                terms.append("%s*%s" % (format_rational(c), var))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# -- plain list-of-Fraction polynomial helpers used by inverse() -------------

def _polytrim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _polysub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
           for i in range(n)]
    return _polytrim(out)


def _polymul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _polytrim(out)


def _polydiv(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        if not a[-1]:
            a.pop()
            continue
        c = a[-1] * inv
        k = len(a) - len(b)
        q[k] = c
        for i in range(len(b)):
            a[k + i] -= c * b[i]
        a.pop()
    return _polytrim(q), _polytrim(a)


def nf_new(minpoly, label="a"):
    """Build a NumberField from a monic UniPoly over Q (or coefficient list).

    Degree-1 input yields a wrapper equivalent to Q.  Raises Reducible if the
    polynomial factors.
    """
    coeffs = getattr(minpoly, "coeffs", minpoly)
    return NumberField(coeffs, label=label)


class FieldAutomorphism:
    """Ring automorphism of a NumberField, given by the image of the generator."""

    __slots__ = ("field", "gen_image", "_powers")

    def __init__(self, field, gen_image):
        if gen_image.field != field:
            raise FieldMismatch("generator image lives in a different field")
        if not _satisfies_minpoly(field, gen_image):
            raise NotARoot("image does not satisfy the minimal polynomial")
        self.field = field
        self.gen_image = gen_image
        pws = [field.one()]
        for _ in range(field.degree - 1):
            pws.append(pws[-1] * gen_image)
        self._powers = pws

    def __call__(self, u):
        if isinstance(u, (int, Fraction)):
            return self.field.from_rational(u)
        if u.field != self.field:
            raise FieldMismatch("element of a different field")
        acc = self.field.zero()
        for c, p in zip(u.coeffs, self._powers):
            if c:
                acc = acc + p * c
        return acc

    def is_identity(self):
        return self.gen_image == self.field.gen()


def _satisfies_minpoly(field, u):
    acc = field.zero()
    for c in reversed(field.minpoly):
        acc = acc * u + field.from_rational(c)
    return acc.is_zero()


def nf_automorphism(field, gen_image):
    """The automorphism sending the field generator to `gen_image`."""
    return FieldAutomorphism(field, gen_image)

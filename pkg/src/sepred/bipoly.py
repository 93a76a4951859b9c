"""Bivariate polynomials F(X, Y) over Q or a number field.

Recursive dense representation: a BiPoly is a vector over the X-degree whose
entries are UniPoly values in Y.  The top X-coefficient is nonzero unless the
whole polynomial is zero.

Divisibility and gcd questions in (K[Y])[X] are handled fraction-free via
pseudo-division and content bookkeeping (K[X,Y] is a UFD, so Gauss's lemma
applies); exact division fails cleanly when the divisor does not divide.
"""

from fractions import Fraction

from .numberfield import FieldMismatch
from .unipoly import UniPoly, poly_gcd, resultant, interpolate, _zero, _one


class BiPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, xcoeffs):
        cs = []
        for c in xcoeffs:
            if isinstance(c, UniPoly):
                if c.field != field:
                    c = c.map_to_field(field)
                cs.append(c)
            else:
                cs.append(UniPoly.const(c, field))
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field=None):
        return cls(field, [])

    @classmethod
    def const(cls, c, field=None):
        return cls(field, [UniPoly.const(c, field)])

    @classmethod
    def x(cls, field=None):
        return cls(field, [UniPoly.zero(field), UniPoly.const(1, field)])

    @classmethod
    def y(cls, field=None):
        return cls(field, [UniPoly.x(field)])

    @classmethod
    def from_unipoly_x(cls, p):
        """Embed a univariate f(x) as f(X)."""
        return cls(p.field, [UniPoly.const(c, p.field) for c in p.coeffs])

    @classmethod
    def from_unipoly_y(cls, p):
        return cls(p.field, [p])

    # -- structure ---------------------------------------------------------------

    def deg_x(self):
        return len(self.coeffs) - 1

    def deg_y(self):
        return max((c.degree() for c in self.coeffs), default=-1)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return self.deg_x() <= 0 and self.deg_y() <= 0

    def coeff_x(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return UniPoly.zero(self.field)

    def lc_x(self):
        """Leading coefficient w.r.t. X, a UniPoly in Y."""
        return self.coeffs[-1] if self.coeffs else UniPoly.zero(self.field)

    def monomial_coeff(self, i, j):
        return self.coeff_x(i).coeff(j)

    # -- ring ops ------------------------------------------------------------------

    def _check(self, other):
        if isinstance(other, BiPoly):
            if other.field != self.field:
                if other.field is None:
                    return BiPoly(self.field, list(other.coeffs))
                raise FieldMismatch("bivariate polynomials over different fields")
            return other
        if isinstance(other, UniPoly):
            raise TypeError("ambiguous UniPoly operand; embed via from_unipoly_x/y")
        return BiPoly.const(other, self.field)

    def __add__(self, other):
        o = self._check(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return BiPoly.zero(self.field)
        zero = UniPoly.zero(self.field)
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return BiPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = BiPoly.const(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply by a scalar of the field."""
        return BiPoly(self.field, [p.scale(c) for p in self.coeffs])

    def mul_y(self, p):
        """Multiply by a UniPoly in Y."""
        return BiPoly(self.field, [c * p for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        from .parsing import format_bipoly
        return "BiPoly(%s)" % format_bipoly(self)

    # -- substitution ------------------------------------------------------------------

    def eval_y(self, y0):
        """Specialize Y -> y0 (scalar), giving a UniPoly in X."""
        return UniPoly(self.field, [c.eval(y0) for c in self.coeffs])

    def eval_x(self, x0):
        """Specialize X -> x0 (scalar), giving a UniPoly in Y."""
        acc = UniPoly.zero(self.field)
        pw = _one(self.field)
        for c in self.coeffs:
            acc = acc + c.scale(pw)
            pw = pw * x0
        return acc

    def shift_y(self, c):
        """Substitute Y -> Y + c."""
        shift = UniPoly(self.field, [c, 1])
        return BiPoly(self.field, [p.compose(shift) for p in self.coeffs])

    def swap_xy(self):
        """Return F(Y, X)."""
        dy = self.deg_y()
        rows = []
        for j in range(dy + 1):
            rows.append(UniPoly(self.field, [self.monomial_coeff(i, j)
                                             for i in range(self.deg_x() + 1)]))
        return BiPoly(self.field, rows)

    def subst_unipolys(self, px, py):
        """F(px(X), py(Y)) for univariate px (in X), py (in Y)."""
        PX = BiPoly.from_unipoly_x(px.map_to_field(self.field) if px.field != self.field else px)
        acc = BiPoly.zero(self.field)
        for i in reversed(range(self.deg_x() + 1)):
            row = self.coeff_x(i).compose(py)
            acc = acc * PX + BiPoly.from_unipoly_y(row)
        return acc

    def derivative_x(self):
        if len(self.coeffs) <= 1:
            return BiPoly.zero(self.field)
        return BiPoly(self.field, [self.coeffs[i].scale(i) for i in range(1, len(self.coeffs))])

    def map_coeffs(self, fn):
        """Apply fn to every scalar coefficient (e.g. a field automorphism)."""
        return BiPoly(self.field, [UniPoly(self.field, [fn(c) for c in p.coeffs])
                                   for p in self.coeffs])

    # -- content and divisibility ---------------------------------------------------------

    def content_x(self):
        """Monic gcd in K[Y] of all X-coefficients."""
        g = UniPoly.zero(self.field)
        for c in self.coeffs:
            g = poly_gcd(g, c)
            if g.degree() == 0:
                break
        return g

    def primitive_x(self):
        """(content, primitive part): self = content(Y) * primitive."""
        c = self.content_x()
        if c.is_zero():
            return c, self
        if c.degree() == 0 and c.coeff(0) == _one(self.field):
            return c, self
        return c, BiPoly(self.field, [p.exact_div(c) for p in self.coeffs])

    def pseudo_rem_x(self, other):
        """Pseudo-remainder of self by other w.r.t. X."""
        d = self.deg_x() - other.deg_x()
        if d < 0:
            return self
        lc = other.lc_x()
        rem = self
        for _ in range(d + 1):
            if rem.deg_x() < other.deg_x():
                rem = rem.mul_y(lc)
                continue
            k = rem.deg_x() - other.deg_x()
            top = rem.lc_x()
            rem = rem.mul_y(lc) - _shift_x(other, k).mul_y(top)
        return rem

    def exact_div_x(self, other):
        """Exact quotient self / other in K[X,Y], or None."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return self
        rem = self
        lc = other.lc_x()
        qcoeffs = {}
        while not rem.is_zero() and rem.deg_x() >= other.deg_x():
            q, r = rem.lc_x().divmod(lc)
            if not r.is_zero():
                return None
            k = rem.deg_x() - other.deg_x()
            qcoeffs[k] = q
            rem = rem - _shift_x(other, k).mul_y(q)
            if not rem.is_zero() and rem.deg_x() >= other.deg_x() + k:
                return None  # degree did not drop: not divisible
        if not rem.is_zero():
            return None
        deg = max(qcoeffs, default=-1)
        return BiPoly(self.field, [qcoeffs.get(i, UniPoly.zero(self.field))
                                   for i in range(deg + 1)])

    def divides(self, other):
        """True iff self divides other in K[X,Y]."""
        return divides_bi(self, other)


def _shift_x(F, k):
    if k == 0 or F.is_zero():
        return F
    zero = UniPoly.zero(F.field)
    return BiPoly(F.field, [zero] * k + list(F.coeffs))


def separated(f, g):
    """f(X) - g(Y) for univariate f, g over the same field."""
    if f.field != g.field:
        if f.field is None:
            f = f.map_to_field(g.field)
        elif g.field is None:
            g = g.map_to_field(f.field)
        else:
            raise FieldMismatch("separated polynomial needs one field")
    return BiPoly.from_unipoly_x(f) - BiPoly.from_unipoly_y(g)


def divides_bi(H, F):
    """Exact divisibility test H | F in K[X,Y] (fraction-free)."""
    if H.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if F.is_zero():
        return True
    if H.deg_x() > F.deg_x() or H.deg_y() > F.deg_y():
        return False
    if H.deg_x() == 0:
        ch, _ = H.primitive_x()
        cf, _ = F.primitive_x()
        # H is a polynomial in Y only
        return cf.divmod(H.coeff_x(0))[1].is_zero() if H.coeff_x(0).degree() >= 0 else False
    cf, Fp = F.primitive_x()
    ch, Hp = H.primitive_x()
    if not cf.divmod(ch)[1].is_zero():
        return False
    if Fp.deg_x() < Hp.deg_x():
        return False
    return Fp.pseudo_rem_x(Hp).is_zero()


def bi_gcd_x(F, G):
    """Gcd in K[X,Y] via a primitive PRS in (K[Y])[X] (canonicalized so the
    result is primitive in X with monic content convention)."""
    if F.is_zero():
        return G
    if G.is_zero():
        return F
    cf, Fp = F.primitive_x()
    cg, Gp = G.primitive_x()
    cont = poly_gcd(cf, cg)
    A, B = (Fp, Gp) if Fp.deg_x() >= Gp.deg_x() else (Gp, Fp)
    while not B.is_zero() and B.deg_x() > 0:
        R = A.pseudo_rem_x(B)
        if R.is_zero():
            A, B = B, R
            break
        _, R = R.primitive_x()
        A, B = B, R
    if not B.is_zero():
        # last nonzero has X-degree 0: gcd of primitives is 1 in X
        prim_gcd = BiPoly.const(1, F.field)
    else:
        _, prim_gcd = A.primitive_x()
    result = prim_gcd.mul_y(cont)
    # normalize: leading X-coefficient's leading Y-coefficient = 1
    lc = result.lc_x().lc()
    if lc and lc != _one(F.field):
        result = result.scale(_one(F.field) / lc)
    return result


def squarefree_decomposition_x(F):
    """Yun's algorithm w.r.t. X in K[X,Y]: F = content(Y) * prod B_i^i."""
    cont, P = F.primitive_x()
    parts = []
    if P.deg_x() == 0:
        return cont, parts
    dP = P.derivative_x()
    A = bi_gcd_x(P, dP)
    B = P.exact_div_x(A)
    C = dP.exact_div_x(A)
    i = 1
    while B.deg_x() > 0:
        D = C - B.derivative_x()
        Ai = bi_gcd_x(B, D)
        if Ai.deg_x() > 0:
            parts.append((Ai, i))
        B = B.exact_div_x(Ai)
        if D.is_zero():
            break
        C = D.exact_div_x(Ai)
        i += 1
    # B may retain a unit/content factor; fold it into the content record
    return cont, parts


def _is_one(F):
    return F.deg_x() == 0 and F.deg_y() == 0 and F.monomial_coeff(0, 0) == _one(F.field)


def disc_x(F):
    """Discriminant of F w.r.t. X, as a UniPoly in Y (by interpolation)."""
    n = F.deg_x()
    if n < 1:
        raise ValueError("disc_x needs X-degree >= 1")
    dF = F.derivative_x()
    # Res_X(F, F_X) has Y-degree <= degY(F)*(2n-1); interpolate pointwise
    bound = F.deg_y() * (2 * n - 1) + 1
    pts, vals = [], []
    y0 = 0
    while len(pts) < bound:
        fy = F.eval_y(Fraction(y0))
        dfy = dF.eval_y(Fraction(y0))
        if fy.degree() == n:
            r = resultant(fy, dfy) if dfy.degree() == dF.deg_x() else None
            if r is None:
                # degree dropped in F_X: compute via definition with padding
                r = _resultant_padded(fy, dfy, dF.deg_x(), F.field)
            pts.append(Fraction(y0))
            vals.append(r)
        y0 = -y0 if y0 > 0 else -y0 + 1
        if y0 > 10 * bound + 10:
            raise RuntimeError("could not find enough good interpolation points")
    res_poly = interpolate(F.field, pts, vals)
    lc = F.lc_x()
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    quo, rem = res_poly.divmod(lc)
    if rem.is_zero():
        return quo.scale(sign)
    return res_poly.scale(sign)


def _resultant_padded(a, b, target_deg_b, field):
    # Res treating b as having formal degree target_deg_b (top coeffs zero):
    # Res(a, b_padded) = lc(a)^(target - deg b) * Res(a, b)
    extra = target_deg_b - b.degree()
    if b.is_zero():
        return _zero(field)
    base = resultant(a, b)
    return base * a.lc() ** extra


def is_separated(F):
    """True iff F has the shape f(X) - g(Y)."""
    for i in range(1, F.deg_x() + 1):
        if F.coeff_x(i).degree() > 0:
            return False
    return F.deg_x() >= 1

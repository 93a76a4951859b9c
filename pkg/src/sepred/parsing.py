"""Text grammar for polynomials and field elements.

Grammar (case-sensitive identifiers):

    expr    := term (('+'|'-') term)*
    term    := factor (('*')? factor)*          juxtaposition not allowed; '*' optional only before '('
    factor  := base ('^' integer)?
    base    := rational | identifier | '(' expr ')'

Identifiers are variable names (one or two polynomial variables) or the
declared field-generator symbol.  Rationals are '3', '-4/9', '1/2'.
Examples: 'x^4 - 4*a*x^2 + 2*a^2', 'X^2 - X*Y + 1/2*Y^2 - 2'.

Internally an expression is parsed into a dict mapping (i, j, k) ->
Fraction, the exponents of (var1, var2, generator); conversion helpers then
build UniPoly / BiPoly / NFElement values over a declared field.
"""

import re
from fractions import Fraction

from .numberfield import NFElement
from .unipoly import UniPoly

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[()^*+-])")


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("bad token at %r" % text[pos:pos + 10])
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse_expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        acc = _scale(self.parse_term(), sign)
        while self.peek() in ("+", "-"):
            op = self.next()
            term = self.parse_term()
            acc = _add(acc, _scale(term, -1 if op == "-" else 1))
        return acc

    def parse_term(self):
        acc = self.parse_factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.next()
                acc = _mul(acc, self.parse_factor())
            elif tok is not None and (tok[0].isdigit() or tok[0].isalpha() or tok == "("):
                acc = _mul(acc, self.parse_factor())
            else:
                return acc

    def parse_factor(self):
        base = self.parse_base()
        if self.peek() == "^":
            self.next()
            tok = self.next()
            sign = 1
            if tok == "-":
                sign = -1
                tok = self.next()
            if tok is None or not tok.isdigit():
                raise ParseError("expected integer exponent")
            e = int(tok)
            if sign < 0:
                raise ParseError("negative exponents not supported")
            return _pow(base, e)
        return base

    def parse_base(self):
        tok = self.next()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ParseError("missing ')'")
            return inner
        if tok == "-":
            return _scale(self.parse_factor(), -1)
        if tok[0].isdigit():
            return {(): Fraction(tok)}
        if tok[0].isalpha():
            return {(tok,): Fraction(1)}
        raise ParseError("unexpected token %r" % tok)


# monomials are tuples of symbol names with repetition, kept sorted


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v}


def _scale(a, c):
    return {k: v * c for k, v in a.items()} if c != 1 else a


def _mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(sorted(ka + kb))
            out[k] = out.get(k, Fraction(0)) + va * vb
    return {k: v for k, v in out.items() if v}


def _pow(a, e):
    out = {(): Fraction(1)}
    for _ in range(e):
        out = _mul(out, a)
    return out


def parse_expression(text):
    """Parse into {sorted symbol tuple: Fraction}."""
    return _Parser(_tokenize(text)).parse_expr()


def _split_monomial(mono, var1, var2, gen):
    i = j = k = 0
    for s in mono:
        if s == var1:
            i += 1
        elif var2 is not None and s == var2:
            j += 1
        elif gen is not None and s == gen:
            k += 1
        else:
            raise ParseError("unknown symbol %r (vars %r, %r; generator %r)"
                             % (s, var1, var2, gen))
    return i, j, k


def parse_unipoly(text, var="x", field=None, gen=None):
    """Parse a univariate polynomial over Q or over `field` (generator `gen`)."""
    gen = gen or (field.label if field is not None else None)
    expr = parse_expression(text)
    coeffs = {}
    for mono, c in expr.items():
        i, _, k = _split_monomial(mono, var, None, gen)
        if k and field is None:
            raise ParseError("generator symbol used without a field")
        coeffs.setdefault(i, []).append((k, c))
    deg = max(coeffs) if coeffs else -1
    out = []
    for i in range(deg + 1):
        terms = coeffs.get(i, [])
        if field is None:
            out.append(sum((c for _, c in terms), Fraction(0)))
        else:
            el = field.zero()
            for k, c in terms:
                el = el + field.element([0] * k + [c])
            out.append(el)
    return UniPoly(field, out)


def parse_bipoly(text, var1="X", var2="Y", field=None, gen=None):
    """Parse a bivariate polynomial; coefficients over Q or `field`."""
    from .bipoly import BiPoly
    gen = gen or (field.label if field is not None else None)
    expr = parse_expression(text)
    rows = {}
    for mono, c in expr.items():
        i, j, k = _split_monomial(mono, var1, var2, gen)
        if k and field is None:
            raise ParseError("generator symbol used without a field")
        rows.setdefault(i, {}).setdefault(j, []).append((k, c))
    degx = max(rows) if rows else -1
    xcoeffs = []
    for i in range(degx + 1):
        col = rows.get(i, {})
        degy = max(col) if col else -1
        ycoeffs = []
        for j in range(degy + 1):
            terms = col.get(j, [])
            if field is None:
                ycoeffs.append(sum((c for _, c in terms), Fraction(0)))
            else:
                el = field.zero()
                for k, c in terms:
                    el = el + field.element([0] * k + [c])
                ycoeffs.append(el)
        xcoeffs.append(UniPoly(field, ycoeffs))
    return BiPoly(field, xcoeffs)


def parse_nf_element(text, field, gen=None):
    """Parse a field element like '3*a + 1/2'."""
    p = parse_unipoly(text, var=gen or field.label, field=None, gen=None)
    return field.element(list(p.coeffs))


# -- printing ---------------------------------------------------------------


def format_scalar(c, gen=None):
    if isinstance(c, NFElement):
        from .numberfield import format_nf_element
        body = format_nf_element(c, gen)
        return body if c.is_rational() else "(%s)" % body
    return str(c)


def _format_terms(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _one_term(cstr, var, i):
    if i == 0:
        return cstr
    v = var if i == 1 else "%s^%d" % (var, i)
    if cstr == "1":
        return v
    if cstr == "-1":
        return "-" + v
    return "%s*%s" % (cstr, v)


def format_poly(p, var="x", gen=None):
    """Render a UniPoly, high degree first."""
    terms = []
    for i in range(p.degree(), -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        terms.append(_one_term(format_scalar(c, gen), var, i))
    return _format_terms(terms)


def format_bipoly(F, var1="X", var2="Y", gen=None):
    terms = []
    for i in range(F.deg_x(), -1, -1):
        row = F.coeff_x(i)
        for j in range(row.degree(), -1, -1):
            c = row.coeff(j)
            if not c:
                continue
            cstr = format_scalar(c, gen)
            if i == 0:
                terms.append(_one_term(cstr, var2, j))
            elif j == 0:
                terms.append(_one_term(cstr, var1, i))
            else:
                lead = _one_term(cstr, var1, i)
                terms.append("%s*%s" % (lead, var2 if j == 1 else "%s^%d" % (var2, j)))
    return _format_terms(terms)

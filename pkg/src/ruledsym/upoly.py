"""Dense univariate polynomials over an exact field.

Coefficients are ``fractions.Fraction`` in the common case, but any exact
field element with Python arithmetic (notably ``algnum.AlgebraicNumber``)
works for the ring operations; the root-finding helpers (Sturm sequences,
factorisation) require rational coefficients.

Coefficients are stored dense and ascending: ``UniPoly([1, 0, 2])`` is
``1 + 2*t^2``.  The zero polynomial has an empty coefficient tuple and
degree -1.
"""

from fractions import Fraction
from math import gcd as _int_gcd


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def frac_gcd(a, b):
    """gcd of two non-negative rationals: gcd of numerators / lcm of denominators."""
    a, b = abs(Fraction(a)), abs(Fraction(b))
    if a == 0:
        return b
    if b == 0:
        return a
    num = _int_gcd(a.numerator, b.numerator)
    den = (a.denominator * b.denominator) // _int_gcd(a.denominator, b.denominator)
    return Fraction(num, den)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    # ---- constructors ----

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    # ---- basic queries ----

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def const_value(self):
        assert self.is_constant()
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def lead(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # ---- arithmetic ----

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(out)
        # scalar
        return UniPoly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        assert isinstance(k, int) and k >= 0
        out = UniPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        return UniPoly([a * c for a in self.coeffs])

    def divmod(self, other):
        """Exact field division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree() < other.degree():
            return UniPoly(), self
        rem = list(self.coeffs)
        dq = self.degree() - other.degree()
        quot = [Fraction(0)] * (dq + 1)
        lead_inv = 1 / other.lead()
        oc = other.coeffs
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] * lead_inv
            quot[k] = c
            if c != 0:
                for j, b in enumerate(oc):
                    rem[k + j] = rem[k + j] - c * b
        return UniPoly(quot), UniPoly(rem[: other.degree()])

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        assert r.is_zero(), "inexact polynomial division"
        return q

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        inv = 1 / self.lead()
        return UniPoly([c * inv for c in self.coeffs])

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    # ---- evaluation / composition ----

    def __call__(self, x):
        """Horner evaluation; x may be a Fraction, AlgebraicNumber or UniPoly."""
        if not self.coeffs:
            return Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        acc = self.coeffs[-1]
        if isinstance(x, UniPoly):
            acc = UniPoly([acc])
            for c in reversed(self.coeffs[:-1]):
                acc = acc * x + UniPoly([c])
            return acc
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def reversed_coeffs(self, degree=None):
        """x^d * p(1/x) for d = degree (defaults to deg p)."""
        d = self.degree() if degree is None else degree
        assert d >= self.degree()
        out = [Fraction(0)] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return UniPoly(out)

    # ---- content / gcd ----

    def content(self):
        """Non-negative rational content (Fraction coefficients only)."""
        c = Fraction(0)
        for a in self.coeffs:
            c = frac_gcd(c, a)
        return c

    def primitive(self):
        c = self.content()
        if c == 0:
            return self, Fraction(0)
        return self.scale(1 / c), c

    def gcd(self, other):
        """Monic gcd by the Euclidean algorithm (field coefficients)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # ---- square-free structure (rational coefficients) ----

    def squarefree_part(self):
        if self.is_zero():
            return self
        g = self.gcd(self.derivative())
        if g.degree() <= 0:
            return self.monic()
        return (self // g).monic()

    def squarefree_decomposition(self):
        """Yun's algorithm.

        Returns a list of (factor, multiplicity) with monic square-free,
        pairwise-coprime factors such that the product of factor^multiplicity
        equals the monic part of self.  Degree-zero factors are dropped.
        """
        assert not self.is_zero()
        p = self.monic()
        if p.degree() == 0:
            return []
        d = p.derivative()
        g = p.gcd(d)
        if g.degree() == 0:
            return [(p, 1)]
        out = []
        w = p // g
        y = d // g
        z = y - w.derivative()
        i = 1
        while w.degree() > 0:
            f = w.gcd(z)
            if f.degree() > 0:
                out.append((f, i))
            w = w // f
            y = z // f
            z = y - w.derivative()
            i += 1
        return out

    # ---- Sturm machinery (rational coefficients) ----

    def sturm_sequence(self):
        seq = [self, self.derivative()]
        while not seq[-1].is_zero():
            seq.append(-(seq[-2] % seq[-1]))
        seq.pop()
        return seq

    def cauchy_bound(self):
        """All real roots lie strictly inside (-B, B)."""
        assert not self.is_zero()
        lead = abs(self.lead())
        m = max((abs(c) for c in self.coeffs[:-1]), default=Fraction(0))
        return 1 + m / lead

    def count_roots(self, a, b, _seq=None):
        """Number of distinct real roots in (a, b]; self must be square-free."""
        seq = _seq if _seq is not None else self.sturm_sequence()

        def changes(x):
            signs = []
            for q in seq:
                v = q(x)
                if v != 0:
                    signs.append(1 if v > 0 else -1)
            return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])

        return changes(a) - changes(b)

    # ---- rendering ----

    def render(self, var="t"):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                pw = var if i == 1 else "%s^%d" % (var, i)
                body = pw if mag == 1 else "%s*%s" % (mag, pw)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "UniPoly(%s)" % self.render()


# ---- sympy-backed factorisation over Q (cached) ----

_factor_cache = {}


def factor_rational(p):
    """Factor a rational-coefficient polynomial over Q.

    Returns (leading_unit, [(monic irreducible UniPoly, multiplicity), ...])
    with leading_unit a Fraction so that the product reconstructs p.
    """
    assert isinstance(p, UniPoly) and not p.is_zero()
    key = p.coeffs
    hit = _factor_cache.get(key)
    if hit is not None:
        return hit
    if p.degree() == 0:
        result = (p.coeffs[0], [])
        _factor_cache[key] = result
        return result
    from sympy import Poly, Rational, Symbol

    tsym = Symbol("t")
    sp = Poly([Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)],
              tsym, domain="QQ")
    _, factors = sp.factor_list()
    out = []
    unit = p.lead()
    for f, mult in factors:
        coeffs = [Fraction(c.p, c.q) for c in reversed(f.all_coeffs())]
        fp = UniPoly(coeffs).monic()
        out.append((fp, int(mult)))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].coeffs))
    result = (unit, out)
    _factor_cache[key] = result
    return result


def poly_gcd(a, b):
    """Monic gcd of two rational polynomials; gcd(0, p) is monic p."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return a.gcd(b)


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return UniPoly()
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()

"""Sparse multivariate polynomials and the elimination toolbox.

Terms map exponent tuples to exact coefficients (Fraction in all solver
paths).  Every polynomial carries a fixed tuple of variable names; mixing
polynomials from different variable spaces is an error, which keeps
exponent tuples unambiguous.

The elimination toolbox provides pseudo-remainders, fraction-free
subresultant chains (whose members lie in the ideal generated by the two
inputs -- the property projection-based solving relies on), an exact
Sylvester resultant via Bareiss elimination, and a recursive primitive-PRS
gcd used for square-free reduction.
"""

from fractions import Fraction

from .errors import ZeroInput
from .upoly import UniPoly, frac_gcd


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        object.__setattr__(self, "vars", tuple(vars))
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _coerce(c)
                if c == 0:
                    continue
                assert len(exp) == len(self.vars)
                clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # ---- constructors ----

    @classmethod
    def const(cls, vars, c):
        z = tuple([0] * len(vars))
        return cls(vars, {z: c})

    @classmethod
    def var(cls, vars, name, power=1):
        i = tuple(vars).index(name)
        exp = [0] * len(vars)
        exp[i] = power
        return cls(vars, {tuple(exp): Fraction(1)})

    @classmethod
    def from_unipoly(cls, vars, name, p):
        i = tuple(vars).index(name)
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c == 0:
                continue
            exp = [0] * len(vars)
            exp[i] = k
            terms[tuple(exp)] = c
        return cls(vars, terms)

    # ---- queries ----

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def const_value(self):
        assert self.is_constant()
        z = tuple([0] * len(self.vars))
        return self.terms.get(z, Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def used_vars(self):
        out = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    out.add(self.vars[i])
        return out

    def num_terms(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.vars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ---- arithmetic ----

    def _check(self, other):
        assert self.vars == other.vars, "mixed variable spaces"

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            out[e] = c if v is None else v + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
            if other == 0:
                return MultiPoly(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                p = c1 * c2
                out[e] = p if v is None else v + p
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        assert isinstance(k, int) and k >= 0
        out = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # ---- evaluation / substitution ----

    def eval(self, values):
        """Full evaluation; values maps every used variable to a number."""
        total = Fraction(0)
        cache = [{} for _ in self.vars]

        def power(i, e):
            if e == 0:
                return 1
            hit = cache[i].get(e)
            if hit is None:
                hit = values[self.vars[i]] ** e
                cache[i][e] = hit
            return hit

        for exp, c in self.terms.items():
            term = c
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def substitute_values(self, values):
        """Partial evaluation; returns a polynomial in the same variable space."""
        out = {}
        idx = {self.vars.index(n): v for n, v in values.items()}
        for exp, c in self.terms.items():
            coeff = c
            new = list(exp)
            for i, v in idx.items():
                if exp[i]:
                    coeff = coeff * v ** exp[i]
                    new[i] = 0
            key = tuple(new)
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
        return MultiPoly(self.vars, out)

    def substitute_poly(self, name, poly):
        """Replace a variable by a polynomial from the same space."""
        self._check(poly)
        i = self.vars.index(name)
        powers = {0: MultiPoly.const(self.vars, 1)}

        def power(e):
            if e not in powers:
                powers[e] = power(e - 1) * poly
            return powers[e]

        total = MultiPoly(self.vars)
        for exp, c in self.terms.items():
            rest = list(exp)
            e = rest[i]
            rest[i] = 0
            term = MultiPoly(self.vars, {tuple(rest): c})
            if e:
                term = term * power(e)
            total = total + term
        return total

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e == 0:
                continue
            new = list(exp)
            new[i] = e - 1
            key = tuple(new)
            prev = out.get(key)
            add = c * e
            out[key] = add if prev is None else prev + add
        return MultiPoly(self.vars, out)

    # ---- univariate views ----

    def as_univar(self, name):
        """Coefficient list (ascending) in one variable; entries share self.vars."""
        i = self.vars.index(name)
        d = self.degree_in(name)
        buckets = [dict() for _ in range(d + 1)]
        for exp, c in self.terms.items():
            e = exp[i]
            new = list(exp)
            new[i] = 0
            buckets[e][tuple(new)] = c
        return [MultiPoly(self.vars, b) for b in buckets]

    @classmethod
    def from_univar(cls, coeffs, name):
        if not coeffs:
            raise ZeroInput("empty coefficient list")
        vars = coeffs[0].vars
        i = vars.index(name)
        terms = {}
        for k, cp in enumerate(coeffs):
            for exp, c in cp.terms.items():
                assert exp[i] == 0
                new = list(exp)
                new[i] = k
                terms[tuple(new)] = c
        return cls(vars, terms)

    def to_unipoly(self, name):
        """Conversion when no other variable occurs."""
        used = self.used_vars()
        assert used <= {name}, "polynomial involves %s" % (used - {name})
        if self.is_zero():
            return UniPoly()
        i = self.vars.index(name)
        d = self.degree_in(name)
        coeffs = [Fraction(0)] * (d + 1)
        for exp, c in self.terms.items():
            coeffs[exp[i]] = c
        return UniPoly(coeffs)

    # ---- content and normalisation (rational coefficients) ----

    def rational_content(self):
        c = Fraction(0)
        for v in self.terms.values():
            if not isinstance(v, Fraction):
                return Fraction(1)
            c = frac_gcd(c, v)
        return c if c != 0 else Fraction(1)

    def normalized(self):
        """Divide by rational content, make the lex-leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.rational_content()
        lead = self.terms[max(self.terms)]
        if isinstance(lead, Fraction) and lead < 0:
            c = -c
        inv = 1 / c
        return MultiPoly(self.vars, {e: v * inv for e, v in self.terms.items()})

    # ---- rendering ----

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = []
            for name, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            body = "*".join(factors)
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = "%s*%s" % (mag, body)
            parts.append(("-" if neg else "+", text))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for sg, b in parts[1:]:
            out += " %s %s" % (sg, b)
        return out

    def __repr__(self):
        return "MultiPoly(%s)" % self.render()


# ---- division, pseudo-division ----

def exact_div(f, g):
    """Exact multivariate division; raises if g does not divide f."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    if g.is_constant():
        inv = 1 / g.const_value()
        return f * inv
    quot = {}
    rem = dict(f.terms)
    g_lead = max(g.terms)
    g_lc = g.terms[g_lead]
    g_items = list(g.terms.items())
    while rem:
        f_lead = max(rem)
        diff = tuple(a - b for a, b in zip(f_lead, g_lead))
        if any(d < 0 for d in diff):
            raise ValueError("inexact multivariate division")
        c = rem[f_lead] / g_lc
        prev = quot.get(diff)
        quot[diff] = c if prev is None else prev + c
        for ge, gc in g_items:
            key = tuple(a + b for a, b in zip(diff, ge))
            v = rem.get(key, Fraction(0)) - c * gc
            if v == 0:
                rem.pop(key, None)
            else:
                rem[key] = v
    return MultiPoly(f.vars, quot)


def divides(g, f):
    try:
        exact_div(f, g)
        return True
    except ValueError:
        return False


def project(p, new_vars):
    """Re-express a polynomial on another variable tuple.

    Every variable actually used by p must appear in new_vars; variables
    may otherwise be dropped, added, or reordered.
    """
    new_vars = tuple(new_vars)
    lookup = [new_vars.index(v) if v in new_vars else None for v in p.vars]
    terms = {}
    for exp, c in p.terms.items():
        new = [0] * len(new_vars)
        for i, e in enumerate(exp):
            if e:
                j = lookup[i]
                assert j is not None, "variable %r still in use" % (p.vars[i],)
                new[j] = e
        terms[tuple(new)] = c
    return MultiPoly(new_vars, terms)


def prem(f, g, name):
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f modulo g, in one variable."""
    f._check(g)
    df, dg = f.degree_in(name), g.degree_in(name)
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by zero in %s" % name)
    if df < dg:
        return f
    i = f.vars.index(name)
    gc = g.as_univar(name)
    lg = gc[-1]
    r = f.as_univar(name)
    e = df - dg + 1
    while len(r) - 1 >= dg and any(not c.is_zero() for c in r):
        while r and r[-1].is_zero():
            r.pop()
        if len(r) - 1 < dg:
            break
        lr = r[-1]
        dr = len(r) - 1
        # r <- lg * r - lr * x^(dr-dg) * g
        new = [lg * c for c in r[:-1]]
        shift = dr - dg
        for k in range(dg):
            new[shift + k] = new[shift + k] - lr * gc[k]
        r = new
        e -= 1
    while r and r[-1].is_zero():
        r.pop()
    rem = MultiPoly(f.vars) if not r else MultiPoly.from_univar(r, name)
    if e > 0:
        rem = rem * lg ** e
    return rem


# ---- subresultant chain (fraction-free) ----

def subresultant_chain(f, g, name):
    """Fraction-free polynomial remainder sequence in one variable.

    Every chain member is a polynomial combination of f and g, so it
    vanishes on their common zero set; the last member ends the chain
    either with degree zero in the eliminated variable (projection case)
    or just before a vanishing pseudo-remainder (common-factor case).
    """
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ZeroInput("zero polynomial in subresultant chain")
    if f.degree_in(name) < g.degree_in(name):
        f, g = g, f
    chain = [f, g]
    one = MultiPoly.const(f.vars, 1)
    gg, h = one, one
    a, b = f, g
    while True:
        db = b.degree_in(name)
        if db <= 0:
            break
        d = a.degree_in(name) - db
        r = prem(a, b, name)
        if r.is_zero():
            break
        divisor = gg * h ** d
        r = exact_div(r, divisor)
        chain.append(r)
        a, b = b, r
        gg = a.as_univar(name)[-1]
        if d == 0:
            pass
        elif d == 1:
            h = gg
        else:
            h = exact_div(gg ** d, h ** (d - 1))
    return chain


def eliminate_pair(f, g, name):
    """Last subresultant free of `name`, or None when f and g share a factor
    involving `name` (so no projection polynomial exists for this pair)."""
    chain = subresultant_chain(f, g, name)
    last = chain[-1]
    if last.degree_in(name) == 0:
        return last.normalized()
    return None


# ---- Sylvester resultant (Bareiss fraction-free determinant) ----

def resultant(f, g, name):
    """Exact Sylvester resultant of f and g with respect to one variable."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ZeroInput("resultant of a zero polynomial")
    m, n = f.degree_in(name), g.degree_in(name)
    if m == 0 and n == 0:
        return MultiPoly.const(f.vars, 1)
    fc = f.as_univar(name)
    gc = g.as_univar(name)
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    zero = MultiPoly(f.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return _bareiss_det(rows, f.vars)


def _bareiss_det(rows, vars):
    n = len(rows)
    one = MultiPoly.const(vars, 1)
    prev = one
    sign = 1
    m = [row[:] for row in rows]
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly(vars)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = MultiPoly(vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


# ---- gcd and square-free reduction ----

def mp_gcd(f, g):
    """Recursive primitive-PRS gcd, normalised (positive rational content 1)."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    used = f.used_vars() | g.used_vars()
    if not used:
        return MultiPoly.const(f.vars, 1)
    name = sorted(used)[0]

    def content_and_primitive(p):
        coeffs = [c for c in p.as_univar(name) if not c.is_zero()]
        cont = coeffs[0]
        for c in coeffs[1:]:
            cont = mp_gcd(cont, c)
            if cont.is_constant():
                break
        cont = cont.normalized()
        return cont, exact_div(p, cont)

    if f.degree_in(name) == 0:
        cont_g, _ = content_and_primitive(g)
        return mp_gcd(f, cont_g)
    if g.degree_in(name) == 0:
        cont_f, _ = content_and_primitive(f)
        return mp_gcd(cont_f, g)

    cf, pf = content_and_primitive(f)
    cg, pg = content_and_primitive(g)
    cont = mp_gcd(cf, cg)
    a, b = (pf, pg) if pf.degree_in(name) >= pg.degree_in(name) else (pg, pf)
    while True:
        r = prem(a, b, name)
        if r.is_zero():
            break
        if r.degree_in(name) == 0:
            b = MultiPoly.const(f.vars, 1)
            break
        _, r = content_and_primitive(r)
        a, b = b, r
    _, b = content_and_primitive(b)
    return (cont * b).normalized()


def squarefree_part(f):
    """Largest square-free divisor with the same zero set."""
    if f.is_zero() or f.is_constant():
        return f.normalized()
    g = f
    for name in sorted(f.used_vars()):
        d = f.derivative(name)
        if d.is_zero():
            continue
        g = mp_gcd(g, d)
        if g.is_constant():
            return f.normalized()
    return exact_div(f, g).normalized()

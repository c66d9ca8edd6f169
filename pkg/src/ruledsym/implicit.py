"""Rotations and reflections of implicit algebraic surfaces.

For an irreducible surface F = 0 of total degree N, every symmetry
x -> Qx + b forces Qx to be a symmetry of the cone cut out by the sum of
the degree-N monomials of F.  That cone passes through the origin, so its
symmetries can be computed with the ruled-surface machinery once a conical
parametrization s*r(t) is found by slicing with a coordinate plane.  Each
orthogonal part Q harvested from the cone is then lifted back to the full
surface by matching the coefficients of F(Qx + b) against a scalar multiple
of F, which yields every admissible translation exactly.

The cone always admits the central inversion, so -I is among the lifted
candidates; central symmetries of F = 0 found this way are reported with a
note, since the cone argument alone does not guarantee completeness for
them the way it does for rotations and reflections.
"""

from fractions import Fraction

from .algnum import Alg, ensure_alg
from .errors import (
    HeuristicFailure,
    PositiveDimensional,
    PreconditionViolation,
    ZeroInput,
)
from .mpoly import MultiPoly, mp_gcd, project
from .ratfunc import RatFunc
from .surface import RuledSurface
from .solver import solve_zero_dim

_XYZ = ("x", "y", "z")


class ImplicitSurface:
    """A trivariate polynomial with its total degree."""

    __slots__ = ("F", "N")

    def __init__(self, F):
        if F.is_zero():
            raise ZeroInput("the defining polynomial is identically zero")
        if tuple(F.vars) != _XYZ:
            F = project(F, _XYZ)
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "N", F.total_degree())

    def __setattr__(self, *a):
        raise AttributeError("ImplicitSurface is immutable")

    def __repr__(self):
        return "ImplicitSurface(%s)" % self.F.render()


def highest_form(surface):
    """The homogeneous part of top total degree."""
    F = surface.F
    terms = {e: c for e, c in F.terms.items() if sum(e) == surface.N}
    return MultiPoly(F.vars, terms)


def sanity_check(surface):
    """Cheap necessary conditions for irreducibility; raises when violated.

    Full multivariate factorization is out of scope, so irreducibility is
    caller-asserted; a repeated factor, however, is detectable from the
    gcd with the partial derivatives and refutes the assertion outright.
    """
    F = surface.F
    g = F
    for v in _XYZ:
        d = F.derivative(v)
        if not d.is_zero():
            g = mp_gcd(g, d)
    if g.total_degree() > 0:
        raise PreconditionViolation(
            "the polynomial has a repeated factor, so it is not irreducible",
            factor=g.render())


_SECTION_VALUES = (Fraction(1), Fraction(2), Fraction(-1),
                   Fraction(3), Fraction(-2))


def parametrize_highest_form(form, plane=None):
    """A conical parametrization s*r(t) of the cone form = 0, or None.

    Slices the cone with a coordinate plane {v = value}; when the section
    polynomial is linear in one of the two remaining variables, solving
    for it gives a rational section curve whose cone through the origin is
    the surface.  ``plane`` forces a particular (variable, value) slice;
    otherwise coordinate variables and small rational values are tried in
    a fixed order.  Returns None when no tried section is linearly
    solvable -- general curve parametrization is out of scope.
    """
    if form.is_zero():
        raise ZeroInput("the highest-order form is identically zero")
    if plane is not None:
        attempts = [(plane[0], Fraction(plane[1]))]
    else:
        attempts = [(v, c) for v in _XYZ for c in _SECTION_VALUES]
    for var, value in attempts:
        section = form.substitute_values({var: value})
        if section.is_zero() or section.is_constant():
            continue
        rest = [w for w in _XYZ if w != var]
        for solve_var in rest:
            if section.degree_in(solve_var) != 1:
                continue
            other = rest[0] if rest[1] == solve_var else rest[1]
            coeffs = section.as_univar(solve_var)
            lead, const = coeffs[1], coeffs[0]
            if lead.is_zero():
                continue
            a = project(lead, (other,)).to_unipoly(other)
            bpoly = project(const, (other,)).to_unipoly(other)
            solved = RatFunc(-bpoly, a)
            components = {var: RatFunc.const(value),
                          solve_var: solved,
                          other: RatFunc.x()}
            direction = tuple(components[w] for w in _XYZ)
            try:
                cone = RuledSurface((0, 0, 0), direction)
            except ZeroInput:
                continue
            if cone.is_cylindrical():
                continue
            return cone
    return None


def compose_coordinates(F, images):
    """F with every coordinate variable replaced simultaneously.

    ``images`` maps variable names of F to polynomials in F's space; names
    not listed stay untouched.
    """
    total = MultiPoly(F.vars)
    cache = {}

    def power(name, e):
        key = (name, e)
        if key not in cache:
            img = images[name]
            cache[key] = img if e == 1 else power(name, e - 1) * img
        return cache[key]

    for exp, c in F.terms.items():
        term = MultiPoly.const(F.vars, c)
        for i, e in enumerate(exp):
            if not e:
                continue
            name = F.vars[i]
            term = term * (power(name, e) if name in images
                           else MultiPoly.var(F.vars, name, e))
        total = total + term
    return total


def _matrix_field(q):
    """Split Q into rational data, optionally over one quadratic radical.

    Returns ("rational", rows) when every entry is rational, with rows of
    Fractions; otherwise ("quadratic", rows, theta, d) where each entry is
    r0 + r1*theta with theta^2 = d rational, and rows hold (r0, r1) pairs.
    """
    flat = [q[i][j] for i in range(3) for j in range(3)]
    rats = []
    theta = None
    for e in flat:
        r = e.rat if isinstance(e, Alg) else Fraction(e)
        if r is None and theta is None:
            theta = e
        rats.append(r)
    if theta is None:
        rows = [[rats[3 * i + j] for j in range(3)] for i in range(3)]
        return ("rational", rows)
    square = theta * theta
    d = square.rat if isinstance(square, Alg) else Fraction(square)
    if d is None:
        raise HeuristicFailure(
            "matrix entries lie outside a single quadratic extension")
    pairs = []
    for e, r in zip(flat, rats):
        if r is not None:
            pairs.append((r, Fraction(0)))
            continue
        ratio = ensure_alg(e) / theta
        if ratio.rat is not None:
            pairs.append((Fraction(0), ratio.rat))
            continue
        raise HeuristicFailure(
            "matrix entries lie outside a single quadratic extension")
    rows = [[pairs[3 * i + j] for j in range(3)] for i in range(3)]
    return ("quadratic", rows, theta, d)


def lift_symmetry(surface, q):
    """All translations b with F(Qx + b) = lambda*F(x), as (b, lambda) pairs.

    The identity is matched coefficient by coefficient with b and lambda
    indeterminate, and the resulting zero-dimensional system is solved
    exactly; an empty list means Q does not extend to a symmetry of the
    full surface.
    """
    field = _matrix_field(q)
    unknowns = ("b1", "b2", "b3", "lam")
    extension = () if field[0] == "rational" else ("theta",)
    vars = _XYZ + unknowns + extension
    const = lambda c: MultiPoly.const(vars, c)
    if field[0] == "rational":
        entries = [[const(field[1][i][j]) for j in range(3)] for i in range(3)]
        extra_eqs = []
    else:
        th = MultiPoly.var(vars, "theta")
        entries = [[const(field[1][i][j][0]) + const(field[1][i][j][1]) * th
                    for j in range(3)] for i in range(3)]
        extra_eqs = [th * th - const(field[3])]
    coords = [MultiPoly.var(vars, w) for w in _XYZ]
    images = {}
    for i, w in enumerate(_XYZ):
        img = MultiPoly.var(vars, ("b1", "b2", "b3")[i])
        for j in range(3):
            img = img + entries[i][j] * coords[j]
        images[w] = img
    big = project(surface.F, vars)
    moved = compose_coordinates(big, images)
    lam = MultiPoly.var(vars, "lam")
    residual = moved - lam * big
    reduced_vars = unknowns + extension
    equations = [project(e, reduced_vars) for e in extra_eqs]
    for coeff in _coefficients_in(residual, _XYZ):
        if not coeff.is_zero():
            equations.append(project(coeff, reduced_vars))
    points = solve_zero_dim(equations, reduced_vars)
    out = []
    for point in points:
        if field[0] == "quadratic":
            if ensure_alg(point["theta"]) != ensure_alg(field[2]):
                continue
        b = tuple(point[nm] for nm in ("b1", "b2", "b3"))
        out.append((b, point["lam"]))
    out.sort(key=lambda pair: tuple(_float_key(x)
                                    for x in pair[0] + (pair[1],)))
    return out


def _float_key(v):
    if isinstance(v, Alg):
        v.refine_below(Fraction(1, 1 << 40))
        iv = v.interval()
        return float((iv.lo + iv.hi) / 2)
    return float(v)


def _coefficients_in(poly, names):
    """Coefficients of poly viewed as a polynomial in ``names``."""
    idx = [poly.vars.index(nm) for nm in names]
    buckets = {}
    for exp, c in poly.terms.items():
        key = tuple(exp[i] for i in idx)
        rest = list(exp)
        for i in idx:
            rest[i] = 0
        bucket = buckets.setdefault(key, {})
        prev = bucket.get(tuple(rest))
        bucket[tuple(rest)] = c if prev is None else prev + c
    return [MultiPoly(poly.vars, b) for b in buckets.values()]


def substitution_residual(surface, q, b, lam):
    """F(Qx+b) - lambda*F as an exact polynomial, over Q or Q(theta).

    Entries of q, b and lam may be rational or lie in one common quadratic
    extension; the residual is returned as a MultiPoly over (x, y, z) plus
    possibly theta, already reduced so that it is zero exactly when the
    symmetry identity holds.
    """
    flatq = [q[i][j] for i in range(3) for j in range(3)]
    values = flatq + list(b) + [lam]
    theta = None
    for v in values:
        if isinstance(v, Alg) and v.rat is None:
            theta = v
            break
    if theta is None:
        vars = _XYZ
        rep = {id(v): MultiPoly.const(vars, _to_fraction(v)) for v in values}
    else:
        square = theta * theta
        d = square.rat if isinstance(square, Alg) else Fraction(square)
        if d is None:
            raise HeuristicFailure(
                "values lie outside a single quadratic extension")
        vars = _XYZ + ("theta",)
        th = MultiPoly.var(vars, "theta")
        rep = {}
        for v in values:
            r = v.rat if isinstance(v, Alg) else Fraction(v)
            if r is not None:
                rep[id(v)] = MultiPoly.const(vars, r)
                continue
            ratio = ensure_alg(v) / theta
            if ratio.rat is None:
                raise HeuristicFailure(
                    "values lie outside a single quadratic extension")
            rep[id(v)] = th * MultiPoly.const(vars, ratio.rat)
    big = project(surface.F, vars)
    coords = [MultiPoly.var(vars, w) for w in _XYZ]
    images = {}
    for i, w in enumerate(_XYZ):
        img = rep[id(values[9 + i])]
        for j in range(3):
            img = img + rep[id(flatq[3 * i + j])] * coords[j]
        images[w] = img
    residual = compose_coordinates(big, images) - rep[id(values[12])] * big
    if theta is not None:
        residual = _reduce_theta(residual, d)
    return residual


def _to_fraction(v):
    if isinstance(v, Alg):
        return v.rat
    return Fraction(v)


def _reduce_theta(poly, d):
    """Replace theta^2 by the rational d throughout."""
    i = poly.vars.index("theta")
    out = {}
    for exp, c in poly.terms.items():
        e = exp[i]
        coeff = c * d ** (e // 2)
        new = list(exp)
        new[i] = e % 2
        key = tuple(new)
        prev = out.get(key)
        out[key] = coeff if prev is None else prev + coeff
    return MultiPoly(poly.vars, out)


def substitution_holds(surface, q, b, lam):
    """Exact check of the defining identity F(Qx+b) = lambda*F."""
    return substitution_residual(surface, q, b, lam).is_zero()


def detect_revolution_axis(cone):
    """Axis directions making the cone a surface of revolution, if any.

    A cone s*q(t) with vertex at the origin is rotationally invariant about
    a unit direction u exactly when the angle between q(t) and u is
    constant, i.e. (q . u)^2 = const * |q|^2 identically in t.  The
    resulting system in u is solved exactly; an empty list means no axis
    (or none detectable as a zero-dimensional system).
    """
    space = ("t", "u1", "u2", "u3", "c2")
    qs = [MultiPoly.from_unipoly(space, "t", qi) for qi in cone.q]
    us = [MultiPoly.var(space, nm) for nm in ("u1", "u2", "u3")]
    c2 = MultiPoly.var(space, "c2")
    msq = MultiPoly.from_unipoly(space, "t", cone.norm_square())
    qdot = qs[0] * us[0] + qs[1] * us[1] + qs[2] * us[2]
    expr = qdot * qdot - c2 * msq
    equations = [coeff for coeff in expr.as_univar("t") if not coeff.is_zero()]
    unit = us[0] * us[0] + us[1] * us[1] + us[2] * us[2] \
        - MultiPoly.const(space, 1)
    equations.append(unit)
    equations = [project(e, ("u1", "u2", "u3", "c2")) for e in equations]
    try:
        points = solve_zero_dim(equations, ("u1", "u2", "u3", "c2"))
    except Exception:
        return []
    axes = []
    for point in points:
        u = tuple(point[nm] for nm in ("u1", "u2", "u3"))
        sign = 0
        for x in u:
            s = ensure_alg(x).sign() if isinstance(x, Alg) else \
                ((x > 0) - (x < 0))
            if s:
                sign = s
                break
        if sign < 0:
            u = tuple(-x for x in u)
        if not any(all(a == b for a, b in zip(u, seen)) for seen in axes):
            axes.append(u)
    return axes


def implicit_pipeline(surface, plane=None):
    """Full report for an implicit surface: cone symmetries lifted to F.

    ``surface`` is an ImplicitSurface whose irreducibility the caller
    asserts; ``plane`` optionally forces the section plane used to
    parametrize the highest-order form.
    """
    from .isometry import Isometry, symmetries, _sort_key, identity3, \
        _same_matrix
    from .report import SymmetryReport, encode_value, encode_vector

    sanity_check(surface)
    form = highest_form(surface)
    cone = parametrize_highest_form(form, plane)
    if cone is None:
        raise HeuristicFailure(
            "no coordinate-plane section of the highest-order form is "
            "linearly solvable; supply a parametrization another way")
    section_check = form.eval(
        {"x": cone.q[0], "y": cone.q[1], "z": cone.q[2]})
    assert section_check.is_zero(), \
        "conical parametrization does not satisfy the highest-order form"
    notes = [{
        "code": "HIGHEST_FORM_METHOD",
        "message": "symmetries are lifted from the cone of the "
                   "highest-order form: rotations and reflections are "
                   "enumerated completely; the central inversion is lifted "
                   "as a supplement and other improper kinds are reported "
                   "only when a lift verifies exactly",
    }]
    try:
        cone_isometries = symmetries(cone)
    except PositiveDimensional:
        note = {
            "code": "REVOLUTION_SUSPECTED",
            "message": "the cone of the highest-order form has a "
                       "positive-dimensional symmetry family (surface of "
                       "revolution); the infinite plane family is not "
                       "enumerated",
        }
        axes = detect_revolution_axis(cone)
        if axes:
            note["axes"] = [encode_vector(u) for u in axes]
        notes.append(note)
        identity = Isometry(identity3(), (Fraction(0),) * 3, None, None)
        return SymmetryReport(
            _subject(surface, form, cone), "implicit", [identity], notes,
            extras=[{"lambda": encode_value(Fraction(1))}])
    candidates = []
    for iso in cone_isometries:
        if not any(_same_matrix(iso.Q, seen) for seen in candidates):
            candidates.append(iso.Q)
    minus = tuple(tuple(Fraction(-1 if i == j else 0) for j in range(3))
                  for i in range(3))
    if not any(_same_matrix(minus, seen) for seen in candidates):
        candidates.append(minus)
    accepted = []
    for q in candidates:
        for b, lam in lift_symmetry(surface, q):
            if not substitution_holds(surface, q, b, lam):
                continue
            iso = Isometry(q, b, None, None)
            if any(iso.same_motion(prev) for prev, _ in accepted):
                continue
            accepted.append((iso, {"lambda": encode_value(lam)}))
    accepted.sort(key=lambda pair: _sort_key(pair[0]))
    return SymmetryReport(
        _subject(surface, form, cone), "implicit",
        [iso for iso, _ in accepted], notes,
        extras=[extra for _, extra in accepted])


def _subject(surface, form, cone):
    return {
        "polynomial": surface.F.render(),
        "degree": surface.N,
        "highest_form": form.render(),
        "cone": cone.render(),
    }


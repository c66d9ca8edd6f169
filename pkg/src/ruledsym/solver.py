"""Exact solving of the zero-dimensional systems produced by the method.

The strategy is projection by iterated subresultant elimination.  Chain
members are polynomial combinations of their two inputs, so every
projection polynomial vanishes on all common zeros of the system: a
nonzero univariate obtained this way is a certified superset description
of one coordinate.  Candidate points are assembled from per-coordinate
root sets and validated exactly against every original equation, which
removes the spurious combinations that projection methods inevitably
produce.

Positive-dimensional *complex* components with no real points (they occur
on the degenerate locus of the fractional-linear map whenever the system
is built from a norm-square with nonreal roots) would make naive
elimination collapse to zero for the later coordinates.  The fix used
here: after the first coordinate's projection polynomial is computed, its
irreducible factors without real roots are discarded -- no real solution
can live over them -- and the remaining factors are adjoined to the
system one at a time.  Each augmented system has finitely many complex
points over the factor's roots, so elimination for the remaining
coordinates succeeds.

Equations may also involve trailing unknowns that appear at most linearly
(the translation part of an isometry does); those are solved per
candidate point by exact linear algebra over the algebraic numbers.
"""

from fractions import Fraction

import sympy

from .algnum import ensure_alg, evaluate_certified, isolate_real_roots
from .errors import PositiveDimensional
from .mpoly import MultiPoly
from .linalg import gauss_solve
from .phisys import candidate_from_point, scale_factors
from .upoly import UniPoly, factor_rational, poly_gcd

_SYMBOLS = {}


def _sym(name):
    if name not in _SYMBOLS:
        _SYMBOLS[name] = sympy.Symbol(name)
    return _SYMBOLS[name]


def _to_expr(e):
    total = sympy.Integer(0)
    for exp, c in e.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for name, p in zip(e.vars, exp):
            if p:
                term *= _sym(name) ** p
        total += term
    return total


def _clean(equations):
    """Normalise, drop zeros; a nonzero constant marks an empty solution set."""
    eqs = []
    for e in equations:
        if e.is_zero():
            continue
        if e.is_constant():
            return None
        eqs.append(e.normalized())
    return eqs


def _cover(eqs, var, eliminate_vars):
    """Generator of the elimination ideal in var alone, or None.

    Computed from a lex Groebner basis with var ordered last, so the
    result is exact: it vanishes precisely on the closure of the system's
    projection onto the var axis.  None means that projection is not
    finite (the ideal meets the ring of the single variable trivially).
    """
    order = [_sym(w) for w in eliminate_vars] + [_sym(var)]
    basis = sympy.groebner([_to_expr(e) for e in eqs], *order, order="lex")
    target = _sym(var)
    collapsed = UniPoly()
    for g in basis.exprs:
        if g.free_symbols <= {target}:
            coeffs = sympy.Poly(g, target).all_coeffs()
            u = UniPoly([Fraction(c.p, c.q)
                         for c in reversed([sympy.Rational(c) for c in coeffs])])
            collapsed = poly_gcd(collapsed, u)
    if collapsed.is_zero():
        return None
    return collapsed


def _real_rooted_factors(p):
    out = []
    for f, _ in factor_rational(p)[1]:
        if f.degree() == 1:
            out.append(f)
        else:
            seq = f.sturm_sequence()
            b = f.cauchy_bound()
            if f.count_roots(-b, b, seq) > 0:
                out.append(f)
    return out


def _solve_core(eqs, order, all_unknowns, space):
    if not order:
        return [{}]
    v = order[0]
    elim = tuple(u for u in all_unknowns if u != v)
    cover = _cover(eqs, v, elim)
    if cover is None:
        raise PositiveDimensional(
            "no finite projection for unknown %r" % v, variable=v)
    if cover.degree() == 0:
        return []
    points = []
    for fac in _real_rooted_factors(cover):
        roots = isolate_real_roots(fac)
        if not roots:
            continue
        augmented = eqs + [MultiPoly.from_unipoly(space, v, fac)]
        for sub in _solve_core(augmented, order[1:], all_unknowns, space):
            for r in roots:
                point = dict(sub)
                point[v] = r
                points.append(point)
    return points


def _linear_substitutions(eqs, preferred):
    """Repeatedly solve total-degree-1 equations with rational coefficients."""
    subs = {}
    changed = True
    while changed:
        changed = False
        for e in eqs:
            if e.is_zero() or e.total_degree() != 1:
                continue
            if not all(isinstance(c, Fraction) for c in e.terms.values()):
                continue
            target = None
            for name in preferred:
                if name in subs:
                    continue
                if e.degree_in(name) == 1:
                    target = name
                    break
            if target is None:
                continue
            i = e.vars.index(target)
            coeff = Fraction(0)
            rest = {}
            for exp, c in e.terms.items():
                if exp[i] == 1:
                    coeff = c
                else:
                    rest[exp] = c
            expr = MultiPoly(e.vars, rest) * (-1 / coeff)
            new_eqs = []
            for other in eqs:
                g = other.substitute_poly(target, expr)
                if not g.is_zero():
                    new_eqs.append(g)
            for name in list(subs):
                subs[name] = subs[name].substitute_poly(target, expr)
            subs[target] = expr
            eqs = new_eqs
            changed = True
            break
    return eqs, subs


def solve_zero_dim(equations, vars, linear_tail=()):
    """All real solutions of a polynomial system with finitely many.

    vars are solved by projection and real-root isolation; linear_tail
    unknowns must occur at most linearly (jointly) and are solved per
    point by exact elimination.  Returns a list of dicts mapping every
    unknown to an algebraic number.  Raises PositiveDimensional when the
    system cannot be certified finite along some coordinate.
    """
    vars = tuple(vars)
    tail = tuple(linear_tail)
    original = [e for e in equations if not e.is_zero()]
    eqs = _clean(original)
    if eqs is None:
        return []
    if not eqs:
        if vars or tail:
            raise PositiveDimensional("no constraints on the unknowns")
        return [{}]
    space = eqs[0].vars
    eqs, subs = _linear_substitutions(eqs, tail + tuple(reversed(vars)))
    eqs2 = _clean(eqs)
    if eqs2 is None:
        return []
    eqs = eqs2
    core = tuple(v for v in vars if v not in subs)
    tail_rem = tuple(v for v in tail if v not in subs)
    unknowns = core + tail_rem
    if eqs:
        core_points = _solve_core(eqs, core, unknowns, space)
    else:
        if unknowns:
            raise PositiveDimensional("all constraints eliminated")
        core_points = [{}]
    out = []
    for cp in core_points:
        full = dict(cp)
        ok = True
        if tail_rem:
            solved = _solve_tail(eqs, cp, tail_rem)
            if solved is None:
                ok = False
            else:
                full.update(solved)
        else:
            for e in eqs:
                leftover = e.used_vars() - set(full)
                if leftover:
                    raise PositiveDimensional(
                        "unconstrained unknowns %s" % sorted(leftover))
        if not ok:
            continue
        for name in reversed(list(subs)):
            full[name] = ensure_alg(_eval_at(subs[name], full))
        if all(evaluate_certified(e, full) for e in original):
            out.append(full)
    return _dedupe_points(out, vars + tail)


def _eval_at(expr, point):
    if expr.is_zero():
        return Fraction(0)
    return expr.eval({name: _value(point[name]) for name in expr.used_vars()})


def _value(v):
    a = ensure_alg(v)
    return a.rat if a.rat is not None else a


def _solve_tail(eqs, core_point, tail_vars):
    rows, rhs = [], []
    for e in eqs:
        res = e.substitute_values({k: _value(v) for k, v in core_point.items()
                                   if k in e.used_vars()})
        idx = [res.vars.index(b) for b in tail_vars]
        row = {b: Fraction(0) for b in tail_vars}
        const = Fraction(0)
        for exp, c in res.terms.items():
            tail_deg = sum(exp[i] for i in idx)
            assert tail_deg <= 1, "tail unknowns are not linear"
            if tail_deg == 0:
                const = const + c
            else:
                b = tail_vars[next(j for j, i in enumerate(idx) if exp[i] == 1)]
                row[b] = row[b] + c
        if all(v == 0 for v in row.values()):
            if const == 0:
                continue
            return None
        rows.append([row[b] for b in tail_vars])
        rhs.append(-const)
    if not rows:
        raise PositiveDimensional("translation unknowns are unconstrained")
    solved = gauss_solve(rows, rhs)
    if solved is None:
        return None
    particular, kernel = solved
    if kernel:
        raise PositiveDimensional("translation unknowns underdetermined")
    return {b: ensure_alg(v) for b, v in zip(tail_vars, particular)}


def _dedupe_points(points, names):
    kept = []
    for p in points:
        if not any(all(p[n] == q[n] for n in names) for q in kept):
            kept.append(p)

    def sort_key(p):
        return tuple(float(ensure_alg(p[n])) for n in names)

    kept.sort(key=sort_key)
    return kept


def solve_parameter_maps(surface, systems):
    """Validated parameter-map candidates (both branches, both signs of k).

    The per-class equations already carve out the solution set wherever
    the fractional-linear map is invertible (the norm-square law follows
    from them by comparing leading coefficients), so only they are solved;
    every candidate point is then checked against the full coefficient
    system before being admitted.
    """
    candidates = []
    for system in systems:
        points = solve_zero_dim(system.class_equations, system.unknowns())
        for point in points:
            alpha = ensure_alg(point["alpha"])
            if system.gamma == 0:
                if alpha == 0:
                    continue
            else:
                det = alpha * ensure_alg(point["delta"]) - ensure_alg(point["beta"])
                if det == 0:
                    continue
            if not all(evaluate_certified(r, point)
                       for r in system.raw_equations):
                continue
            for k in scale_factors(system, point):
                candidates.append(candidate_from_point(system, point, k))
    unique = []
    for c in candidates:
        if not any(c.same_map(u) for u in unique):
            unique.append(c)
    return unique

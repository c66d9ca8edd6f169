"""Point-grid sampling of a surface for external plotting.

Grid values are exact rationals, surface points are evaluated exactly and
only rendered to decimal at the very end, so emitted rows satisfy the
parametrization identity by construction.  Parameter values hitting a pole
of the base curve are excluded column-wise and reported.
"""

from fractions import Fraction

from .errors import PreconditionViolation


def grid_values(lo, hi, count):
    """count evenly spaced exact values from lo to hi inclusive."""
    lo, hi = Fraction(lo), Fraction(hi)
    if count < 2:
        raise PreconditionViolation("a mesh needs at least 2 samples per axis")
    step = (hi - lo) / (count - 1)
    return [lo + step * j for j in range(count)]


def is_pole(surface, t):
    return any(c.den(t) == 0 for c in surface.p)


def mesh_rows(surface, t_range, s_range, counts):
    """Exact (t, s, x, y, z) rows; returns (rows, excluded_t_values)."""
    nt, ns = counts
    t_values = grid_values(t_range[0], t_range[1], nt)
    s_values = grid_values(s_range[0], s_range[1], ns)
    rows, excluded = [], []
    for t in t_values:
        if is_pole(surface, t):
            excluded.append(t)
            continue
        for s in s_values:
            x, y, z = surface.point(t, s)
            rows.append((t, s, x, y, z))
    return rows, excluded


def render_value(v):
    return repr(float(v))


def render_csv(rows):
    lines = ["t,s,x,y,z"]
    for row in rows:
        lines.append(",".join(render_value(v) for v in row))
    return "\n".join(lines) + "\n"


def emit_mesh(surface, t_range, s_range, counts, path):
    """Write the CSV grid; returns (number_of_rows, excluded_t_values)."""
    rows, excluded = mesh_rows(surface, t_range, s_range, counts)
    with open(path, "w") as handle:
        handle.write(render_csv(rows))
    return len(rows), excluded

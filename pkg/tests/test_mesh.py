import random
from fractions import Fraction

import pytest

from ruledsym.errors import PreconditionViolation
from ruledsym.isometry import symmetries
from ruledsym.mesh import grid_values, is_pole, mesh_rows, render_csv, render_value
from ruledsym.surface import surface_from_json


def test_grid_values_exact():
    assert grid_values(-2, 2, 5) == [-2, -1, 0, 1, 2]
    assert grid_values(0, 1, 3) == [0, Fraction(1, 2), 1]
    assert all(isinstance(v, Fraction) for v in grid_values(-1, 1, 4))
    with pytest.raises(PreconditionViolation):
        grid_values(0, 1, 1)


def test_count_contract_without_poles(golden):
    rows, excluded = mesh_rows(golden, (-2, 2), (-1, 1), (50, 20))
    assert excluded == []
    assert len(rows) == 50 * 20


def test_pole_columns_excluded():
    spiked = surface_from_json({
        "p": ["1/t", "0", "0"],
        "q": ["t", "1", "t^2"],
    })
    assert is_pole(spiked, Fraction(0))
    assert not is_pole(spiked, Fraction(1))
    rows, excluded = mesh_rows(spiked, (-2, 2), (0, 1), (5, 3))
    assert excluded == [0]
    # one whole t-column drops out
    assert len(rows) == (5 - 1) * 3


def test_rows_satisfy_parametrization(golden):
    rows, _ = mesh_rows(golden, (-3, 3), (-2, 2), (7, 4))
    for t, s, x, y, z in rows:
        expected = tuple(golden.p[i](t) + s * golden.q[i](t)
                         for i in range(3))
        assert (x, y, z) == expected


def test_csv_rendering():
    rows = [(Fraction(1, 2), Fraction(-1), Fraction(3), Fraction(0),
             Fraction(22, 7))]
    text = render_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "t,s,x,y,z"
    assert lines[1].startswith("0.5,-1.0,3.0,0.0,")
    assert text == render_csv(rows)
    assert render_value(Fraction(1, 4)) == "0.25"


def test_conical_mesh_mirror_symmetry(corpus):
    # rational mirrors whose parameter action is t -> ±t map a symmetric
    # grid of a cone into itself, so the sampled point set is invariant
    surface = corpus["x5"]
    rows, excluded = mesh_rows(surface, (-2, 2), (-1, 1), (9, 4))
    assert excluded == []
    points = {(x, y, z) for _, _, x, y, z in rows}
    checked = 0
    for f in symmetries(surface):
        if f.kind != "reflection":
            continue
        cand = f.candidate
        if cand.gamma != 0 or cand.beta != 0 or abs(cand.alpha) != 1 \
                or abs(cand.k) != 1:
            continue
        image = {f.apply(p) for p in points}
        assert image == points
        checked += 1
    assert checked > 0


def test_random_grids_have_expected_shape():
    rng = random.Random(5)
    surface = surface_from_json({"p": ["t", "0", "0"], "q": ["0", "1", "t"]})
    for _ in range(10):
        nt = rng.randint(2, 9)
        ns = rng.randint(2, 9)
        lo = Fraction(rng.randint(-6, 0))
        hi = lo + rng.randint(1, 6)
        rows, excluded = mesh_rows(surface, (lo, hi), (0, 1), (nt, ns))
        assert excluded == []
        assert len(rows) == nt * ns
        ts = {row[0] for row in rows}
        assert len(ts) == nt
        assert min(ts) == lo and max(ts) == hi

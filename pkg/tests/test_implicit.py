from fractions import Fraction

import pytest

from ruledsym.errors import HeuristicFailure, PreconditionViolation, ZeroInput
from ruledsym.implicit import (
    ImplicitSurface,
    compose_coordinates,
    detect_revolution_axis,
    highest_form,
    implicit_pipeline,
    lift_symmetry,
    parametrize_highest_form,
    sanity_check,
    substitution_holds,
)
from ruledsym.parser import parse_multipoly, parse_unipoly
from ruledsym.upoly import UniPoly

XYZ = ("x", "y", "z")
EXAMPLE = "x^6 + y^5*z + 6*x^5 + 14*x^4 + 16*x^3 + 8*x^2 + z^2"
ODD_CONE = "x^3 - 27*y*z^2"


def implicit(text):
    return ImplicitSurface(parse_multipoly(text, XYZ))


def mp(text):
    return parse_multipoly(text, XYZ)


def kind_counts(report):
    out = {}
    for f in report.isometries:
        out[f.kind] = out.get(f.kind, 0) + 1
    return out


def test_surface_construction():
    s = implicit(EXAMPLE)
    assert s.N == 6
    with pytest.raises(ZeroInput):
        implicit("0")


def test_highest_form_extraction():
    assert highest_form(implicit("x^2 + y + 1")) == mp("x^2")
    assert highest_form(implicit(EXAMPLE)) == mp("x^6 + y^5*z")
    # homogeneous input is its own top form
    assert highest_form(implicit(ODD_CONE)) == mp(ODD_CONE)


def test_sanity_check_refutes_repeated_factors():
    sanity_check(implicit(EXAMPLE))
    with pytest.raises(PreconditionViolation):
        sanity_check(implicit("(x + y)^2"))
    with pytest.raises(PreconditionViolation):
        sanity_check(implicit("(x^2 + y^2 + z^2)^2"))


def test_parametrize_default_section():
    cone = parametrize_highest_form(highest_form(implicit(EXAMPLE)))
    assert cone is not None
    assert all(c.num.is_zero() for c in cone.p)
    assert cone.q == (parse_unipoly("t^5"), parse_unipoly("t^6"),
                      parse_unipoly("-1"))


def test_parametrize_plane_override():
    form = highest_form(implicit(EXAMPLE))
    cone = parametrize_highest_form(form, plane=("y", 2))
    assert cone.q == (parse_unipoly("32*t"), parse_unipoly("64"),
                      parse_unipoly("-t^6"))


def test_parametrize_sphere_fails():
    assert parametrize_highest_form(mp("x^2 + y^2 + z^2")) is None
    with pytest.raises(HeuristicFailure):
        implicit_pipeline(implicit("x^2 + y^2 + z^2 + x"))


def test_compose_coordinates_simultaneous():
    F = mp("x^2 + y")
    out = compose_coordinates(F, {"x": mp("x + y"), "y": mp("x")})
    assert out == mp("(x + y)^2 + x")


def test_example_pipeline_report():
    rep = implicit_pipeline(implicit(EXAMPLE))
    assert kind_counts(rep) == {
        "identity": 1,
        "reflection": 1,
        "axial_rotation": 1,
        "central_inversion": 1,
    }
    by_kind = {f.kind: f for f in rep.isometries}
    axial = by_kind["axial_rotation"]
    assert axial.Q == ((1, 0, 0), (0, -1, 0), (0, 0, -1))
    assert axial.b == (0, 0, 0)
    assert axial.geometry["axis_direction"] == (1, 0, 0)
    mirror = by_kind["reflection"]
    assert mirror.Q == ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert mirror.b == (-2, 0, 0)
    # the mirror plane is x = -1
    assert mirror.geometry["plane_normal"] == (1, 0, 0)
    assert mirror.geometry["plane_offset"] == -1
    assert by_kind["central_inversion"].geometry["center"] == (-1, 0, 0)
    for extra in rep.extras:
        assert extra == {"lambda": {"rat": "1"}}
    assert [n["code"] for n in rep.notes] == ["HIGHEST_FORM_METHOD"]


def test_example_substitution_identities():
    s = implicit(EXAMPLE)
    mirror = ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert substitution_holds(s, mirror, (-2, 0, 0), Fraction(1))
    assert not substitution_holds(s, mirror, (0, 0, 0), Fraction(1))
    assert not substitution_holds(s, mirror, (-2, 0, 0), Fraction(2))


def test_homogeneous_cone_lifts():
    # for a homogeneous polynomial every symmetry fixes the origin and the
    # multiplier is forced by parity
    rep = implicit_pipeline(implicit(ODD_CONE))
    assert kind_counts(rep) == {
        "identity": 1,
        "reflection": 1,
        "axial_rotation": 1,
        "central_inversion": 1,
    }
    lam_by_kind = {}
    for f, extra in zip(rep.isometries, rep.extras):
        assert f.b == (0, 0, 0)
        lam_by_kind[f.kind] = extra["lambda"]
    assert lam_by_kind == {
        "identity": {"rat": "1"},
        "reflection": {"rat": "1"},
        "axial_rotation": {"rat": "-1"},
        "central_inversion": {"rat": "-1"},
    }


def test_lift_translations_from_coefficients():
    s = implicit(EXAMPLE)
    mirror = ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
    sols = lift_symmetry(s, mirror)
    assert len(sols) == 1
    b, lam = sols[0]
    assert b == (-2, 0, 0) and lam == 1


def test_perturbation_pruning():
    # adding x keeps the half-turn about the x-axis (x is invariant under
    # it) but destroys the mirror and the inversion
    rep = implicit_pipeline(implicit(EXAMPLE + " + x"))
    assert kind_counts(rep) == {"identity": 1, "axial_rotation": 1}
    # adding x + y leaves nothing
    rep = implicit_pipeline(implicit(EXAMPLE + " + x + y"))
    assert kind_counts(rep) == {"identity": 1}


def test_revolution_cone_reported_not_enumerated():
    rep = implicit_pipeline(implicit("x*y + x*z + y*z"))
    assert kind_counts(rep) == {"identity": 1}
    codes = [n["code"] for n in rep.notes]
    assert codes == ["HIGHEST_FORM_METHOD", "REVOLUTION_SUSPECTED"]
    note = rep.notes[1]
    axis = note["axes"][0]
    # the axis is (1,1,1)/sqrt(3), encoded exactly
    assert [e["minpoly"] for e in axis] == ["x^2 - 1/3"] * 3


def test_detect_revolution_axis_exact():
    cone = parametrize_highest_form(mp("x*y + x*z + y*z"))
    axes = detect_revolution_axis(cone)
    assert len(axes) == 1
    u = axes[0]
    assert u[0].minpoly == UniPoly([Fraction(-1, 3), 0, 1])
    assert u[0].sign() > 0
    assert all(x == u[0] for x in u)


def test_nonrevolution_cone_has_no_axis():
    cone = parametrize_highest_form(highest_form(implicit(EXAMPLE)))
    assert detect_revolution_axis(cone) == []

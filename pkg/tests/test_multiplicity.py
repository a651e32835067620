import pytest
from hypothesis import given, settings, strategies as st

from asreg.catalog import CANDIDATE_LINES, catalog, line_forms
from asreg.point_scheme import Line, minors, multilinearize
from asreg.polynomials import CommPoly
from asreg.multiplicity import (INF, K_line, L_line, LineContained, LineParam, intersection_parameters,
                                jacobian_partials, line_multiplicity, multiplicity_report,
                                vanishing_at)

Y1, Y2, Y3, Y4 = CommPoly.gens()
QUADRIC = Y1 * Y2


@pytest.mark.parametrize("n", [0, 1, 2, INF])
def test_quadric_meets_L_n_doubly(n):
    assert line_multiplicity([QUADRIC], L_line(n), 0) == 2


def test_bezout_on_a_general_line():
    # a line off Q meets the quadric in degree-many points counted with multiplicity
    line = LineParam((1, 0, 1, 0), (1, 1, 0, 1))
    total = sum(line_multiplicity([QUADRIC], line, t) for t in intersection_parameters(QUADRIC, line))
    assert total == 2


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool),
       st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_multiplicity_ignores_parametrization(scale, shift):
    line = L_line(1)
    # same line, base moved along it and direction rescaled; the point t=0 is unchanged
    moved = LineParam(line.base, tuple(scale * d + shift * b for b, d in zip(line.base, line.dir)))
    assert line_multiplicity([QUADRIC], moved, 0) == line_multiplicity([QUADRIC], line, 0)


def test_contained_line_raises():
    with pytest.raises(LineContained):
        line_multiplicity([QUADRIC], LineParam((0, 0, 1, 0), (0, 0, 0, 1)), 0)


def test_proportional_base_and_direction_rejected():
    with pytest.raises(ValueError):
        LineParam((1, 1, 0, 0), (2, 2, 0, 0))


def test_parse_line():
    assert LineParam.parse("base=0,0,1,0;dir=1,1,0,0") == L_line(0)


def test_vanishing_needs_a_point():
    assert vanishing_at([QUADRIC], (1, 0, 5, 5))
    with pytest.raises(ValueError):
        vanishing_at([QUADRIC], (0, 0, 0, 0))


def test_jacobian_of_quadric():
    assert jacobian_partials([QUADRIC]) == [[Y2, Y1, CommPoly.const(0), CommPoly.const(0)]]


def test_degenerate_member_multiplicities():
    inst = catalog("prop1_b_beta0")
    polys = minors(multilinearize(inst.P)).polys
    assert line_multiplicity(polys, L_line(0), 0) == 3
    for n in (0, 1, 2):
        assert line_multiplicity(polys, K_line(n), 0) == 2


def _report(cid, params=None):
    inst = catalog(cid, params)
    cands = [Line(*line_forms(t)) for t in CANDIDATE_LINES]
    return multiplicity_report(inst.P, inst.quadric, cands, tau=inst.tau)


def test_report_classifications():
    assert _report("prop1_b", {"alpha": 1, "beta": 1})["classification"] == "consistent_with_P_eq_Q"
    rep = _report("prop1_b_beta0")
    assert rep["classification"] == "Q_uplus_L"
    assert rep["line"] == "V(Y1,Y4)"


def test_report_spots_an_extra_line():
    assert _report("plalg_b")["classification"] == "Q_union_L"

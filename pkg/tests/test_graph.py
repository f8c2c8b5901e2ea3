import json
from fractions import Fraction
from itertools import combinations

import pytest

from nckleinian.dq import params_from_q
from nckleinian.errors import WindowTooSmall
from nckleinian.exact import Polynomial
from nckleinian.graph import (
    classify_orbit,
    closure_of,
    figure_label,
    minimal_window,
    module_graph,
    submodule_closures,
    to_dot,
    to_json,
)
from nckleinian.hc import Tableau

F = Fraction
T4 = params_from_q(Polynomial([0, 0, 0, 0, 1]))
ROOTS12 = params_from_q(Polynomial([4, 0, -5, 0, 1]))
# single rational root 1/3; the other factor has no rational roots
ONE_ROOT = params_from_q(Polynomial([-1, 3]) * Polynomial([2, 0, 0, 1]))


@pytest.fixture(scope="module")
def integral():
    return module_graph(ROOTS12, 0, 8)


def test_classify_orbit():
    assert classify_orbit(F(3)) == "integral"
    assert classify_orbit(F(-5, 2)) == "half_integral"
    assert classify_orbit(F(1, 3)) == "generic"


def test_window_gate():
    assert minimal_window(ROOTS12, F(1, 3)) == 5
    with pytest.raises(WindowTooSmall) as info:
        module_graph(ROOTS12, F(1, 3), 1)
    assert info.value.minimal == 5


def test_integral_shape(integral):
    assert Tableau(0, F(0)) in integral.vertices
    assert all(not (v.order == 1 and v.point == 0) for v in integral.vertices)
    assert len(integral.vertices) == 9 + 8


def test_integral_missing_edges(integral):
    zero = {(str(s.src), str(s.dst)) for s in integral.slots
            if s.symbol != "0" and s.kind != "vertical" and not s.present}
    assert zero == {
        ("T0(1)", "T0(0)"), ("T0(1)", "T0(2)"), ("T0(2)", "T0(1)"), ("T0(2)", "T0(3)"),
        ("T1(1)", "T1(2)"), ("T1(2)", "T1(1)"), ("T1(2)", "T1(3)"),
    }


def test_integral_apex_is_the_only_label_mismatch(integral):
    # w.T0(0) = 2q(0)T0(1) - 2q(-1/2)T0(0) reaches T0(1) although q'(0) = 0
    bad = integral.inconsistent_slots()
    assert [(str(s.src), str(s.dst), s.symbol) for s in bad] == [("T0(0)", "T0(1)", "q'(0)")]
    assert bad[0].present and bad[0].label == 0


def test_generic_all_edges_present():
    g = module_graph(T4, F(1, 3), 5)
    assert all(s.present for s in g.slots if s.kind == "horizontal")
    assert not g.inconsistent_slots()
    closures, _ = submodule_closures(g)
    assert len(closures) == 1 and closures[0].members == set(g.vertices)


def test_generic_left_ray():
    g = module_graph(ONE_ROOT, F(1, 3), 6)
    ray = closure_of(g, Tableau(0, F(1, 3)))
    expected = {v for v in g.vertices if g.positions[v] <= F(1, 3)}
    assert ray == expected
    assert not g.inconsistent_slots()


def test_half_integral_back_edge(q):
    params = params_from_q(q)
    g = module_graph(params, F(1, 2), minimal_window(params, F(1, 2)))
    back = g.edge(Tableau(0, F(1, 2)), Tableau(1, F(1, 2)))
    assert back.label == q(F(-1, 2)) and back.symbol == "q(-1/2)"
    assert back.present == bool(q(F(-1, 2)))


def test_figure_labels():
    q = ROOTS12.q
    assert figure_label(0, F(2), 0, F(3), ROOTS12) == (q(2), "q(2)")
    assert figure_label(0, F(2), 0, F(1), ROOTS12) == (q(-2), "q(-2)")
    assert figure_label(1, F(1), 0, F(2), ROOTS12)[1] == "q'(1)"
    assert figure_label(1, F(2), 0, F(1), ROOTS12)[1] == "q'(-2)"
    assert figure_label(0, F(0), 1, F(1), ROOTS12)[1] == "q(0)"
    assert figure_label(0, F(3), 1, F(3), ROOTS12) == (0, "0")


@pytest.mark.parametrize("params,orbit", [(ROOTS12, 0), (ROOTS12, F(1, 2)), (ONE_ROOT, F(1, 3)),
                                          (T4, 0)])
def test_closures_closed_under_intersection(params, orbit):
    g = module_graph(params, orbit, minimal_window(params, orbit) + 1, full=True)
    closures, inclusions = submodule_closures(g)
    family = {c.members for c in closures}
    for a, b in combinations(family, 2):
        assert not (a & b) or (a & b) in family
    principal = {closure_of(g, v) for v in g.vertices}
    assert principal <= family
    for i, j in inclusions:
        assert closures[i].members < closures[j].members


def test_json_and_dot(integral):
    data = json.loads(json.dumps(to_json(integral)))
    assert data["orbit_class"] == "integral"
    vertices = [Tableau.from_json(v) for v in data["vertices"]]
    assert vertices == integral.vertices
    assert len(data["edges"]) == len(integral.edges)
    assert len(data["closures"]) == len(data["closure_truncated"])
    dot = to_dot(integral, symbolic=True)
    assert dot.startswith("digraph") and "q'(0)" in dot and "dashed" in dot

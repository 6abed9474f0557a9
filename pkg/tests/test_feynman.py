import random
from fractions import Fraction

import pytest

from oracles import kirchhoff, two_forests_from_trees
from sparsepolya.feynman import (Empty, FeynmanGraph, KinematicSpec, Nonempty, ParamLinearForm, ParamPoly,
                                 check_empty, convergence_check, euclidean_region_nonempty, first_symanzik,
                                 generic_support, instantiate, second_symanzik, spanning_2forests, spanning_trees,
                                 strict_feasibility)
from sparsepolya.fixtures import (BANANA_F, BANANA_U, DOUBLE_BOX_F, banana_graph, double_box_graph)
from sparsepolya.polycore import parse_poly

X3 = ("x1", "x2", "x3")
X7 = tuple(f"x{i}" for i in range(1, 8))
LF = ParamLinearForm.parse


def graph(V, edges, legs=()):
    return FeynmanGraph.from_json({"vertices": V, "internal_edges": [[u, v, "0"] for u, v in edges],
                                   "external_legs": [{"vertex": v, "momentum": f"p{i + 1}"}
                                                     for i, v in enumerate(legs)]})


# linear forms

def test_linear_form_parsing():
    f = LF("m1 + m2 + m3 - s")
    assert f.as_dict() == {"m1": 1, "m2": 1, "m3": 1, "s": -1} and f.constant == 0
    assert LF("-s/2 - t/2") == LF("s").scale(Fraction(-1, 2)) - LF("t/2")
    assert LF("2*(m - 3/4)").constant == Fraction(-3, 2)
    assert LF("8.97").constant == Fraction(897, 100)
    assert LF("s - s").is_zero() and LF("7").is_constant()


@pytest.mark.parametrize("bad", ["m*s", "s/t", "2 +", "(s", "s $", "1/0"])
def test_linear_form_rejects(bad):
    with pytest.raises(ValueError):
        LF(bad)


def test_linear_form_evaluate():
    assert LF("m1 - s/2").evaluate({"m1": 1, "s": Fraction(1, 3)}) == Fraction(5, 6)
    with pytest.raises(KeyError):
        LF("m1 - s").evaluate({"m1": 1})


# graph machinery

def test_triangle():
    G = graph(3, [(1, 2), (2, 3), (3, 1)], legs=(1, 2, 3))
    assert G.loops == 1
    assert first_symanzik(G) == parse_poly("x1 + x2 + x3", X3)
    assert len(spanning_2forests(G)) == 3


def test_tree_graph_has_unit_U():
    G = graph(3, [(1, 2), (2, 3)])
    assert G.loops == 0
    U = first_symanzik(G)
    assert len(U) == 1 and U.coeff((0, 0)) == 1


def test_self_loop_and_multi_edge():
    G = graph(2, [(1, 1), (1, 2), (1, 2)])
    assert G.loops == 2
    assert spanning_trees(G) == [(1,), (2,)]
    assert first_symanzik(G) == parse_poly("x1*x3 + x1*x2", X3)


def random_graph(rng):
    V = rng.randint(1, 5)
    E = []
    for v in range(2, V + 1):
        E.append((rng.randint(1, v - 1), v))
    for _ in range(rng.randint(0, 4)):
        E.append((rng.randint(1, V), rng.randint(1, V)))
    rng.shuffle(E)
    return V, E


def test_kirchhoff_and_forests_agree_on_random_graphs():
    rng = random.Random(11)
    for _ in range(40):
        V, E = random_graph(rng)
        G = graph(V, E)
        trees = spanning_trees(G)
        assert len(trees) == kirchhoff(V, E)
        got = {tf.edges for tf in spanning_2forests(G)}
        assert got == two_forests_from_trees(V, E, trees)
        for tf in spanning_2forests(G):
            assert 1 in tf.part1 and not set(tf.part1) & set(tf.part2)


def test_disconnected_refused():
    with pytest.raises(ValueError, match="disconnected"):
        graph(3, [(1, 2)])


# kinematics

def test_kinematics_symmetry_and_conservation():
    with pytest.raises(ValueError, match="disagree"):
        KinematicSpec.from_json({"k": {"1,2": "s", "2,1": "t"}})
    with pytest.raises(ValueError, match="conservation"):
        KinematicSpec.from_json({"momentum_conservation": True, "k": {"1,1": "0", "1,2": "s", "2,2": "0"}})
    ok = KinematicSpec.from_json({"momentum_conservation": True, "k": {"1,1": "s", "1,2": "-s", "2,2": "s"}})
    assert ok.k(2, 1) == LF("-s")


def test_missing_kinematic_symbol():
    kin = KinematicSpec.from_json({"k": {"1,1": "0"}})
    assert kin.k(2, 2).is_zero()
    with pytest.raises(KeyError, match="unresolved"):
        kin.k(1, 2)


@pytest.mark.parametrize("patch, msg", [
    ({"vertices": 0}, "vertices"),
    ({"internal_edges": [[1, 3, "m"]]}, "endpoint"),
    ({"internal_edges": [[1, 2]]}, "internal edge"),
    ({"external_legs": [{"vertex": 1, "momentum": "q1"}]}, "momentum label"),
    ({"external_legs": [{"vertex": 1, "momentum": "p1"}, {"vertex": 2, "momentum": "p1"}]}, "distinct"),
])
def test_graph_validation(patch, msg):
    data = {"vertices": 2, "internal_edges": [[1, 2, "m"]], "external_legs": []}
    data.update(patch)
    with pytest.raises(ValueError, match=msg):
        FeynmanGraph.from_json(data)


# banana

@pytest.fixture(scope="module")
def banana():
    return FeynmanGraph.from_json(banana_graph())


def test_banana_symanzik(banana):
    assert first_symanzik(banana) == parse_poly(BANANA_U, X3)
    assert second_symanzik(banana) == ParamPoly.from_pairs(3, BANANA_F, X3)
    assert len(spanning_trees(banana)) == 3 and len(spanning_2forests(banana)) == 1


def test_banana_generic_support(banana):
    pts, flags = generic_support(banana)
    assert len(pts) == 7
    assert flags[(1, 1, 1)].in_forest_part and flags[(1, 1, 1)].in_mass_part
    assert sum(fl.vertex for fl in flags.values()) == 6
    G = FeynmanGraph.from_json(banana_graph(("m1", "m2", "0")))
    assert len(generic_support(G)[0]) == 5


def test_banana_instantiate(banana):
    G = FeynmanGraph.from_json(banana_graph(("m", "m", "m")))
    f = instantiate(second_symanzik(G), {"m": 1, "s": Fraction(897, 100)})
    assert f.coeff((1, 1, 1)) == Fraction(-597, 100)
    with pytest.raises(ValueError, match="missing"):
        instantiate(second_symanzik(G), {"m": 1})


def test_banana_euclidean(banana):
    res = euclidean_region_nonempty(banana)
    assert isinstance(res, Nonempty)
    f = instantiate(second_symanzik(banana), res.witness)
    assert all(c > 0 for c in f.terms.values())


# double box

def test_double_box_symanzik():
    G = FeynmanGraph.from_json(double_box_graph())
    assert G.loops == 2
    assert second_symanzik(G) == ParamPoly.from_pairs(7, DOUBLE_BOX_F, X7)
    pts, flags = generic_support(G)
    assert all(flags[p].in_mass_part for p in pts if not flags[p].vertex)


def test_double_box_euclidean_nonempty():
    G = FeynmanGraph.from_json(double_box_graph())
    res = euclidean_region_nonempty(G)
    assert res.witness == {"m1": 1, "m2": 2, "s": -1, "t": 0}
    f = instantiate(second_symanzik(G), res.witness)
    assert all(c > 0 for c in f.terms.values())


def test_double_box_without_m2_is_empty():
    G = FeynmanGraph.from_json(double_box_graph(m2="0"))
    res = euclidean_region_nonempty(G)
    assert isinstance(res, Empty) and res.constant == 0
    assert res.combination == [((0, 0, 1, 0, 0, 1, 1), 1), ((0, 1, 0, 0, 1, 1, 0), 1), ((0, 1, 0, 1, 0, 0, 1), 1)]
    F = second_symanzik(G)
    assert check_empty(F, res)
    assert not check_empty(F, Empty(res.combination[:2], Fraction(0)))


def test_feasibility_witness_is_strict():
    forms = [LF("a - b"), LF("b - 1/2"), LF("3 - a - b")]
    w, bad = strict_feasibility(forms)
    assert bad is None and all(f.evaluate(w) > 0 for f in forms)
    w, (trace, const) = strict_feasibility([LF("a"), LF("-a")])
    assert w is None and const == 0 and trace == {0: 1, 1: 1}


# convergence

def massive_banana():
    return FeynmanGraph.from_json(banana_graph(("m", "m", "m")))


def test_convergent_interior_point():
    rep = convergence_check(massive_banana(), None, {"m": 1, "s": 1}, (1, 1, 1), 1)
    assert rep.alpha == Fraction(3, 2) and rep.beta == 2
    assert rep.condition_i.N == 0 and rep.condition_ii is True
    assert rep.verdict == "convergent"


def test_boundary_point_not_decided():
    rep = convergence_check(massive_banana(), None, {"m": 1, "s": 1}, (2, 1, 0), 2)
    assert rep.alpha == 0 and rep.condition_ii is False
    assert rep.verdict == "not decided"


def test_negative_u_exponent_unsupported():
    rep = convergence_check(massive_banana(), None, {"m": 1, "s": 1}, (1, 1, 1), Fraction(5, 2))
    assert rep.alpha == Fraction(-3, 4) and rep.condition_ii is None
    assert rep.verdict == "not decided" and "not supported" in rep.detail


def test_nonpositive_f_exponent_refused():
    with pytest.raises(ValueError):
        convergence_check(massive_banana(), None, {"m": 1, "s": 1}, (1, 1, 1), 3)
    with pytest.raises(ValueError):
        convergence_check(massive_banana(), None, {"m": 1, "s": 1}, (1, 1), 1)

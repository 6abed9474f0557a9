"""Reference instances used by the tests, the CLI smoke runs and the README."""

from __future__ import annotations

from .polycore import SparsePoly, parse_poly

T4 = ("t1", "t2", "t3", "t4")
T3 = ("t1", "t2", "t3")
T2 = ("t1", "t2")


def running_f() -> SparsePoly:
    """Quartic-free cubic in four variables with two -19/10 terms."""
    return parse_poly(
        "t4^3 + t1*t4^2 - 1.9*t2*t4^2 + t2^2*t4 + t3*t4^2 + t1*t3*t4 - 1.9*t2*t3*t4 + t2^2*t3", T4)


def running_h() -> SparsePoly:
    return running_f() + parse_poly("t1^3 + t2^3 + t3^3", T4)


def running_dehom() -> SparsePoly:
    return parse_poly("1 + t1 - 1.9*t2 + t2^2 + t3 + t1*t3 - 1.9*t2*t3 + t2^2*t3", T3)


# facet normals in the order the worked examples use
PRISM_NORMALS = ((1, 0, 0), (0, 1, 0), (-2, -1, 0), (0, 0, 1), (0, 0, -1))
PENTAGON_NORMALS = ((1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1))
QUADRILATERAL_NORMALS = ((1, 0), (0, 1), (-1, 1), (0, -1))


def pentagon() -> SparsePoly:
    return parse_poly("1 + t1 + t2 + t1^2 - 2*t1*t2 + t2^2 + t1*t2^2 + t1^2*t2", T2)


def quadrilateral() -> SparsePoly:
    return parse_poly("1 + t1 + t2 - 2*t1*t2 + t1^2*t2 + t2^2 + t1*t2^2 + t1^2*t2^2 + t1^3*t2^2", T2)


def hexagon() -> SparsePoly:
    return parse_poly(
        "2*t1^4*t2^2 + t1^3*t2^3 + t1^2*t2^4 + 2*t1^4*t2*t3 - 5*t1^3*t2^2*t3 - 2*t1*t2^4*t3"
        " + 2*t1^4*t3^2 + t1^3*t2*t3^2 + 12*t1^2*t2^2*t3^2 + t1*t2^3*t3^2 + 2*t2^4*t3^2"
        " - 2*t1^3*t3^3 - 5*t1*t2^2*t3^3 + 2*t2^3*t3^3 + t1^2*t3^4 + t1*t2*t3^4 + 2*t2^2*t3^4", T3)


def hexagon_factors() -> tuple[SparsePoly, SparsePoly]:
    f1 = parse_poly("2*t1^2 + t1*t2 + t2^2 - 2*t1*t3 + t2*t3 + t3^2", T3)
    f2 = parse_poly("t1^2*t2^2 + t1^2*t2*t3 - 2*t1*t2^2*t3 + t1^2*t3^2 + t1*t2*t3^2 + 2*t2^2*t3^2", T3)
    return f1, f2


def hexagon_g1() -> SparsePoly:
    return parse_poly("t1^2 + t1*t2 + t2^2 + t1*t3 + t2*t3 + t3^2", T3)


def hexagon_g2() -> SparsePoly:
    return parse_poly("t1^2*t2^2 + t1^2*t2*t3 + t1*t2^2*t3 + t1^2*t3^2 + t1*t2*t3^2 + t2^2*t3^2", T3)


def banana_graph(masses=("m1", "m2", "m3")) -> dict:
    """Two vertices joined by three edges; p1, p2 enter at vertex 1 and p3, p4 at vertex 2."""
    return {
        "vertices": 2,
        "internal_edges": [[1, 2, masses[0]], [1, 2, masses[1]], [1, 2, masses[2]]],
        "external_legs": [
            {"vertex": 1, "momentum": "p1"}, {"vertex": 1, "momentum": "p2"},
            {"vertex": 2, "momentum": "p3"}, {"vertex": 2, "momentum": "p4"},
        ],
        "kinematics": {"momentum_conservation": True, "k": _massless_four_point()},
    }


def double_box_graph(m1="m1", m2="m2") -> dict:
    """Non-planar two-loop box with every other internal mass zero.

    Vertices: 1=A (p2), 2=B (p1), 3=C, 4=D, 5=E (p4), 6=F (p3). Edges 4 and 7
    are the crossed pair.
    """
    return {
        "vertices": 6,
        "internal_edges": [
            [2, 4, m1],   # x1: B-D
            [1, 2, m2],   # x2: A-B
            [1, 3, "0"],  # x3: A-C
            [3, 6, "0"],  # x4: C-F
            [3, 5, "0"],  # x5: C-E
            [4, 6, "0"],  # x6: D-F
            [4, 5, "0"],  # x7: D-E
        ],
        "external_legs": [
            {"vertex": 2, "momentum": "p1"}, {"vertex": 1, "momentum": "p2"},
            {"vertex": 6, "momentum": "p3"}, {"vertex": 5, "momentum": "p4"},
        ],
        "kinematics": {"momentum_conservation": True, "k": _massless_four_point()},
    }


def _massless_four_point() -> dict:
    # k_ij = p_i·p_j with p_i^2 = 0, s = 2 k12, t = 2 k13, u = -s - t
    return {
        "1,1": "0", "2,2": "0", "3,3": "0", "4,4": "0",
        "1,2": "s/2", "3,4": "s/2",
        "1,3": "t/2", "2,4": "t/2",
        "1,4": "-s/2 - t/2", "2,3": "-s/2 - t/2",
    }


BANANA_U = "x2*x3 + x1*x3 + x1*x2"
BANANA_F = [
    ("x1*x2*x3", "m1 + m2 + m3 - s"), ("x2^2*x3", "m2"), ("x2*x3^2", "m3"), ("x1^2*x2", "m1"),
    ("x1^2*x3", "m1"), ("x1*x2^2", "m2"), ("x1*x3^2", "m3"),
]

DOUBLE_BOX_F = [
    ("x1^2*x6", "m1"), ("x1^2*x7", "m1"), ("x4*x1^2", "m1"), ("x5*x1^2", "m1"),
    ("x2^2*x6", "m2"), ("x2^2*x7", "m2"), ("x4*x2^2", "m2"), ("x5*x2^2", "m2"),
    ("x1*x6*x7", "m1"), ("x2*x1*x6", "m1 + m2"), ("x2*x1*x7", "m1 + m2"),
    ("x3*x1*x6", "m1 - s"), ("x3*x1*x7", "m1 - s"), ("x4*x1*x7", "m1"),
    ("x4*x2*x1", "m1 + m2"), ("x4*x3*x1", "m1 - s"), ("x4*x5*x1", "m1 - s"),
    ("x5*x1*x6", "m1"), ("x5*x2*x1", "m1 + m2"), ("x5*x3*x1", "m1 - s"),
    ("x2*x3*x6", "m2"), ("x2*x3*x7", "m2"), ("x2*x6*x7", "m2"), ("x4*x2*x3", "m2"),
    ("x4*x2*x7", "m2 - t"), ("x4*x5*x2", "m2"), ("x5*x2*x3", "m2"),
    ("x5*x2*x6", "m2 + s + t"), ("x3*x6*x7", "-s"),
]

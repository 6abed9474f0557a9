from fractions import Fraction

import pytest

from sparsepolya.fixtures import hexagon, hexagon_factors, pentagon, running_f, running_h
from sparsepolya.polya import (SearchConfig, Status, certify_with_multiplier, classical_polya_certify,
                               face_positivity_diagnostics, newton_guard, sample_points, sparse_polya_certify,
                               verify_certificate)
from sparsepolya.polycore import SparsePoly, evaluate, mul, parse_poly


def test_sparse_running():
    c = sparse_polya_certify(running_f())
    assert c.status is Status.CERTIFIED and c.N == 14 and c.product_terms == 4096
    assert verify_certificate(running_f(), c)
    # the history's first entry is the input itself
    assert c.history[0][0] == (0,) and c.history[0][1]


def test_sparse_running_strict_matches():
    c = sparse_polya_certify(running_f(), SearchConfig(mode="strict_support"))
    assert c.N == 14 and c.product_terms == 4096
    assert verify_certificate(running_f(), c)


def test_classical_running_refuted_by_missing_vertex():
    c = classical_polya_certify(running_f())
    assert c.status is Status.REFUTED_NEWTON
    assert c.witness.value == 0 and "[0, 0, 3, 0]" in c.witness.note


def test_budget_overrun_is_unknown():
    c = sparse_polya_certify(running_f(), SearchConfig(n_max=5))
    assert c.status is Status.UNKNOWN
    assert c.offenders and all(v < 0 for _, v in c.offenders)


def test_vertex_precheck():
    f = parse_poly("-t1^2 + t1*t2 + t2^2", ("t1", "t2"))
    c = sparse_polya_certify(f)
    assert c.status is Status.REFUTED_WITNESS and c.witness.value == -1


def test_positive_input_certifies_at_zero():
    f = parse_poly("t1^2 + t1*t2 + t2^2", ("t1", "t2"))
    assert sparse_polya_certify(f).N == 0


def test_support_A_consistency():
    f = running_f()
    with pytest.raises(ValueError):
        sparse_polya_certify(f, SearchConfig(support_A=[(1, 0, 0, 0)], k=3))
    A = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    c = sparse_polya_certify(f, SearchConfig(support_A=A, k=3))
    assert c.status is Status.REFUTED_NEWTON


def test_classical_needs_homogeneous():
    with pytest.raises(ValueError):
        classical_polya_certify(parse_poly("t1 + 1", ("t1",)))


def test_hexagon_own_support():
    f = hexagon()
    c = sparse_polya_certify(f)
    assert c.N == 3 and verify_certificate(f, c)
    f1, f2 = hexagon_factors()
    assert mul(f1, f2) == f


def test_custom_multiplier_and_tamper():
    f = running_f()
    g = SparsePoly(4, {e: 1 for e in f.support()})
    c = certify_with_multiplier(f, g)
    assert c.N == 14 and not c.newton_guard
    assert verify_certificate(f, c)
    c.exponents = (13,)
    assert not verify_certificate(f, c)
    c.exponents = (14,)
    c.product_terms = 4095
    assert not verify_certificate(f, c)
    assert not verify_certificate(f + parse_poly("t1^3", f.names), c)


def test_negative_multiplier_refused():
    f = running_f()
    with pytest.raises(ValueError):
        certify_with_multiplier(f, parse_poly("t1 - t2", f.names))


def test_newton_guard_reports_vertex():
    f = running_h()
    A = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    assert newton_guard(f, A, 3) is None
    assert newton_guard(running_f(), A, 3) == (0, 0, 3, 0)


def test_face_diagnostics_find_bad_face():
    # negative near the diagonal; the two vertex truncations are squares
    f = parse_poly("t1^2 - 3*t1*t2 + t2^2", ("t1", "t2"))
    samples = face_positivity_diagnostics(f, 5, seed=1)
    assert {s.face for s in samples} == {(), (1,), (2,)}
    assert any(s.value <= 0 for s in samples if s.face == ())
    assert all(s.value > 0 for s in samples if s.face)


def test_sample_points_deterministic():
    assert sample_points(3, 4, 7) == sample_points(3, 4, 7)
    assert all(Fraction(1, 10) <= x <= 10 for p in sample_points(3, 20) for x in p)


def test_pentagon_sparse_certifies():
    f = pentagon()
    c = sparse_polya_certify(f)
    assert c.certified
    for p in sample_points(2, 50, 3):
        assert evaluate(f, p) > 0

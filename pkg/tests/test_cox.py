import pytest

from sparsepolya.cox import (CoxContext, SimplexProductRequired, cox_certify, cox_homogenize, cox_truncation_check,
                             irrelevant_membership_check, multihomogeneity_degrees, recompute_cox_target)
from sparsepolya.fixtures import (PENTAGON_NORMALS, PRISM_NORMALS, QUADRILATERAL_NORMALS, pentagon, quadrilateral,
                                  running_dehom)
from sparsepolya.geom import faces
from sparsepolya.polya import Status, sample_points, sparse_polya_certify, verify_certificate
from sparsepolya.polycore import SparsePoly, parse_poly

X5 = tuple(f"x{i}" for i in range(1, 6))


@pytest.fixture(scope="module")
def prism_ctx():
    return CoxContext.from_poly(running_dehom(), PRISM_NORMALS)


def test_homogenization_of_running_example(prism_ctx):
    fc = cox_homogenize(running_dehom(), prism_ctx)
    want = parse_poly("x3^2*x5 + x1*x5 - 19/10*x2*x3*x5 + x2^2*x5 + x3^2*x4 + x1*x4 - 19/10*x2*x3*x4"
                      " + x2^2*x4", X5)
    assert fc == want and len(fc) == 8


def test_vertex_monomial_lands_on_missing_facets(prism_ctx):
    P = prism_ctx.polytope
    for k, a in enumerate(P.vertices):
        fc = cox_homogenize(SparsePoly(3, {a: 1}), prism_ctx)
        (e,) = fc.support()
        assert {i + 1 for i, x in enumerate(e) if x} == set(range(1, 6)) - P.vertex_facets(k)


def test_pentagon_cox_term():
    ctx = CoxContext.from_poly(pentagon(), PENTAGON_NORMALS)
    fc = cox_homogenize(pentagon(), ctx)
    assert fc.coeff((0, 0, 2, 3, 2)) == 1
    assert irrelevant_membership_check(fc, ctx)


def test_support_outside_refused(prism_ctx):
    with pytest.raises(ValueError):
        cox_homogenize(parse_poly("t1^5", ("t1", "t2", "t3")), prism_ctx)


def test_truncation_identity_every_face(prism_ctx):
    f = running_dehom()
    pts = sample_points(5, 10, seed=4)
    for face in faces(prism_ctx.polytope):
        assert cox_truncation_check(f, prism_ctx, face.active, pts)
    with pytest.raises(ValueError):
        cox_truncation_check(f, prism_ctx, {4, 5}, pts)


def test_degrees_constant_on_prism(prism_ctx):
    fc = cox_homogenize(running_dehom(), prism_ctx)
    out = multihomogeneity_degrees(fc, prism_ctx, strict=True)
    for w, d in out:
        assert d == sum(a * b for a, b in zip(w, prism_ctx.b))


def test_degrees_quadrilateral_both_constant():
    ctx = CoxContext.from_poly(quadrilateral(), QUADRILATERAL_NORMALS)
    fc = cox_homogenize(quadrilateral(), ctx)
    out = dict(multihomogeneity_degrees(fc, ctx, weights=[(1, 1, 1, 2), (0, 1, 0, 1), (1, 0, 1, 0)]))
    assert out[(1, 1, 1, 2)] is not None and out[(0, 1, 0, 1)] is not None
    # (1,0,1,0) is not in ker(F), and the degree is not constant
    assert out[(1, 0, 1, 0)] is None
    with pytest.raises(ValueError):
        multihomogeneity_degrees(fc, ctx, weights=[(1, 0, 1, 0)], strict=True)


def test_membership_negative(prism_ctx):
    assert not irrelevant_membership_check(SparsePoly(5, {(1, 0, 0, 0, 0): 1}), prism_ctx)


def test_prism_certificates(prism_ctx):
    f = running_dehom()
    ci = cox_certify(f, prism_ctx, "irrelevant")
    assert ci.exponents == (38,) and ci.product_terms == 34320
    cp = cox_certify(f, prism_ctx, "primitive")
    assert cp.exponents == (38, 0) and cp.product_terms == 1716
    assert verify_certificate(f, ci) and verify_certificate(f, cp)
    assert sparse_polya_certify(f).certified


def test_cox_tamper_detected(prism_ctx):
    f = running_dehom()
    c = cox_certify(f, prism_ctx, "primitive")
    c.cox = dict(c.cox, v=[1, 1, 1, 1, 1])
    assert not verify_certificate(f, c)
    with pytest.raises(ValueError):
        recompute_cox_target(f, c)


def test_non_product_refused():
    ctx = CoxContext.from_poly(pentagon(), PENTAGON_NORMALS)
    with pytest.raises(SimplexProductRequired) as exc:
        cox_certify(pentagon(), ctx, "irrelevant")
    assert exc.value.condition == "partition"


def test_expert_v_must_be_kernel_vector(prism_ctx):
    with pytest.raises(ValueError):
        cox_certify(running_dehom(), prism_ctx, "irrelevant", v=(1, 1, 1, 1, 1), expert=True)
    with pytest.raises(ValueError):
        cox_certify(running_dehom(), prism_ctx, "irrelevant", v=(4, 2, 2, 2, 2))
    c = cox_certify(running_dehom(), prism_ctx, "irrelevant", v=(4, 2, 2, 2, 2), expert=True, n_max=10)
    # a non-standard v changes the target, and ten steps do not suffice
    assert c.status is Status.UNKNOWN and c.exponents == (10,) and c.cox["v"] == [4, 2, 2, 2, 2]


def test_newton_mismatch(prism_ctx):
    f = running_dehom() - parse_poly("1", ("t1", "t2", "t3"))
    c = cox_certify(f, prism_ctx, "irrelevant")
    assert c.status is Status.REFUTED_NEWTON


def test_positive_h_certifies_at_zero(prism_ctx):
    f = parse_poly("1 + t1 + t2^2 + t3 + t1*t3 + t2^2*t3", ("t1", "t2", "t3"))
    assert cox_certify(f, prism_ctx, "irrelevant").exponents == (0,)

"""Grassmannian cohomology: worked anchors, duality, and the
projective-space closed-form oracle."""

import random

from hypothesis import given, settings, strategies as st

from sheafchase.bwb import (
    BundleExpr,
    GrassmannSpace,
    SchurTerm,
    bott_cohomology,
    classify_twisted_wedge_tangent,
    euler_characteristic,
    line_bundle,
    mu_candidates,
    omega_expr,
    serre_dual,
    table,
    tangent_term,
    wedge_q_dual_expr,
)
from sheafchase.young import binomial

GR13 = GrassmannSpace(1, 3)


def projective_bott_number(p: int, q: int, t: int, n: int) -> int:
    """Closed-form h^p(P^n, Omega^q(t)): independent binomial oracle."""
    if not (0 <= p <= n and 0 <= q <= n):
        return 0
    if t == 0 and p == q:
        return 1
    if p == 0 and t > q:
        return binomial(t + n - q, t) * binomial(t - 1, q)
    if p == n and t < q - n:
        return binomial(-t + q, -t) * binomial(-t - 1, n - q)
    return 0


def test_line_bundle_anchors():
    assert bott_cohomology(line_bundle(1, GR13), GR13).dimension == 6
    assert bott_cohomology(line_bundle(1, GR13), GR13).degree == 0
    res = bott_cohomology(line_bundle(-4, GR13), GR13)
    assert (res.degree, res.dimension) == (4, 1)
    for t in (-1, -2, -3):
        assert bott_cohomology(line_bundle(t, GR13), GR13).all_zero


def test_tangent_bundle_anchor():
    res = bott_cohomology(tangent_term(GR13), GR13)
    assert (res.degree, res.dimension) == (0, 15)


def test_cotangent_anchor():
    tbl = table(omega_expr(1, GR13), GR13, [0])
    nonzero = {(i, t): v for (i, t), v in tbl.items() if not v.is_zero}
    assert nonzero == {(1, 0): v for v in [tbl[(1, 0)]]}
    assert tbl[(1, 0)].exact_dim == 1


def test_omega_top_is_canonical():
    space = GrassmannSpace(1, 3)
    top = omega_expr(space.dim, space)
    assert table(top, space, [space.index]) [(0, space.index)].exact_dim == 1


def test_projective_space_oracle_spot():
    p3 = GrassmannSpace(0, 3)
    for q in range(4):
        tbl = table(omega_expr(q, p3), p3, range(-6, 7))
        for (p, t), v in tbl.items():
            assert (v.exact_dim or 0) == projective_bott_number(p, q, t, 3)


terms = st.tuples(
    st.lists(st.integers(-4, 4), min_size=2, max_size=2),
    st.lists(st.integers(-4, 4), min_size=2, max_size=2),
).map(
    lambda gb: SchurTerm(
        tuple(sorted(gb[0], reverse=True)), tuple(sorted(gb[1], reverse=True))
    )
)


@given(terms)
@settings(max_examples=80, deadline=None)
def test_serre_duality_property(term):
    space = GrassmannSpace(1, 3)
    res = bott_cohomology(term, space)
    dual = bott_cohomology(serre_dual(term, space), space)
    if res.all_zero:
        assert dual.all_zero
    else:
        assert dual.degree == space.dim - res.degree
        assert dual.dimension == res.dimension


def test_serre_duality_random_spaces():
    rng = random.Random(7)
    spaces = [GrassmannSpace(1, 3), GrassmannSpace(1, 4), GrassmannSpace(2, 4)]
    for _ in range(200):
        space = rng.choice(spaces)
        gamma = tuple(sorted((rng.randint(-4, 4) for _ in range(space.rank_q)), reverse=True))
        beta = tuple(sorted((rng.randint(-4, 4) for _ in range(space.rank_s)), reverse=True))
        term = SchurTerm(gamma, beta)
        res = bott_cohomology(term, space)
        dual = bott_cohomology(serre_dual(term, space), space)
        if res.all_zero:
            assert dual.all_zero
        else:
            assert (dual.degree, dual.dimension) == (space.dim - res.degree, res.dimension)


def test_euler_characteristic_consistency():
    space = GrassmannSpace(1, 3)
    for expr in (omega_expr(1, space), wedge_q_dual_expr([1, 1], space)):
        for t in (-3, 0, 2):
            tbl = table(expr.twisted(t), space, [0])
            chi = sum(
                (-1) ** i * (tbl[(i, 0)].exact_dim or 0) for i in range(space.dim + 1)
            )
            assert chi == euler_characteristic(expr, space, t)


def test_bundle_expr_dual_twist_roundtrip():
    space = GrassmannSpace(2, 4)
    expr = omega_expr(2, space)
    assert expr.dual().dual() == expr
    assert expr.twisted(3).twisted(-3) == expr


def test_classifier_agrees_with_direct_computation_spot():
    space = GrassmannSpace(1, 4)
    for t in range(-6, 7):
        for nu in ((1,), (2,), (1, 1), (2, 1)):
            for mu in mu_candidates(nu, space):
                verdict = classify_twisted_wedge_tangent(mu, t, space)
                if verdict.all_zero:
                    from sheafchase.bwb import mu_term

                    assert bott_cohomology(mu_term(mu, t, space), space).all_zero

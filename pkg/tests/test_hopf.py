import cmath
import math
import random

import numpy as np
import pytest

from qhopf import (FockWindow, HopfOscillator, build_params, g_function,
                   interior_residual, proposition1_params, structure_function,
                   structure_function_values)
from qhopf.expalg import ExpPoly


def random_monomial(algebra, rng, max_rs=3, max_power=2):
    r, s = rng.randint(0, max_rs), rng.randint(0, max_rs)
    mu = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3))
    k = rng.randint(0, max_power)
    c = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
    f = ExpPoly(1, {((mu, k),): c})
    return algebra.monomial(r, s, f)


# -------------------------------------------------------------------- params
def test_build_params_derived_scalars():
    p = build_params(0.5, 0.1, 0.7, 1.0)
    assert p.branch == "generic"
    assert p.x == pytest.approx(cmath.exp(0.2))
    assert p.y == pytest.approx(cmath.exp(0.3))
    assert p.lambda_sq == pytest.approx(-math.sinh(0.2) / math.sinh(0.28))


def test_build_params_branches():
    assert build_params(0.3, 0.3, 0.7, 1.0).branch == "degenerate_kappa"
    assert build_params(0.5, 0.1, 0.0, 1.0).branch == "gamma_zero"


def test_build_params_snaps_near_degenerate_inputs():
    p = build_params(0.3, 0.3 + 1e-14, 0.7, 1.0)
    assert p.branch == "degenerate_kappa" and p.kappa == 0
    q = build_params(0.5, 0.1, 1e-14, 1.0)
    assert q.branch == "gamma_zero" and q.gamma == 0


def test_build_params_rejects_zero_g0():
    with pytest.raises(ValueError):
        build_params(0.5, 0.1, 0.7, 0.0)


def test_build_params_rejects_singular_sinh():
    # kappa*gamma = i*pi makes sinh vanish
    with pytest.raises(ValueError):
        build_params(1.0, 0.0, complex(0, math.pi), 1.0)


# ------------------------------------------------------------------ g_function
def test_g_hermitian_family_value(prop1_params):
    g = g_function(prop1_params)
    assert g(1) == pytest.approx(math.cosh(1.08) / math.cosh(0.48))


def test_g_at_gamma_doubling(generic_params):
    g = g_function(generic_params)
    p = generic_params
    assert g(p.gamma) == pytest.approx(2 * cmath.cosh(p.kappa * p.gamma) * p.g0)


def test_g_degenerate_at_gamma(degenerate_params):
    g = g_function(degenerate_params)
    assert g(degenerate_params.gamma) == pytest.approx(2.0)


def test_g_gamma_zero_and_flat_line():
    p = build_params(0.5, 0.1, 0.0, 2.0)
    g = g_function(p)
    assert g(1.3) == pytest.approx(2.0 * math.sinh(0.4 * 1.3) / 0.4)
    flat = build_params(0.2, 0.2, 0.0, 3.0)
    assert g_function(flat)(2) == pytest.approx(6.0)


# ---------------------------------------------------------- structure function
def test_structure_function_values(prop1_params):
    f = structure_function(prop1_params)
    assert f(0) == 0
    assert f(1) == pytest.approx(1.0)  # F(1) = G(0)
    assert f(2) == pytest.approx(1 + math.cosh(1.08) / math.cosh(0.48))
    oracle = structure_function_values(prop1_params, 5)
    for n in range(6):
        assert f(n) == pytest.approx(oracle[n])


@pytest.mark.parametrize("fixture", ["prop1_params", "generic_params",
                                     "generic_complex_params", "degenerate_params",
                                     "gamma_zero_params"])
def test_difference_equation_every_branch(fixture, request):
    p = request.getfixturevalue(fixture)
    f = structure_function(p)
    assert (f.shift(1) - f - g_function(p)).is_zero()


# -------------------------------------------------------------------- product
def test_basic_reordering(generic_params):
    alg = HopfOscillator(generic_params)
    a, ad, n = alg.lowering(), alg.raising(), alg.number_op()
    assert a * ad == ad * a + alg.from_function(alg.g)
    assert n * ad == ad * n + ad  # N adag = adag (N+1)
    assert n * a == a * n - a


def test_function_crossing_with_dense_oracle(generic_params):
    alg = HopfOscillator(generic_params)
    w = FockWindow(generic_params, 8)
    f = ExpPoly.exponential(0.6)
    lhs = alg.lowering() * alg.from_function(f)
    rhs = alg.from_function(f.shift(1)) * alg.lowering()
    assert lhs == rhs
    assert np.max(np.abs(w.represent(lhs) - w.represent(rhs))) < 1e-12


def test_product_associativity(generic_params):
    alg = HopfOscillator(generic_params)
    rng = random.Random(23)
    for _ in range(50):
        x, y, z = (random_monomial(alg, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_symbolic_vs_dense_products(prop1_params):
    alg = HopfOscillator(prop1_params)
    w = FockWindow(prop1_params, 10)
    rng = random.Random(29)
    for _ in range(15):
        x = random_monomial(alg, rng)
        y = random_monomial(alg, rng)
        margin = x.max_raise() + y.max_raise()
        if margin >= w.dim - 1:
            continue
        lhs = w.represent(x * y)
        rhs = w.represent(x) @ w.represent(y)
        assert interior_residual(lhs, rhs, margin) < 1e-10


# ------------------------------------------------------------------ coproduct
def test_coproduct_of_number(generic_params):
    alg = HopfOscillator(generic_params)
    d = alg.coproduct(alg.number_op())
    assert set(d.terms) == {((0, 0), (0, 0))}
    poly = d.terms[((0, 0), (0, 0))]
    expected = (ExpPoly.variable(2, 0) + ExpPoly.variable(2, 1)
                + ExpPoly.constant(generic_params.gamma, 2))
    assert poly == expected


def test_coproduct_of_exponential(generic_params):
    alg = HopfOscillator(generic_params)
    mu = 0.35
    d = alg.coproduct(alg.from_function(ExpPoly.exponential(mu)))
    poly = d.terms[((0, 0), (0, 0))]
    expected = (ExpPoly.exponential(mu, 2, 0) * ExpPoly.exponential(mu, 2, 1)
                * cmath.exp(mu * generic_params.gamma))
    assert poly == expected


def test_coproduct_of_one(generic_params):
    alg = HopfOscillator(generic_params)
    assert alg.coproduct(alg.one()) == alg.tensor_one(2)


def test_coproduct_is_homomorphism(generic_params):
    alg = HopfOscillator(generic_params)
    rng = random.Random(31)
    for _ in range(8):
        x = random_monomial(alg, rng, max_rs=2, max_power=1)
        y = random_monomial(alg, rng, max_rs=2, max_power=1)
        lhs = alg.coproduct(x * y)
        rhs = alg.tensor_product(alg.coproduct(x), alg.coproduct(y))
        assert lhs == rhs


# --------------------------------------------------------------------- counit
def test_counit_values(generic_params):
    alg = HopfOscillator(generic_params)
    assert alg.counit(alg.lowering()) == 0
    assert alg.counit(alg.raising()) == 0
    assert alg.counit(alg.number_op()) == -generic_params.gamma
    assert abs(alg.counit(alg.from_function(alg.g))) < 1e-14


def test_counit_contracts_three_legs(generic_params):
    # (counit (x) id (x) id) applied to (coproduct (x) id) coproduct(x)
    # collapses back to coproduct(x)
    alg = HopfOscillator(generic_params)
    for x in (alg.raising(), alg.number_op()):
        d = alg.coproduct(x)
        dd = alg.coproduct_on_leg(d, 0)
        assert alg.counit_on_leg(dd, 0) == d


def test_counit_is_multiplicative(generic_params):
    alg = HopfOscillator(generic_params)
    rng = random.Random(37)
    for _ in range(10):
        x = random_monomial(alg, rng, max_rs=2)
        y = random_monomial(alg, rng, max_rs=2)
        assert alg.counit(x * y) == pytest.approx(alg.counit(x) * alg.counit(y),
                                                  abs=1e-12)


# ------------------------------------------------------------------- antipode
def test_antipode_of_number(generic_params):
    alg = HopfOscillator(generic_params)
    p = generic_params
    s_n = alg.antipode(alg.number_op())
    expected = alg.from_function(
        -ExpPoly.variable() + ExpPoly.constant(-2 * p.gamma))
    assert s_n == expected
    assert alg.antipode(alg.one()) == alg.one()


def test_antipode_antihomomorphism(generic_params):
    alg = HopfOscillator(generic_params)
    a, ad = alg.lowering(), alg.raising()
    lhs = alg.antipode(a * ad)
    rhs = alg.antipode(ad) * alg.antipode(a)
    assert lhs == rhs
    # dense-matrix oracle at dimension 8
    w = FockWindow(generic_params, 8)
    assert interior_residual(w.represent(lhs), w.represent(rhs), 2) < 1e-12
    rng = random.Random(41)
    for _ in range(10):
        x = random_monomial(alg, rng, max_rs=2)
        y = random_monomial(alg, rng, max_rs=2)
        assert alg.antipode(x * y) == alg.antipode(y) * alg.antipode(x)


def test_counit_after_antipode(generic_params):
    alg = HopfOscillator(generic_params)
    rng = random.Random(43)
    for _ in range(10):
        x = random_monomial(alg, rng, max_rs=2)
        assert alg.counit(alg.antipode(x)) == pytest.approx(alg.counit(x), abs=1e-12)


# -------------------------------------------------------------------- casimir
def test_casimir_commutes(generic_params):
    alg = HopfOscillator(generic_params)
    c = alg.casimir()
    for x in (alg.lowering(), alg.raising(), alg.number_op()):
        assert (c * x - x * c).is_zero()


def test_casimir_vanishes_in_fock(generic_params):
    alg = HopfOscillator(generic_params)
    w = FockWindow(generic_params, 12)
    assert np.max(np.abs(w.represent(alg.casimir()))) < 1e-10


# ----------------------------------------------------------------- axiom suite
@pytest.mark.parametrize("fixture", ["prop1_params", "generic_params",
                                     "generic_complex_params", "degenerate_params",
                                     "gamma_zero_params"])
def test_axioms_pass_on_every_branch(fixture, request):
    p = request.getfixturevalue(fixture)
    rep = HopfOscillator(p).check_axioms()
    assert rep.passed, [c.name for c in rep.failures()]
    assert rep.max_residual() < 1e-12


def test_perturbed_counit_fails(prop1_params):
    p = prop1_params
    rep = HopfOscillator(p, counit_point=-p.gamma + 0.1).check_axioms()
    failed = {c.name for c in rep.failures()}
    assert any(name.startswith("counit-") for name in failed)
    assert not any(name.startswith("coassociativity") for name in failed)


def test_constant_g_breaks_compatibility(generic_params):
    rep = HopfOscillator(generic_params, g=ExpPoly.constant(1.0)).check_axioms()
    failed = {c.name for c in rep.failures()}
    assert "coproduct-commutator[a,adag]" in failed
    assert not any(name.startswith("coassociativity") for name in failed)


# ------------------------------------------------------- coefficient identities
def test_weights_normalize_at_minus_gamma(generic_complex_params):
    from qhopf import coproduct_weights
    p = generic_complex_params
    for _, c in coproduct_weights(p).named():
        assert c(-p.gamma) == pytest.approx(1.0)


def test_antipode_weight_identities(generic_complex_params):
    from qhopf import antipode_weights, coproduct_weights
    p = generic_complex_params
    w = coproduct_weights(p)
    aw = antipode_weights(p)
    assert w.raise_right.substitute([({0: -1.0}, 1 - 2 * p.gamma)], 1) \
        == w.raise_left * aw.raising
    assert w.raise_left.substitute([({0: -1.0}, -2 * p.gamma)], 1) \
        == w.raise_right.shift(-1) * aw.raising
    assert w.lower_right.substitute([({0: -1.0}, -1 - 2 * p.gamma)], 1) \
        == w.lower_left * aw.lowering
    assert w.lower_left.substitute([({0: -1.0}, -2 * p.gamma)], 1) \
        == w.lower_right.shift(1) * aw.lowering

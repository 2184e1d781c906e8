import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centress.constructions import TwistedConfig, TwistedElement, to_matrix
from centress.constructions.twisted import (
    RatMatrix, commutator_matrix, f_matrix, pi_matrix, random_element, random_nonzero_element,
)
from centress.errors import DomainError
from centress.finalg import Method, Verdict
from centress.valuation import (
    Comparison, ce_witness, ce_witness_check, centrality_agreement_check, extended_suite,
    ideal_chain_check, ideal_compare, invert, is_central, quasi_regular_check,
    representation_check, solve, structure_suite, unit_absorbs_radical_check,
    unit_characterization_check, uniform_check, valuation, valuation_additivity_check,
)


def T(cfg, *coeffs):
    return TwistedElement(cfg, coeffs)


@pytest.fixture(scope="module")
def c52():
    return TwistedConfig(5, 2)


# -- valuation, inverses, centrality ------------------------------------------------------------

def test_valuation_examples(c52):
    x = c52.x
    assert valuation(T(c52, 0, "y")) == 1
    assert valuation(T(c52, x, 0)) == 0
    assert valuation(TwistedElement.zero(c52)) == 2


def test_invert_examples(c52):
    x, y = c52.x, c52.y
    one = TwistedElement.one(c52)
    assert invert(one) == one
    assert invert(T(c52, x, 0)) == T(c52, 1 / x, 0)
    a = T(c52, x * y, 0)
    b = invert(a)
    assert b == T(c52, 1 / (x * y), 1 / (x ** 2 * y ** 2))
    assert a * b == one == b * a
    assert to_matrix(a) * to_matrix(b) == RatMatrix.identity(3, 5)


def test_invert_rejects_non_units():
    cfg = TwistedConfig(3, 3)
    with pytest.raises(DomainError) as info:
        invert(T(cfg, 0, 0, "x"))
    assert info.value.valuation == 2


def test_centrality_examples(c52):
    x, y = c52.x, c52.y
    assert is_central(T(c52, 0, x))
    a = T(c52, x, 0)
    assert not is_central(a)
    M = commutator_matrix(to_matrix(a), f_matrix(c52, y))
    assert M == pi_matrix(c52)
    c3 = TwistedConfig(3, 2)
    b = T(c3, c3.x ** 3, 0)
    assert is_central(b)
    for g in (f_matrix(c3, c3.x), f_matrix(c3, c3.y), pi_matrix(c3)):
        assert commutator_matrix(to_matrix(b), g).is_zero()


def test_ce_witness_examples(c52):
    x, y = c52.x, c52.y
    assert ce_witness(T(c52, 0, 1)) == (T(c52, 1, 0), T(c52, 0, 1))
    assert ce_witness(T(c52, x, 0)) == (T(c52, 0, 1), T(c52, 0, x))
    assert ce_witness(T(c52, x, y ** 5)) == (T(c52, 0, 1), T(c52, 0, x))
    with pytest.raises(DomainError):
        ce_witness(TwistedElement.zero(c52))


# -- division and ideals ------------------------------------------------------------------------

def test_solve_example(c52):
    x = c52.x
    z = solve(T(c52, x, 0), T(c52, 0, 1))
    assert z == T(c52, 0, 1 / x)
    assert solve(T(c52, 0, 1), T(c52, 1, 0)) is None


def test_right_and_left_division_differ():
    cfg = TwistedConfig(5, 2)
    a, w = T(cfg, cfg.x, 0), T(cfg, cfg.y, 0)
    zr, zl = solve(a, w, "right"), solve(a, w, "left")
    assert a * zr == w and zl * a == w
    assert zr != zl


def test_ideal_compare_examples(c52):
    x, y = c52.x, c52.y
    r = ideal_compare(T(c52, x, 0), T(c52, 0, 1))
    assert r.relation is Comparison.LEFT_CONTAINS
    assert T(c52, x, 0) * r.second_in_first == T(c52, 0, 1)
    a = T(c52, x + y, 1)
    assert ideal_compare(a, a).relation is Comparison.EQUAL
    assert ideal_compare(T(c52, 0, y), T(c52, 0, x)).relation is Comparison.EQUAL
    assert ideal_compare(T(c52, 0, 1), T(c52, x, 0), "left").relation is Comparison.RIGHT_CONTAINS


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5]), st.integers(2, 4))
def test_units_invert_on_both_sides(seed, p, n):
    cfg = TwistedConfig(p, n)
    a = random_element(cfg, random.Random(seed))
    one = TwistedElement.one(cfg)
    if valuation(a) == 0:
        b = invert(a)
        assert a * b == one and b * a == one
    else:
        assert solve(a, one, "right") is None and solve(a, one, "left") is None


@pytest.mark.parametrize("n,va,vb", [(3, 1, 1), (2, 1, 1), (4, 0, 2)])
def test_valuation_additivity_examples(n, va, vb):
    cfg = TwistedConfig(3, n)
    rng = random.Random(n)
    for _ in range(5):
        a = TwistedElement.pi_power(cfg, va) * random_nonzero_unit(cfg, rng)
        b = TwistedElement.pi_power(cfg, vb) * random_nonzero_unit(cfg, rng)
        assert valuation(a) == va and valuation(b) == vb
        assert valuation(a * b) == min(va + vb, n)


def random_nonzero_unit(cfg, rng):
    a = random_nonzero_element(cfg, rng)
    while valuation(a) != 0:
        a = random_nonzero_element(cfg, rng)
    return a


def test_unit_absorbs_radical_example(c52):
    x = c52.x
    assert solve(T(c52, 1, 0), T(c52, 0, x)) == T(c52, 0, x)
    z = solve(T(c52, x, 0), T(c52, 0, 1))
    assert T(c52, x, 0) * z == T(c52, 0, 1) and valuation(z) >= 1


# -- randomized suites --------------------------------------------------------------------------

CHECKS = [ce_witness_check, unit_characterization_check, valuation_additivity_check,
          quasi_regular_check, uniform_check, unit_absorbs_radical_check,
          centrality_agreement_check, representation_check]


@pytest.mark.parametrize("check", CHECKS, ids=lambda f: f.__name__)
@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 4)])
def test_randomized_checks_pass(check, p, n):
    cert = check(TwistedConfig(p, n), 30, 11)
    assert cert.verdict is Verdict.TRUE, cert.detail
    assert cert.method is Method.RANDOMIZED and cert.seed == 11 and cert.samples == 30


@pytest.mark.parametrize("side", ["right", "left"])
def test_ideal_chain_has_n_plus_one_levels(side):
    cfg = TwistedConfig(3, 3)
    cert = ideal_chain_check(cfg, side, 30, 5)
    assert cert.holds
    assert "4 levels" in cert.detail


def test_suites_are_reproducible():
    cfg = TwistedConfig(3, 2)
    a = [c.to_json() for c in structure_suite(cfg, 20, 9) + extended_suite(cfg, 20, 9)]
    b = [c.to_json() for c in structure_suite(cfg, 20, 9) + extended_suite(cfg, 20, 9)]
    for x, y in zip(a, b):
        x.pop("millis"), y.pop("millis")
    assert a == b
    assert all(c["verdict"] == "true" for c in a)

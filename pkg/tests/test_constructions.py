import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centress.constructions import (
    GroupTable, RatMatrix, TwistedConfig, TwistedElement, build, cyclic_group, dihedral_group_d4,
    exterior_algebra, f_matrix, group_algebra, group_by_name, identity_suite, matrix_algebra,
    parse_build_spec, pi_matrix, product_equals, quaternion_group, to_matrix, twisted_mul,
)
from centress.constructions.twisted import (
    commutator_matrix, matrix_product_equals, random_element, random_nonzero_element,
)
from centress.errors import AlgebraAxiomError, ConfigurationError
from centress.exactalg import D1, D2, RatFunc, parse_ratfunc, random_ratfunc
from centress.finalg import Verdict, center, jacobson_radical
from centress.finalg.structure import local


def cfg(p=5, n=2):
    return TwistedConfig(p, n)


def T(c, *coeffs):
    return TwistedElement(c, coeffs)


def E(c, i, j):
    return RatMatrix.unit(c.N, c.p, i, j)


# -- groups ----------------------------------------------------------------------------------

def test_quaternion_group_table():
    G = quaternion_group()
    assert G.order == 8
    assert sorted(G.names[i] for i in G.center()) == ["-1", "1"]
    i, j, k = (G.names.index(s) for s in ("i", "j", "k"))
    assert G.names[G.mul(i, j)] == "k" and G.names[G.mul(j, i)] == "-k"
    assert G.names[G.mul(i, i)] == "-1"
    assert len(G.conjugacy_classes()) == 5


def test_group_axiom_violations_are_reported():
    with pytest.raises(AlgebraAxiomError) as info:
        GroupTable(("e", "a", "b"), ((0, 1, 2), (1, 2, 0), (2, 1, 0)))
    assert info.value.triple is not None
    with pytest.raises(AlgebraAxiomError):
        GroupTable(("e", "a"), ((0, 1), (1, 1)))


def test_other_groups():
    assert dihedral_group_d4().order == 8 and len(dihedral_group_d4().center()) == 2
    assert cyclic_group(5).order == 5
    with pytest.raises(ConfigurationError):
        cyclic_group(17)
    with pytest.raises(ConfigurationError):
        group_by_name("s3")


# -- finite builders --------------------------------------------------------------------------

def test_q8_group_algebra_invariants():
    A = group_algebra(quaternion_group(), 2)
    assert A.dim == 8 and not A.is_commutative()
    J = jacobson_radical(A)
    assert center(A).rank == 5 and J.rank == 7
    assert A.dim - J.rank == 1
    assert local(A).holds


def test_c2_is_commutative_and_c3_semisimple_over_f2():
    C2 = build("group:c2,p=2")
    assert C2.is_commutative() and jacobson_radical(C2).rank == 1
    assert jacobson_radical(build("group:c3,p=2")).is_zero()


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_exterior_relations(d):
    A = exterior_algebra(3, d)
    assert A.dim == 2**d
    gens = [A.basis_element(A.basis_names.index(f"v{i + 1}")) for i in range(d)]
    for a in gens:
        assert (a * a).is_zero()
        for b in gens:
            assert a * b == -(b * a)


def test_exterior_sign_example():
    A = exterior_algebra(3, 2)
    v1, v2 = (A.basis_element(A.basis_names.index(s)) for s in ("v1", "v2"))
    v12 = A.basis_element(A.basis_names.index("v1v2"))
    assert v1 * v2 == v12 and v2 * v1 == -v12


def test_matrix_algebra():
    A = matrix_algebra(2, 2)
    assert A.dim == 4 and center(A).rank == 1
    assert matrix_algebra(2, 1).dim == 1
    assert jacobson_radical(matrix_algebra(3, 3)).is_zero()
    e = {n: A.basis_element(i) for i, n in enumerate(A.basis_names)}
    assert e["e12"] * e["e21"] == e["e11"] and (e["e12"] * e["e12"]).is_zero()


def test_builder_limits():
    with pytest.raises(ConfigurationError):
        exterior_algebra(3, 7)
    with pytest.raises(ConfigurationError):
        matrix_algebra(4, 2)


# -- build specs ------------------------------------------------------------------------------

@pytest.mark.parametrize("text,name", [
    ("exterior:p=3,d=3", "Lambda(F_3^3)"), ("group:q8,p=2", "F_2[Q8]"),
    ("matrix:p=2,N=2", "M_2(F_2)"), ("truncpoly:p=3,n=3", "F_3[t]/(t^3)"),
    ("diag:p=2,k=2", "F_2xF_2"), ("group:c3,p=2", "F_2[C3]"),
])
def test_build_specs(text, name):
    assert build(text).name == name
    assert str(parse_build_spec(text)) == text


def test_prop29_spec_gives_config():
    assert build("prop29:p=5,n=3") == TwistedConfig(5, 3)


@pytest.mark.parametrize("bad", ["exterior", "ring:p=2", "exterior:p=3", "exterior:p=3,d=x",
                                 "group:p=2", "matrix:p=2,N=2,q=1", "exterior:q8,p=3,d=2"])
def test_bad_build_specs(bad):
    with pytest.raises(ConfigurationError):
        parse_build_spec(bad)


# -- the twisted ring: matrices ----------------------------------------------------------------

@pytest.mark.parametrize("p,n", [(4, 2), (5, 1), (5, 9)])
def test_config_validation(p, n):
    with pytest.raises(ConfigurationError):
        TwistedConfig(p, n)


def test_f_of_one_is_identity():
    c = cfg(5, 3)
    assert f_matrix(c, 1) == RatMatrix.identity(c.N, c.p)


def test_f_of_x_for_n2():
    c = cfg(5, 2)
    x = c.x
    assert f_matrix(c, x) == RatMatrix.identity(3, 5) * x + E(c, 1, 2)


def test_commutator_of_f_x_and_f_y_for_n2():
    c = cfg(5, 2)
    assert commutator_matrix(f_matrix(c, c.x), f_matrix(c, c.y)) == E(c, 1, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pi_powers(n):
    c = cfg(3, n)
    pi = pi_matrix(c)
    assert pi ** (n - 1) == E(c, 1, c.N)
    assert (pi ** n).is_zero()
    if n == 3:
        assert pi == E(c, 1, 3) + E(c, 3, 5)
        assert pi ** 2 == E(c, 1, 5)


def test_f_is_additive_and_twisted_multiplicative():
    c = cfg(3, 3)
    rng = random.Random(7)
    top = pi_matrix(c) ** (c.n - 1)
    for _ in range(10):
        a, b = random_ratfunc(rng, 3), random_ratfunc(rng, 3)
        assert f_matrix(c, a + b) == f_matrix(c, a) + f_matrix(c, b)
        assert f_matrix(c, a) * f_matrix(c, b) == f_matrix(c, a * b) + top * (D1(a) * D2(b))


@pytest.mark.parametrize("p,n", [(2, 2), (3, 3), (5, 4)])
def test_identity_suite(p, n):
    certs = identity_suite(cfg(p, n), samples=10)
    assert [c.verdict for c in certs] == [Verdict.TRUE] * 4


# -- the twisted ring: coefficient form --------------------------------------------------------

def test_twisted_product_examples():
    c = cfg(5, 2)
    x, y = c.x, c.y
    assert twisted_mul(T(c, x, 0), T(c, y, 0)) == T(c, x * y, 1)
    assert twisted_mul(T(c, y, 0), T(c, x, 0)) == T(c, x * y, 0)
    b = T(c, x + y, "1/x")
    assert TwistedElement.one(c) * b == b == b * TwistedElement.one(c)


def test_to_matrix_examples():
    c = cfg(5, 2)
    assert to_matrix(T(c, 1, 0)) == RatMatrix.identity(3, 5)
    assert to_matrix(T(c, 0, 1)) == E(c, 1, 3)


def test_parse_and_print_round_trip():
    c = cfg(3, 3)
    a = TwistedElement.parse(c, "(x + y; 1/x; y^2)")
    assert TwistedElement.parse(c, str(a)) == a
    with pytest.raises(ConfigurationError):
        TwistedElement.parse(c, "x; y")
    with pytest.raises(ConfigurationError):
        T(c, 1, 2)


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 4)])
def test_to_matrix_is_a_ring_homomorphism(p, n):
    c = cfg(p, n)
    rng = random.Random(p * 10 + n)
    for _ in range(15):
        a, b = random_element(c, rng), random_element(c, rng)
        assert to_matrix(a + b) == to_matrix(a) + to_matrix(b)
        assert to_matrix(a * b) == to_matrix(a) * to_matrix(b)


def test_to_matrix_is_injective_on_samples():
    c = cfg(3, 3)
    rng = random.Random(1)
    for _ in range(20):
        a = random_nonzero_element(c, rng)
        assert not to_matrix(a).is_zero()


def test_lazy_product_tests_detect_errors():
    c = cfg(3, 3)
    rng = random.Random(3)
    for _ in range(10):
        a, b = random_element(c, rng), random_element(c, rng)
        ab = a * b
        assert product_equals(a, b, ab)
        wrong = ab + TwistedElement.pi_power(c, rng.randrange(c.n))
        assert not product_equals(a, b, wrong)
        Ma, Mb = to_matrix(a), to_matrix(b)
        assert matrix_product_equals(Ma, Mb, to_matrix(ab))
        assert not matrix_product_equals(Ma, Mb, to_matrix(wrong))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5]), st.integers(2, 4))
def test_twisted_ring_axioms(seed, p, n):
    c = cfg(p, n)
    rng = random.Random(seed)
    a, b, d = (random_element(c, rng, max_degree=2) for _ in range(3))
    assert (a * b) * d == a * (b * d)
    assert a * (b + d) == a * b + a * d
    assert (a + b) * d == a * d + b * d


def test_scalar_coercions():
    c = cfg(5, 2)
    assert c.scalar("x^2") == c.x ** 2
    assert c.scalar(7) == RatFunc.constant(5, 2)
    assert c.scalar(parse_ratfunc("y", 5)) == c.y
    assert c.describe() == "prop29:p=5,n=2"

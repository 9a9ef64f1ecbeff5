import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import legendre_symbol, n_order, primerange

from wgcs.gf import (
    ExtensionCapError,
    elem_arith,
    is_irreducible,
    is_irreducible_trial,
    legendre,
    make_ext_field,
    mult_order,
    ord_mod,
    primitive_nth_root,
    smallest_irreducible,
)
from wgcs.polyalg import Poly


def test_prime_field_basics():
    F = make_ext_field(7, 1)
    assert F(3) * F(5) == F(1)
    assert F(1) / F(3) == F(5)
    assert elem_arith(F(1), F(3), "div") == F(5)


def test_degree_one_is_prime_field():
    F = make_ext_field(2, 1)
    assert F.order == 2 and F.m == 1


def test_gf8_reduction():
    F = make_ext_field(2, 3)
    assert F.modulus == Poly([1, 1, 0, 1], 2)
    x = F.gen()
    assert x * x**2 == F([1, 1])


def test_smallest_cubic_by_exhaustion():
    irreducible = [Poly([a, b, c, 1], 2) for c in (0, 1) for b in (0, 1) for a in (0, 1)]
    irreducible = [f for f in irreducible if is_irreducible_trial(f)]
    assert smallest_irreducible(2, 3) in irreducible
    assert smallest_irreducible(2, 3) == Poly([1, 1, 0, 1], 2)


def test_degree_15_modulus():
    F = make_ext_field(2, 15)
    assert is_irreducible_trial(F.modulus)
    assert F.order - 1 == 32767


@pytest.mark.parametrize("p,m", [(2, 4), (2, 6), (3, 2), (3, 4), (5, 3), (7, 2)])
def test_rabin_agrees_with_trial_division(p, m):
    for k in range(min(p**m, 400)):
        low = [(k // p**i) % p for i in range(m)]
        f = Poly(low + [1], p)
        assert is_irreducible(f) == is_irreducible_trial(f), f


def test_cap_is_enforced():
    with pytest.raises(ExtensionCapError):
        make_ext_field(2, 31)
    assert make_ext_field(2, 31, cap=31).m == 31


@pytest.mark.parametrize("p,a,want", [(7, 1, 1), (7, 3, 6), (13, 5, 4)])
def test_mult_order(p, a, want):
    assert mult_order(make_ext_field(p, 1)(a)) == want


@pytest.mark.parametrize("q,n,want", [(2, 7, 3), (2, 217, 15), (5, 1, 1), (3, 1, 1)])
def test_ord_mod(q, n, want):
    assert ord_mod(q, n) == want


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("n1,n2", [(7, 13), (7, 19), (7, 31), (13, 19), (19, 43)])
def test_ord_mod_is_lcm_and_matches_sympy(q, n1, n2):
    assert ord_mod(q, n1 * n2) == np.lcm(ord_mod(q, n1), ord_mod(q, n2))
    assert ord_mod(q, n1 * n2) == n_order(q, n1 * n2)


def _check_root(F, n):
    beta = primitive_nth_root(F, n)
    assert beta**n == F.one()
    for r in primerange(2, n + 1):
        if n % r == 0:
            assert beta ** (n // r) != F.one()


def test_primitive_roots():
    _check_root(make_ext_field(2, 3), 7)
    assert primitive_nth_root(make_ext_field(5, 1), 1) == make_ext_field(5, 1).one()
    _check_root(make_ext_field(2, 15), 217)
    beta = primitive_nth_root(make_ext_field(2, 3), 7)
    assert mult_order(beta) == 7


def test_legendre_matches_sympy():
    for p in primerange(3, 400):
        for a in range(1, 30):
            if a % p:
                assert legendre(a, p) == legendre_symbol(a, p)


def test_legendre_rejects_composite():
    with pytest.raises(ValueError):
        legendre(2, 9)


FIELDS = [(2, 5), (3, 3), (5, 2), (2, 12)]


@st.composite
def triples(draw):
    p, m = draw(st.sampled_from(FIELDS))
    coords = st.lists(st.integers(0, p - 1), min_size=m, max_size=m)
    F = make_ext_field(p, m)
    return F, F(draw(coords)), F(draw(coords)), F(draw(coords))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero()
    if not a.is_zero():
        assert a * a.inverse() == F.one()
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(triples())
def test_frobenius(t):
    F, a, _, _ = t
    assert a**F.order == a

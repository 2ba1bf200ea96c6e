import pytest
from hypothesis import given, settings, strategies as st

from jacsplit.fields import make_field
from jacsplit.poly import (
    Poly, RingMismatch, dickson, dickson_identity_holds, factor_x_pow_r_minus_1_over_F2,
    irreducibles_over_F2,
)

F5 = make_field(5)
coeff_lists = st.lists(st.integers(-20, 20), max_size=6)


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_integer_ring_axioms(a, b, c):
    A, B, C = Poly(a), Poly(b), Poly(c)
    assert A * (B + C) == A * B + A * C
    assert (A * B) * C == A * (B * C)
    assert A - A == Poly([])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 4), max_size=7), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_field_division(a, b):
    A, B = Poly(a, F5), Poly(b, F5)
    if not B:
        return
    q, r = A.divmod(B)
    assert q * B + r == A
    assert r.degree < B.degree


def test_integer_division_needs_monic():
    with pytest.raises(ValueError):
        Poly([1, 2, 3]).divmod(Poly([1, 2]))
    q, r = Poly([-1, 0, 0, 1]).divmod(Poly([-1, 1]))
    assert q == Poly([1, 1, 1]) and not r


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Poly([1], F5) + Poly([1], make_field(7))


def test_eval_and_compose():
    f = Poly([1, 2, 3])
    assert f(2) == 17
    assert f.compose(Poly([0, 0, 1])) == Poly([1, 0, 2, 0, 3])


def test_format():
    assert Poly([729, 38, 1]).format() == "T^2 + 38*T + 729"
    assert Poly([1, -1]).format("x") == "-x + 1"


def test_squarefree():
    x = Poly.x(F5)
    assert (x * (x - 1)).is_squarefree()
    assert not (x * x * (x + 1)).is_squarefree()


def _dickson_by_definition(ell, a, F):
    # closed form sum_k ell/(ell-k) C(ell-k, k) (-a)^k x^(ell-2k)
    from math import comb

    cs = [0] * (ell + 1)
    for k in range(ell // 2 + 1):
        cs[ell - 2 * k] = ell * comb(ell - k, k) // (ell - k) * (-a) ** k
    return Poly(cs, F)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("ell", [3, 5, 7, 11, 13])
def test_dickson_closed_form(p, ell):
    F = make_field(p)
    for a in range(1, p):
        assert dickson(ell, F(a)) == _dickson_by_definition(ell, a, F)
        assert dickson_identity_holds(ell, F(a))


def test_dickson_char3_degenerates():
    F3 = make_field(3)
    assert dickson(3, F3.one()) == Poly.monomial(3, 1, F3)


def test_irreducible_counts():
    # Gauss: number of monic irreducibles of degree d over F_2
    assert [len(irreducibles_over_F2(d)) for d in range(1, 7)] == [2, 1, 2, 3, 6, 9]


@pytest.mark.parametrize("r", [3, 5, 7, 11, 13, 17, 23, 31])
def test_factor_x_r_minus_1(r):
    from jacsplit.artin import phi2

    F2 = make_field(2)
    fs = factor_x_pow_r_minus_1_over_F2(r)
    prod = Poly([1], F2)
    for f in fs:
        prod = prod * f
    assert prod == Poly.monomial(r, 1, F2) - 1
    assert fs[0] == Poly([1, 1], F2)
    assert all(f.degree == phi2(r) for f in fs[1:])
    assert len(fs) == 1 + (r - 1) // phi2(r)


def test_factor_order_r7():
    fs = factor_x_pow_r_minus_1_over_F2(7)
    assert [f.lift() for f in fs] == [Poly([1, 1]), Poly([1, 1, 0, 1]), Poly([1, 0, 1, 1])]

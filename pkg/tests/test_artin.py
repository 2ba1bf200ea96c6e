import pytest

from jacsplit.artin import (
    is_generator_quotient, mersenne_primes, multiplicative_order, order_in_quotient, phi2, search_ells,
)
from jacsplit.fields import is_prime


def _brute_quotient_order(a, ell):
    return min(k for k in range(1, ell) if pow(a, k, ell) in (1, ell - 1))


def test_orders():
    assert multiplicative_order(2, 7) == 3
    assert order_in_quotient(3, 7) == 3
    assert order_in_quotient(9, 5) == 1
    for ell in (5, 7, 11, 13, 17, 19, 23):
        for a in range(2, ell):
            assert order_in_quotient(a, ell) == _brute_quotient_order(a, ell)


def test_search_against_brute_force():
    brute = [ell for ell in range(5, 101) if is_prime(ell)
             and len({pow(3, k, ell) for k in range(ell)} | {-pow(3, k, ell) % ell for k in range(ell)}) == ell - 1]
    assert search_ells(3, 1, 100) == brute
    assert {5, 7, 11} <= set(brute)
    assert search_ells(3, 1, 4) == []


def test_certificate():
    c = is_generator_quotient(3, 2, 7)
    assert c.verdict and c.to_json()["generator"]
    assert not is_generator_quotient(3, 2, 5).verdict
    with pytest.raises(ValueError):
        is_generator_quotient(3, 1, 9)


def test_phi2_and_mersenne():
    assert [phi2(r) for r in (3, 5, 7, 11, 31)] == [2, 4, 3, 10, 5]
    assert mersenne_primes(200) == [3, 7, 31, 127]
    assert all(2 ** phi2(r) - 1 == r for r in mersenne_primes(200))

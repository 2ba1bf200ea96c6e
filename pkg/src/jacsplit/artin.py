"""Multiplicative orders and generator searches modulo small primes."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .fields import is_prime


def _check_odd_prime(n, name):
    if n % 2 == 0 or not is_prime(n):
        raise ValueError(f"{name}={n} must be an odd prime")


def multiplicative_order(a: int, n: int) -> int:
    a %= n
    if a == 0:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def order_in_quotient(a: int, ell: int) -> int:
    """Least k >= 1 with a^k = +-1 mod ell: the order of a in (Z/ell)^*/<-1>."""
    _check_odd_prime(ell, "ell")
    a %= ell
    if a == 0:
        raise ValueError(f"a is divisible by ell={ell}")
    k, x = 1, a
    while x not in (1, ell - 1):
        x = x * a % ell
        k += 1
    return k


@dataclass(frozen=True)
class GeneratorCertificate:
    base: int
    modulus: int
    order: int
    group_order: int

    @property
    def verdict(self) -> bool:
        return self.order == self.group_order

    def to_json(self):
        d = asdict(self)
        d["generator"] = self.verdict
        return d


def is_generator_quotient(p: int, i: int, ell: int) -> GeneratorCertificate:
    """Does p^i generate (Z/ell)^*/<-1>?"""
    if ell == p:
        raise ValueError("ell must differ from p")
    _check_odd_prime(ell, "ell")
    a = pow(p, i, ell)
    order = order_in_quotient(a, ell)
    cert = GeneratorCertificate(a, ell, order, (ell - 1) // 2)
    assert cert.group_order % cert.order == 0
    return cert


def search_ells(p: int, i: int, bound: int) -> list[int]:
    """Odd primes ell <= bound, ell != p, for which p^i generates the quotient."""
    if bound < 3:
        raise ValueError("bound must be >= 3")
    return [
        ell for ell in range(3, bound + 1, 2)
        if ell != p and is_prime(ell) and is_generator_quotient(p, i, ell).verdict
    ]


def phi2(r: int) -> int:
    """Multiplicative order of 2 modulo the odd prime r."""
    _check_odd_prime(r, "r")
    return multiplicative_order(2, r)


def mersenne_primes(bound: int) -> list[int]:
    if bound < 3:
        raise ValueError("bound must be >= 3")
    out = []
    k = 2
    while (1 << k) - 1 <= bound:
        m = (1 << k) - 1
        if is_prime(m):
            out.append(m)
        k += 1
    return out

"""Cartier operator of y^2 = x (x^(2 ell) + t x^ell + 1) and ordinarity.

On the basis x^(i-1) dx/y (i = 1..ell) the p-th-power-twisted Cartier matrix
is a permutation matrix times a diagonal matrix: column i has its only
nonzero entry c_{a(i)}(t) in row j(i), where the c_n are the coefficients of
(x^2 + t x + 1)^((p-1)/2) as polynomials in t.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb, gcd

from .fields import FieldDesc, FieldElem, is_prime, make_field
from .poly import Poly


class SingularParameter(ValueError):
    """t = +-2: the curve is singular."""


def _check_odd_prime(p):
    if p == 2 or not is_prime(p):
        raise ValueError(f"p={p} must be an odd prime")


def _c_by_expansion(p):
    h = (p - 1) // 2
    # bivariate power as {(deg_x, deg_t): coeff}
    cur = {(0, 0): 1}
    base = {(2, 0): 1, (1, 1): 1, (0, 0): 1}
    for _ in range(h):
        nxt = {}
        for (a, b), u in cur.items():
            for (c, d), v in base.items():
                key = (a + c, b + d)
                nxt[key] = (nxt.get(key, 0) + u * v) % p
        cur = nxt
    Fp = make_field(p)
    out = []
    for n in range(p):
        coeffs = [0] * (h + 1)
        for (a, b), u in cur.items():
            if a == n:
                coeffs[b] = u
        out.append(Poly(coeffs, Fp))
    return out


def _c_by_binomials(p):
    h = (p - 1) // 2
    Fp = make_field(p)
    out = []
    for n in range(p):
        coeffs = [0] * (h + 1)
        for n1 in range(n // 2 + 1):
            n2 = n - 2 * n1
            if n1 <= h and n2 <= h - n1:
                coeffs[n2] += comb(h, n1) * comb(h - n1, n2)
        out.append(Poly(coeffs, Fp))
    return out


@functools.lru_cache(maxsize=None)
def c_coefficients(p: int) -> tuple:
    """c_0..c_{p-1} in F_p[t], computed two ways and cross-checked."""
    _check_odd_prime(p)
    direct = _c_by_expansion(p)
    formula = _c_by_binomials(p)
    if direct != formula:
        raise AssertionError(f"coefficient formula disagrees with expansion for p={p}")
    return tuple(direct)


def index_maps(p: int, ell: int) -> tuple[tuple, tuple]:
    """(jmap, amap) as tuples indexed by i-1 for i = 1..ell.

    j(i) solves 2 j - 1 = (2 i - 1) / p mod 2 ell, and a(i) is the integer
    part of p (2 j(i) - 1) / (2 ell).
    """
    if gcd(p, 2 * ell) != 1:
        raise ValueError(f"p={p} and 2*ell={2 * ell} are not coprime")
    pinv = pow(p, -1, 2 * ell)
    jmap, amap = [], []
    for i in range(1, ell + 1):
        odd = (2 * i - 1) * pinv % (2 * ell)
        j = (odd + 1) // 2
        jmap.append(j)
        amap.append(p * (2 * j - 1) // (2 * ell))
    return tuple(jmap), tuple(amap)


@functools.lru_cache(maxsize=None)
def phi_polynomial(p: int) -> Poly:
    """Product of c_0 .. c_{(p-1)/2}."""
    c = c_coefficients(p)
    out = Poly.const(1, make_field(p))
    for n in range((p - 1) // 2 + 1):
        out = out * c[n]
    return out


def _eval_fp_poly(f: Poly, t: FieldElem) -> FieldElem:
    # f has prime-field coefficients; lift them into t's field
    F = t.field
    acc = F.zero()
    for c in reversed(f.coeffs):
        acc = acc * t + c.coeffs[0]
    return acc


def _check_t(t: FieldElem):
    F = t.field
    if F.p == 2:
        raise ValueError("odd characteristic required")
    if t == F(2) or t == F(-2):
        raise SingularParameter(f"t = {t!r} is +-2; the curve is singular")


@dataclass(frozen=True)
class CartierMatrix:
    """Permutation-times-diagonal matrix: entry (jmap[i], i) is diag[i]."""

    field: FieldDesc
    jmap: tuple
    amap: tuple
    diag: tuple

    @property
    def size(self):
        return len(self.jmap)

    def dense(self):
        """ell x ell list of rows (1-based positions mapped to 0-based)."""
        F = self.field
        m = [[F.zero()] * self.size for _ in range(self.size)]
        for i, (j, d) in enumerate(zip(self.jmap, self.diag)):
            m[j - 1][i] = d
        return m

    def is_invertible(self) -> bool:
        return all(bool(d) for d in self.diag)


def cartier_matrix(p: int, ell: int, t: FieldElem) -> CartierMatrix:
    if t.field.p != p:
        raise ValueError(f"t lives in characteristic {t.field.p}, not {p}")
    _check_t(t)
    jmap, amap = index_maps(p, ell)
    c = c_coefficients(p)
    diag = tuple(_eval_fp_poly(c[a], t) for a in amap)
    return CartierMatrix(t.field, jmap, amap, diag)


@dataclass(frozen=True)
class OrdinarityVerdict:
    ordinary: bool
    phi_nonzero: bool
    diag: tuple

    def to_json(self):
        return {
            "ordinary": self.ordinary,
            "phi_nonzero": self.phi_nonzero,
            "diagonal": [d.to_json() for d in self.diag],
        }


def is_ordinary_Ct(p: int, ell: int, t: FieldElem) -> OrdinarityVerdict:
    """Exact verdict (all diagonal entries nonzero) plus the sufficient Phi test."""
    A = cartier_matrix(p, ell, t)
    phi_nz = bool(_eval_fp_poly(phi_polynomial(p), t))
    verdict = OrdinarityVerdict(A.is_invertible(), phi_nz, A.diag)
    if phi_nz and not verdict.ordinary:
        raise AssertionError("Phi(t) != 0 but the Cartier matrix is singular")
    return verdict


def find_ordinary_t(p: int, ell: int, i: int) -> FieldElem:
    """First t in F_{p^i} (index order) with t != +-2 and Phi(t) != 0."""
    if i <= 1:
        raise ValueError("extension degree i must exceed 1")
    _check_odd_prime(p)
    index_maps(p, ell)
    F = make_field(p, i)
    phi = phi_polynomial(p)
    for t in F.elements():
        if t == F(2) or t == F(-2):
            continue
        if _eval_fp_poly(phi, t):
            return t
    raise AssertionError(f"no ordinary parameter in {F}")  # pragma: no cover

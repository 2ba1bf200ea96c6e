"""Point counts, L-polynomials and Frobenius characteristic polynomials.

Counts are exhaustive scans over F_{q^m}, vectorised with numpy and split
into chunks; the chunk partial sums are plain integers, so the total does not
depend on chunking or on the number of worker threads.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fields import FieldDesc, FieldElem, embed, make_field
from .poly import Poly, dickson
from .tables import GuardExceeded, check_guard, field_tables

CHUNK = 1 << 18


class CountError(ArithmeticError):
    """Counts that cannot come from a curve (e.g. Newton step not integral)."""


@dataclass(frozen=True)
class CurveOddChar:
    """The smooth projective curve y^2 = f(x) over an odd-characteristic field."""

    field: FieldDesc
    f: Poly
    name: str = "y^2 = f(x)"

    def __post_init__(self):
        if self.field.p == 2:
            raise ValueError("odd characteristic required")
        if self.f.ring != self.field:
            raise ValueError("f must have coefficients in the curve's field")
        if self.f.degree < 3:
            raise ValueError("f must have degree >= 3")
        if not self.f.is_squarefree():
            raise ValueError(f"{self.f.format('x')} is not squarefree")

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2


def curve_C(ell: int, t: FieldElem) -> CurveOddChar:
    """y^2 = x (x^(2 ell) + t x^ell + 1), genus ell."""
    F = t.field
    f = Poly.monomial(2 * ell + 1, 1, F) + Poly.monomial(ell + 1, t, F) + Poly.x(F)
    return CurveOddChar(F, f, f"C_t (ell={ell})")


def curve_D(ell: int, t: FieldElem) -> CurveOddChar:
    """y^2 = D_ell(x, 1) + t, genus (ell - 1) / 2."""
    F = t.field
    return CurveOddChar(F, dickson(ell, F.one()) + t, f"D_t (ell={ell})")


def curve_E(t: FieldElem) -> CurveOddChar:
    """y^2 = x (x^2 + t x + 1)."""
    F = t.field
    return CurveOddChar(F, Poly([0, 1, t, 1], F), "E_t")


def _workers(workers):
    if workers is None:
        return os.cpu_count() or 1
    return max(1, int(workers))


def _chunked_sum(total: int, fn, workers=None) -> int:
    bounds = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
    w = _workers(workers)
    if w == 1 or len(bounds) == 1:
        return sum(fn(lo, hi) for lo, hi in bounds)
    with ThreadPoolExecutor(max_workers=w) as pool:
        return sum(pool.map(lambda b: fn(*b), bounds))


def weil_ok(N: int, Q: int, g: int) -> bool:
    """|N - Q - 1| <= 2 g sqrt(Q), exactly."""
    d = N - Q - 1
    return d * d <= 4 * g * g * Q


def count_points_odd(curve: CurveOddChar, m: int = 1, guard=None, workers=None) -> int:
    """#C(F_{q^m}) for the smooth projective model of y^2 = f(x)."""
    F = curve.field
    L = make_field(F.p, F.n * m)
    check_guard(L.q, guard)
    T = field_tables(L)
    terms = [(k, embed(c, L).index()) for k, c in enumerate(curve.f.coeffs) if c]

    def part(lo, hi):
        x = np.arange(lo, hi, dtype=np.int64)
        return int(np.sum(1 + T.chi(T.eval_sparse(terms, x))))

    affine = _chunked_sum(L.q, part, workers)
    deg = curve.f.degree
    if deg % 2:
        at_inf = 1
    else:
        lc = embed(curve.f.lc, L)
        at_inf = 2 if lc ** ((L.q - 1) // 2) == L.one() else 0
    N = affine + at_inf
    if not weil_ok(N, L.q, curve.genus):
        raise CountError(f"count {N} over F_{L.q} violates the Weil bound (g={curve.genus})")
    return N


def count_points_as2(eps: int, beta: FieldElem, m: int = 1, guard=None, workers=None) -> int:
    """#N(F_{2^{rm}}) for the smooth model of y^2 + y = eps/x + beta*x."""
    F = beta.field
    if F.p != 2:
        raise ValueError("characteristic 2 required")
    if not eps and not beta:
        raise ValueError("zero Artin-Schreier function")
    L = make_field(2, F.n * m)
    check_guard(L.q, guard)
    T = field_tables(L)
    b = embed(beta, L).index()

    def part(lo, hi):
        x = np.arange(max(lo, 1), hi, dtype=np.int64)
        u = T.mul_const(x, b, 1)
        if eps:
            u = u ^ T.inv(x)
        return int(np.sum(2 * (1 - T.trace2(u))))

    affine = _chunked_sum(L.q, part, workers)
    if not eps:
        affine += 2  # x = 0 is an ordinary point with u(0) = 0
    # x = 0: simple pole iff eps, so one ramified point and no affine fibre
    at_zero = 1 if eps else 0
    # x = oo: simple pole iff beta != 0; otherwise u(oo) = 0 has trace 0 and splits
    at_inf = 1 if beta else 2
    N = affine + at_zero + at_inf
    g = 1 if (eps and beta) else 0
    if not weil_ok(N, L.q, g):
        raise CountError(f"count {N} over F_{L.q} violates the Weil bound (g={g})")
    return N


@dataclass(frozen=True)
class LPoly:
    """L(T) = a_0 + a_1 T + ... + a_{2g} T^{2g} over F_q."""

    coeffs: tuple
    q: int
    g: int

    def __post_init__(self):
        a = self.coeffs
        if len(a) != 2 * self.g + 1 or a[0] != 1:
            raise ValueError("L-polynomial must have 2g+1 coefficients with a_0 = 1")
        for i in range(self.g + 1):
            if a[2 * self.g - i] != self.q ** (self.g - i) * a[i]:
                raise ValueError(f"functional equation fails at index {i}")

    def as_poly(self) -> Poly:
        return Poly(self.coeffs)

    def power_sums(self, count: int) -> list[int]:
        """s_1..s_count, sums of the j-th powers of the inverse roots."""
        a = self.coeffs
        s = []
        for k in range(1, count + 1):
            ak = a[k] if k < len(a) else 0
            v = -k * ak - sum(a[k - j] * s[j - 1] for j in range(1, k) if k - j < len(a))
            s.append(v)
        return s

    def predicted_count(self, m: int) -> int:
        return self.q ** m + 1 - self.power_sums(m)[-1]

    def to_json(self):
        return {"coeffs": list(self.coeffs), "q": self.q, "g": self.g}


def l_from_counts(counts, q: int, g: int) -> LPoly:
    """L-polynomial from N_1..N_g over F_q, F_{q^2}, ..., F_{q^g}."""
    counts = list(counts)
    if len(counts) < g:
        raise ValueError(f"need {g} counts, got {len(counts)}")
    s = [q ** j + 1 - counts[j - 1] for j in range(1, g + 1)]
    a = [1]
    for k in range(1, g + 1):
        num = -sum(s[j - 1] * a[k - j] for j in range(1, k + 1))
        if num % k:
            raise CountError(f"Newton step {k} is not integral; counts are inconsistent")
        a.append(num // k)
    for i in range(g - 1, -1, -1):
        a.append(q ** (g - i) * a[i])
    return LPoly(tuple(a), q, g)


def charpoly_from_l(L: LPoly) -> Poly:
    """chi(T) = T^{2g} L(1/T): the reciprocal polynomial."""
    return Poly(tuple(reversed(L.coeffs)))


def l_from_charpoly(chi: Poly, q: int) -> LPoly:
    g = chi.degree // 2
    return LPoly(tuple(reversed(chi.coeffs)), q, g)


def p_rank_from_l(L: LPoly, p: int) -> int:
    """Degree of L mod p, i.e. the number of p-adic unit inverse roots."""
    deg = 0
    for k, c in enumerate(L.coeffs):
        if c % p:
            deg = k
    return deg


@dataclass(frozen=True)
class ZetaData:
    """Counts, L-polynomial and Frobenius characteristic polynomial of a curve."""

    counts: tuple
    L: LPoly
    charpoly: Poly
    p_rank: int
    check_count: int | None = None
    predicted: int | None = None

    @property
    def prediction_ok(self) -> bool | None:
        if self.check_count is None:
            return None
        return self.check_count == self.predicted

    @property
    def ordinary(self) -> bool:
        return self.p_rank == self.L.g

    def to_json(self):
        return {
            "counts": list(self.counts),
            "L": list(self.L.coeffs),
            "charpoly": list(self.charpoly.coeffs),
            "p_rank": self.p_rank,
            "genus": self.L.g,
            "q": self.L.q,
            "check_count": self.check_count,
            "predicted_check_count": self.predicted,
        }


def curve_zeta(curve: CurveOddChar, verify: bool | str = True, guard=None, workers=None) -> ZetaData:
    """Counts over F_q..F_{q^g} and, with ``verify``, an extra count over F_{q^{g+1}}.

    ``verify="auto"`` skips the extra count when it would exceed the guard.
    """
    g, q = curve.genus, curve.field.q
    counts = tuple(count_points_odd(curve, m, guard, workers) for m in range(1, g + 1))
    L = l_from_counts(counts, q, g)
    extra = pred = None
    if verify:
        try:
            extra = count_points_odd(curve, g + 1, guard, workers)
            pred = L.predicted_count(g + 1)
        except GuardExceeded:
            if verify != "auto":
                raise
    return ZetaData(counts, L, charpoly_from_l(L), p_rank_from_l(L, curve.field.p), extra, pred)


def elliptic_zeta_as2(eps: int, beta: FieldElem, verify: bool = True, guard=None, workers=None) -> ZetaData:
    """Zeta data of a genus-1 Artin-Schreier curve y^2 + y = eps/x + beta*x."""
    q = beta.field.q
    N1 = count_points_as2(eps, beta, 1, guard, workers)
    L = l_from_counts([N1], q, 1)
    extra = pred = None
    if verify:
        extra = count_points_as2(eps, beta, 2, guard, workers)
        pred = L.predicted_count(2)
    return ZetaData((N1,), L, charpoly_from_l(L), p_rank_from_l(L, 2), extra, pred)


def hasse_interval(Q: int, g: int) -> tuple[int, int]:
    """Integer range [lo, hi] allowed by the Weil bound."""
    r = 2 * g * math.isqrt(Q)
    lo, hi = Q + 1 - r - 2, Q + 1 + r + 2
    while not weil_ok(lo, Q, g):
        lo += 1
    while not weil_ok(hi, Q, g):
        hi -= 1
    return lo, hi

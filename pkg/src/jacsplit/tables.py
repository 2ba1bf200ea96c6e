"""Vectorised arithmetic on whole finite fields via exp/log tables.

Elements are handled as numpy arrays of integer indices (see ``fields``).
Multiplication goes through discrete-log tables built from the field's
primitive element; addition goes through base-p digits.  This is the
substrate for the exhaustive point counts.
"""

from __future__ import annotations

import functools
import os

import numpy as np

from .fields import FieldDesc, FieldElem

DEFAULT_GUARD = 2 ** 26
MIN_GUARD = 2 ** 10
DIGIT_TABLE_BYTES = 1 << 27
BUILD_CHUNK = 1 << 20


class GuardExceeded(RuntimeError):
    """Raised when an exhaustive scan would exceed the enumeration guard."""


def _mul_matrix(a: FieldElem) -> np.ndarray:
    # column j holds the coordinates of a * z^j
    F = a.field
    cols = [(a * F([0] * j + [1])).coeffs for j in range(F.n)]
    return np.array(cols, dtype=np.int64).T


class FieldTables:
    def __init__(self, F: FieldDesc):
        self.F = F
        self.p, self.n, self.q = F.p, F.n, F.q
        self.order = self.q - 1
        self.powers = np.array([self.p ** i for i in range(self.n)], dtype=np.int64)
        self._digit_table = None
        self.exp = self._build_exp()
        log = np.full(self.q, -1, dtype=np.int64)
        log[self.exp] = np.arange(self.order, dtype=np.int64)
        self.log = log
        if self.q * self.n <= DIGIT_TABLE_BYTES:
            self._digit_table = self._compute_digits(np.arange(self.q, dtype=np.int64)).astype(np.int16)

    def _build_exp(self):
        F = self.F
        g = F.primitive_element
        exp = np.empty(self.order, dtype=np.int64)
        exp[0] = 1
        filled = 1
        step = g
        while filled < self.order:
            take = min(filled, self.order - filled)
            M = _mul_matrix(step).T
            for lo in range(0, take, BUILD_CHUNK):
                hi = min(lo + BUILD_CHUNK, take)
                block = (self.to_digits(exp[lo:hi]) @ M) % self.p
                exp[filled + lo:filled + hi] = self.from_digits(block)
            filled += take
            step = step * step
        return exp

    def _compute_digits(self, idx):
        return (np.asarray(idx)[..., None] // self.powers) % self.p

    def to_digits(self, idx):
        if self._digit_table is not None:
            return self._digit_table[idx]
        return self._compute_digits(idx)

    def from_digits(self, digits):
        return digits @ self.powers

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.from_digits((self.to_digits(a) + self.to_digits(b)) % self.p)

    def mul_const(self, a, c: int, k: int = 1):
        """c * a**k elementwise, for a fixed element index c."""
        a = np.asarray(a)
        if c == 0:
            return np.zeros_like(a)
        if k == 0:
            return np.full_like(a, c)
        la = self.log[a]
        out = self.exp[(self.log[c] + k * la) % self.order]
        return np.where(a == 0, 0, out)

    def inv(self, a):
        a = np.asarray(a)
        out = self.exp[(-self.log[a]) % self.order]
        return np.where(a == 0, 0, out)

    def chi(self, a):
        """Quadratic character of every entry (odd p): 0, 1 or -1."""
        a = np.asarray(a)
        parity = self.log[a] & 1
        return np.where(a == 0, 0, 1 - 2 * parity)

    @functools.cached_property
    def _trace_mask(self):
        F = self.F
        mask = 0
        for i in range(self.n):
            zi = F([0] * i + [1])
            acc, x = F.zero(), zi
            for _ in range(self.n):
                acc, x = acc + x, x * x
            if acc.coeffs[0]:
                mask |= 1 << i
        return mask

    def trace2(self, a):
        """Absolute trace to F_2 of every entry (p = 2)."""
        return np.bitwise_count(np.asarray(a) & self._trace_mask) & 1

    def eval_sparse(self, terms, x):
        """Evaluate sum(c * x**k for k, c in terms) with c given as element indices."""
        x = np.asarray(x)
        if self.p == 2:
            acc = np.zeros_like(x)
            for k, c in terms:
                if c:
                    acc ^= self.mul_const(x, c, k)
            return acc
        acc = np.zeros(x.shape + (self.n,), dtype=np.int64)
        for k, c in terms:
            if c:
                acc += self.to_digits(self.mul_const(x, c, k))
        return self.from_digits(acc % self.p)


@functools.lru_cache(maxsize=4)
def field_tables(F: FieldDesc) -> FieldTables:
    return FieldTables(F)


def check_guard(size: int, guard: int | None):
    if guard is None:
        guard = int(os.environ.get("JACSPLIT_GUARD", DEFAULT_GUARD))
    if size > guard:
        raise GuardExceeded(f"enumeration of {size} elements exceeds guard {guard}")

"""Exact arithmetic in finite fields F_{p^n}.

An element of F_{p^n} = F_p[z]/(modulus) is stored as a tuple of n residues
mod p, lowest power of z first.  Elements are also numbered: the integer
index sum(c_i * p^i) orders elements by their coefficient vectors read from
the highest power down, which is the enumeration order used throughout the
package.

The modulus of F_{p^n} is the lexicographically smallest monic irreducible
polynomial of degree n (coefficients compared from the top down), so the
field model is reproducible without external tables.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p as lists of ints, low-to-high ------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _fp_divmod(a, b, p):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def _fp_mod(a, b, p):
    return _fp_divmod(a, b, p)[1]


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _fp_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_powmod(base, e, mod, p):
    result = [1]
    base = _fp_mod(base, mod, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), mod, p)
        base = _fp_mod(_fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _monic_polys(p, d):
    """All monic degree-d polynomials over F_p, lex order high-to-low."""
    for tail in itertools.product(range(p), repeat=d):
        # tail is (a_{d-1}, ..., a_0)
        yield list(reversed(tail)) + [1]


def is_irreducible_fp(f, p) -> bool:
    """Irreducibility of a polynomial over F_p (list, low-to-high)."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if n <= 8:
        return _irreducible_exhaustive(f, p)
    return _irreducible_power_gcd(f, p)


def _irreducible_exhaustive(f, p):
    n = len(f) - 1
    if f[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(p, d):
            if not _fp_mod(f, g, p):
                return False
    return True


def _irreducible_power_gcd(f, p):
    # f has no factor of degree k <= n/2  iff  gcd(x^(p^k) - x, f) = 1 for all such k
    n = len(f) - 1
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    xk = [0, 1]
    for _ in range(n // 2):
        xk = _fp_powmod(xk, p, f, p)
        if len(_fp_gcd(f, _fp_sub(xk, [0, 1], p), p)) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _canonical_modulus(p, n):
    if n == 1:
        return (0, 1)
    for g in _monic_polys(p, n):
        if is_irreducible_fp(g, p):
            return tuple(g)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- fields and elements -----------------------------------------------------

class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldDesc:
    """The field F_p[z]/(modulus) with q = p**n elements."""

    p: int
    n: int
    modulus: tuple = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.n

    def __str__(self):
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    def __call__(self, value) -> "FieldElem":
        """Coerce an int (prime-field value), coefficient sequence or element."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldError(f"element of {value.field} is not in {self}")
            return value
        if isinstance(value, int):
            return FieldElem(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.n:
            raise FieldError("too many coefficients")
        return FieldElem(self, tuple(coeffs) + (0,) * (self.n - len(coeffs)))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        """The class of z (equals the residue 0 in the prime field)."""
        if self.n == 1:
            return self(-self.modulus[0])
        return self([0, 1])

    def from_index(self, idx: int) -> "FieldElem":
        coeffs = []
        for _ in range(self.n):
            idx, c = divmod(idx, self.p)
            coeffs.append(c)
        return FieldElem(self, tuple(coeffs))

    def elements(self):
        """All elements in index order."""
        for i in range(self.q):
            yield self.from_index(i)

    def nonzero(self):
        for i in range(1, self.q):
            yield self.from_index(i)

    @functools.cached_property
    def primitive_element(self) -> "FieldElem":
        """Smallest-index generator of the multiplicative group."""
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)]
        for a in self.nonzero():
            if all(a ** c != self.one() for c in cofactors):
                return a
        raise AssertionError("no primitive element")  # pragma: no cover


def make_field(p: int, n: int = 1) -> FieldDesc:
    """The canonical model of F_{p^n}."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    return _make_field(p, n)


@functools.lru_cache(maxsize=None)
def _make_field(p, n):
    return FieldDesc(p, n, _canonical_modulus(p, n))


@dataclass(frozen=True)
class FieldElem:
    field: FieldDesc
    coeffs: tuple

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.field
        if F.n == 1:
            return FieldElem(F, (self.coeffs[0] * other.coeffs[0] % F.p,))
        prod = _fp_mul(_trim(list(self.coeffs)), _trim(list(other.coeffs)), F.p)
        return F(_fp_mod(prod, list(F.modulus), F.p))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in " + str(self.field))
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        F = self.field
        if k < 0:
            return self.inverse() ** (-k)
        if F.n == 1:
            return FieldElem(F, (pow(self.coeffs[0], k, F.p),))
        a = _fp_powmod(_trim(list(self.coeffs)), k, list(F.modulus), F.p)
        return F(a)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field(other)
        if isinstance(other, FieldElem):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.coeffs))

    def index(self) -> int:
        idx = 0
        for c in reversed(self.coeffs):
            idx = idx * self.field.p + c
        return idx

    def __lt__(self, other):
        return self.index() < other.index()

    def __repr__(self):
        if self.field.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return list(self.coeffs)


def frobenius(a: FieldElem, times: int = 1) -> FieldElem:
    """a ** (p ** times)."""
    F = a.field
    times %= F.n
    for _ in range(times):
        a = a ** F.p
    return a


def quadratic_character(a: FieldElem) -> int:
    F = a.field
    if F.p == 2:
        raise FieldError("quadratic character needs odd characteristic")
    if not a:
        return 0
    return 1 if a ** ((F.q - 1) // 2) == F.one() else -1


def trace_to_F2(a: FieldElem) -> int:
    F = a.field
    if F.p != 2:
        raise FieldError("absolute trace to F_2 needs characteristic 2")
    acc, x = F.zero(), a
    for _ in range(F.n):
        acc = acc + x
        x = x * x
    return acc.coeffs[0]


def in_subfield(a: FieldElem, d: int) -> bool:
    """Whether a lies in the subfield F_{p^d} (d must divide n)."""
    return frobenius(a, d) == a


@functools.lru_cache(maxsize=None)
def _embedding_image(src: FieldDesc, dst: FieldDesc) -> FieldElem:
    # roots of the source modulus all lie in the unique subfield of size src.q
    if dst.p != src.p or dst.n % src.n:
        raise FieldError(f"{src} does not embed in {dst}")
    if src.n == 1:
        return dst(-src.modulus[0])
    g = dst.primitive_element
    h = g ** ((dst.q - 1) // (src.q - 1))
    roots = []
    x = dst.one()
    for _ in range(src.q - 1):
        val = dst.zero()
        for c in reversed(src.modulus):
            val = val * x + c
        if not val:
            roots.append(x)
        x = x * h
    return min(roots, key=FieldElem.index)


def embed(a: FieldElem, dst: FieldDesc) -> FieldElem:
    """Image of a under the canonical embedding of its field into dst."""
    src = a.field
    if src == dst:
        return a
    z = _embedding_image(src, dst)
    acc = dst.zero()
    for c in reversed(a.coeffs):
        acc = acc * z + c
    return acc


def normal_basis_generator(F: FieldDesc) -> FieldElem:
    """First element (index order) whose Frobenius orbit is a basis over F_p."""
    for a in F.nonzero():
        orbit = [frobenius(a, i).coeffs for i in range(F.n)]
        if _rank_mod_p(orbit, F.p) == F.n:
            return a
    raise AssertionError("no normal basis")  # pragma: no cover


def _rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(v - c * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank

"""Dense univariate polynomials over a finite field or over the integers.

``Poly(coeffs, ring)`` keeps coefficients low-to-high.  With ``ring=None``
the coefficients are Python ints (arbitrary precision); otherwise ``ring`` is
a FieldDesc and the coefficients are FieldElem values of that field.
"""

from __future__ import annotations

from .fields import FieldDesc, FieldElem, FieldError, _monic_polys, is_irreducible_fp, is_prime, make_field


class RingMismatch(TypeError):
    pass


class Poly:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs=(), ring: FieldDesc | None = None):
        if ring is None:
            cs = [int(c) for c in coeffs]
            zero = 0
        else:
            cs = [ring(c) for c in coeffs]
            zero = ring.zero()
        while cs and cs[-1] == zero:
            cs.pop()
        self.coeffs = tuple(cs)
        self.ring = ring

    # constructors
    @classmethod
    def x(cls, ring=None):
        return cls([0, 1], ring)

    @classmethod
    def const(cls, c, ring=None):
        return cls([c], ring)

    @classmethod
    def monomial(cls, k, c=1, ring=None):
        return cls([0] * k + [c], ring)

    def _zero(self):
        return 0 if self.ring is None else self.ring.zero()

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"polynomials over {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, FieldElem)):
            return Poly([other], self.ring)
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self._zero()

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._zero()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = Poly([other], self.ring)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly([], self.ring)
        out = [self._zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly([1], self.ring), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other):
        """Division with remainder; over the integers the divisor must be monic."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if self.ring is None:
            if other.lc not in (1, -1):
                raise ValueError("integer division needs a monic divisor")
            inv = other.lc
        else:
            inv = other.lc.inverse()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        quot = [self._zero()] * max(dq + 1, 0)
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1] * inv
            quot[shift] = c
            if c == 0:
                continue
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
        return Poly(quot, self.ring), Poly(rem[:len(other.coeffs) - 1], self.ring)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __call__(self, x):
        """Horner evaluation at a scalar (or a polynomial, giving composition)."""
        acc = Poly([], self.ring) if isinstance(x, Poly) else (x * 0 if not isinstance(x, int) else 0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        other = self._coerce(other)
        return self(other)

    def derivative(self):
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:], self.ring)

    def monic(self):
        if self.ring is None:
            raise RingMismatch("monic() needs field coefficients")
        inv = self.lc.inverse()
        return Poly([c * inv for c in self.coeffs], self.ring)

    def gcd(self, other):
        a, b = self, self._coerce(other)
        if self.ring is None:
            raise RingMismatch("gcd implemented over fields only")
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def is_squarefree(self):
        return self.gcd(self.derivative()).degree == 0

    def reduce(self, F: FieldDesc) -> "Poly":
        """Image of an integer polynomial in F[x]."""
        if self.ring is not None:
            raise RingMismatch("reduce() applies to integer polynomials")
        return Poly(self.coeffs, F)

    def lift(self) -> "Poly":
        """Integer polynomial with prime-field residues as coefficients."""
        if self.ring is None or self.ring.n != 1:
            raise RingMismatch("lift() applies to polynomials over a prime field")
        return Poly([c.coeffs[0] for c in self.coeffs])

    def to_json(self):
        if self.ring is None:
            return list(self.coeffs)
        return [c.to_json() for c in self.coeffs]

    def format(self, var="T"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if self.ring is None:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
                parts.append((sign, body))
            else:
                body = mono if (c == 1 and mono) else (f"({c!r})" if self.ring.n > 1 else repr(c))
                if mono and not (c == 1):
                    body = f"{body}*{mono}"
                parts.append(("+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self.format('x' if self.ring is not None else 'T')})"


def int_poly(coeffs) -> Poly:
    return Poly(coeffs)


def dickson(ell: int, a: FieldElem) -> Poly:
    """Dickson polynomial D_ell(x, a) over the field of a."""
    F = a.field
    x = Poly.x(F)
    prev, cur = Poly.const(2, F), x
    if ell == 0:
        return prev
    for _ in range(ell - 1):
        prev, cur = cur, x * cur - prev * a
    return cur


def dickson_identity_holds(ell: int, a: FieldElem) -> bool:
    """x^ell * D_ell(x + a/x, a) == x^(2 ell) + a^ell, denominators cleared."""
    F = a.field
    D = dickson(ell, a)
    x = Poly.x(F)
    s = x * x + a
    lhs = Poly([], F)
    for k, c in enumerate(D.coeffs):
        lhs = lhs + (s ** k) * (x ** (ell - k)) * c
    rhs = x ** (2 * ell) + a ** ell
    return lhs == rhs


def _f2_poly_from_tuple(t):
    return Poly(t, make_field(2, 1))


def irreducibles_over_F2(d: int) -> list[Poly]:
    return [_f2_poly_from_tuple(g) for g in _monic_polys(2, d) if is_irreducible_fp(g, 2)]


def factor_x_pow_r_minus_1_over_F2(r: int) -> list[Poly]:
    """Irreducible factors of x^r - 1 over F_2 for an odd prime r.

    Ordered by degree, then by coefficient tuple read from the top.
    """
    if r % 2 == 0 or not is_prime(r):
        raise FieldError(f"r={r} must be an odd prime")
    F2 = make_field(2, 1)
    target = Poly.monomial(r, 1, F2) - 1
    rest = target
    factors = []
    d = 1
    while rest.degree > 0:
        if is_irreducible_fp(_low_to_high(rest), 2):
            factors.append(rest)
            break
        for g in irreducibles_over_F2(d):
            while rest.degree >= g.degree:
                quot, rem = rest.divmod(g)
                if rem:
                    break
                factors.append(g)
                rest = quot
        d += 1
    factors.sort(key=lambda f: (f.degree, tuple(c.coeffs[0] for c in reversed(f.coeffs))))
    return factors


def _low_to_high(f: Poly):
    return [c.coeffs[0] for c in f.coeffs]

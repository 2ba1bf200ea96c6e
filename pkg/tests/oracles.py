"""Slow scalar reference implementations, independent of the numpy tables."""

from itertools import product

from jacsplit.fields import make_field


def legendre(a):
    """Quadratic character by Euler's criterion on FieldElem values."""
    if not a:
        return 0
    return 1 if a ** ((a.field.q - 1) // 2) == a.field.one() else -1


def count_odd_scalar(coeffs, F, m=1):
    """#{y^2 = f(x)} projective, by plain element arithmetic over F_{q^m}."""
    from jacsplit.fields import embed

    L = make_field(F.p, F.n * m)
    cs = [embed(c, L) for c in coeffs]
    n = 0
    for x in L.elements():
        v = L.zero()
        for c in reversed(cs):
            v = v * x + c
        n += 1 + legendre(v)
    deg = len(cs) - 1
    if deg % 2:
        return n + 1
    return n + 1 + legendre(cs[-1])


def count_as2_scalar(eps, beta, m=1):
    """Affine solutions of y^2 + y = eps/x + beta x counted pairwise, plus places over 0 and oo."""
    from jacsplit.fields import embed

    L = make_field(2, beta.field.n * m)
    b = embed(beta, L)
    n = 0
    for x in L.elements():
        if not x:
            if eps:
                continue
            rhs = L.zero()
        else:
            rhs = b * x + (x.inverse() if eps else L.zero())
        n += sum(1 for y in L.elements() if y * y + y == rhs)
    n += 1 if eps else 0
    n += 1 if beta else 2
    return n


def all_polys(p, deg):
    for cs in product(range(p), repeat=deg + 1):
        yield list(cs)

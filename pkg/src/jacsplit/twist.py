"""Quadratic twist of E_t over k(x) and the rank bookkeeping.

The twist of y^2 = g(X) = X (X^2 + t X + 1) by the hyperelliptic extension
k(x)(sqrt(h)), h = x (x^(2 ell) + t x^ell + 1), is h(x) Y^2 = g(X).  Since
g(x^ell) = x^(ell-1) h(x), it has the k(x)-point (x^ell, x^((ell-1)/2)).

The rank is only predicted: multiplicity of the elliptic factor times the
rank of End(E), never a computed Mordell-Weil rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartier import _check_t
from .fields import FieldElem, is_prime
from .poly import Poly

# ordinary elliptic curves over finite fields have an imaginary quadratic
# endomorphism algebra; the supersingular case is not handled
ORDINARY_ENDO_RANK = 2


@dataclass(frozen=True)
class TwistModel:
    p: int
    ell: int
    t: FieldElem
    g: Poly
    h: Poly

    def identity_holds(self) -> bool:
        F = self.t.field
        return self.g.compose(Poly.monomial(self.ell, 1, F)) == self.h * Poly.monomial(self.ell - 1, 1, F)


def build_twist(p: int, ell: int, t: FieldElem) -> TwistModel:
    # ell = 1 is allowed as the degenerate case h = g
    if ell != 1 and (ell == p or ell % 2 == 0 or not is_prime(ell)):
        raise ValueError(f"ell={ell} must be an odd prime different from p={p}")
    if t.field.p != p:
        raise ValueError("t must lie in characteristic p")
    _check_t(t)
    F = t.field
    g = Poly([0, 1, t, 1], F)
    h = Poly.monomial(2 * ell + 1, 1, F) + Poly.monomial(ell + 1, t, F) + Poly.x(F)
    if not (g.is_squarefree() and h.is_squarefree()):
        raise ValueError("singular parameters")
    tw = TwistModel(p, ell, t, g, h)
    if not tw.identity_holds():
        raise AssertionError("g(x^ell) != x^(ell-1) h(x)")
    return tw


def witness_point_check(tw: TwistModel, y_exponent: int | None = None) -> bool:
    """(X, Y) = (x^ell, x^e) lies on h(x) Y^2 = g(X); e defaults to (ell-1)/2."""
    F = tw.t.field
    e = (tw.ell - 1) // 2 if y_exponent is None else y_exponent
    X = Poly.monomial(tw.ell, 1, F)
    Y = Poly.monomial(e, 1, F)
    return tw.h * Y * Y == tw.g.compose(X)


@dataclass(frozen=True)
class RankReport:
    r: int
    endo_rank: int
    predicted_rank: int
    context: str
    status: str = "predicted"

    def to_json(self):
        return {"r": self.r, "endo_rank": self.endo_rank, "predicted_rank": self.predicted_rank,
                "context": self.context, "status": self.status}


def rank_report(dec, context: str = "algebraic_closure") -> RankReport:
    """Predicted rank r * rank End(E) from a passing decomposition report."""
    if context not in ("finite_field", "algebraic_closure"):
        raise ValueError(f"unknown context {context!r}")
    shape_ok = dec.check("power_shape").passed and dec.check("base_change_power").passed
    if not dec.passed or not shape_ok:
        raise ValueError("decomposition report did not pass its checks")
    r = dec.d
    return RankReport(r, ORDINARY_ENDO_RANK, r * ORDINARY_ENDO_RANK, context)

import pytest

from jacsplit.decompose import (
    PreconditionError, ShapeError, base_change_charpoly, dickson_is_permutation,
    dickson_permutation_check, full_decomposition_report, is_ordinary_ec_charpoly,
    max_power_shape, verify_power_shape,
)
from jacsplit.fields import make_field
from jacsplit.poly import Poly


def _det(rows):
    from fractions import Fraction

    a = [[Fraction(v) for v in r] for r in rows]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def _resultant(A, B):
    """Sylvester resultant of integer coefficient lists (high degree first)."""
    m, n = len(A) - 1, len(B) - 1
    rows = [[0] * k + A + [0] * (n - 1 - k) for k in range(n)]
    rows += [[0] * k + B + [0] * (m - 1 - k) for k in range(m)]
    return _det(rows)


def _roots_power_oracle(chi, m, xs=(2, 3, 5)):
    """prod over m-th roots of unity w of chi(w x) = Res(y^m - 1, chi(x y)), which is (-1)^(n(m+1)) chi_m(x^m)."""
    n = chi.degree
    out = []
    for x in xs:
        B = [c * x ** k for k, c in enumerate(chi.coeffs)][::-1]
        A = [1] + [0] * (m - 1) + [-1]
        out.append(_resultant(A, B) * (-1) ** (n * (m + 1)))
    return out


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_base_change_against_numeric(m):
    chi = Poly([729, 0, 0, 38, 0, 0, 1])
    bc = base_change_charpoly(chi, m)
    assert [bc(x ** m) for x in (2, 3, 5)] == _roots_power_oracle(chi, m)


def test_power_shape():
    chi = Poly([729, 0, 0, 38, 0, 0, 1])
    s = verify_power_shape(chi, 3)
    assert s.f == Poly([729, 38, 1]) and s.expand() == chi
    assert max_power_shape(chi) == 3
    with pytest.raises(ShapeError) as exc:
        verify_power_shape(Poly([81, -36, 22, -4, 1]), 2)
    assert exc.value.exponent == 1


def test_ordinary_ec():
    assert is_ordinary_ec_charpoly(Poly([729, 38, 1]), 3)
    assert not is_ordinary_ec_charpoly(Poly([9, 3, 1]), 3)
    with pytest.raises(ValueError):
        is_ordinary_ec_charpoly(Poly([10, 1, 1]), 3)


def test_dickson_permutation_condition():
    # D_ell(x,1) permutes F_q iff gcd(ell, q^2 - 1) = 1
    from math import gcd

    for p, n in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]:
        F = make_field(p, n)
        for ell in (3, 5, 7):
            if ell == p:
                continue
            assert dickson_is_permutation(ell, F) == (gcd(ell, F.q ** 2 - 1) == 1)


def test_permutation_check_precondition():
    t = make_field(3, 2).gen()
    with pytest.raises(PreconditionError):
        dickson_permutation_check(7, 3, 2, t, 3)
    c = dickson_permutation_check(7, 3, 2, t, 1)
    assert c.passed and c.count == 10


@pytest.mark.parametrize("p,ell,i", [(3, 7, 2), (5, 7, 2), (3, 5, 3), (3, 11, 2)])
def test_full_report_passes(p, ell, i):
    rep = full_decomposition_report(p, ell, i)
    assert rep.passed, [c.to_json() for c in rep.checks if not c.passed]
    assert rep.f.degree == 2 and rep.f[0] == (p ** i) ** rep.d
    js = rep.to_json()
    assert set(js) == {"params", "checks", "conclusion"}
    assert all(set(c) == {"name", "claim_ref", "pass", "data"} for c in js["checks"])


def test_report_3_7_2_values():
    rep = full_decomposition_report(3, 7, 2)
    assert rep.f == Poly([729, 38, 1])
    assert rep.check("D_t_zeta").data["counts"] == [10, 82, 844]


def test_report_with_ct_factor():
    rep = full_decomposition_report(3, 7, 2, include_ct=True)
    assert rep.check("C_t_factorization").passed


def test_report_preconditions():
    with pytest.raises(PreconditionError):
        full_decomposition_report(3, 7, 1)
    with pytest.raises(PreconditionError):
        full_decomposition_report(3, 5, 2)  # 9 = -1 mod 5


def test_report_explicit_t_from_subfield():
    F3 = make_field(3)
    rep = full_decomposition_report(3, 7, 2, t=F3(0))
    assert rep.params["t"] == [0, 0]

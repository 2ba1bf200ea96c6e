"""Artin-Schreier modules in characteristic 2.

An extension of F_{2^r}(x) is represented only by its defining function
u = eps/x + beta*x (eps a bit, beta in F_{2^r}).  The module U generated by
1/x + alpha*x under Frobenius is an F_2-subspace of pairs (eps, beta); its
nonzero vectors are the minimal subextensions (lines) of the compositum M.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .artin import phi2
from .fields import FieldDesc, FieldElem, frobenius, in_subfield, make_field, normal_basis_generator, is_prime
from .poly import Poly, factor_x_pow_r_minus_1_over_F2
from .zeta import ZetaData, count_points_as2, elliptic_zeta_as2


@dataclass(frozen=True)
class ASFunction:
    eps: int
    beta: FieldElem

    def __add__(self, other):
        return ASFunction(self.eps ^ other.eps, self.beta + other.beta)

    def frobenius(self, times=1):
        return ASFunction(self.eps, frobenius(self.beta, times))

    def __bool__(self):
        return bool(self.eps) or bool(self.beta)

    def vector(self) -> int:
        """Bit vector: bit 0 is eps, bit k+1 is the z^k coordinate of beta."""
        return self.eps | (self.beta.index() << 1)

    @classmethod
    def from_vector(cls, F: FieldDesc, v: int):
        return cls(v & 1, F.from_index(v >> 1))

    def to_json(self):
        return {"eps": self.eps, "beta": self.beta.to_json()}

    def __repr__(self):
        parts = (["1/x"] if self.eps else []) + ([f"({self.beta!r})*x"] if self.beta else [])
        return " + ".join(parts) or "0"


def _echelon(vectors):
    """Reduced F_2 basis (as ints) of the span of integer bit vectors."""
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
    return sorted(basis, reverse=True)


@dataclass(frozen=True)
class ASModule:
    r: int
    alpha: FieldElem
    basis: tuple

    @property
    def field(self) -> FieldDesc:
        return self.alpha.field

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, u: ASFunction) -> bool:
        v = u.vector()
        for b in self.basis:
            v = min(v, v ^ int(b.vector()))
        return v == 0

    def elements(self):
        """All 2^dim elements, ordered by bit vector."""
        vecs = [b.vector() for b in self.basis]
        out = set()
        for mask in range(1 << len(vecs)):
            v = 0
            for k, b in enumerate(vecs):
                if mask >> k & 1:
                    v ^= b
            out.add(v)
        return [ASFunction.from_vector(self.field, v) for v in sorted(out)]


def construct_alpha(r: int) -> FieldElem:
    """alpha = ((x - 1) p_2 ... p_s)(Frobenius) applied to a normal-basis generator."""
    if r % 2 == 0 or not is_prime(r):
        raise ValueError(f"r={r} must be an odd prime")
    F = make_field(2, r)
    beta = normal_basis_generator(F)
    factors = factor_x_pow_r_minus_1_over_F2(r)
    p1 = factors[1]
    cofactor = factors[0]
    for f in factors[2:]:
        cofactor = cofactor * f
    alpha = apply_frobenius_poly(cofactor, beta)
    if alpha in (F.zero(), F.one()):
        raise AssertionError("alpha lies in F_2")
    if apply_frobenius_poly(p1, alpha):
        raise AssertionError("p_1(Frobenius) does not kill alpha")
    return alpha


def apply_frobenius_poly(f: Poly, a: FieldElem) -> FieldElem:
    """(f(sigma))(a) for a polynomial f over F_2."""
    acc = a.field.zero()
    for k, c in enumerate(f.coeffs):
        if c:
            acc = acc + frobenius(a, k)
    return acc


def galois_module_closure(alpha: FieldElem, r: int | None = None) -> ASModule:
    """F_2-span of the Frobenius orbit of 1/x + alpha*x."""
    F = alpha.field
    if not alpha:
        raise ValueError("alpha must be nonzero")
    r = F.n if r is None else r
    gens = [ASFunction(1, frobenius(alpha, k)) for k in range(F.n)]
    basis = tuple(ASFunction.from_vector(F, v) for v in _echelon(g.vector() for g in gens))
    U = ASModule(r, alpha, basis)
    for b in basis:
        if not U.contains(b.frobenius()):
            raise AssertionError("module is not Galois stable")
    return U


def minimal_subextensions(U: ASModule) -> list[ASFunction]:
    """One representative per line: the nonzero elements of U."""
    return [u for u in U.elements() if u]


def genus_of_line(u: ASFunction) -> int:
    """Simple poles at 0 (eps) and at infinity (beta != 0); genus 1 iff both."""
    if not u:
        raise ValueError("zero function")
    ramified = (1 if u.eps else 0) + (1 if u.beta else 0)
    # 2g - 2 = 2 * (-2) + sum over ramified places of (pole order + 1)
    return (2 * ramified - 2) // 2


def genus_of_M(U: ASModule) -> int:
    return sum(genus_of_line(u) for u in minimal_subextensions(U))


def genus_one_lines(U: ASModule) -> list[ASFunction]:
    return [u for u in minimal_subextensions(U) if u.eps and u.beta]


def hyperellipticity_witness(U: ASModule) -> dict:
    """V = {eps = 0} has index 2 in U and every line of V has genus 0."""
    elems = U.elements()
    V = [u for u in elems if not u.eps]
    index = len(elems) // len(V)
    v_genera = [genus_of_line(u) for u in V if u]
    return {
        "U_size": len(elems),
        "V_size": len(V),
        "index": index,
        "V_genera_zero": all(g == 0 for g in v_genera),
        "pass": index == 2 and all(g == 0 for g in v_genera),
    }


def regularity_check(U: ASModule) -> bool:
    """Every nonzero element has a simple pole, so none is a constant modulo the AS operator."""
    lines = minimal_subextensions(U)
    return bool(lines) and all(u.eps or u.beta for u in lines)


def _proper_subfield(alpha: FieldElem) -> bool:
    n = alpha.field.n
    return any(in_subfield(alpha, d) for d in range(1, n) if n % d == 0)


def conjugate_zeta_equality(alpha: FieldElem, r: int | None = None, exts=(1, 2), guard=None, workers=None) -> dict:
    F = alpha.field
    r = F.n if r is None else r
    if _proper_subfield(alpha):
        raise ValueError("alpha lies in a proper subfield")
    conj = [frobenius(alpha, k) for k in range(r)]
    distinct = len(set(conj)) == r
    counts = {m: [count_points_as2(1, c, m, guard, workers) for c in conj] for m in exts}
    equal = all(len(set(v)) == 1 for v in counts.values())
    return {"distinct": distinct, "counts": {str(m): v for m, v in counts.items()},
            "pass": distinct and equal}


def line_zeta(u: ASFunction, verify=True, guard=None, workers=None) -> ZetaData:
    return elliptic_zeta_as2(u.eps, u.beta, verify, guard, workers)


def jm_charpoly(U: ASModule, guard=None, workers=None) -> tuple[Poly, list]:
    """Product over genus-1 lines of their Frobenius polynomials; also the factors."""
    chi = Poly([1])
    factors = []
    for u in genus_one_lines(U):
        z = line_zeta(u, verify=False, guard=guard, workers=workers)
        factors.append(z.charpoly)
        chi = chi * z.charpoly
    return chi, factors


def polynomial_line_bijection(U: ASModule) -> dict:
    """f -> 1/x + f(sigma)(alpha) x, over nonzero f of degree < phi_2(r), onto the genus-1 lines."""
    r = U.field.n
    d = phi2(r)
    F2 = make_field(2)
    image = []
    for bits in itertools.product((0, 1), repeat=d):
        if not any(bits):
            continue
        f = Poly(bits, F2)
        image.append(ASFunction(1, apply_frobenius_poly(f, U.alpha)))
    lines = genus_one_lines(U)
    injective = len(set(image)) == len(image)
    onto = set(image) == set(lines)
    return {"polynomials": len(image), "genus_one_lines": len(lines), "injective": injective,
            "surjective": onto, "pass": injective and onto}


def is_perfect_power(chi: Poly, base: Poly, k: int) -> bool:
    return base ** k == chi


def char2_report(r: int, guard=None, workers=None) -> dict:
    """The whole characteristic-2 pipeline for an odd prime r."""
    alpha = construct_alpha(r)
    U = galois_module_closure(alpha, r)
    lines = minimal_subextensions(U)
    g1 = genus_one_lines(U)
    genus = genus_of_M(U)
    d = phi2(r)
    conj = [ASFunction(1, frobenius(alpha, k)) for k in range(r)]
    conj_lines = [u for u in g1 if u in conj]
    chi, factors = jm_charpoly(U, guard, workers)
    L_poly = line_zeta(ASFunction(1, alpha), verify=True, guard=guard, workers=workers)
    chi_L = L_poly.charpoly
    a_L = -chi_L[1]
    mersenne = 2 ** d - 1 == r

    checks = []

    def add(name, claim, ok, data=None):
        checks.append({"name": name, "claim_ref": claim, "pass": bool(ok), "data": data or {}})

    add("alpha", "alpha not in F_2 and p_1(sigma)(alpha) = 0", True, {"alpha": alpha.to_json()})
    add("module_dimension", "dim U = 1 + phi_2(r)", U.dim == 1 + d, {"dim": U.dim, "phi2": d})
    add("genus_M", "genus of M = 2^phi_2(r) - 1", genus == 2 ** d - 1 and genus == len(g1),
        {"genus": genus, "genus_one_lines": len(g1), "lines": len(lines)})
    add("regularity", "no nonzero element of U is constant modulo the AS operator", regularity_check(U))
    hw = hyperellipticity_witness(U)
    add("hyperelliptic", "[U:V] = 2 and V has only genus-0 lines", hw["pass"], hw)
    bij = polynomial_line_bijection(U)
    add("polynomial_bijection", "nonzero f of degree < phi_2(r) <-> genus-1 lines", bij["pass"], bij)
    cz = conjugate_zeta_equality(alpha, r, guard=guard, workers=workers)
    add("conjugates", "the r conjugates of L are distinct with equal counts", cz["pass"], cz)
    add("conjugate_lines", "exactly r genus-1 lines are conjugates of L", len(conj_lines) == r,
        {"count": len(conj_lines)})
    add("L_ordinary", "J_L is ordinary: odd Frobenius trace", a_L % 2 == 1 and bool(L_poly.prediction_ok),
        {"a": a_L, "charpoly": list(chi_L.coeffs), **L_poly.to_json()})
    add("all_lines_ordinary", "every genus-1 line has odd trace", all(f[1] % 2 for f in factors),
        {"traces": [-f[1] for f in factors]})
    power = sum(1 for f in factors if f == chi_L)
    add("E_power", "chi_L^r divides chi_J(M)", power >= r and chi.divmod(chi_L ** r)[1] == Poly([]),
        {"multiplicity": power})
    if mersenne:
        add("mersenne_power", "J_M ~ J_L^r: chi_J(M) = chi_L^r", is_perfect_power(chi, chi_L, r),
            {"chi_L": list(chi_L.coeffs)})
    return {
        "params": {"r": r, "phi2": d, "mersenne": mersenne},
        "checks": checks,
        "conclusion": (
            ("J_M is isogenous to J_L^r" if mersenne else "J_M is isogenous to J_L^r x A")
            + f" (genus {genus})"
            if all(c["pass"] for c in checks) else "verification failed"
        ),
        "charpoly": list(chi.coeffs),
    }

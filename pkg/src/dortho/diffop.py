"""Degree-non-increasing differential operators on polynomials.

An operator is stored as its coefficient polynomials a_0(x)..a_K(x),
acting as  p  ->  sum_v a_v(x) * p^(v)(x) / v! .  The degree constraint
deg a_v <= v is what makes the action degree-non-increasing; shifted
operators (arising from the Leibniz-type product rule) legitimately
violate it and are stored with relaxed validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import DegreeViolation, InvalidProbe
from .polycore import Poly, Rational, binomial


class DiffOperator:
    """Finite-order operator sum_v a_v(x)/v! * D^v."""

    __slots__ = ("coeffs", "relaxed")

    def __init__(self, coeffs: Sequence[Poly], relaxed: bool = False):
        cs = [c if isinstance(c, Poly) else Poly(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        if not relaxed:
            for nu, a in enumerate(cs):
                if a.degree > nu:
                    raise DegreeViolation(nu, a.degree, nu)
        self.coeffs = tuple(cs)
        self.relaxed = relaxed

    @property
    def order(self) -> int:
        """Largest v with a_v nonzero (-1 for the zero operator)."""
        return len(self.coeffs) - 1

    def a(self, nu: int) -> Poly:
        if 0 <= nu < len(self.coeffs):
            return self.coeffs[nu]
        return Poly.zero()

    def acoef(self, i: int, nu: int) -> Fraction:
        """Coefficient of x**i inside a_nu(x)."""
        return self.a(nu).coeff(i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DiffOperator({list(self.coeffs)!r}, relaxed={self.relaxed})"

    # -- action ------------------------------------------------------------

    def apply(self, p: Poly) -> Poly:
        out = Poly.zero()
        for nu, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            d = p.derivative(nu)
            if d.is_zero:
                break
            out = out + (a * d).scale(Fraction(1, math.factorial(nu)))
        return out

    def apply_monomial(self, n: int) -> Poly:
        """Image of x**n: sum_v a_v(x) * C(n, v) * x**(n-v)."""
        out = Poly.zero()
        for nu in range(min(self.order, n) + 1):
            a = self.coeffs[nu]
            if a.is_zero:
                continue
            out = out + (a * Poly.monomial(n - nu, math.comb(n, nu)))
        return out

    def shifted(self, m: int) -> "DiffOperator":
        """Operator whose v-th coefficient is a_(v+m); degree bound waived."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        if m == 0:
            return self
        return DiffOperator(self.coeffs[m:], relaxed=True)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"a": [c.to_json() for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "DiffOperator":
        if not isinstance(data, dict) or "a" not in data:
            raise ValueError('operator JSON must be {"a": [poly, ...]}')
        polys = [Poly.from_json(entry) for entry in data["a"]]
        return DiffOperator(polys)


def from_action(images: Sequence[Poly]) -> DiffOperator:
    """Recover the unique coefficient list from prescribed monomial images.

    images[n] is the required image of x**n; the recovery peels one
    coefficient per degree since a_n enters the image of x**n with the
    bare term a_n(x).
    """
    for n, img in enumerate(images):
        if img.degree > n:
            raise DegreeViolation(n, img.degree, n)
    coeffs: list[Poly] = []
    for n, img in enumerate(images):
        acc = img
        for nu, a in enumerate(coeffs):
            if a.is_zero:
                continue
            acc = acc - a * Poly.monomial(n - nu, math.comb(n, nu))
        coeffs.append(acc)
    return DiffOperator(coeffs)


def leibniz_expand(J: DiffOperator, f: Poly, g: Poly) -> Poly:
    """Product-rule expansion of J(f*g) over the derivatives of g.

    Equals J.apply(f * g) exactly; swapping f and g gives the symmetric
    form over the derivatives of f.
    """
    out = Poly.zero()
    for n in range(J.order + 1):
        d = g.derivative(n)
        if d.is_zero and n > 0:
            break
        term = J.shifted(n).apply(f) * d
        out = out + term.scale(Fraction(1, math.factorial(n)))
    return out


# -- eigenvalue diagonal sums ---------------------------------------------


def lambda_at(J: DiffOperator, k: int, n: int) -> Fraction:
    """Diagonal sum lambda_(n+k)^[k] = sum_j C(n+k, j+k) a_j^[j+k].

    Uses the generalized (product-form) binomial, so the polynomial-in-n
    extension is returned for negative n as well.
    """
    total = Fraction(0)
    for j in range(max(J.order - k, -1) + 1):
        c = J.acoef(j, j + k)
        if c:
            total += binomial(n + k, j + k) * c
    return total


def lambda_poly(J: DiffOperator, k: int) -> Poly:
    """The diagonal sum as an exact polynomial in the index n."""
    total = Poly.zero()
    for j in range(max(J.order - k, -1) + 1):
        c = J.acoef(j, j + k)
        if not c:
            continue
        # C(n+k, j+k) as a polynomial in n
        b = Poly.one()
        for t in range(j + k):
            b = b * Poly((k - t, 1))
        total = total + b.scale(Fraction(c, math.factorial(j + k)))
    return total


@dataclass(frozen=True)
class EigenvalueTable:
    """Diagonal sums for a fixed shift k; entry n holds lambda_(n+k)^[k]."""

    k: int
    values: tuple
    _at: Callable[[int], Fraction]

    def at(self, n: int) -> Fraction:
        """Value for any integer offset n (polynomial extension)."""
        return self._at(n)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


def lambda_table(J: DiffOperator, k: int, N: int) -> EigenvalueTable:
    values = tuple(lambda_at(J, k, n) for n in range(N + 1))
    return EigenvalueTable(k=k, values=values, _at=lambda n: lambda_at(J, k, n))


# -- classification --------------------------------------------------------


def nonneg_integer_roots(q: Poly, limit: Optional[int] = None) -> list[int]:
    """All nonnegative integer roots of q (exact; Cauchy bound + trial)."""
    if q.is_zero:
        raise ValueError("zero polynomial vanishes everywhere")
    if q.degree == 0:
        return []
    lead = q.leading_coefficient
    bound = 1 + max(abs(c / lead) for c in q.coeffs)
    top = math.floor(bound)
    if limit is not None:
        top = min(top, limit)
    return [n for n in range(top + 1) if q(n) == 0]


@dataclass(frozen=True)
class OperatorClass:
    """Outcome of classifying a degree-non-increasing operator.

    tag is one of "isomorphism", "derivative-like", "degenerate"; k is
    the derivative order for the lowering case.  witness carries the
    first failing index or condition for the degenerate case.
    certified_all_n is True when the closed-form nonvanishing check on
    the diagonal-sum polynomial settles every index, not just those up
    to the probe bound.
    """

    tag: str
    k: Optional[int] = None
    witness: Optional[object] = None
    certified_all_n: bool = False

    def to_json(self) -> dict:
        out: dict = {"class": self.tag}
        if self.k is not None:
            out["k"] = self.k
        if self.witness is not None:
            out["witness"] = str(self.witness)
        out["certified_all_n"] = self.certified_all_n
        return out


def classify(J: DiffOperator, probe_bound: int) -> OperatorClass:
    """Decide isomorphism / derivative-like(k) / degenerate.

    The probe bound must reach past the operator order; on top of the
    finite probe, the diagonal sums (polynomial in n) are screened for
    nonnegative integer roots, which settles nonvanishing for all n.
    """
    if probe_bound < J.order + 1:
        raise InvalidProbe(
            f"probe_bound {probe_bound} < operator order + 1 = {J.order + 1}"
        )
    if J.order < 0:
        return OperatorClass(tag="degenerate", witness="zero operator")

    lam0 = lambda_poly(J, 0)
    if lam0.is_zero:
        roots0 = None
    else:
        roots0 = nonneg_integer_roots(lam0)
    if roots0 == []:
        return OperatorClass(tag="isomorphism", certified_all_n=True)

    # number of identically-zero leading coefficients
    k = 0
    while k <= J.order and J.a(k).is_zero:
        k += 1
    if k == 0:
        witness = roots0[0] if roots0 else 0
        return OperatorClass(
            tag="degenerate",
            witness=f"diagonal sum vanishes at n={witness}",
            certified_all_n=True,
        )
    for nu in range(k, J.order + 1):
        if J.a(nu).degree > nu - k:
            return OperatorClass(
                tag="degenerate",
                witness=f"coefficient {nu} has degree {J.a(nu).degree} > {nu - k}",
                certified_all_n=True,
            )
    lamk = lambda_poly(J, k)
    rootsk = None if lamk.is_zero else nonneg_integer_roots(lamk)
    if rootsk == []:
        return OperatorClass(tag="derivative-like", k=k, certified_all_n=True)
    witness = rootsk[0] if rootsk else 0
    return OperatorClass(
        tag="degenerate",
        k=k,
        witness=f"shifted diagonal sum vanishes at n={witness}",
        certified_all_n=True,
    )

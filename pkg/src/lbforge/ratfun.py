"""Exact scalar substrate: univariate rational functions, Laurent residues,
and bivariate rational functions with denominator a power of (v - u).

Polynomials are ``Sparse`` maps exponent -> Fraction; univariate keys are
ints, bivariate keys are (deg_u, deg_v) pairs.  A Laurent scalar is the same
as a univariate polynomial but may carry negative exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateSubstitutionError, PoleAtZeroError
from .sparse import Sparse, poly_mul


def poly1(coeffs) -> Sparse:
    """Univariate polynomial from a list (degree = position) or dict."""
    if isinstance(coeffs, (list, tuple)):
        return Sparse(enumerate(coeffs))
    return Sparse(coeffs)


def poly1_eval(p: Sparse, x) -> Fraction:
    x = Fraction(x)
    return sum((c * x**k for k, c in p.items()), Fraction(0))


@dataclass(frozen=True)
class RatFun1:
    """Quotient num/den of univariate polynomials, den nonzero."""

    num: Sparse
    den: Sparse

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    def at_zero(self) -> Fraction:
        if self.den.get(0, 0) == 0:
            raise PoleAtZeroError("denominator vanishes at u = 0")
        return self.num.get(0, Fraction(0)) / self.den[0]


def ratfun1(num, den=(1,)) -> RatFun1:
    return RatFun1(poly1(num), poly1(den))


def expand_at_zero(f: RatFun1, order: int):
    """Taylor coefficients t_0..t_order of f at u = 0 by long division."""
    d0 = f.den.get(0, 0)
    if d0 == 0:
        raise PoleAtZeroError("denominator vanishes at u = 0")
    coeffs = []
    for k in range(order + 1):
        acc = f.num.get(k, Fraction(0))
        for j, dj in f.den.items():
            if 1 <= j <= k:
                acc -= dj * coeffs[k - j]
        coeffs.append(acc / d0)
    return coeffs


def residue(f: Sparse, a: RatFun1) -> Fraction:
    """Coefficient of u^{-1} in f(u) * a(u), f a Laurent polynomial.

    Only the finitely many negative-degree terms of f contribute; the
    expansion order of a is chosen from the lowest degree present in f.
    """
    if f.is_zero():
        return Fraction(0)
    lowest = min(f)
    if lowest >= 0:
        return Fraction(0)
    taylor = expand_at_zero(a, -lowest - 1)
    total = Fraction(0)
    for k, c in f.items():
        if k < 0:
            total += c * taylor[-k - 1]
    return total


def laurent_shift(f: Sparse, m: int) -> Sparse:
    """Multiply a Laurent scalar by u^m."""
    return Sparse(((k + m, c) for k, c in f.items()))


# -- bivariate layer ---------------------------------------------------------

def poly2(entries) -> Sparse:
    """Bivariate polynomial from {(deg_u, deg_v): coeff}."""
    return Sparse(entries)


def poly2_divide_vu(p: Sparse):
    """Divide p(u, v) by (v - u): returns (quotient, remainder).

    Synthetic division in v at the root v = u; the remainder is p(u, u),
    returned as a polynomial in u alone (keys (k, 0)).
    """
    by_v = {}
    for (a, b), c in p.items():
        by_v.setdefault(b, Sparse()).iadd(a, c)
    if not by_v:
        return Sparse(), Sparse()
    top = max(by_v)
    quot = Sparse()
    carry = Sparse()
    for b in range(top, 0, -1):
        carry = carry + by_v.get(b, Sparse())
        for a, c in carry.items():
            quot.iadd((a, b - 1), c)
        carry = Sparse(((a + 1, c) for a, c in carry.items()))
    rem_u = carry + by_v.get(0, Sparse())
    rem = Sparse((((a, 0), c) for a, c in rem_u.items()))
    return quot, rem


@dataclass(frozen=True)
class BivarRat:
    """num(u, v) / (v - u)^den_pow, stored in lowest terms w.r.t. (v - u)."""

    num: Sparse
    den_pow: int

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        k = max(self.den_pow, other.den_pow)
        a = _raise_pow(self.num, k - self.den_pow)
        b = _raise_pow(other.num, k - other.den_pow)
        return bivar(a + b, k)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BivarRat(-self.num, self.den_pow)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            return BivarRat(Sparse(), 0)
        return BivarRat(scalar * self.num, self.den_pow)

    __rmul__ = __mul__

    def mul_rat(self, other: "BivarRat") -> "BivarRat":
        return bivar(poly_mul(self.num, other.num), self.den_pow + other.den_pow)


_VU = Sparse({(0, 1): Fraction(1), (1, 0): Fraction(-1)})  # v - u


def _raise_pow(num: Sparse, extra: int) -> Sparse:
    for _ in range(extra):
        num = poly_mul(num, _VU)
    return num


def bivar(num, den_pow: int = 0) -> BivarRat:
    """Canonical BivarRat: cancel every (v - u) factor shared with num."""
    num = num if isinstance(num, Sparse) else poly2(num)
    if num.is_zero():
        return BivarRat(Sparse(), 0)
    while den_pow > 0:
        quot, rem = poly2_divide_vu(num)
        if not rem.is_zero():
            break
        num = quot
        den_pow -= 1
    return BivarRat(num, den_pow)


def bivar_const(c) -> BivarRat:
    c = Fraction(c)
    if c == 0:
        return BivarRat(Sparse(), 0)
    return BivarRat(Sparse({(0, 0): c}), 0)


def poly2_substitute_affine(p: Sparse, pc: Fraction, qc: Fraction) -> Sparse:
    """p(pc*u + qc, pc*v + qc) expanded exactly."""
    top = max((max(a, b) for (a, b) in p), default=0)
    powers = _affine_powers(pc, qc, top)
    out = Sparse()
    for (a, b), c in p.items():
        for k1, c1 in powers[a].items():
            for k2, c2 in powers[b].items():
                out.iadd((k1, k2), c * c1 * c2)
    return out


def _affine_powers(pc, qc, top):
    """(pc*x + qc)^k for k = 0..top, as univariate Sparse in x."""
    lin = Sparse({1: Fraction(pc), 0: Fraction(qc)})
    powers = [Sparse({0: Fraction(1)})]
    for _ in range(top):
        powers.append(poly_mul(powers[-1], lin))
    return powers


def substitute_affine_scalar(f: BivarRat, p, q) -> BivarRat:
    """f(pu+q, pv+q); the denominator rescales by p^den_pow."""
    p = Fraction(p)
    q = Fraction(q)
    if p == 0:
        raise DegenerateSubstitutionError("affine substitution with p = 0")
    num = poly2_substitute_affine(f.num, p, q)
    return bivar((1 / p**f.den_pow) * num, f.den_pow)


def bivar_swap_vars(f: BivarRat) -> BivarRat:
    """f(v, u): swap the two variables; (u - v)^k renormalizes by (-1)^k."""
    num = Sparse((((b, a), c) for (a, b), c in f.num.items()))
    sign = Fraction(-1) ** f.den_pow
    return BivarRat(sign * num, f.den_pow)

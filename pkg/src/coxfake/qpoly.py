"""
Exact univariate polynomials over the integers, q-integers, cyclotomic
polynomials and evaluation at roots of unity.

Coefficients are Python ints, so nothing ever overflows.  Rational numbers
only show up inside division and gcd.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd as _gcd, lcm
from typing import Iterable, Sequence


class DivisibilityError(ArithmeticError):
    """Raised when a polynomial division that should be exact is not."""


def _trim(coeffs: Iterable[int]) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IntPoly:
    """Dense polynomial in q; ``coeffs[i]`` is the coefficient of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _trim(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        return cls([0] * e + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def substitute_power(self, k: int) -> "IntPoly":
        """Replace q by q^k."""
        if k < 1:
            raise ValueError("k must be positive")
        if not self.coeffs:
            return self
        out = [0] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPoly(out)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPoly":
        return cls(int(c) for c in obj["coeffs"])


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    return None


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))


def format_poly(f: IntPoly, var: str = "q") -> str:
    """Render as ``1 + 2*q + q^3``; zero terms are omitted."""
    if f.is_zero():
        return "0"
    parts = []
    for e, c in enumerate(f.coeffs):
        if c == 0:
            continue
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(out)


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return IntPoly(out)


def poly_sum(polys: Iterable[IntPoly]) -> IntPoly:
    acc = ZERO
    for p in polys:
        acc = acc + p
    return acc


def poly_prod(polys: Iterable[IntPoly]) -> IntPoly:
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc


def from_exponents(exponents: Iterable[int]) -> IntPoly:
    """Sum of q^e over a multiset of exponents."""
    out: list = []
    for e in exponents:
        if e < 0:
            raise ValueError("negative exponent")
        if e >= len(out):
            out.extend([0] * (e + 1 - len(out)))
        out[e] += 1
    return IntPoly(out)


def q_int(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"q_int needs a positive integer, got {n!r}")
    return IntPoly((1,) * n)


def q_int_scaled(n: int, k: int) -> IntPoly:
    """[n]_{q^k}."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"q_int_scaled needs a positive scale, got {k!r}")
    return q_int(n).substitute_power(k)


# rational helpers; lists of Fractions, low degree first, trimmed


def _frac_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def frac_divmod(a: Sequence, b: Sequence) -> tuple:
    """Quotient and remainder of rational coefficient lists."""
    b = _frac_trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _frac_trim([Fraction(x) for x in a])
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], r
    quo = [Fraction(0)] * (len(r) - db)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1] / lb
        quo[k] = c
        for i in range(db + 1):
            r[k + i] -= c * b[i]
        r.pop()
        _frac_trim(r)
    return _frac_trim(quo), r


def _primitive_from_fractions(a: Sequence) -> IntPoly:
    if not a:
        return ZERO
    den = 1
    for x in a:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in a]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(ints)


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Return h with f = g*h, raising DivisibilityError if none exists in Z[q]."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    if abs(g.lead) == 1:
        return _div_monic(f, g)
    quo, rem = frac_divmod(f.coeffs, g.coeffs)
    if rem:
        raise DivisibilityError(f"{format_poly(g)} does not divide {format_poly(f)}")
    if any(c.denominator != 1 for c in quo):
        raise DivisibilityError(
            f"quotient of {format_poly(f)} by {format_poly(g)} is not integral"
        )
    return IntPoly(int(c) for c in quo)


def _div_monic(f: IntPoly, g: IntPoly) -> IntPoly:
    # lead of g is +-1; stays in integers throughout
    r = list(f.coeffs)
    dg = g.degree
    lg = g.lead
    if len(r) - 1 < dg:
        raise DivisibilityError(f"{format_poly(g)} does not divide {format_poly(f)}")
    quo = [0] * (len(r) - dg)
    b = g.coeffs
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * lg
        quo[k] = c
        if c:
            for i in range(dg + 1):
                r[k + i] -= c * b[i]
    if any(r):
        raise DivisibilityError(f"{format_poly(g)} does not divide {format_poly(f)}")
    return IntPoly(quo)


def rem_monic(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of f modulo a polynomial with leading coefficient +-1."""
    if abs(g.lead) != 1:
        raise ValueError("rem_monic needs a leading coefficient of +-1")
    r = list(f.coeffs)
    dg = g.degree
    lg = g.lead
    b = g.coeffs
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * lg
        if c:
            for i in range(dg + 1):
                r[k + i] -= c * b[i]
    return IntPoly(r[:dg] if dg > 0 else [])


def divides(g: IntPoly, f: IntPoly) -> bool:
    try:
        exact_div(f, g)
    except DivisibilityError:
        return False
    return True


def gcd_primitive(f: IntPoly, g: IntPoly) -> IntPoly:
    """Gcd over Q, scaled to a primitive integer polynomial with positive lead."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        _, r = frac_divmod(a, b)
        a, b = b, r
    return _primitive_from_fractions(a)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """n-th cyclotomic polynomial, from q^n - 1 divided by the lower ones."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic needs a positive integer, got {n!r}")
    num = IntPoly.monomial(n) - ONE
    for d in range(1, n):
        if n % d == 0:
            num = exact_div(num, cyclotomic(d))
    return num


class RootOfUnityValue:
    """f(zeta_n^m) held as a polynomial in zeta reduced modulo Phi_n."""

    __slots__ = ("rep", "n")

    def __init__(self, rep: IntPoly, n: int):
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("RootOfUnityValue is immutable")

    @property
    def is_integer(self) -> bool:
        return self.rep.is_constant()

    @property
    def value(self) -> int:
        if not self.is_integer:
            raise ValueError(f"f(zeta) = {format_poly(self.rep, 'z')} is not an integer")
        return self.rep.coeff(0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer and self.value == other
        if isinstance(other, RootOfUnityValue):
            return self.n == other.n and self.rep == other.rep
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.rep))

    def __repr__(self):
        return f"RootOfUnityValue({format_poly(self.rep, 'z')}, n={self.n})"


def eval_at_root_of_unity(f: IntPoly, n: int, m: int) -> RootOfUnityValue:
    """Exact value of f at zeta_n^m, zeta_n = exp(2 pi i / n)."""
    if n < 1:
        raise ValueError("n must be positive")
    folded = [0] * n
    for e, c in enumerate(f.coeffs):
        if c:
            folded[(e * m) % n] += c
    return RootOfUnityValue(rem_monic(IntPoly(folded), cyclotomic(n)), n)


def palindromic_descend(P: IntPoly) -> IntPoly:
    """The psi with P(x) = x^d psi(x + 1/x), for palindromic P of degree 2d."""
    if P.is_zero() or P.degree % 2 or not P.is_palindromic():
        raise ValueError(f"expected a palindromic polynomial of even degree, got {P}")
    d = P.degree // 2
    work = list(P.coeffs)
    psi = [0] * (d + 1)
    for k in range(d, -1, -1):
        c = work[d + k]
        psi[k] = c
        if c:
            # x^d (x + 1/x)^k = sum_j C(k,j) x^(d+k-2j)
            for j in range(k + 1):
                work[d + k - 2 * j] -= c * comb(k, j)
    if any(work):
        raise ValueError("descent left a nonzero remainder")
    return IntPoly(psi)


def resubstitute(psi: IntPoly) -> IntPoly:
    """Inverse of palindromic_descend: x^d psi(x + 1/x)."""
    d = psi.degree
    out = [0] * (2 * d + 1)
    for k, c in enumerate(psi.coeffs):
        for j in range(k + 1):
            out[d + k - 2 * j] += c * comb(k, j)
    return IntPoly(out)

"""
Exact arithmetic in the real field Q(2cos(pi/M)).

Elements are coordinate vectors over the power basis 1, y, ..., y^(d-1)
where y = 2cos(pi/M) and d is the degree of its minimal polynomial.  Signs
are decided rigorously: y is isolated with a Sturm sequence and the element
is evaluated over shrinking rational enclosures of y until the result
interval misses 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import cos, lcm, pi
from typing import Sequence

from .qpoly import IntPoly, cyclotomic, frac_divmod, palindromic_descend


@dataclass(frozen=True)
class FieldSpec:
    bond: int
    modulus: IntPoly
    degree: int
    # y^k for k = degree .. 2*degree - 2, as coordinate tuples
    _powers: tuple = field(default=(), repr=False, compare=False)

    def zero(self) -> "Scalar":
        return Scalar(self, (0,) * self.degree)

    def one(self) -> "Scalar":
        return self.from_rational(1)

    def gen(self) -> "Scalar":
        if self.degree == 1:
            # modulus is y - c
            return self.from_rational(-self.modulus.coeff(0))
        return Scalar(self, (0, 1) + (0,) * (self.degree - 2))

    def from_rational(self, x) -> "Scalar":
        return Scalar(self, (x,) + (0,) * (self.degree - 1))


@lru_cache(maxsize=None)
def make_field(M: int) -> FieldSpec:
    """Field generated by 2cos(pi/M); one shared instance per M."""
    if not isinstance(M, int) or M < 3:
        raise ValueError(f"bond must be an integer >= 3, got {M!r}")
    psi = palindromic_descend(cyclotomic(2 * M))
    d = psi.degree
    if psi.lead != 1:
        raise ArithmeticError(f"minimal polynomial {psi} is not monic")
    # reduce y^k for k >= d using y^d = -(psi - y^d)
    tail = [-c for c in psi.coeffs[:d]]
    powers = []
    cur = list(tail)
    for _ in range(max(d - 1, 0)):
        powers.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [a + top * b for a, b in zip(cur, tail)]
    return FieldSpec(M, psi, d, tuple(powers))


def _norm(c):
    # integral values are kept as ints; Fraction arithmetic is much slower
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class Scalar:
    """Element of Q(2cos(pi/M)); immutable, hashable, mixes with ints."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: FieldSpec, coords: Sequence):
        if len(coords) != spec.degree:
            raise ValueError(f"expected {spec.degree} coordinates, got {len(coords)}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coords", tuple(_norm(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.spec.bond != self.spec.bond:
                raise ValueError(
                    f"cannot mix Q(2cos(pi/{self.spec.bond})) with Q(2cos(pi/{other.spec.bond}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.from_rational(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if isinstance(other, Scalar):
            return self.spec.bond == other.spec.bond and self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.spec.bond, self.coords))

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return Scalar(self.spec, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.spec, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return Scalar(self.spec, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.spec.zero()
            return Scalar(self.spec, [a * other for a in self.coords])
        other = self._other(other)
        if other is None:
            return NotImplemented
        d = self.spec.degree
        if d == 1:
            return Scalar(self.spec, [self.coords[0] * other.coords[0]])
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k, c in enumerate(prod[d:]):
            if c:
                for i, p in enumerate(self.spec._powers[k]):
                    out[i] += c * p
        return Scalar(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.spec.one()
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        return sign(self)

    def __float__(self):
        y = 2 * cos(pi / self.spec.bond)
        return float(sum(float(c) * y**i for i, c in enumerate(self.coords)))

    def __repr__(self):
        return f"Scalar({format_scalar(self)}, M={self.spec.bond})"

    def __str__(self):
        return format_scalar(self)

    def to_json(self) -> dict:
        return {
            "coords": [f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in self.coords],
            "bond": self.spec.bond,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Scalar":
        spec = make_field(int(obj["bond"]))
        return cls(spec, [Fraction(s) for s in obj["coords"]])


def format_scalar(a: Scalar, var: str = "y") -> str:
    terms = []
    for i, c in enumerate(a.coords):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def two_cos(spec: FieldSpec, k: int) -> Scalar:
    """2cos(pi/k) for the bond values that can share a diagram with M."""
    if k == 2:
        return spec.zero()
    if k == 3:
        return spec.one()
    if k == spec.bond:
        return spec.gen()
    raise ValueError(
        f"bond {k} is not representable in Q(2cos(pi/{spec.bond})): an irreducible "
        "finite Coxeter diagram carries at most one bond label above 3"
    )


# Sturm machinery; polynomials are lists of Fractions, low degree first


def sturm_sequence(p: Sequence) -> list:
    p0 = [Fraction(c) for c in p]
    p1 = [i * c for i, c in enumerate(p0)][1:]
    seq = [p0, p1]
    while seq[-1] and len(seq[-1]) > 1:
        _, r = frac_divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _eval(p: Sequence, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_changes(seq: list, x: Fraction) -> int:
    vals = [v for v in (_eval(p, x) for p in seq) if v != 0]
    return sum(1 for a, b in zip(vals, vals[1:]) if (a < 0) != (b < 0))


def count_roots(seq: list, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return sign_changes(seq, lo) - sign_changes(seq, hi)


@lru_cache(maxsize=None)
def _sturm(M: int) -> tuple:
    spec = make_field(M)
    return tuple(tuple(p) for p in sturm_sequence(spec.modulus.coeffs))


@lru_cache(maxsize=None)
def isolating_interval(M: int, step: int) -> tuple:
    """Interval (lo, hi] holding y = 2cos(pi/M) and no other root of its
    minimal polynomial, of width at most 4 / 2^step once isolated."""
    seq = [list(p) for p in _sturm(M)]
    if step == 0:
        lo, hi = Fraction(-2), Fraction(2)
        # keep the upper half whenever it still holds a root: converges to the largest
        while count_roots(seq, lo, hi) > 1:
            mid = (lo + hi) / 2
            if count_roots(seq, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        return lo, hi
    lo, hi = isolating_interval(M, step - 1)
    mid = (lo + hi) / 2
    if count_roots(seq, mid, hi) == 1:
        lo = mid
    else:
        hi = mid
    if count_roots(seq, lo, hi) != 1:
        raise ArithmeticError(f"lost the root of the modulus for M={M}")
    return lo, hi


def _interval_mul(a: tuple, b: tuple) -> tuple:
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(ps), max(ps)


def enclose(a: Scalar, lo: Fraction, hi: Fraction) -> tuple:
    """Rational interval containing a(y) for every y in [lo, hi]."""
    acc = (Fraction(0), Fraction(0))
    for c in reversed(a.coords):
        acc = _interval_mul(acc, (lo, hi))
        acc = (acc[0] + c, acc[1] + c)
    return acc


_START_STEP = 24


def _sign_positive_interval(a: Scalar, lo: Fraction, hi: Fraction):
    """Sign of a(y) for y in [lo, hi], 0 < lo, using integer arithmetic only;
    None when the enclosure still straddles zero."""
    den = 1
    for c in a.coords:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    coeffs = [int(c * den) for c in a.coords]
    k = lcm(lo.denominator, hi.denominator)
    L, U = int(lo * k), int(hi * k)
    d = len(coeffs) - 1
    low = high = 0
    pl = pu = 1
    kp = k**d
    for c in coeffs:
        # c * y^i scaled by k^d; y^i ranges over [L^i, U^i] / k^i
        if c > 0:
            low += c * pl * kp
            high += c * pu * kp
        elif c < 0:
            low += c * pu * kp
            high += c * pl * kp
        pl *= L
        pu *= U
        kp //= k
    if low > 0:
        return 1
    if high < 0:
        return -1
    return None


def sign(a) -> int:
    """Exact sign of an int, Fraction or Scalar."""
    if not isinstance(a, Scalar):
        return (a > 0) - (a < 0)
    if a.is_zero():
        return 0
    if a.is_rational():
        c = a.coords[0]
        return (c > 0) - (c < 0)
    step = _START_STEP
    while True:
        lo, hi = isolating_interval(a.spec.bond, step)
        if lo > 0:
            s = _sign_positive_interval(a, lo, hi)
            if s is not None:
                return s
        else:
            elo, ehi = enclose(a, lo, hi)
            if elo > 0:
                return 1
            if ehi < 0:
                return -1
        step += 8

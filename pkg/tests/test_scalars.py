from fractions import Fraction
from math import cos, gcd, pi

import pytest
from hypothesis import assume, given, strategies as st

from coxfake.qpoly import IntPoly
from coxfake.scalars import (
    Scalar,
    _sturm,
    arith,
    count_roots,
    isolating_interval,
    make_field,
    sign,
    two_cos,
)


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_small_moduli():
    assert make_field(5).modulus == IntPoly([-1, -1, 1])
    assert make_field(3).modulus == IntPoly([-1, 1])
    assert make_field(4).modulus == IntPoly([-2, 0, 1])


@pytest.mark.parametrize("M", range(3, 61))
def test_field_degree_and_monic(M):
    F = make_field(M)
    assert F.modulus.lead == 1
    assert F.degree == totient(2 * M) // 2
    # the generator satisfies its own modulus
    y = F.gen()
    acc = F.zero()
    for c in reversed(F.modulus.coeffs):
        acc = acc * y + c
    assert acc.is_zero()
    assert abs(float(y) - 2 * cos(pi / M)) < 1e-12


@pytest.mark.parametrize("M", [0, 1, 2, -5])
def test_make_field_rejects(M):
    with pytest.raises(ValueError):
        make_field(M)


def test_exact_identities():
    phi = make_field(5).gen()
    assert arith(phi, phi, "mul") == phi + 1
    r2 = make_field(4).gen()
    assert r2 * r2 == 2
    a = phi + Fraction(1, 3)
    assert arith(a, make_field(5).zero(), "add") == a
    assert arith(a, a, "sub").is_zero()
    assert arith(a, a, "neg") == -a
    with pytest.raises(ValueError):
        arith(a, a, "div")


def test_rational_fast_path():
    F = make_field(3)
    assert F.degree == 1
    assert F.gen() == 1
    assert (F.gen() * Fraction(3, 2)) == Fraction(3, 2)


def test_mismatched_fields():
    with pytest.raises(ValueError):
        make_field(5).gen() + make_field(7).gen()


def test_two_cos():
    F = make_field(5)
    assert two_cos(F, 2).is_zero()
    assert two_cos(F, 3) == 1
    assert two_cos(F, 5) == F.gen()
    with pytest.raises(ValueError, match="at most one bond"):
        two_cos(F, 4)


def test_sign_examples():
    F = make_field(5)
    phi = F.gen()
    assert sign(F.zero()) == 0
    assert sign(phi - 1) == 1
    assert sign(1 - phi) == -1
    assert phi.sign() == 1
    assert sign(Fraction(-1, 2)) == -1 and sign(0) == 0


def test_sign_near_zero():
    # golden ratio convergents: F_{k+1} - F_k * phi is tiny, sign alternates
    phi = make_field(5).gen()
    a, b = 1, 1
    for k in range(2, 60):
        a, b = b, a + b
        s = sign(b - a * phi)
        assert s == (-1 if k % 2 else 1)


bonds = st.sampled_from([4, 5, 7, 8, 9, 12, 15, 30])
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=50)


@st.composite
def scalars(draw, bond=None):
    F = make_field(bond or draw(bonds))
    coords = draw(st.lists(fracs, min_size=F.degree, max_size=F.degree))
    return Scalar(F, coords)


@st.composite
def scalar_pairs(draw):
    M = draw(bonds)
    return draw(scalars(M)), draw(scalars(M))


@given(scalars())
def test_sign_antisymmetric(a):
    assert sign(-a) == -sign(a)


@given(scalars())
def test_square_positive(a):
    assume(not a.is_zero())
    assert sign(a * a) == 1


@given(scalars())
def test_sign_matches_float_when_clear(a):
    x = float(a)
    assume(abs(x) > 1e-6)
    assert sign(a) == (1 if x > 0 else -1)


@given(scalar_pairs())
def test_ring_axioms(pair):
    a, b = pair
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
    assert abs(float(a * b) - float(a) * float(b)) < 1e-6 * (1 + abs(float(a) * float(b)))


@pytest.mark.parametrize("M", [4, 5, 7, 11, 30, 60])
def test_isolation_stays_single(M):
    seq = [list(p) for p in _sturm(M)]
    y = 2 * cos(pi / M)
    for step in range(0, 60, 7):
        lo, hi = isolating_interval(M, step)
        assert count_roots(seq, lo, hi) == 1
        if step < 40:
            # beyond this the float value of y is not sharp enough to compare
            assert lo < y <= hi
        if step:
            assert hi - lo <= Fraction(4, 2**step)


def test_json_round_trip():
    F = make_field(5)
    a = Scalar(F, [Fraction(1, 2), -3])
    obj = a.to_json()
    assert obj == {"coords": ["1/2", "-3/1"], "bond": 5}
    assert Scalar.from_json(obj) == a


def test_immutable_and_hashable():
    a = make_field(5).gen()
    with pytest.raises(AttributeError):
        a.coords = (0, 0)
    assert len({a, a + 0, make_field(5).one()}) == 2
    assert hash(make_field(5).one()) == hash(1)

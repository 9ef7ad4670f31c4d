from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streakgf.bigfloat import BigComplex, BigFloat

PREC = 300


def mp_at(x: BigFloat):
    return mpmath.mpf(x.man) / mpmath.mpf(2) ** x.prec


@pytest.fixture(autouse=True)
def mp_precision():
    with mpmath.workprec(PREC + 64):
        yield


def close(x: BigFloat, ref, bits=PREC - 8):
    return abs(mp_at(x) - ref) <= mpmath.mpf(2) ** -bits * max(1, abs(ref))


def test_pi():
    assert close(BigFloat.pi(PREC), mpmath.pi)


reals = st.fractions(min_value=-40, max_value=40, max_denominator=1000)


@given(reals)
@settings(max_examples=60, deadline=None)
def test_exp(q):
    x = BigFloat.from_fraction(q, PREC)
    assert close(x.exp(), mpmath.exp(mp_at(x)), bits=PREC - 70)


@given(reals)
@settings(max_examples=60, deadline=None)
def test_sin_cos(q):
    x = BigFloat.from_fraction(q, PREC)
    s, c = x.sin_cos()
    assert close(s, mpmath.sin(mp_at(x)))
    assert close(c, mpmath.cos(mp_at(x)))


def test_precision_never_downgrades():
    a = BigFloat.from_int(1, 64)
    b = BigFloat.from_fraction(Fraction(1, 3), 200)
    assert (a + b).prec == (a * b).prec == (b / a).prec == 200


def test_division_and_decimal():
    third = BigFloat.from_int(1, 200) / 3
    assert third.to_decimal(10) == "0.3333333333"
    assert (-third).to_decimal(3) == "-0.333"
    assert BigFloat.from_fraction(Fraction(5, 2), 64).to_decimal(0) == "3"
    assert BigFloat.from_fraction(Fraction(-1, 4), 64).to_decimal(1) == "-0.3"


def test_complex_exp():
    w = BigComplex.unit(BigFloat.pi(PREC) * 2 / 5)
    e = w.exp()
    ref = mpmath.exp(mpmath.exp(2j * mpmath.pi / 5))
    assert close(e.re, ref.real) and close(e.im, ref.imag)
    assert w * w.conjugate() == BigComplex(w.re * w.re + w.im * w.im, w.re * (-w.im) + w.im * w.re)
    assert abs(complex(w) - complex(mpmath.exp(2j * mpmath.pi / 5))) < 1e-15

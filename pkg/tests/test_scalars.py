import math
import random
from fractions import Fraction

import pytest

from altloop.errors import DivisionByZero, NotTotallyReal, RadicandMismatch
from altloop.scalars import (
    FieldDescriptor,
    QuadExt,
    conj,
    field_norm,
    format_scalar,
    is_algebraic_integer,
    is_positive,
    is_squarefree,
    is_totally_positive,
    parse_field,
    parse_scalar,
)


def embed(x, sign=1):
    """Float oracle for one real embedding of a + b*sqrt(m), m > 0."""
    if isinstance(x, QuadExt):
        return float(x.a) + sign * float(x.b) * math.sqrt(x.m)
    return float(x)


def test_rational_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_conjugate_product_is_norm():
    x = QuadExt(2, 1, 1)
    assert x * x.conjugate() == -1
    assert field_norm(x) == Fraction(-1)


def test_radicand_squares():
    i = QuadExt.sqrt(-1)
    assert i * i == -1
    assert QuadExt.sqrt(5) ** 2 == 5


def test_division():
    x = QuadExt(2, 1, 1)
    assert x / x == 1
    y = (1 + 0 * x) / x  # 1/(1+sqrt 2) = sqrt2 - 1
    assert y == QuadExt(2, -1, 1)
    with pytest.raises(DivisionByZero):
        x / QuadExt(2, 0, 0)


def test_radicand_mismatch():
    with pytest.raises(RadicandMismatch):
        QuadExt(2, 1, 1) + QuadExt(3, 1, 1)
    with pytest.raises(RadicandMismatch):
        QuadExt(-1, 0, 1) * QuadExt(5, 0, 1)


def test_radicand_validation():
    for bad in (0, 1, 4, 12, -4):
        with pytest.raises(ValueError):
            QuadExt(bad, 1, 1)
    assert is_squarefree(-5) and is_squarefree(30)
    assert not is_squarefree(18)


def test_conj_examples():
    assert conj(QuadExt(5, 3, 2)) == QuadExt(5, 3, -2)
    assert conj(Fraction(7)) == 7
    x = QuadExt(-3, 1, 1)
    assert conj(conj(x)) == x


def test_conj_is_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(1000):
        m = rng.choice([-5, -1, 2, 5])
        x = QuadExt(m, Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        y = QuadExt(m, Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        assert conj(x * y) == conj(x) * conj(y)
        assert conj(x + y) == conj(x) + conj(y)


def test_totally_positive_examples():
    x = QuadExt(2, 3, 1)
    assert is_totally_positive(x)
    assert embed(x, 1) > 0 and embed(x, -1) > 0
    y = QuadExt(2, 1, 1)
    assert not is_totally_positive(y)
    assert embed(y, -1) < 0  # the second embedding is 1 - sqrt(2)
    assert is_totally_positive(Fraction(1))
    assert not is_totally_positive(Fraction(0))


def test_totally_positive_matches_float_oracle():
    rng = random.Random(11)
    for _ in range(500):
        x = QuadExt(rng.choice([2, 3, 5, 7]),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        expected = embed(x, 1) > 0 and embed(x, -1) > 0
        if x and min(abs(embed(x, 1)), abs(embed(x, -1))) > 1e-9:
            assert is_totally_positive(x) == expected
        assert is_positive(x) == (embed(x, 1) > 0) or abs(embed(x, 1)) < 1e-9


def test_squares_are_totally_positive():
    rng = random.Random(13)
    for _ in range(300):
        x = QuadExt(rng.choice([2, 5]),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        if x:
            assert is_totally_positive(x * x)


def test_totally_positive_needs_real_field():
    with pytest.raises(NotTotallyReal):
        is_totally_positive(QuadExt(-1, 1, 1))


def test_algebraic_integer_examples():
    golden = QuadExt(5, Fraction(1, 2), Fraction(1, 2))
    assert golden.trace_q() == 1 and golden.norm_q() == -1
    assert is_algebraic_integer(golden)
    half = QuadExt(2, Fraction(1, 2), Fraction(1, 2))
    assert half.trace_q() == 1 and half.norm_q() == Fraction(-1, 4)
    assert not is_algebraic_integer(half)
    assert is_algebraic_integer(Fraction(5))
    assert not is_algebraic_integer(Fraction(1, 2))


def test_field_norm_is_rational():
    rng = random.Random(17)
    for _ in range(200):
        x = QuadExt(rng.choice([-7, -1, 3, 10]),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        assert isinstance(field_norm(x), Fraction)


def test_scalar_literals_round_trip():
    cases = [
        "0", "5", "-3", "1/2", "-7/3",
        "sqrt(2)", "-sqrt(2)", "2*sqrt(-1)", "1/2+3*sqrt(-5)",
        "3-1/2*sqrt(7)", "-1/3-sqrt(10)",
    ]
    for text in cases:
        value = parse_scalar(text)
        assert format_scalar(value) == text
        assert parse_scalar(format_scalar(value)) == value


def test_scalar_literal_errors():
    from altloop.errors import FormatError

    for bad in ("", "x", "1+", "sqrt(4)", "1/0"):
        with pytest.raises((FormatError, ValueError, ZeroDivisionError)):
            parse_scalar(bad)
    with pytest.raises(RadicandMismatch):
        parse_scalar("sqrt(2)+sqrt(3)")


def test_field_descriptor():
    assert FieldDescriptor.rationals().is_totally_real
    real = FieldDescriptor.quadratic(2)
    assert real.kind == FieldDescriptor.REAL_QUADRATIC and real.is_totally_real
    imag = FieldDescriptor.quadratic(-1)
    assert imag.kind == FieldDescriptor.IMAG_QUADRATIC and not imag.is_totally_real
    cubic = FieldDescriptor.totally_real(3)
    assert cubic.is_totally_real and cubic.degree == 3
    for text in ("Q", "Q(sqrt(-1))", "Q(sqrt(10))", "totally_real(4)"):
        assert repr(parse_field(text)) == text
    with pytest.raises(ValueError):
        FieldDescriptor.quadratic(4)


def test_quadext_equality_and_hash():
    assert QuadExt(2, 3, 0) == Fraction(3) == QuadExt(5, 3, 0)
    assert hash(QuadExt(2, 3, 0)) == hash(Fraction(3))
    assert QuadExt(2, 0, 1) != QuadExt(5, 0, 1)

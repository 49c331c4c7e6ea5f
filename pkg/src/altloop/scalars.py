"""Exact scalars: rationals and quadratic extensions Q(sqrt(m)).

Rationals are plain ``fractions.Fraction`` values.  ``QuadExt`` holds
a + b*sqrt(m) for a squarefree radicand m not in {0, 1}; values with
different radicands never mix.  All sign and integrality tests are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FormatError, NotTotallyReal, RadicandMismatch

Rational = Fraction
Scalar = Union[Fraction, "QuadExt"]

_RAT_TYPES = (int, Fraction)


def is_squarefree(m: int) -> bool:
    if m == 0:
        return False
    m = abs(m)
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def _check_radicand(m: int) -> int:
    if m in (0, 1) or not is_squarefree(m):
        raise ValueError(f"radicand must be squarefree and not 0 or 1, got {m}")
    return m


class QuadExt:
    """A value a + b*sqrt(m) with exact rational a, b."""

    __slots__ = ("m", "a", "b")

    def __init__(self, m: int, a=0, b=0):
        object.__setattr__(self, "m", _check_radicand(m))
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt values are immutable")

    @staticmethod
    def sqrt(m: int) -> "QuadExt":
        return QuadExt(m, 0, 1)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise RadicandMismatch(
                    f"cannot combine sqrt({self.m}) with sqrt({other.m})"
                )
            return other
        if isinstance(other, _RAT_TYPES):
            return QuadExt(self.m, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.m, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.m, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.m, o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.m,
            self.a * o.a + self.m * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.a * o.a - o.m * o.b * o.b
        if n == 0:
            raise DivisionByZero("division by zero")
        # 1/(a+b*sqrt(m)) = (a-b*sqrt(m)) / (a^2 - m*b^2)
        return QuadExt(
            self.m,
            (self.a * o.a - self.m * self.b * o.b) / n,
            (self.b * o.a - self.a * o.b) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return QuadExt(self.m, -self.a, -self.b)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadExt(self.m, 1, 0)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.m != self.m:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, _RAT_TYPES):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.m, self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return format_scalar(self)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.m, self.a, -self.b)

    def trace_q(self) -> Fraction:
        return 2 * self.a

    def norm_q(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b


def as_scalar(x) -> Scalar:
    """Normalize ints to Fraction; pass Fractions and QuadExt through."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, QuadExt)):
        return x
    raise TypeError(f"not a scalar: {x!r}")


def conj(x: Scalar) -> Scalar:
    """Field conjugation a+b*sqrt(m) -> a-b*sqrt(m); fixes rationals."""
    if isinstance(x, QuadExt):
        return x.conjugate()
    return as_scalar(x)


def field_norm(x: Scalar) -> Fraction:
    """x * conj(x), always rational."""
    if isinstance(x, QuadExt):
        return x.norm_q()
    x = as_scalar(x)
    return x * x


def is_positive(x: Scalar) -> bool:
    """Exact sign test in the real embedding sqrt(m) > 0 (m > 0 required)."""
    if isinstance(x, QuadExt):
        if x.m < 0:
            raise NotTotallyReal(f"sqrt({x.m}) has no real embedding")
        a, b = x.a, x.b
        if b == 0:
            return a > 0
        if a == 0:
            return b > 0
        if a > 0 and b > 0:
            return True
        if a < 0 and b < 0:
            return False
        # mixed signs: a + b*sqrt(m) > 0 iff the larger-magnitude side wins
        if a > 0:
            return a * a > x.m * b * b
        return x.m * b * b > a * a
    return as_scalar(x) > 0


def is_totally_positive(x: Scalar) -> bool:
    """True iff every real embedding of x is positive."""
    if isinstance(x, QuadExt):
        if x.m < 0:
            raise NotTotallyReal(f"Q(sqrt({x.m})) is not totally real")
        return is_positive(x) and is_positive(x.conjugate())
    return as_scalar(x) > 0


def is_algebraic_integer(x: Scalar) -> bool:
    """True iff trace and norm down to Q are rational integers."""
    if isinstance(x, QuadExt):
        return x.trace_q().denominator == 1 and x.norm_q().denominator == 1
    return as_scalar(x).denominator == 1


class FieldDescriptor:
    """Symbolic ground field: Q, a quadratic extension, or a totally real
    field of degree >= 3 (the latter never materializes as concrete scalars).
    """

    RATIONAL = "Q"
    IMAG_QUADRATIC = "imag_quadratic"
    REAL_QUADRATIC = "real_quadratic"
    TOTALLY_REAL = "totally_real"

    __slots__ = ("kind", "m", "degree")

    def __init__(self, kind: str, m: int | None = None, degree: int | None = None):
        if kind == self.RATIONAL:
            m, degree = None, None
        elif kind in (self.IMAG_QUADRATIC, self.REAL_QUADRATIC):
            m = _check_radicand(int(m))
            if kind == self.IMAG_QUADRATIC and m >= 0:
                raise ValueError("imaginary quadratic needs m < 0")
            if kind == self.REAL_QUADRATIC and m <= 1:
                raise ValueError("real quadratic needs m > 1")
            degree = None
        elif kind == self.TOTALLY_REAL:
            if degree is None or degree < 3:
                raise ValueError("totally real descriptor needs degree >= 3")
            m = None
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        raise AttributeError("FieldDescriptor values are immutable")

    @staticmethod
    def rationals() -> "FieldDescriptor":
        return FieldDescriptor(FieldDescriptor.RATIONAL)

    @staticmethod
    def quadratic(m: int) -> "FieldDescriptor":
        m = _check_radicand(m)
        kind = FieldDescriptor.IMAG_QUADRATIC if m < 0 else FieldDescriptor.REAL_QUADRATIC
        return FieldDescriptor(kind, m=m)

    @staticmethod
    def totally_real(degree: int) -> "FieldDescriptor":
        return FieldDescriptor(FieldDescriptor.TOTALLY_REAL, degree=degree)

    @property
    def is_totally_real(self) -> bool:
        return self.kind in (self.RATIONAL, self.REAL_QUADRATIC, self.TOTALLY_REAL)

    def __eq__(self, other):
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return (self.kind, self.m, self.degree) == (other.kind, other.m, other.degree)

    def __hash__(self):
        return hash((self.kind, self.m, self.degree))

    def __repr__(self):
        if self.kind == self.RATIONAL:
            return "Q"
        if self.kind == self.TOTALLY_REAL:
            return f"totally_real({self.degree})"
        return f"Q(sqrt({self.m}))"


def parse_field(text: str) -> FieldDescriptor:
    text = text.strip()
    if text == "Q":
        return FieldDescriptor.rationals()
    m = re.fullmatch(r"Q\(sqrt\((-?\d+)\)\)", text)
    if m:
        return FieldDescriptor.quadratic(int(m.group(1)))
    m = re.fullmatch(r"totally_real\((\d+)\)", text)
    if m:
        return FieldDescriptor.totally_real(int(m.group(1)))
    raise FormatError(f"cannot parse field {text!r}")


_TERM_RE = re.compile(
    r"([+-]?)"                                  # sign
    r"(?:"
    r"(\d+(?:/\d+)?)\*sqrt\((-?\d+)\)"          # r/s*sqrt(m)
    r"|sqrt\((-?\d+)\)"                         # bare sqrt(m)
    r"|(\d+(?:/\d+)?)"                          # plain rational
    r")"
)


def parse_scalar(text: str) -> Scalar:
    """Parse a canonical scalar literal such as ``-3/2`` or ``1/2+3*sqrt(-5)``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise FormatError("empty scalar literal")
    pos = 0
    rat = Fraction(0)
    irr: Fraction | None = None
    m: int | None = None
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if not match or match.start() != pos:
            raise FormatError(f"cannot parse scalar {text!r}")
        sign = -1 if match.group(1) == "-" else 1
        if match.group(2) is not None:
            coeff, rad = Fraction(match.group(2)), int(match.group(3))
        elif match.group(4) is not None:
            coeff, rad = Fraction(1), int(match.group(4))
        else:
            rat += sign * Fraction(match.group(5))
            pos = match.end()
            continue
        if m is not None and rad != m:
            raise RadicandMismatch(f"mixed radicands in {text!r}")
        m = _check_radicand(rad)
        irr = (irr or Fraction(0)) + sign * coeff
        pos = match.end()
    if m is None:
        return rat
    return QuadExt(m, rat, irr)


def _rat_str(q: Fraction) -> str:
    return str(q)


def format_scalar(x: Scalar) -> str:
    """Canonical whitespace-free printing; inverse of parse_scalar on values."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return _rat_str(x)
    if x.b == 0:
        return _rat_str(x.a)
    babs = abs(x.b)
    root = f"sqrt({x.m})" if babs == 1 else f"{_rat_str(babs)}*sqrt({x.m})"
    bsign = "-" if x.b < 0 else "+"
    if x.a == 0:
        return root if x.b > 0 else "-" + root
    return f"{_rat_str(x.a)}{bsign}{root}"

"""Involutive algebras, Cayley-Dickson doubling, quaternions/octonions with
their diagonal norm forms, definiteness and split tests, and the Zorn
vector-matrix algebra.

Doubling follows the product rule
    (a1 + b1 x)(a2 + b2 x) = (a1 a2 + alpha * conj(b2) b1) + (b2 a1 + b1 conj(a2)) x
with the natural involution conj(a + b x) = conj(a) - b x and x^2 = alpha.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional

from .errors import (
    InvolutionBroken,
    NormNotScalar,
    NotDefinite,
    ParametersUnknown,
    ZeroParameter,
)
from .scalars import (
    FieldDescriptor,
    QuadExt,
    Scalar,
    as_scalar,
    is_totally_positive,
)
from .structalg import RingElement, StructureConstantAlgebra


@dataclass(frozen=True)
class NormForm:
    """Diagonal quadratic form; for (K, alpha, beta, gamma) the coefficients
    are (1, -alpha, -beta, alpha*beta, -gamma, alpha*gamma, beta*gamma,
    -alpha*beta*gamma) in the basis 1, x, y, xy, z, xz, yz, (xy)z."""

    coeffs: tuple

    def evaluate(self, coords) -> Scalar:
        total = Fraction(0)
        for d, c in zip(self.coeffs, coords):
            if c:
                total = total + d * c * c
        return total


class InvolutiveAlgebra:
    """A structure-constant algebra with a verified anti-automorphism of
    order two whose norm a * conj(a) is scalar on the basis."""

    def __init__(self, algebra, images, field, params=None, norm_form=None):
        self.algebra: StructureConstantAlgebra = algebra
        self.images = tuple(tuple(as_scalar(c) for c in img) for img in images)
        self.field: FieldDescriptor = field
        self.params = None if params is None else tuple(as_scalar(p) for p in params)
        self.norm_form: Optional[NormForm] = norm_form
        self._validate()

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def conj(self, x: RingElement) -> RingElement:
        n = self.algebra.dim
        out = [Fraction(0)] * n
        for j, c in enumerate(x.coords):
            if not c:
                continue
            img = self.images[j]
            for i in range(n):
                if img[i]:
                    out[i] = out[i] + c * img[i]
        return self.algebra.element(out)

    def _scalar_part(self, x: RingElement) -> Scalar:
        """lambda with x = lambda * 1, else NormNotScalar."""
        unit = self.algebra.unit_coords()
        if unit is None:
            raise NormNotScalar("algebra has no unit to compare against")
        lam = None
        for u, c in zip(unit, x.coords):
            if u:
                lam = c / u
                break
        scaled = tuple(lam * u for u in unit)
        if scaled != x.coords:
            raise NormNotScalar(f"{x!r} is not a multiple of the unit")
        return lam

    def norm(self, x: RingElement) -> Scalar:
        return self._scalar_part(x * self.conj(x))

    def _validate(self):
        A = self.algebra
        n = A.dim
        if len(self.images) != n or any(len(img) != n for img in self.images):
            raise InvolutionBroken("involution matrix shape does not match algebra")
        basis = [A.basis(i) for i in range(n)]
        conj_basis = [self.conj(b) for b in basis]
        for j in range(n):
            if self.conj(conj_basis[j]) != basis[j]:
                raise InvolutionBroken(
                    f"involution does not square to the identity on {A.basis_names[j]}"
                )
        for i in range(n):
            for j in range(n):
                if self.conj(basis[i] * basis[j]) != conj_basis[j] * conj_basis[i]:
                    raise InvolutionBroken(
                        "anti-automorphism law fails on basis pair "
                        f"({A.basis_names[i]}, {A.basis_names[j]})"
                    )
        for i in range(n):
            try:
                self._scalar_part(basis[i] * conj_basis[i])
            except NormNotScalar as exc:
                raise InvolutionBroken(
                    f"norm of {A.basis_names[i]} is not scalar"
                ) from exc

    def __repr__(self):
        return f"<involutive {self.algebra.name}: dim {self.dim} over {self.field}>"


def norm(x: RingElement, A: InvolutiveAlgebra) -> Scalar:
    return A.norm(x)


def scalar_algebra(field: FieldDescriptor) -> InvolutiveAlgebra:
    """The ground field as a one-dimensional algebra with trivial involution."""
    if field.kind == FieldDescriptor.TOTALLY_REAL:
        raise ValueError("degree >= 3 fields are symbolic descriptors only")
    algebra = StructureConstantAlgebra(
        (((Fraction(1),),),), ("1",), 0, name=f"{field}"
    )
    return InvolutiveAlgebra(
        algebra, ((Fraction(1),),), field, params=(), norm_form=NormForm((Fraction(1),))
    )


def _compose_label(base: str, t: str) -> str:
    if base == "1":
        return t
    if len(base) == 1:
        return base + t
    return f"({base}){t}"


def cayley_dickson_double(
    A: InvolutiveAlgebra, alpha, label: str | None = None
) -> InvolutiveAlgebra:
    """Double an involutive algebra; the new generator squares to alpha."""
    alpha = as_scalar(alpha)
    if not alpha:
        raise ZeroParameter("doubling parameter must be nonzero")
    base = A.algebra
    n = base.dim
    if label is None:
        label = {1: "x", 2: "y", 4: "z"}.get(n, f"t{n}")
    zero = Fraction(0)

    def pad(a_part=None, b_part=None):
        cell = [zero] * (2 * n)
        if a_part is not None:
            for k, c in enumerate(a_part):
                cell[k] = c
        if b_part is not None:
            for k, c in enumerate(b_part):
                cell[n + k] = c
        return tuple(cell)

    basis = [base.basis(i) for i in range(n)]
    conj_basis = [A.conj(b) for b in basis]
    table = []
    for i in range(2 * n):
        row = []
        for j in range(2 * n):
            if i < n and j < n:
                row.append(pad(a_part=base.table[i][j]))
            elif i < n:
                # e_i * (e_{j'} x) = (e_{j'} e_i) x
                row.append(pad(b_part=base.table[j - n][i]))
            elif j < n:
                # (e_{i'} x) * e_j = (e_{i'} conj(e_j)) x
                row.append(pad(b_part=(basis[i - n] * conj_basis[j]).coords))
            else:
                # (e_{i'} x)(e_{j'} x) = alpha * conj(e_{j'}) e_{i'}
                prod = conj_basis[j - n] * basis[i - n]
                row.append(pad(a_part=tuple(alpha * c for c in prod.coords)))
        table.append(tuple(row))

    names = list(base.basis_names) + [
        _compose_label(nm, label) for nm in base.basis_names
    ]
    doubled = StructureConstantAlgebra(
        table, names, base.unit_index, name=f"({base.name},{alpha})"
    )
    images = []
    for j in range(n):
        images.append(pad(a_part=A.images[j]))
    for j in range(n):
        img = [zero] * (2 * n)
        img[n + j] = Fraction(-1)
        images.append(tuple(img))
    params = None if A.params is None else A.params + (alpha,)
    norm_form = None
    if A.norm_form is not None:
        norm_form = NormForm(
            A.norm_form.coeffs + tuple(-alpha * d for d in A.norm_form.coeffs)
        )
    return InvolutiveAlgebra(doubled, images, A.field, params, norm_form)


def quaternion_algebra(field: FieldDescriptor, alpha, beta) -> InvolutiveAlgebra:
    """Generalized quaternions over K: basis 1, x, y, xy with x^2 = alpha,
    y^2 = beta, built by two doublings."""
    if not as_scalar(alpha) or not as_scalar(beta):
        raise ZeroParameter("quaternion parameters must be nonzero")
    return cayley_dickson_double(
        cayley_dickson_double(scalar_algebra(field), alpha, "x"), beta, "y"
    )


def octonion_algebra(field: FieldDescriptor, alpha, beta, gamma) -> InvolutiveAlgebra:
    """Octonions over K: basis 1, x, y, xy, z, xz, yz, (xy)z with x^2 = alpha,
    y^2 = beta, z^2 = gamma."""
    if not as_scalar(gamma):
        raise ZeroParameter("octonion parameters must be nonzero")
    return cayley_dickson_double(quaternion_algebra(field, alpha, beta), gamma, "z")


def is_totally_definite(A: InvolutiveAlgebra) -> bool:
    """True iff the ground field is Q or real quadratic and every -parameter
    is totally positive (norm form positive definite in every embedding)."""
    if A.params is None:
        raise ParametersUnknown("algebra was not built by a recording constructor")
    if A.field.kind not in (FieldDescriptor.RATIONAL, FieldDescriptor.REAL_QUADRATIC):
        return False
    return all(is_totally_positive(-p) for p in A.params)


@dataclass(frozen=True)
class SplitResult:
    SPLIT = "split"
    DIVISION = "division"
    UNKNOWN = "unknown"

    status: str
    witness: Optional[RingElement] = None


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def scalar_sqrt(x: Scalar, m: int | None) -> Optional[Scalar]:
    """A square root of x inside Q (m None) or Q(sqrt(m)), or None."""
    x = as_scalar(x)
    if isinstance(x, QuadExt):
        m = x.m
    if isinstance(x, Fraction) or x.b == 0:
        r = x if isinstance(x, Fraction) else x.a
        s = _rational_sqrt(r)
        if s is not None:
            return s
        if m is not None:
            t = _rational_sqrt(r / m)
            if t is not None:
                return QuadExt(m, 0, t)
        return None
    # (u + v sqrt(m))^2 = x:  u^2 + m v^2 = a, 2uv = b
    disc = _rational_sqrt(x.a * x.a - x.m * x.b * x.b)
    if disc is None:
        return None
    for t in (disc, -disc):
        usq = (x.a + t) / 2
        u = _rational_sqrt(usq)
        if u and u != 0:
            return QuadExt(x.m, u, x.b / (2 * u))
    return None


def _four_squares(n: int) -> list[int]:
    """n = sum of at most four squares (n >= 1)."""
    bound = isqrt(n)
    for a in range(bound, -1, -1):
        for b in range(isqrt(n - a * a), -1, -1):
            rem = n - a * a - b * b
            for c in range(isqrt(rem), -1, -1):
                d2 = rem - c * c
                d = isqrt(d2)
                if d * d == d2:
                    return [v for v in (a, b, c, d) if v]
    raise AssertionError("four-square decomposition must exist")


def _scalar_height_values(h: int, m: int | None):
    """Coordinate values of height exactly <= h, lexicographic."""
    ints = [Fraction(v) for v in range(-h, h + 1)]
    if m is None:
        return ints
    vals = []
    for a in range(-h, h + 1):
        for b in range(-h, h + 1):
            vals.append(QuadExt(m, a, b) if b else Fraction(a))
    return vals


def _height(v: Scalar) -> int:
    if isinstance(v, QuadExt):
        return max(
            abs(v.a.numerator), v.a.denominator, abs(v.b.numerator), v.b.denominator
        ) if v else 0
    return max(abs(v.numerator), v.denominator) if v else 0


def is_split(
    A: InvolutiveAlgebra, height_bound: int = 20, candidate_budget: int = 2_000_000
) -> SplitResult:
    """Decide split / division / unknown for a constructor-built algebra.

    Division is reported exactly when the totally-definite criterion applies.
    Split witnesses (nonzero elements of norm zero) come from, in order: an
    exact square criterion on coordinate pairs, a sum-of-four-squares
    construction over imaginary quadratic fields, then a height-bounded
    coordinate search.  Anything undecided inside the budget is unknown.
    """
    if A.params is None or A.norm_form is None:
        raise ParametersUnknown("algebra was not built by a recording constructor")
    if is_totally_definite(A):
        return SplitResult(SplitResult.DIVISION)
    d = A.norm_form.coeffs
    n = len(d)
    m = A.field.m

    def witness_from(coords) -> Optional[SplitResult]:
        x = A.algebra.element(coords)
        if x.is_zero():
            return None
        if A.norm_form.evaluate(x.coords) != 0:
            return None
        if not (x * A.conj(x)).is_zero():
            raise InvolutionBroken("norm form disagrees with a*conj(a)")
        return SplitResult(SplitResult.SPLIT, x)

    zero = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            s = scalar_sqrt(-d[j] / d[i], m)
            if s is not None:
                coords = [zero] * n
                coords[i], coords[j] = s, Fraction(1)
                found = witness_from(coords)
                if found:
                    return found

    if m is not None and m < 0:
        ones = [i for i in range(n) if d[i] == 1]
        squares = _four_squares(-m)
        if len(ones) >= 1 + len(squares):
            coords = [zero] * n
            coords[ones[0]] = QuadExt(m, 0, 1)
            for t, v in enumerate(squares):
                coords[ones[1 + t]] = Fraction(v)
            found = witness_from(coords)
            if found:
                return found

    tested = 0
    for h in range(1, height_bound + 1):
        values = _scalar_height_values(h, m)
        for k in (3, 4):
            if k > n:
                continue
            for supp in itertools.combinations(range(n), k):
                for combo in itertools.product(values, repeat=k):
                    if any(not v for v in combo):
                        continue
                    if max(_height(v) for v in combo) != h:
                        continue
                    tested += 1
                    if tested > candidate_budget:
                        return SplitResult(SplitResult.UNKNOWN)
                    total = zero
                    for idx, v in zip(supp, combo):
                        total = total + d[idx] * v * v
                    if total == 0:
                        coords = [zero] * n
                        for idx, v in zip(supp, combo):
                            coords[idx] = v
                        found = witness_from(coords)
                        if found:
                            return found
    return SplitResult(SplitResult.UNKNOWN)


def _cross(v, w):
    return (
        v[1] * w[2] - v[2] * w[1],
        v[2] * w[0] - v[0] * w[2],
        v[0] * w[1] - v[1] * w[0],
    )


def _dot(v, w):
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]


def zorn_algebra(ring_tag: str = "Q") -> StructureConstantAlgebra:
    """Zorn vector matrices [[a, v], [w, b]] with scalar diagonal and
    3-vector off-diagonal slots:

        [[a,v],[w,b]] * [[a',v'],[w',b']] =
            [[a a' + v.w',  a v' + b' v - w x w'],
             [a' w + b w' + v x v',  b b' + w.v']]

    The cross product is added in the lower-left and subtracted in the
    upper-right; alternativity of the result is asserted in the test suite.
    """
    return _zorn_cached(ring_tag)


@lru_cache(maxsize=None)
def _zorn_cached(ring_tag: str) -> StructureConstantAlgebra:
    zero = Fraction(0)
    one = Fraction(1)

    def unpack(coords):
        a, b = coords[0], coords[1]
        v = (coords[2], coords[3], coords[4])
        w = (coords[5], coords[6], coords[7])
        return a, v, w, b

    def pack(a, v, w, b):
        return (a, b) + tuple(v) + tuple(w)

    basis = []
    for i in range(8):
        coords = [zero] * 8
        coords[i] = one
        basis.append(tuple(coords))
    table = []
    for x in basis:
        a, v, w, b = unpack(x)
        row = []
        for y in basis:
            a2, v2, w2, b2 = unpack(y)
            cw = _cross(w, w2)
            cv = _cross(v, v2)
            row.append(
                pack(
                    a * a2 + _dot(v, w2),
                    tuple(a * v2[t] + b2 * v[t] - cw[t] for t in range(3)),
                    tuple(a2 * w[t] + b * w2[t] + cv[t] for t in range(3)),
                    b * b2 + _dot(w, v2),
                )
            )
        table.append(tuple(row))
    names = ("e11", "e22", "u1", "u2", "u3", "w1", "w2", "w3")
    return StructureConstantAlgebra(table, names, None, name=f"zorn({ring_tag})")


def zorn_commuting_nilpotents(ring_tag: str = "Q") -> tuple[RingElement, RingElement]:
    """The pair E12(e1), E21(e2): both square to zero, their products vanish
    both ways, and they are Z-independent, so 1+theta_1 and 1+theta_2 generate
    a rank-two free abelian group of units in the integral span."""
    Z = zorn_algebra(ring_tag)
    theta1 = Z.basis(2)  # upper vector slot, first coordinate
    theta2 = Z.basis(6)  # lower vector slot, second coordinate
    return theta1, theta2

"""Loop algebras and their integral units.

The loop algebra of a finite loop has the loop elements as basis and 0/1
structure constants read off the Cayley table.  "Integral" elements are the
integer-coordinate elements of the rational loop algebra; unit tests solve
the left-multiplication system exactly and verify two-sidedness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import linalg, structalg
from .composition import InvolutiveAlgebra
from .errors import NonNilpotent, NotDefinite, SearchSpaceTooLarge
from .loops import FiniteLoop, element_order
from .scalars import Scalar
from .structalg import RingElement, StructureConstantAlgebra

SEARCH_GUARD = 10_000_000


def loop_algebra(L: FiniteLoop, ring_tag: str = "Q") -> StructureConstantAlgebra:
    """Structure-constant algebra of the loop; the table is the same for any
    coefficient ring, so the tag only labels the algebra (integral work uses
    integer-coordinate elements of the rational algebra).  Cached, so all
    elements over one loop share one algebra object."""
    return _loop_algebra_cached(L, ring_tag)


@lru_cache(maxsize=None)
def _loop_algebra_cached(L: FiniteLoop, ring_tag: str) -> StructureConstantAlgebra:
    n = L.order
    zero, one = Fraction(0), Fraction(1)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            cell = [zero] * n
            cell[L.mul(i, j)] = one
            row.append(tuple(cell))
        table.append(tuple(row))
    return StructureConstantAlgebra(
        table, L.names, L.identity, name=f"{ring_tag}[loop{n}]"
    )


def loop_element(L: FiniteLoop, g: int) -> RingElement:
    return loop_algebra(L).basis(g)


def augmentation(x: RingElement) -> Scalar:
    total = Fraction(0)
    for c in x.coords:
        total = total + c
    return total


def is_integral(x: RingElement) -> bool:
    return all(isinstance(c, Fraction) and c.denominator == 1 for c in x.coords)


def t_hat(L: FiniteLoop, t: int) -> RingElement:
    """1 + t + ... + t^(o(t)-1); both (1-t)*t_hat and t_hat*(1-t) vanish."""
    A = loop_algebra(L)
    coords = [Fraction(0)] * L.order
    p = L.identity
    for _ in range(element_order(L, t)):
        coords[p] = Fraction(1)
        p = L.mul(t, p)
    return A.element(coords)


def bicyclic_unit(
    L: FiniteLoop, t: int, l: int
) -> Optional[tuple[RingElement, RingElement]]:
    """u = 1 + (1-t)(l * t_hat) with its inverse 1 - theta, or None when
    theta = 0 (for instance whenever <t> is normal and absorbs l).

    The bracketing of theta is fixed as (1-t) * (l * t_hat); theta^2 = 0 is
    verified rather than assumed, and a nonzero square raises NonNilpotent.
    """
    A = loop_algebra(L)
    one = A.basis(L.identity)
    theta = (one - A.basis(t)) * (A.basis(l) * t_hat(L, t))
    if theta.is_zero():
        return None
    if not (theta * theta).is_zero():
        raise NonNilpotent(f"theta = {theta!r} does not square to zero")
    u = one + theta
    u_inv = one - theta
    if u * u_inv != one or u_inv * u != one:
        raise NonNilpotent("1+theta and 1-theta are not two-sided inverses")
    return u, u_inv


def is_unit_integral(x: RingElement) -> Optional[RingElement]:
    """Two-sided integral inverse of an integer-coordinate element, or None.

    Solves the left-multiplication system over Q for a right inverse, then
    demands integer coordinates and verifies the other side.
    """
    if not is_integral(x):
        raise ValueError("is_unit_integral needs integer coordinates")
    A = x.algebra
    one = A.one()
    sol = linalg.solve(structalg.left_mult_matrix(x), one.coords)
    if sol is None:
        return None
    y = A.element(sol)
    if not is_integral(y):
        return None
    if y * x != one or x * y != one:
        return None
    return y


def _is_alternative_cached(A: StructureConstantAlgebra) -> bool:
    cached = getattr(A, "_alternative_cache", None)
    if cached is None:
        cached = structalg.check_alternative(A)
        A._alternative_cache = cached
    return cached


def _left_mult_int_det(L: FiniteLoop, support, coeffs) -> int:
    n = L.order
    mat = [[0] * n for _ in range(n)]
    for g, cg in zip(support, coeffs):
        row = L.table[g]
        for c in range(n):
            mat[row[c]][c] += cg
    return linalg.det_int(mat)


def search_nontrivial_units(
    L: FiniteLoop, coeff_bound: int, support_bound: int
) -> list[RingElement]:
    """All integral units that are not +-(loop element) among vectors whose
    non-identity part has at most ``support_bound`` nonzero coordinates, every
    coordinate (identity included) in [-coeff_bound, coeff_bound].

    The identity coordinate is free because the units of interest look like
    1 + (sparse augmentation-zero part); bounding all coordinates at once
    would exclude them (exhaustive search shows e.g. ZS3 has no nontrivial
    unit supported on fewer than 5 elements).  Candidates are filtered by
    augmentation +-1, then enumerated in lexicographic order (support size,
    pattern, identity coefficient, coefficients).  When the loop algebra is
    alternative, unit-ness is decided by the integer determinant of the
    left-multiplication matrix, cached per orbit under right translation and
    negation (units of an alternative order are closed under both); every
    reported unit is still re-verified through is_unit_integral.
    """
    n = L.order
    c, s = coeff_bound, support_bound
    if c < 1 or s < 1:
        raise ValueError("bounds must be positive")
    others = [g for g in range(n) if g != L.identity]
    total = 0
    for k in range(0, min(s, n - 1) + 1):
        combos = 1
        for t in range(k):
            combos = combos * (len(others) - t) // (t + 1)
        total += combos * (2 * c) ** k * (2 * c + 1)
        if total > SEARCH_GUARD:
            raise SearchSpaceTooLarge(
                f"candidate count exceeds {SEARCH_GUARD}; shrink the bounds"
            )

    A = loop_algebra(L)
    alternative = _is_alternative_cached(A)
    values = [v for v in range(-c, c + 1) if v]
    id_values = list(range(-c, c + 1))
    orbit_cache: dict = {}

    def canonical_orbit_key(support, coeffs):
        best = None
        for g in range(n):
            translated = sorted(
                (L.mul(a, g), cg) for a, cg in zip(support, coeffs)
            )
            for sign in (1, -1):
                key = tuple((i, sign * cg) for i, cg in translated)
                if best is None or key < best:
                    best = key
        return best

    def is_unit(support, coeffs) -> bool:
        if alternative:
            key = canonical_orbit_key(support, coeffs)
            verdict = orbit_cache.get(key)
            if verdict is None:
                ksupport = [i for i, _ in key]
                kcoeffs = [cg for _, cg in key]
                verdict = abs(_left_mult_int_det(L, ksupport, kcoeffs)) == 1
                orbit_cache[key] = verdict
            if not verdict:
                return False
        coords = [Fraction(0)] * n
        for g, cg in zip(support, coeffs):
            coords[g] = Fraction(cg)
        return is_unit_integral(A.element(coords)) is not None

    found = []
    for k in range(0, min(s, n - 1) + 1):
        for rest in itertools.combinations(others, k):
            for e_coeff in id_values:
                for coeffs in itertools.product(values, repeat=k):
                    if e_coeff + sum(coeffs) not in (1, -1):
                        continue
                    support = ((L.identity,) + rest) if e_coeff else rest
                    allc = ((e_coeff,) + coeffs) if e_coeff else coeffs
                    if len(support) == 0:
                        continue
                    if len(support) == 1 and allc[0] in (1, -1):
                        continue  # trivial unit +-g
                    if is_unit(support, allc):
                        coords = [Fraction(0)] * n
                        for g, cg in zip(support, allc):
                            coords[g] = Fraction(cg)
                        found.append(A.element(coords))
    return found


@dataclass(frozen=True)
class TorsionReport:
    order: Optional[int]          # least k <= k_max with u^k = 1, else None
    trivial_power: Optional[int]  # least k <= k_max with u^k = +-(loop element)
    k_max: int

    @property
    def is_torsion(self) -> bool:
        return self.order is not None


def unit_order_bounded(u: RingElement, k_max: int) -> TorsionReport:
    """Iterate powers of a verified unit up to k_max, reporting torsion and
    whether any power collapses to a trivial unit."""
    A = u.algebra
    one = A.one()
    order = None
    trivial = None
    p = u
    for k in range(1, k_max + 1):
        if trivial is None and len(p.support()) == 1:
            coeff = p.coords[p.support()[0]]
            if coeff in (1, -1):
                trivial = k
        if p == one:
            order = k
            break
        p = p * u
    return TorsionReport(order, trivial, k_max)


def enumerate_norm_one(A: InvolutiveAlgebra) -> list[RingElement]:
    """All integer-coordinate elements of norm exactly 1 in the Z-span of the
    constructor basis of a positive definite algebra (box search bounded by
    the diagonal coefficients)."""
    if A.norm_form is None:
        raise NotDefinite("algebra carries no recorded norm form")
    coeffs = A.norm_form.coeffs
    if not all(isinstance(d, Fraction) and d > 0 for d in coeffs):
        raise NotDefinite("norm form is not positive definite over Q")
    bounds = []
    for d in coeffs:
        # floor(sqrt(1/d)) exactly
        q = d.denominator // d.numerator
        r = 1
        while (r + 1) * (r + 1) <= q:
            r += 1
        bounds.append(r if q else 0)
    out = []
    for vec in itertools.product(*[range(-b, b + 1) for b in bounds]):
        total = Fraction(0)
        for d, v in zip(coeffs, vec):
            if v:
                total = total + d * v * v
        if total == 1:
            out.append(A.algebra.element([Fraction(v) for v in vec]))
    out.sort(key=lambda e: e.coords)
    return out

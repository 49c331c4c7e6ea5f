"""Finite-dimensional algebras presented by structure constants.

An algebra of dimension n is an n x n table of coefficient vectors:
``table[i][j]`` holds the coordinates of e_i * e_j.  Elements are coordinate
vectors tied to their algebra; elements of different algebras never combine.
All arithmetic is exact (Fraction / QuadExt coordinates).
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import AlgebraMismatch, NotInvertibleError, NoUnit
from .scalars import as_scalar, format_scalar

DESK_SCALE_DIM = 128


class StructureConstantAlgebra:
    def __init__(self, table, basis_names=None, unit_index=None, name="algebra"):
        n = len(table)
        if n == 0:
            raise ValueError("algebra dimension must be positive")
        if n > DESK_SCALE_DIM:
            warnings.warn(
                f"dimension {n} exceeds the desk-scale bound {DESK_SCALE_DIM};"
                " exact scans will be slow",
                stacklevel=2,
            )
        self.table = tuple(
            tuple(tuple(as_scalar(c) for c in cell) for cell in row) for row in table
        )
        for row in self.table:
            if len(row) != n or any(len(cell) != n for cell in row):
                raise ValueError("structure-constant table is not n x n x n")
        if basis_names is None:
            basis_names = tuple(f"e{i}" for i in range(n))
        self.basis_names = tuple(basis_names)
        if len(self.basis_names) != n:
            raise ValueError("need one basis name per dimension")
        self.name = name
        self.dim = n
        # sparse view: _cells[i][j] = ((k, coeff), ...) over nonzero coords
        self._cells = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(cell) if c)
                for cell in row
            )
            for row in self.table
        )
        self.unit_index = unit_index
        self._unit_coords = None
        self._unit_searched = False
        if unit_index is not None:
            u = self.basis(unit_index)
            for i in range(n):
                e = self.basis(i)
                if u * e != e or e * u != e:
                    raise ValueError(
                        f"basis element {self.basis_names[unit_index]!r} is not a"
                        " two-sided identity"
                    )
            self._unit_coords = u.coords
            self._unit_searched = True

    def __repr__(self):
        return f"<{self.name}: dim {self.dim}>"

    def element(self, coords) -> "RingElement":
        coords = tuple(as_scalar(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return RingElement(self, coords)

    def basis(self, i: int) -> "RingElement":
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return RingElement(self, tuple(coords))

    def zero(self) -> "RingElement":
        return RingElement(self, (Fraction(0),) * self.dim)

    def unit_coords(self) -> Optional[tuple]:
        """Coordinates of the two-sided identity, or None (solved lazily:
        direct sums of unital algebras have a unit that is not basis-aligned)."""
        if self._unit_searched:
            return self._unit_coords
        self._unit_searched = True
        n = self.dim
        rows, rhs = [], []
        for j in range(n):
            for r in range(n):
                left = [self.table[i][j][r] for i in range(n)]
                rows.append(left)
                rhs.append(Fraction(1) if r == j else Fraction(0))
                right = [self.table[j][i][r] for i in range(n)]
                rows.append(right)
                rhs.append(Fraction(1) if r == j else Fraction(0))
        sol = linalg.solve(rows, rhs)
        self._unit_coords = tuple(sol) if sol is not None else None
        return self._unit_coords

    def one(self) -> "RingElement":
        u = self.unit_coords()
        if u is None:
            raise NoUnit(f"{self.name} has no multiplicative identity")
        return RingElement(self, u)

    def mul_coords(self, x: Sequence, y: Sequence) -> tuple:
        out = [Fraction(0)] * self.dim
        cells = self._cells
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = cells[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, t in row[j]:
                    out[k] = out[k] + c * t
        return tuple(out)

    def _ltraces(self) -> tuple:
        """trace of left multiplication by each basis element."""
        cached = getattr(self, "_ltrace_cache", None)
        if cached is None:
            cached = tuple(
                sum((self.table[l][c][c] for c in range(self.dim)), Fraction(0))
                for l in range(self.dim)
            )
            self._ltrace_cache = cached
        return cached


class RingElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: StructureConstantAlgebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: "RingElement"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch(
                f"elements of {self.algebra.name} and {other.algebra.name} do not mix"
            )

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return RingElement(
            self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return RingElement(
            self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return RingElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, RingElement):
            self._check(other)
            return RingElement(
                self.algebra, self.algebra.mul_coords(self.coords, other.coords)
            )
        s = as_scalar(other)
        return RingElement(self.algebra, tuple(s * a for a in self.coords))

    def __rmul__(self, other):
        s = as_scalar(other)
        return RingElement(self.algebra, tuple(s * a for a in self.coords))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            inv = inverse(self)
            if inv is None:
                raise NotInvertibleError("negative power of a non-invertible element")
            return inv ** (-k)
        if k == 0:
            return self.algebra.one()
        out = self
        for _ in range(k - 1):
            out = out * self  # left-associated powers
        return out

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coords) if c)

    def __repr__(self):
        return format_element(self)


def format_element(x: RingElement) -> str:
    """Formal sum like ``1*e - 2*g2 + 1/2*g5`` over the basis names."""
    parts = []
    for i, c in enumerate(x.coords):
        if not c:
            continue
        name = x.algebra.basis_names[i]
        neg = False
        if isinstance(c, Fraction) and c < 0:
            neg, c = True, -c
        text = format_scalar(c)
        if "+" in text[1:] or "-" in text[1:]:
            text = f"({text})"
        term = f"{text}*{name}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts) if parts else "0"


def upper_triangular_2x2() -> StructureConstantAlgebra:
    """T2(Q): upper triangular 2x2 matrices, basis e11, e12, e22.  The unit
    e11 + e22 is not basis-aligned, so unit_index stays None and the identity
    is solved on demand."""
    z, o = Fraction(0), Fraction(1)
    cells = {(0, 0): (0, o), (0, 1): (1, o), (1, 2): (1, o), (2, 2): (2, o)}
    table = []
    for i in range(3):
        row = []
        for j in range(3):
            cell = [z, z, z]
            if (i, j) in cells:
                k, c = cells[(i, j)]
                cell[k] = c
            row.append(tuple(cell))
        table.append(tuple(row))
    return StructureConstantAlgebra(table, ("e11", "e12", "e22"), None, "T2(Q)")


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def associator(x: RingElement, y: RingElement, z: RingElement) -> RingElement:
    """(xy)z - x(yz)."""
    return (x * y) * z - x * (y * z)


def commutator(x: RingElement, y: RingElement) -> RingElement:
    return x * y - y * x


def _basis_assoc(A: StructureConstantAlgebra, i: int, j: int, k: int) -> dict:
    """Sparse coordinates of [e_i, e_j, e_k]."""
    out: dict = {}
    cells = A._cells
    for p, c in cells[i][j]:
        for q, d in cells[p][k]:
            v = out.get(q)
            out[q] = c * d if v is None else v + c * d
    for p, c in cells[j][k]:
        for q, d in cells[i][p]:
            v = out.get(q)
            out[q] = -(c * d) if v is None else v - c * d
    return out


def _dicts_cancel(*dicts) -> bool:
    total: dict = {}
    for d in dicts:
        for k, v in d.items():
            t = total.get(k)
            total[k] = v if t is None else t + v
    return not any(total.values())


def check_associative(A: StructureConstantAlgebra) -> bool:
    n = A.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if any(_basis_assoc(A, i, j, k).values()):
                    return False
    return True


def check_alternative(A: StructureConstantAlgebra) -> bool:
    """Linearized left/right alternative laws on all basis triples
    (equivalent to the laws for all elements in characteristic zero)."""
    n = A.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if not _dicts_cancel(_basis_assoc(A, i, j, k), _basis_assoc(A, j, i, k)):
                    return False
                if not _dicts_cancel(_basis_assoc(A, k, i, j), _basis_assoc(A, k, j, i)):
                    return False
    return True


def check_flexible(A: StructureConstantAlgebra) -> bool:
    n = A.dim
    for i in range(n):
        for k in range(i, n):
            for j in range(n):
                if not _dicts_cancel(_basis_assoc(A, i, j, k), _basis_assoc(A, k, j, i)):
                    return False
    return True


def left_mult_matrix(x: RingElement) -> list[list]:
    """Matrix of y -> x*y in the algebra basis (rows = output coordinates)."""
    A = x.algebra
    n = A.dim
    cols = []
    for c in range(n):
        basis = [Fraction(0)] * n
        basis[c] = Fraction(1)
        cols.append(A.mul_coords(x.coords, basis))
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def inverse(x: RingElement) -> Optional[RingElement]:
    """Two-sided inverse, or None.  Solves the left-multiplication system
    against the unit, then verifies the other side."""
    A = x.algebra
    one = A.one()  # raises NoUnit when there is no identity
    sol = linalg.solve(left_mult_matrix(x), one.coords)
    if sol is None:
        return None
    y = A.element(sol)
    if y * x != one or x * y != one:
        return None
    return y


def is_nilpotent(x: RingElement) -> bool:
    """x^k = 0 for some k <= dim+1, powers left-associated."""
    p = x
    for _ in range(x.algebra.dim + 1):
        if p.is_zero():
            return True
        p = p * x
    return p.is_zero()


def radical(A: StructureConstantAlgebra) -> list[RingElement]:
    """Kernel of the trace form T(x, y) = trace(L_{x y}).

    For the algebra classes this package builds (loop algebras in
    characteristic zero, triangular blocks, direct sums of those) this kernel
    is the nilpotent radical; the invariant tests assert that per class.
    """
    n = A.dim
    tr = A._ltraces()
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(sum((c * tr[k] for k, c in A._cells[i][j]), Fraction(0)))
        gram.append(row)
    # left kernel: v with sum_i v_i G[i][j] = 0 for all j
    transposed = [[gram[i][j] for i in range(n)] for j in range(n)]
    return [A.element(v) for v in linalg.nullspace(transposed)]


def direct_sum(
    A: StructureConstantAlgebra, B: StructureConstantAlgebra, name=None
) -> StructureConstantAlgebra:
    n, m = A.dim, B.dim
    zero = Fraction(0)
    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            cell = [zero] * (n + m)
            if i < n and j < n:
                for k, c in enumerate(A.table[i][j]):
                    cell[k] = c
            elif i >= n and j >= n:
                for k, c in enumerate(B.table[i - n][j - n]):
                    cell[n + k] = c
            row.append(tuple(cell))
        table.append(tuple(row))
    names = list(A.basis_names)
    seen = set(names)
    for nm in B.basis_names:
        while nm in seen:
            nm = nm + "'"
        seen.add(nm)
        names.append(nm)
    return StructureConstantAlgebra(
        table, names, None, name or f"{A.name}+{B.name}"
    )


def annihilator(x: RingElement, side: str = "two-sided") -> list[RingElement]:
    """Basis of {a : a x = 0} / {a : x a = 0} / both."""
    if side not in ("left", "right", "two-sided"):
        raise ValueError(f"side must be left, right or two-sided, not {side!r}")
    A = x.algebra
    n = A.dim
    rows = []
    if side in ("left", "two-sided"):
        prods = [A.mul_coords(basis.coords, x.coords) for basis in map(A.basis, range(n))]
        rows.extend([[prods[i][r] for i in range(n)] for r in range(n)])
    if side in ("right", "two-sided"):
        prods = [A.mul_coords(x.coords, basis.coords) for basis in map(A.basis, range(n))]
        rows.extend([[prods[i][r] for i in range(n)] for r in range(n)])
    return [A.element(v) for v in linalg.nullspace(rows)]


def center(A: StructureConstantAlgebra) -> list[RingElement]:
    """Elements commuting with the basis whose associators with basis pairs
    vanish in the first two slots."""
    n = A.dim
    rows = []
    for j in range(n):
        for r in range(n):
            rows.append([A.table[i][j][r] - A.table[j][i][r] for i in range(n)])
    cells = A._cells
    for i in range(n):
        for j in range(n):
            for spot in (0, 1):
                row_by_l = []
                for l in range(n):
                    if spot == 0:
                        d = _basis_assoc(A, l, i, j)
                    else:
                        d = _basis_assoc(A, i, l, j)
                    row_by_l.append(d)
                for r in range(n):
                    row = [d.get(r, Fraction(0)) for d in row_by_l]
                    if any(row):
                        rows.append(row)
    return [A.element(v) for v in linalg.nullspace(rows)]

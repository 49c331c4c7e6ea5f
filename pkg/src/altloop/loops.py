"""Finite loops as Cayley tables.

A loop is a Latin-square table with a two-sided identity.  Indices are
0-based internally; the text file format (see formats) is 1-based.  Includes
Moufang checks, the subloop lattice, normality, Hamiltonian recognition, the
group-doubling construction M(G, star, g0), and a few named groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import (
    IdentityDisagreement,
    NoIdentity,
    NotASubloop,
    NotLatinSquare,
    OrderTooLarge,
    PreconditionFailed,
)

DESK_SCALE_ORDER = 64


@dataclass(frozen=True)
class FiniteLoop:
    table: tuple
    identity: int
    names: tuple

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def __repr__(self):
        return f"<loop of order {self.order}>"


def validate_loop(table: Sequence[Sequence[int]], names=None) -> FiniteLoop:
    """Check the Latin-square and identity axioms; raise a diagnostic naming
    the first offending row/column otherwise."""
    n = len(table)
    if n == 0:
        raise NotLatinSquare("empty table")
    rows = []
    full = frozenset(range(n))
    for i, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise NotLatinSquare(f"row {i} has length {len(row)}, expected {n}")
        if any(v < 0 or v >= n for v in row):
            raise NotLatinSquare(f"row {i} has an out-of-range entry")
        if frozenset(row) != full:
            raise NotLatinSquare(f"row {i} repeats an entry")
        rows.append(row)
    for j in range(n):
        col = frozenset(rows[i][j] for i in range(n))
        if col != full:
            raise NotLatinSquare(f"column {j} repeats an entry")
    identity = None
    ident_perm = tuple(range(n))
    for e in range(n):
        if rows[e] == ident_perm and all(rows[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    if names is None:
        names = tuple(f"g{i}" for i in range(n))
        names = (("e",) + names[1:]) if identity == 0 else names
    names = tuple(names)
    if len(names) != n or len(set(names)) != n:
        raise ValueError("need one distinct name per element")
    return FiniteLoop(tuple(rows), identity, names)


def is_associative(L: FiniteLoop) -> bool:
    n, t = L.order, L.table
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] != t[x][t[y][z]]:
                    return False
    return True


def is_commutative(L: FiniteLoop) -> bool:
    n, t = L.order, L.table
    return all(t[x][y] == t[y][x] for x in range(n) for y in range(x + 1, n))


def is_moufang(L: FiniteLoop) -> bool:
    """Scan all three Moufang identities; in a loop each implies the others,
    so a disagreement between the scans signals a bug, not an input."""
    n, t = L.order, L.table

    def left() -> bool:  # ((xy)x)z = x(y(xz))
        for x in range(n):
            for y in range(n):
                xyx = t[t[x][y]][x]
                for z in range(n):
                    if t[xyx][z] != t[x][t[y][t[x][z]]]:
                        return False
        return True

    def right() -> bool:  # ((xy)z)y = x(y(zy))
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                for z in range(n):
                    if t[t[xy][z]][y] != t[x][t[y][t[z][y]]]:
                        return False
        return True

    def middle() -> bool:  # (xy)(zx) = (x(yz))x
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                for z in range(n):
                    if t[xy][t[z][x]] != t[t[x][t[y][z]]][x]:
                        return False
        return True

    results = (left(), right(), middle())
    if len(set(results)) != 1:
        raise IdentityDisagreement(
            f"Moufang identity scans disagree: left/right/middle = {results}"
        )
    return results[0]


def element_order(L: FiniteLoop, x: int) -> int:
    """Least k with x^k = identity, powers by repeated left multiplication."""
    k, p = 1, x
    while p != L.identity:
        p = L.mul(x, p)
        k += 1
    return k


def element_orders(L: FiniteLoop) -> list[int]:
    return [element_order(L, x) for x in L.elements()]


def exponent(L: FiniteLoop) -> int:
    return lcm(*element_orders(L))


def loop_center(L: FiniteLoop) -> frozenset:
    """Elements that commute with everything and associate with every pair
    in all three associator positions."""
    n, t = L.order, L.table
    out = []
    for a in range(n):
        if any(t[a][x] != t[x][a] for x in range(n)):
            continue
        ok = True
        for x in range(n):
            for y in range(n):
                if (
                    t[t[a][x]][y] != t[a][t[x][y]]
                    or t[t[x][a]][y] != t[x][t[a][y]]
                    or t[t[x][y]][a] != t[x][t[y][a]]
                ):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return frozenset(out)


def subloop_generated(L: FiniteLoop, generators: Iterable[int]) -> frozenset:
    """Closure under the product; in a finite loop this is already a subloop."""
    current = {L.identity, *generators}
    frontier = list(current)
    while frontier:
        new = []
        for a in frontier:
            for b in current.copy():
                for c in (L.mul(a, b), L.mul(b, a)):
                    if c not in current:
                        current.add(c)
                        new.append(c)
        frontier = new
    return frozenset(current)


def is_subloop(L: FiniteLoop, subset: Iterable[int]) -> bool:
    s = frozenset(subset)
    if L.identity not in s:
        return False
    return all(L.mul(a, b) in s for a in s for b in s)


def all_subloops(L: FiniteLoop) -> list[frozenset]:
    """Every subloop, built as closures of at most two generators followed by
    pairwise joins to a fixpoint (which reaches all joins of cyclic subloops,
    hence every subloop)."""
    if L.order > DESK_SCALE_ORDER:
        raise OrderTooLarge(
            f"order {L.order} exceeds the enumeration bound {DESK_SCALE_ORDER}"
        )
    found = {subloop_generated(L, (x,)) for x in L.elements()}
    found.update(
        subloop_generated(L, pair) for pair in combinations(L.elements(), 2)
    )
    changed = True
    while changed:
        changed = False
        pairs = list(combinations(sorted(found, key=sorted), 2))
        for a, b in pairs:
            join = subloop_generated(L, a | b)
            if join not in found:
                found.add(join)
                changed = True
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_normal_subloop(L: FiniteLoop, subset: Iterable[int]) -> bool:
    """xN = Nx, (xy)N = x(yN), N(xy) = (Nx)y as set equalities."""
    N = frozenset(subset)
    if not is_subloop(L, N):
        raise NotASubloop(f"{sorted(N)} is not a subloop")
    n = L.order
    cos_left = [frozenset(L.mul(x, a) for a in N) for x in range(n)]
    cos_right = [frozenset(L.mul(a, x) for a in N) for x in range(n)]
    if cos_left != cos_right:
        return False
    for x in range(n):
        for y in range(n):
            xy = L.mul(x, y)
            if cos_left[xy] != frozenset(L.mul(x, a) for a in cos_left[y]):
                return False
            if cos_right[xy] != frozenset(L.mul(a, y) for a in cos_right[x]):
                return False
    return True


def is_hamiltonian_loop(L: FiniteLoop) -> bool:
    """Non-associative with every subloop normal."""
    if is_associative(L):
        return False
    return all(is_normal_subloop(L, N) for N in all_subloops(L))


def _is_quaternion_group(L: FiniteLoop, subset: frozenset) -> bool:
    """Order 8, nonabelian, with a unique element of order 2 (that pins Q8)."""
    if len(subset) != 8:
        return False
    elems = sorted(subset)
    if all(L.mul(a, b) == L.mul(b, a) for a in elems for b in elems):
        return False
    return sum(1 for a in elems if element_order(L, a) == 2) == 1


def is_hamiltonian_2group(L: FiniteLoop) -> bool:
    """Nonabelian 2-group with all subgroups normal.  Cross-checked against
    the structural description Q8 x (elementary abelian 2): exponent 4, a Q8
    subgroup, center of index 4."""
    if not is_associative(L):
        return False
    n = L.order
    if n & (n - 1) or is_commutative(L):
        return False
    subloops = all_subloops(L)
    by_scan = all(is_normal_subloop(L, N) for N in subloops)
    by_structure = (
        exponent(L) == 4
        and len(loop_center(L)) * 4 == n
        and any(_is_quaternion_group(L, s) for s in subloops)
    )
    if by_scan != by_structure:
        raise IdentityDisagreement(
            "normal-subgroup scan and structural Q8 x E test disagree"
        )
    return by_scan


@dataclass(frozen=True)
class InvolutionSpec:
    """A permutation meant as an anti-automorphism of order <= 2 on a group."""

    permutation: tuple

    def validate_for(self, G: FiniteLoop, g0: int):
        p = self.permutation
        n = G.order
        if len(p) != n or sorted(p) != list(range(n)):
            raise PreconditionFailed("star map is not a permutation of the elements")
        for g in range(n):
            if p[p[g]] != g:
                raise PreconditionFailed("star map does not square to the identity")
        for g in range(n):
            for h in range(n):
                if p[G.mul(g, h)] != G.mul(p[h], p[g]):
                    raise PreconditionFailed(
                        "star map is not an anti-automorphism: (gh)* != h*g*"
                    )
        center = loop_center(G)
        if g0 not in center:
            raise PreconditionFailed("g0 is not central")
        if p[g0] != g0:
            raise PreconditionFailed("g0 is not fixed by the star map")
        for g in range(n):
            if G.mul(g, p[g]) not in center:
                raise PreconditionFailed("g*g^star is not central for every g")


def two_sided_inverses(L: FiniteLoop) -> list[int]:
    inv = []
    for a in L.elements():
        left = next(x for x in L.elements() if L.mul(x, a) == L.identity)
        right = next(x for x in L.elements() if L.mul(a, x) == L.identity)
        if left != right:
            raise PreconditionFailed(f"element {L.names[a]} has unequal one-sided inverses")
        inv.append(left)
    return inv


def inversion_involution(L: FiniteLoop) -> InvolutionSpec:
    """g -> g^{-1}; an involution of any group."""
    return InvolutionSpec(tuple(two_sided_inverses(L)))


def moufang_double(G: FiniteLoop, star: InvolutionSpec, g0: int) -> FiniteLoop:
    """The loop M(G, star, g0) on G together with a formal copy G u:

        g  * (h u) = (h g) u
        (g u) * h  = (g h*) u
        (g u)(h u) = g0 h* g

    Preconditions on (G, star, g0) are verified and named on failure.
    """
    if not is_associative(G):
        raise PreconditionFailed("base table is not a group (associativity fails)")
    star.validate_for(G, g0)
    p = star.permutation
    n = G.order
    size = 2 * n
    table = [[0] * size for _ in range(size)]
    for g in range(n):
        for h in range(n):
            table[g][h] = G.mul(g, h)
            table[g][n + h] = n + G.mul(h, g)
            table[n + g][h] = n + G.mul(g, p[h])
            table[n + g][n + h] = G.mul(G.mul(g0, p[h]), g)
    names = list(G.names) + [("u" if nm == "1" else nm + "u") for nm in G.names]
    return validate_loop(table, names)


def direct_product(L1: FiniteLoop, L2: FiniteLoop) -> FiniteLoop:
    n1, n2 = L1.order, L2.order
    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a in range(n1):
        for b in range(n2):
            for c in range(n1):
                for d in range(n2):
                    table[a * n2 + b][c * n2 + d] = L1.mul(a, c) * n2 + L2.mul(b, d)
    names = tuple(
        f"({L1.names[a]},{L2.names[b]})" for a in range(n1) for b in range(n2)
    )
    return validate_loop(table, names)


def is_ra_loop(L: FiniteLoop) -> bool:
    """True iff the rational loop algebra is alternative but not associative."""
    if L.order > DESK_SCALE_ORDER:
        raise OrderTooLarge(
            f"order {L.order} exceeds the desk-scale bound {DESK_SCALE_ORDER}"
        )
    from . import structalg
    from .loopring import loop_algebra

    A = loop_algebra(L)
    return structalg.check_alternative(A) and not structalg.check_associative(A)


# ---------------------------------------------------------------------------
# named tables


def cyclic_group(n: int) -> FiniteLoop:
    names = ("1",) + tuple(f"g{i}" if i > 1 else "g" for i in range(1, n))
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return validate_loop(table, names)


def klein_four_group() -> FiniteLoop:
    return direct_product(cyclic_group(2), cyclic_group(2))


def symmetric_group_3() -> FiniteLoop:
    perms = [
        (0, 1, 2),
        (1, 0, 2),
        (2, 1, 0),
        (0, 2, 1),
        (1, 2, 0),
        (2, 0, 1),
    ]
    names = ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # apply q first, then p
        return tuple(p[q[i]] for i in range(3))

    table = [[index[compose(p, q)] for q in perms] for p in perms]
    return validate_loop(table, names)


def dihedral_group_4() -> FiniteLoop:
    """Symmetries of the square: r^4 = s^2 = 1, s r s = r^{-1}."""
    def idx(a, b):
        return a + 4 * b

    table = [[0] * 8 for _ in range(8)]
    for a in range(4):
        for b in range(2):
            for c in range(4):
                for d in range(2):
                    e = (a + (c if b == 0 else -c)) % 4
                    table[idx(a, b)][idx(c, d)] = idx(e, (b + d) % 2)
    names = ("1", "r", "r2", "r3", "s", "rs", "r2s", "r3s")
    return validate_loop(table, names)


def quaternion_group() -> FiniteLoop:
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    base = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def idx(sign, u):
        return 2 * u + sign

    table = [[0] * 8 for _ in range(8)]
    for s1 in range(2):
        for u1 in range(4):
            for s2 in range(2):
                for u2 in range(4):
                    sign, u = base[(u1, u2)]
                    table[idx(s1, u1)][idx(s2, u2)] = idx((s1 + s2 + sign) % 2, u)
    return validate_loop(table, names)


def moufang_loop_m16() -> FiniteLoop:
    """M(Q8, g -> g^{-1}, -1): the smallest Hamiltonian Moufang 2-loop."""
    q8 = quaternion_group()
    return moufang_double(q8, inversion_involution(q8), q8.index_of("-1"))


BUILTIN_TABLES = ("c2", "c4", "s3", "d4", "q8", "q8xc2")


def builtin_table(name: str) -> FiniteLoop:
    builders = {
        "c2": lambda: cyclic_group(2),
        "c4": lambda: cyclic_group(4),
        "s3": symmetric_group_3,
        "d4": dihedral_group_4,
        "q8": quaternion_group,
        "q8xc2": lambda: direct_product(quaternion_group(), cyclic_group(2)),
    }
    try:
        return builders[name]()
    except KeyError:
        raise KeyError(f"no builtin table {name!r}; choose from {BUILTIN_TABLES}") from None

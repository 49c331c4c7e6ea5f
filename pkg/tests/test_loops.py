from itertools import combinations

import pytest

from altloop.errors import (
    NoIdentity,
    NotASubloop,
    NotLatinSquare,
    OrderTooLarge,
    PreconditionFailed,
)
from altloop.loops import (
    InvolutionSpec,
    all_subloops,
    builtin_table,
    cyclic_group,
    dihedral_group_4,
    direct_product,
    element_orders,
    exponent,
    inversion_involution,
    is_associative,
    is_commutative,
    is_hamiltonian_2group,
    is_hamiltonian_loop,
    is_moufang,
    is_normal_subloop,
    is_ra_loop,
    is_subloop,
    klein_four_group,
    loop_center,
    moufang_double,
    moufang_loop_m16,
    quaternion_group,
    subloop_generated,
    symmetric_group_3,
    validate_loop,
)


@pytest.fixture(scope="module")
def q8():
    return quaternion_group()


@pytest.fixture(scope="module")
def s3():
    return symmetric_group_3()


@pytest.fixture(scope="module")
def m16():
    return moufang_loop_m16()


def test_validate_cyclic():
    c4 = cyclic_group(4)
    assert c4.order == 4 and c4.identity == 0
    assert is_associative(c4) and is_commutative(c4)


def test_validate_rejects_repeats():
    with pytest.raises(NotLatinSquare, match="row 1"):
        validate_loop([[0, 1], [1, 1]])
    with pytest.raises(NotLatinSquare, match="column"):
        # every row is a permutation but column 0 repeats
        validate_loop([[0, 1, 2], [0, 2, 1], [1, 0, 2]])


def test_validate_rejects_missing_identity():
    # a quasigroup (Latin square) with no two-sided identity
    table = [[1, 0, 2], [2, 1, 0], [0, 2, 1]]
    with pytest.raises(NoIdentity):
        validate_loop(table)


def test_m16_is_valid_loop(m16):
    assert m16.order == 16
    assert m16.names[m16.identity] == "1"


def test_moufang_checks(q8, s3, m16):
    assert is_moufang(q8) and is_moufang(s3)
    assert is_moufang(m16)
    assert not is_associative(m16)


def test_s3_composition_oracle(s3):
    # independent permutation-composition oracle for the S3 table
    perms = {
        "e": (0, 1, 2), "(12)": (1, 0, 2), "(13)": (2, 1, 0),
        "(23)": (0, 2, 1), "(123)": (1, 2, 0), "(132)": (2, 0, 1),
    }
    names = s3.names
    for a in range(6):
        for b in range(6):
            pa, pb = perms[names[a]], perms[names[b]]
            composed = tuple(pa[pb[i]] for i in range(3))
            assert perms[names[s3.mul(a, b)]] == composed


def test_subloop_generated(q8):
    i = q8.index_of("i")
    got = subloop_generated(q8, [i])
    assert {q8.names[g] for g in got} == {"1", "-1", "i", "-i"}


def test_all_subloops_klein():
    assert len(all_subloops(klein_four_group())) == 5


def test_all_subloops_matches_brute_force():
    for L in (cyclic_group(6), klein_four_group(), symmetric_group_3(),
              quaternion_group(), dihedral_group_4()):
        brute = set()
        elements = list(L.elements())
        for r in range(len(elements) + 1):
            for subset in combinations(elements, r):
                brute.add(subloop_generated(L, subset))
        assert set(all_subloops(L)) == brute


def test_all_subloops_m16_contains_q8(m16):
    subs = all_subloops(m16)
    assert frozenset(range(8)) in subs


def test_all_subloops_guard():
    with pytest.raises(OrderTooLarge):
        all_subloops(cyclic_group(65))


def test_normality(q8, s3, m16):
    assert is_normal_subloop(q8, loop_center(q8))
    transposition = subloop_generated(s3, [s3.index_of("(12)")])
    assert not is_normal_subloop(s3, transposition)
    # oracle: compare cosets directly
    x = s3.index_of("(123)")
    left = {s3.mul(x, a) for a in transposition}
    right = {s3.mul(a, x) for a in transposition}
    assert left != right
    for N in all_subloops(m16):
        assert is_normal_subloop(m16, N)


def test_normality_needs_subloop(s3):
    with pytest.raises(NotASubloop):
        is_normal_subloop(s3, {s3.index_of("(12)")})


def test_hamiltonian_checks(q8, m16):
    assert is_hamiltonian_2group(q8)
    assert is_hamiltonian_2group(builtin_table("q8xc2"))
    assert not is_hamiltonian_2group(dihedral_group_4())
    assert not is_hamiltonian_2group(cyclic_group(4))  # abelian
    assert not is_hamiltonian_2group(symmetric_group_3())  # not a 2-group
    assert not is_hamiltonian_2group(m16)  # not even a group
    assert is_hamiltonian_loop(m16)
    assert not is_hamiltonian_loop(q8)  # associative


def test_d4_has_non_normal_subgroup():
    d4 = dihedral_group_4()
    reflection = subloop_generated(d4, [d4.index_of("s")])
    assert not is_normal_subloop(d4, reflection)


def test_moufang_double_rules(q8):
    star = inversion_involution(q8)
    m16 = moufang_double(q8, star, q8.index_of("-1"))
    n = q8.order
    p = star.permutation
    g0 = q8.index_of("-1")
    for g in range(n):
        for h in range(n):
            assert m16.mul(g, h) == q8.mul(g, h)                       # G block
            assert m16.mul(g, n + h) == n + q8.mul(h, g)               # g(hu)
            assert m16.mul(n + g, h) == n + q8.mul(g, p[h])            # (gu)h
            assert m16.mul(n + g, n + h) == q8.mul(q8.mul(g0, p[h]), g)  # (gu)(hu)
    iu, ju = n + q8.index_of("i"), n + q8.index_of("j")
    expected = q8.mul(q8.mul(g0, p[q8.index_of("j")]), q8.index_of("i"))
    assert m16.mul(iu, ju) == expected


def test_moufang_double_base_is_subloop(q8, m16):
    n = q8.order
    for g in range(n):
        for h in range(n):
            assert m16.mul(g, h) == q8.mul(g, h)
    assert is_subloop(m16, range(n))


def test_moufang_double_of_abelian_group():
    c4 = cyclic_group(4)
    g0 = c4.index_of("g2")  # the element of order 2
    doubled = moufang_double(c4, inversion_involution(c4), g0)
    assert doubled.order == 8
    assert is_moufang(doubled)
    assert not is_ra_loop(doubled)


def test_moufang_double_output_is_moufang_for_corpus():
    d4 = dihedral_group_4()
    q8c2 = builtin_table("q8xc2")
    cases = [
        (quaternion_group(), "-1"),
        (d4, "r2"),
        (q8c2, "(-1,1)"),
    ]
    for G, g0 in cases:
        M = moufang_double(G, inversion_involution(G), G.index_of(g0))
        assert is_moufang(M)


def test_moufang_double_preconditions(q8, s3):
    with pytest.raises(PreconditionFailed, match="not central"):
        d4 = dihedral_group_4()
        moufang_double(d4, inversion_involution(d4), d4.index_of("r"))
    with pytest.raises(PreconditionFailed, match="not fixed"):
        c4 = cyclic_group(4)
        moufang_double(c4, inversion_involution(c4), c4.index_of("g"))
    with pytest.raises(PreconditionFailed, match="permutation"):
        moufang_double(q8, InvolutionSpec((0, 0, 1, 2, 3, 4, 5, 6)), 1)
    with pytest.raises(PreconditionFailed, match="anti-automorphism"):
        # the identity map is not an anti-automorphism of a nonabelian group
        moufang_double(s3, InvolutionSpec(tuple(range(6))), 0)
    with pytest.raises(PreconditionFailed, match="not a group"):
        m = moufang_loop_m16()
        moufang_double(m, InvolutionSpec(tuple(range(16))), m.identity)


def test_is_ra_loop(q8, m16):
    assert is_ra_loop(m16)
    assert not is_ra_loop(q8)
    assert not is_ra_loop(klein_four_group())
    with pytest.raises(OrderTooLarge):
        is_ra_loop(cyclic_group(80))


def test_hamiltonian_2group_doubles_are_ra():
    q8c2 = builtin_table("q8xc2")
    M = moufang_double(q8c2, inversion_involution(q8c2), q8c2.index_of("(-1,1)"))
    assert is_hamiltonian_loop(M)
    assert M.order == 32 and M.order & (M.order - 1) == 0
    assert is_ra_loop(M)


def test_element_orders_and_exponent(q8):
    assert sorted(element_orders(q8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert exponent(q8) == 4
    assert exponent(cyclic_group(6)) == 6


def test_loop_center(q8, m16):
    assert {q8.names[g] for g in loop_center(q8)} == {"1", "-1"}
    assert {m16.names[g] for g in loop_center(m16)} == {"1", "-1"}
    c6 = cyclic_group(6)
    assert loop_center(c6) == frozenset(range(6))


def test_direct_product(q8):
    p = direct_product(q8, cyclic_group(2))
    assert p.order == 16
    assert exponent(p) == 4
    assert is_associative(p)

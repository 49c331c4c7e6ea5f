from fractions import Fraction

import pytest

from altloop.composition import octonion_algebra, quaternion_algebra
from altloop.errors import NotDefinite, SearchSpaceTooLarge
from altloop.loopring import (
    augmentation,
    bicyclic_unit,
    enumerate_norm_one,
    is_unit_integral,
    loop_algebra,
    search_nontrivial_units,
    t_hat,
    unit_order_bounded,
)
from altloop.loops import (
    cyclic_group,
    klein_four_group,
    moufang_loop_m16,
    quaternion_group,
    symmetric_group_3,
)
from altloop.scalars import FieldDescriptor
from altloop.structalg import check_alternative, check_associative

Q = FieldDescriptor.rationals()


def dict_mul(L, x, y):
    """Independent loop-ring multiplication oracle on coefficient dicts."""
    out = {}
    for g, cg in x.items():
        for h, ch in y.items():
            k = L.mul(g, h)
            out[k] = out.get(k, 0) + cg * ch
    return {k: v for k, v in out.items() if v}


def as_dict(x):
    return {i: c for i, c in enumerate(x.coords) if c}


def test_loop_algebra_shapes():
    qc2 = loop_algebra(cyclic_group(2))
    assert qc2.dim == 2 and check_associative(qc2)
    qm16 = loop_algebra(moufang_loop_m16())
    assert qm16.dim == 16
    assert check_alternative(qm16) and not check_associative(qm16)
    qs3 = loop_algebra(symmetric_group_3())
    assert check_associative(qs3)
    b = qs3.basis
    assert b(1) * b(4) != b(4) * b(1)  # noncommutative


def test_loop_algebra_is_cached():
    L = symmetric_group_3()
    assert loop_algebra(L) is loop_algebra(L)


def test_augmentation():
    c2 = cyclic_group(2)
    A = loop_algebra(c2)
    assert augmentation(A.element([1, 1])) == 2
    assert augmentation(-A.basis(1)) == -1


def test_t_hat():
    s3 = symmetric_group_3()
    A = loop_algebra(s3)
    t = s3.index_of("(12)")
    assert t_hat(s3, t) == A.basis(0) + A.basis(t)
    assert t_hat(s3, s3.identity) == A.basis(0)
    one = A.basis(0)
    for t in range(6):
        th = t_hat(s3, t)
        assert ((one - A.basis(t)) * th).is_zero()
        assert (th * (one - A.basis(t))).is_zero()
        assert th * A.basis(t) == th


def test_t_hat_in_moufang_loop():
    m16 = moufang_loop_m16()
    A = loop_algebra(m16)
    one = A.basis(m16.identity)
    for t in m16.elements():
        th = t_hat(m16, t)
        assert ((one - A.basis(t)) * th).is_zero()
        assert (th * (one - A.basis(t))).is_zero()


def test_bicyclic_unit_in_zs3():
    s3 = symmetric_group_3()
    t, l = s3.index_of("(12)"), s3.index_of("(123)")
    u, u_inv = bicyclic_unit(s3, t, l)
    A = u.algebra
    one = A.basis(s3.identity)
    theta = u - one
    assert not theta.is_zero()
    assert (theta * theta).is_zero()
    assert u * u_inv == one and u_inv * u == one
    # independent oracle: theta = (1 - t) * (l * t_hat) on coefficient dicts
    that = {s3.identity: 1, t: 1}
    l_that = dict_mul(s3, {l: 1}, that)
    theta_oracle = dict_mul(s3, {s3.identity: 1, t: -1}, l_that)
    assert as_dict(theta) == theta_oracle
    assert dict_mul(s3, as_dict(u), as_dict(u_inv)) == {s3.identity: 1}


def test_bicyclic_degenerate_cases():
    q8 = quaternion_group()
    assert all(
        bicyclic_unit(q8, t, l) is None for t in range(8) for l in range(8)
    )
    s3 = symmetric_group_3()
    assert bicyclic_unit(s3, s3.identity, 1) is None


def test_is_unit_integral():
    s3 = symmetric_group_3()
    A = loop_algebra(s3)
    g = A.basis(3)
    inv = is_unit_integral(-g)
    assert inv is not None and (-g) * inv == A.one()
    c2 = cyclic_group(2)
    B = loop_algebra(c2)
    assert is_unit_integral(B.element([1, 1])) is None  # augmentation 2
    u, expected_inv = bicyclic_unit(s3, s3.index_of("(12)"), s3.index_of("(123)"))
    assert is_unit_integral(u) == expected_inv
    with pytest.raises(ValueError):
        is_unit_integral(A.element([Fraction(1, 2)] + [0] * 5))


def test_search_c2_empty():
    assert search_nontrivial_units(cyclic_group(2), 1, 2) == []


def test_search_s3_finds_units():
    s3 = symmetric_group_3()
    found = search_nontrivial_units(s3, 2, 4)
    assert found
    for u in found:
        inv = is_unit_integral(u)
        assert inv is not None
        assert len(u.support()) > 1  # never a trivial unit
    # deterministic output
    again = search_nontrivial_units(s3, 2, 4)
    assert [u.coords for u in found] == [u.coords for u in again]
    # the bicyclic unit itself is among the results
    u_bi, _ = bicyclic_unit(s3, s3.index_of("(12)"), s3.index_of("(123)"))
    assert any(u == u_bi for u in found)


def test_search_m16_trivial():
    assert search_nontrivial_units(moufang_loop_m16(), 1, 3) == []


def test_search_klein_four():
    assert search_nontrivial_units(klein_four_group(), 1, 3) == []


def test_search_guard():
    with pytest.raises(SearchSpaceTooLarge):
        search_nontrivial_units(moufang_loop_m16(), 9, 9)


def test_unit_order_bounded():
    s3 = symmetric_group_3()
    u, _ = bicyclic_unit(s3, s3.index_of("(12)"), s3.index_of("(123)"))
    report = unit_order_bounded(u, 20)
    assert report.order is None and not report.is_torsion
    assert report.trivial_power is None
    q8 = quaternion_group()
    A = loop_algebra(q8)
    g = A.basis(q8.index_of("i"))
    report_g = unit_order_bounded(g, 10)
    assert report_g.order == 4 and report_g.trivial_power == 1
    minus_one = A.basis(q8.index_of("-1"))
    assert unit_order_bounded(minus_one, 10).order == 2


def test_enumerate_norm_one_counts():
    octo = enumerate_norm_one(octonion_algebra(Q, -1, -1, -1))
    assert len(octo) == 16
    quat = enumerate_norm_one(quaternion_algebra(Q, -1, -1))
    assert len(quat) == 8
    # oracle: brute-force the all-ones diagonal box directly
    from itertools import product

    brute = {
        vec
        for vec in product((-1, 0, 1), repeat=4)
        if sum(v * v for v in vec) == 1
    }
    assert {tuple(int(c) for c in e.coords) for e in quat} == brute


def test_enumerate_norm_one_mixed_coefficients():
    found = enumerate_norm_one(octonion_algebra(Q, -1, -2, -3))
    got = {tuple(int(c) for c in e.coords) for e in found}
    unit = (1, 0, 0, 0, 0, 0, 0, 0)
    x = (0, 1, 0, 0, 0, 0, 0, 0)
    assert got == {unit, tuple(-v for v in unit), x, tuple(-v for v in x)}


def test_enumerate_norm_one_properties():
    A = quaternion_algebra(Q, -1, -1)
    found = enumerate_norm_one(A)
    coords = {e.coords for e in found}
    for e in found:
        assert (-e).coords in coords
    assert A.algebra.one() in found


def test_enumerate_norm_one_rejects_indefinite():
    with pytest.raises(NotDefinite):
        enumerate_norm_one(octonion_algebra(Q, 1, -1, -1))
    # rational parameters over a real quadratic field still give a rational
    # positive diagonal, so the integral span enumeration goes through
    over_sqrt2 = octonion_algebra(FieldDescriptor.quadratic(2), -1, -1, -1)
    assert len(enumerate_norm_one(over_sqrt2)) == 16
    # genuinely irrational coefficients are rejected
    from altloop.scalars import QuadExt

    sq2 = QuadExt.sqrt(2)
    irrational = octonion_algebra(
        FieldDescriptor.quadratic(2), -3 + sq2, -1, -1
    )
    with pytest.raises(NotDefinite):
        enumerate_norm_one(irrational)

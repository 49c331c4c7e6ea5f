import random
from fractions import Fraction

import pytest

from altloop.composition import (
    InvolutiveAlgebra,
    NormForm,
    SplitResult,
    cayley_dickson_double,
    is_split,
    is_totally_definite,
    octonion_algebra,
    quaternion_algebra,
    scalar_algebra,
    scalar_sqrt,
    zorn_algebra,
    zorn_commuting_nilpotents,
)
from altloop.errors import (
    InvolutionBroken,
    ParametersUnknown,
    ZeroParameter,
)
from altloop.scalars import FieldDescriptor, QuadExt
from altloop.structalg import (
    StructureConstantAlgebra,
    check_alternative,
    check_associative,
)

Q = FieldDescriptor.rationals()


def random_element(A, rng, num=5, den=3):
    return A.element(
        [Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(A.dim)]
    )


def test_double_of_field_is_complex_table():
    C = cayley_dickson_double(scalar_algebra(Q), -1)
    assert C.dim == 2
    x = C.algebra.basis(1)
    assert (x * x).coords == (Fraction(-1), Fraction(0))
    assert C.conj(x) == -x
    assert C.algebra.basis_names == ("1", "x")


def test_quaternion_relations():
    H = quaternion_algebra(Q, -1, -1)
    one, i, j, k = (H.algebra.basis(t) for t in range(4))
    assert i * j == k and j * i == -k
    assert (i * i) == -one and (j * j) == -one and (k * k) == -one
    assert (i * j) * k == i * (j * k)
    assert check_associative(H.algebra)


def test_octonion_basis_labels():
    O = octonion_algebra(Q, -1, -1, -1)
    assert O.algebra.basis_names == ("1", "x", "y", "xy", "z", "xz", "yz", "(xy)z")


def test_octonion_alternative_not_associative():
    O = octonion_algebra(Q, -1, -1, -1)
    assert check_alternative(O.algebra)
    assert not check_associative(O.algebra)


def test_octonion_over_quadratic_field():
    O = octonion_algebra(FieldDescriptor.quadratic(-1), -1, -1, -1)
    assert O.dim == 8
    i = QuadExt.sqrt(-1)
    w = O.algebra.element([1, i, 0, 0, 0, 0, 0, 0])
    wbar = O.algebra.element([1, -i, 0, 0, 0, 0, 0, 0])
    assert (w * wbar).is_zero()  # (1 + sqrt(-1) x)(1 - sqrt(-1) x) = 0


def test_involution_law_after_doubling():
    H = quaternion_algebra(Q, -1, -1)
    O = cayley_dickson_double(H, -1, "z")
    for idx in range(4):
        a = O.algebra.basis(idx)
        bz = O.algebra.basis(4 + idx)
        assert O.conj(bz) == -bz
        expected = O.algebra.element(
            tuple(H.conj(H.algebra.basis(idx)).coords) + (Fraction(0),) * 4
        )
        assert O.conj(a) == expected


def test_norm_examples():
    H = quaternion_algebra(Q, -1, -1)
    x = H.algebra.element([1, 1, 1, 1])
    # eta termwise: 1^2 + 1^2 + 1^2 + 1^2
    assert H.norm(x) == 4
    assert H.norm(H.algebra.one()) == 1


def test_norm_form_matches_multiplicative_norm():
    rng = random.Random(23)
    for A in (quaternion_algebra(Q, -1, -1), octonion_algebra(Q, -1, -1, -1)):
        for i in range(A.dim):
            b = A.algebra.basis(i)
            assert A.norm_form.evaluate(b.coords) == A.norm(b)
        for _ in range(100):
            x = random_element(A.algebra, rng)
            assert A.norm_form.evaluate(x.coords) == A.norm(x)


def test_norm_multiplicativity():
    rng = random.Random(29)
    O = octonion_algebra(Q, -1, -1, -1)
    for _ in range(100):
        x, y = random_element(O.algebra, rng), random_element(O.algebra, rng)
        assert O.norm(x * y) == O.norm(x) * O.norm(y)


def test_norm_form_coefficients():
    O = octonion_algebra(Q, -2, -3, -5)
    a, b, c = 2, 3, 5
    assert O.norm_form.coeffs == tuple(
        Fraction(v) for v in (1, a, b, a * b, c, a * c, b * c, a * b * c)
    )


def test_doubling_dimension_and_chain():
    A = scalar_algebra(Q)
    dims = [A.dim]
    for alpha in (-1, -1, -1, -1):
        A = cayley_dickson_double(A, alpha)
        dims.append(A.dim)
    assert dims == [1, 2, 4, 8, 16]
    assert not check_alternative(A.algebra)  # sedenions fail
    assert A.params == (-1, -1, -1, -1)


def test_zero_parameter_rejected():
    with pytest.raises(ZeroParameter):
        cayley_dickson_double(scalar_algebra(Q), 0)
    with pytest.raises(ZeroParameter):
        quaternion_algebra(Q, 0, -1)


def test_broken_involution_rejected():
    H = quaternion_algebra(Q, -1, -1)
    identity = tuple(
        tuple(Fraction(1 if i == j else 0) for i in range(4)) for j in range(4)
    )
    with pytest.raises(InvolutionBroken):
        InvolutiveAlgebra(H.algebra, identity, Q)
    two_lines = StructureConstantAlgebra(
        (
            ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))),
            ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(1))),
        ),
        ("p", "q"),
    )
    eye = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    with pytest.raises(InvolutionBroken):
        # p * conj(p) = p is not a multiple of the unit p + q
        InvolutiveAlgebra(two_lines, eye, Q)


def test_totally_definite():
    assert is_totally_definite(octonion_algebra(Q, -1, -1, -1))
    assert is_totally_definite(octonion_algebra(FieldDescriptor.quadratic(2), -1, -1, -1))
    assert not is_totally_definite(
        octonion_algebra(FieldDescriptor.quadratic(-1), -1, -1, -1)
    )
    assert not is_totally_definite(octonion_algebra(Q, 1, -1, -1))
    sq2 = QuadExt.sqrt(2)
    definite = octonion_algebra(FieldDescriptor.quadratic(2), -3 + sq2, -1, -1)
    assert is_totally_definite(definite)  # 3 - sqrt(2) is totally positive
    indefinite = octonion_algebra(FieldDescriptor.quadratic(2), -1 - sq2, -1, -1)
    assert not is_totally_definite(indefinite)


def test_parameters_unknown():
    Z = zorn_algebra()
    eye = tuple(
        tuple(Fraction(1 if i == j else 0) for i in range(8)) for j in range(8)
    )
    ivl = InvolutiveAlgebra.__new__(InvolutiveAlgebra)
    ivl.algebra, ivl.images, ivl.field = Z, eye, Q
    ivl.params, ivl.norm_form = None, None
    with pytest.raises(ParametersUnknown):
        is_totally_definite(ivl)
    with pytest.raises(ParametersUnknown):
        is_split(ivl)


def test_is_split_examples():
    division = is_split(octonion_algebra(Q, -1, -1, -1))
    assert division.status == SplitResult.DIVISION and division.witness is None

    gauss = is_split(octonion_algebra(FieldDescriptor.quadratic(-1), -1, -1, -1))
    assert gauss.status == SplitResult.SPLIT
    assert not gauss.witness.is_zero()

    idempotent = is_split(octonion_algebra(Q, 1, -1, -1))
    assert idempotent.status == SplitResult.SPLIT
    # the first witness in scan order is 1 + x from x^2 = 1
    assert idempotent.witness.coords == (Fraction(1), Fraction(1)) + (Fraction(0),) * 6


def test_is_split_witness_annihilates_conjugate():
    for m in (-1, -2, -5):
        A = octonion_algebra(FieldDescriptor.quadratic(m), -1, -1, -1)
        res = is_split(A)
        assert res.status == SplitResult.SPLIT
        assert (res.witness * A.conj(res.witness)).is_zero()
        assert A.norm(res.witness) == 0


def test_is_split_unknown_for_anisotropic_indefinite_quaternion():
    # x^2 - 7y^2 + z^2 - 7w^2 is anisotropic over Q (-1 is not a square
    # mod 7) but not totally definite, so the bounded search gives up
    H = quaternion_algebra(Q, 7, -1)
    res = is_split(H, height_bound=4)
    assert res.status == SplitResult.UNKNOWN


def test_definite_implies_division():
    for params in ((-1, -1, -1), (-1, -2, -3), (-2, -5, -11)):
        A = octonion_algebra(Q, *params)
        assert is_totally_definite(A)
        assert is_split(A, height_bound=3).status == SplitResult.DIVISION


def test_scalar_sqrt():
    assert scalar_sqrt(Fraction(9, 4), None) == Fraction(3, 2)
    assert scalar_sqrt(Fraction(2), None) is None
    assert scalar_sqrt(Fraction(-1), -1) == QuadExt.sqrt(-1)
    assert scalar_sqrt(Fraction(8), 2) == QuadExt(2, 0, 2)
    # (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
    assert scalar_sqrt(QuadExt(2, 3, 2), 2) in (QuadExt(2, 1, 1), QuadExt(2, -1, -1))
    assert scalar_sqrt(QuadExt(2, 0, 1), 2) is None


def test_zorn_basics():
    Z = zorn_algebra()
    assert Z.dim == 8
    assert check_alternative(Z) and not check_associative(Z)
    assert Z.unit_coords() == (Fraction(1), Fraction(1)) + (Fraction(0),) * 6


def test_zorn_commuting_nilpotents():
    theta1, theta2 = zorn_commuting_nilpotents()
    assert (theta1 * theta1).is_zero()
    assert (theta2 * theta2).is_zero()
    assert (theta1 * theta2).is_zero()
    assert (theta2 * theta1).is_zero()
    assert theta1.coords != theta2.coords


def test_zorn_z2_embedding_exhaustive():
    Z = zorn_algebra()
    theta1, theta2 = zorn_commuting_nilpotents()
    one = Z.one()
    for a in range(-10, 11):
        for b in range(-10, 11):
            got = ((one + theta1) ** a) * ((one + theta2) ** b)
            assert got == one + a * theta1 + b * theta2


def test_norm_form_evaluation():
    nf = NormForm((Fraction(1), Fraction(2)))
    assert nf.evaluate((Fraction(3), Fraction(1))) == 11

"""altloop: exact arithmetic for alternative algebras, Moufang loops, and the
hyperbolic property of their integral unit loops.

Scalars are exact rationals or quadratic-field elements; algebras are
structure-constant tables; loops are Cayley tables.  On top of those sit the
Cayley-Dickson constructions with their norm forms, the Zorn vector matrices,
the group-doubling construction M(G, star, g0), integral loop-ring units, and
classifiers deciding whether a Z-order's unit loop avoids a rank-two free
abelian subgroup.
"""

from .classifier import (
    AlgebraDescriptor,
    RALoopDescriptor,
    SimpleComponentDescriptor,
    Verdict,
    classify_algebra,
    classify_cayley_dickson,
    classify_finite_ra_loop,
    classify_octonion_algebra,
    classify_ra_loop,
    commuting_nilpotent_pair,
    component_units,
    octonion_unit_rank,
    verify_z2_pair,
)
from .composition import (
    InvolutiveAlgebra,
    NormForm,
    SplitResult,
    cayley_dickson_double,
    is_split,
    is_totally_definite,
    norm,
    octonion_algebra,
    quaternion_algebra,
    scalar_algebra,
    zorn_algebra,
    zorn_commuting_nilpotents,
)
from .loopring import (
    TorsionReport,
    augmentation,
    bicyclic_unit,
    enumerate_norm_one,
    is_unit_integral,
    loop_algebra,
    search_nontrivial_units,
    t_hat,
    unit_order_bounded,
)
from .loops import (
    FiniteLoop,
    InvolutionSpec,
    all_subloops,
    builtin_table,
    cyclic_group,
    dihedral_group_4,
    direct_product,
    element_orders,
    exponent,
    inversion_involution,
    is_hamiltonian_2group,
    is_hamiltonian_loop,
    is_moufang,
    is_normal_subloop,
    is_ra_loop,
    loop_center,
    moufang_double,
    moufang_loop_m16,
    quaternion_group,
    subloop_generated,
    symmetric_group_3,
    validate_loop,
)
from .scalars import (
    FieldDescriptor,
    QuadExt,
    Rational,
    conj,
    field_norm,
    format_scalar,
    is_algebraic_integer,
    is_totally_positive,
    parse_scalar,
)
from .structalg import (
    RingElement,
    StructureConstantAlgebra,
    annihilator,
    associator,
    center,
    check_alternative,
    check_associative,
    check_flexible,
    direct_sum,
    inverse,
    is_nilpotent,
    radical,
    upper_triangular_2x2,
)

__version__ = "0.1.0"

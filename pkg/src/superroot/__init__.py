"""Exact root-data computations for split quasireductive supergroups."""

from .lattice import DimensionMismatch, hnf, pair, pairing_kernel
from .rootdata import (
    OrderFunctional,
    PositiveSystem,
    SuperRootDatum,
    UnimodularityReport,
    all_frobenius_unimodular,
    build_gl,
    build_gl_even,
    build_p,
    build_q,
    build_semidirect,
    chi_r_on_torus,
    datum_from_json,
    datum_to_json,
    default_order,
    delta_r,
    dim_O_Gr,
    induced_dims,
    is_frobenius_unimodular,
    is_unimodular_char0,
    odd_root_sum,
    pbw_monomial_count,
    positive_system,
    simple_even_roots,
)
from .liesuper import (
    AdmissibleBaseReport,
    BasisElement,
    K_alpha,
    LieSuperAlgebra,
    check_admissible_base,
    eval_weight_on_cartan,
    gl_superalgebra,
    lie_algebra_for,
    p_superalgebra,
    q_superalgebra,
    subalgebra_closure,
)
from .clifford import (
    CliffordForm,
    form_rank,
    gram_form,
    may_fail_absolute_simplicity,
    u_lambda_dim_closed,
)
from .steinberg import (
    CharacterElement,
    RestrictionReport,
    char_add,
    char_from_json,
    char_mul,
    char_to_json,
    frobenius_twist,
    is_dominant,
    is_flat,
    is_restricted,
    steinberg_character,
    steinberg_decompose,
    upsilon_leading,
)
from .hyperalg import (
    DividedMonomial,
    bw_multiply,
    lucas_binom,
    normal_order,
    verify_commutator_formula,
)

__version__ = "0.1.0"

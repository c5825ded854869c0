"""Exact computations for pencils of quadrics and the Picard groups of their moduli."""

from .algebra import AbelianGroup, BinaryForm, is_squarefree, moebius_act, resultant, smith_normal_form
from .errors import QuadPencilError
from .groups import (
    ConfigAut,
    GkElement,
    Permutation,
    ProjectiveLinePoint,
    act,
    compose,
    config,
    config_aut_group,
    equal_in_gk,
    f_equivariance_check,
    inverse,
    kernel_of_reduce,
    psi,
    reduce_level,
    sign_kernel_elements,
    stabilizer_cardinality,
    theta_equivariance_check,
)
from .hyperelliptic import (
    GammaElement,
    HyperellipticModel,
    WeightedPoint,
    associate,
    curve_contains,
    gamma_act,
    pic_hg,
    verify_pic_triangle,
    weierstrass_divisor,
)
from .oracle import jacobian_smooth_oracle, oracle_primes
from .pencils import (
    Diagonalization,
    Obstruction,
    QuadricPencil,
    SlicePoint,
    discriminant_form,
    embed,
    is_smooth,
    minors,
    simultaneous_diagonalize,
    theta,
)
from .picard import (
    CharacterLattice,
    CharacterTriple,
    CyclicMap,
    kernel_character,
    kernel_character_value,
    lattice,
    pic_binary_forms,
    pic_complete_intersections,
    picard_group,
    pullback_map,
    verify_kernel_character,
)

__version__ = "0.1.0"

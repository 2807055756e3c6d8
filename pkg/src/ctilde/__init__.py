"""Exact workbench for the extended affine Weyl group of type C-tilde,
its unequal-parameter Iwahori-Hecke algebra, and the modules induced from
one-dimensional characters of the two maximal finite parabolic subalgebras."""

from .laurent import LaurentMatrix, LaurentPoly
from .weyl import (
    AffineFunctional,
    DExtElement,
    ExtAffineWeylElement,
    SignedPermutation,
    ball,
    descents,
    fold,
    generator,
    identity,
    length,
    parabolic_factorize,
    reduced_word,
    sigma,
    translation,
    weighted_length,
)
from .hecke import (
    CharacterSpec,
    HeckeElement,
    ParabolicLabel,
    apply_character,
    basis,
    basis_inverse,
    eps,
    multiply,
    sgn,
    sgn_prime,
    steinberg,
    theta,
    triv_index,
    verify_presentation,
)
from .induce import (
    InducedModule,
    ModuleVector,
    act,
    action_matrix,
    freeness_witness,
    generator_vector,
    hom_dim_to_character,
    reduce_basis,
)
from .finitew import FiniteWeylGroup, delta_membership, parabolic_invariants
from .charsum import CyclotomicInteger, full_sum, inverse_sum

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact characters, absolute square roots and a multiplicity-free signed model of Z_r wr S_n."""

from .characters import (
    CharacterTable,
    char_table,
    chi_grn,
    chi_sn,
    class_size,
    fs_indicator,
    inner_product,
    lemma_chi_sum,
    sum_irr_chars,
)
from .colored_perm import (
    ClassType,
    ColoredCycle,
    ColoredPermutation,
    bar,
    class_type,
    colored_cycles,
    compose,
    enumerate_absolute_involutions,
    enumerate_group,
    inverse,
    is_absolute_involution,
    simple_reflections,
    to_monomial_matrix,
    transpose,
)
from .cyclotomic import CycEl, omega_pow, root_of_unity_sum
from .model import (
    conjecture_experiment,
    decompose_model,
    fix_set,
    model_basis,
    model_character,
    phi_toggle,
    rho,
    sign_e,
    sign_o,
)
from .roots import absolute_square, count_bruteforce, count_formula, count_sqroots_sn
from .rsk import colored_rsk, inverse_colored_rsk, shape_of_involution

__version__ = "0.1.0"

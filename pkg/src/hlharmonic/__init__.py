"""Exact-arithmetic Hall-Littlewood bases, twisted coproducts, harmonic
functionals, and branching graphs over the rationals."""

from .partitions import (
    Partition,
    b_factor,
    covers_box,
    covers_two,
    dominance_leq,
    enumerate_partitions,
    n_stat,
    split_even,
    z_factor,
)
from .symring import (
    SymElement,
    TensorElement,
    coproduct,
    counit,
    inner_product,
    mackey_check,
    one,
    p,
    plethysm_pi,
    tensor,
    twisted_coproduct,
    xi,
)
from .hlbasis import (
    HLContext,
    expand_in_P,
    expand_in_P_tilde,
    find_negative_fbar,
    hl_P,
    hl_P_tilde,
    hl_Q,
    hl_Q_tilde,
    pieri_weight,
    structconst_f,
    structconst_fbar,
    structconst_ftilde,
)
from .functionals import (
    Functional,
    check_HL_positive,
    check_p1_harmonic,
    check_p2_harmonic,
    convolve_std,
    convolve_twisted,
    dilate_A,
    dilate_B,
    embed_even,
    embed_odd,
    extreme_phi,
    mix_std,
    mix_twisted,
    phi_col,
    phi_row,
    plancherel,
)
from .graphs import GraphKind, LevelData, build_levels, coherence_check, functional_to_coherent, simplex_project
from .suites import run_suite

__version__ = "0.1.0"

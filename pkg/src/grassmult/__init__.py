"""Multiplicities and tangent-cone Hilbert series at T-fixed points of
Schubert varieties in Grassmannians, via nonintersecting lattice paths."""

from .grassmannian import (
    CosetRep,
    FullPermutation,
    GrassmannianError,
    GrassmannianShape,
    GridPoint,
    Instance,
    NotOnVariety,
    bruhat_leq,
    build_instance,
    connection_permutation,
    expand_minimal,
    instance_from_entries,
    kappa_vector,
    make_coset,
)
from .hilbert import (
    HilbertSeries,
    hilbert_function,
    hilbert_function_oracle,
    hilbert_series,
    multiplicity_from_series,
    pole_order,
)
from .paths import (
    LatticePath,
    PathFamily,
    count_ne_paths,
    en_turns,
    en_turns_family,
    enumerate_families,
    lgv_multiplicity,
    path_points,
    turn_polynomial,
)
from .polynomial import IntPolynomial
from .reflections import (
    Region,
    ReflectionChain,
    apply_chain,
    chain_condition,
    enumerate_s1s2_sets,
    longest_chain_in_region,
    s1_check_naive,
    s2_check,
)
from .shadow import (
    ChainConditionViolation,
    ReflectionMultiset,
    family_point_multiset,
    light_and_shadow,
    shadow_border,
)

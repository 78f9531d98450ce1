"""
Right keys of semistandard tableaux, computed by the scanning method and by
the type A alcove model, with Demazure characters built on both.
"""

from .alcove import (
    AdmissibleSubset,
    ChainEntry,
    SubstepLabel,
    admissible_subset,
    alcove_permutation,
    enumerate_admissible,
    gamma,
    greedy_step,
    initial_perm,
    location_chain,
    saturated_chain,
    tableau_from_admissible,
)
from .demazure import (
    DefiningChain,
    Polynomial,
    admissible_members,
    demazure_character,
    demazure_members,
    divided_difference_character,
    is_member,
    minimal_defining_chain,
)
from .errors import InvariantError, ParseError, ValidationError
from .permutation import (
    Permutation,
    bruhat_leq,
    is_min_coset_rep,
    key_to_permutation,
    length,
    parse_permutation,
    reduced_word,
)
from .scanning import ewis, most_recent, scanning_paths, scanning_tableau, sigma, u_set
from .shape import (
    ColumnProfile,
    Location,
    Partition,
    column_lengths,
    column_profile,
    next_location,
    parse_partition,
    reading_leq,
)
from .tableau import (
    Tableau,
    enumerate_ssyt,
    is_key,
    key_leq,
    key_of_permutation,
    parse_tableau,
    weight,
)

__version__ = "0.1.0"

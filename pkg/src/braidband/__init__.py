"""Braid-group tools for band presentations, banded surfaces and ribbon obstructions."""

from .annular_pl import (
    PLProfile,
    band_rank_bound_from_profile,
    endpoint_max_holds,
    make_profile,
    max_gap,
    random_admissible,
    trivial_profile,
)
from .bands import (
    Band,
    BandPresentation,
    band_rank_bracket,
    band_rank_lower,
    band_rank_search,
    band_word,
    presentation_product,
    slice_band_bound,
    standard_band,
    validate_presentation,
)
from .braid_core import (
    BraidError,
    BraidWord,
    Permutation,
    closure_components,
    concat,
    conjugate,
    free_reduce,
    include,
    inverse,
    parse_word,
    permutation,
    serialize,
    stabilize,
    writhe,
)
from .garside import BudgetExceeded, GarsideNormalForm, conjugacy_test, is_band, normal_form, words_equal
from .obstruction import (
    PhiInvariant,
    Property,
    check_properties,
    finite_order_writhe_filter,
    link_invariant,
    ribbon_obstruction,
    slice_consistency,
)
from .surface import BandedSurface, build_surface, euler_characteristic, ribbon_summary

__version__ = "0.1.0"

"""An executable kernel for the category of filters and germs of partial
functions over finite ground sets, with an exhaustive law-checking harness."""

from .errors import FilError
from .finset import (
    Atom,
    GermCode,
    GroundSet,
    Label,
    Pair,
    PartialFn,
    Subset,
    Tag,
    product_ground,
    product_subset,
    tagged_ground,
)
from .filters import (
    Filter,
    FilterBase,
    fg,
    fg_sets,
    join_filters,
    meet_filters,
    pullback,
    pushforward,
)
from .germs import (
    FilArrow,
    Germ,
    compose,
    decode_germ,
    encode_germ,
    enum_admissible_germs,
    germ_equiv,
    germ_of,
    hom_set,
    is_admissible,
    is_local,
    mk_arrow,
)
from .factorization import (
    FactorPair,
    MSubobjectPoset,
    diagonal_fill,
    factor,
    inverse,
    is_e,
    is_epi,
    is_iso,
    is_m,
    is_monic,
    m_subobject_poset,
)
from .limits import (
    CoreAdjunctionWitness,
    coproduct_fil,
    core_adjunction_witness,
    core_of,
    core_of_arrow,
    equalizer,
    product_fil,
    pullback_cospan,
    pullback_monos,
    unit_l,
)
from .monoidal import (
    associator,
    big_f,
    box_arrow,
    box_filter,
    box_member,
    box_partial,
    left_unitor,
    right_unitor,
    small_h,
    unit_filter,
)
from .closedcat import (
    HomObject,
    curry,
    epsilon_counit,
    eta_unit,
    hom_action_left,
    hom_action_right,
    internal_hom,
    uncurry,
)
from .laws import LawReport, Universe, Witness, replay_witness, run_all, run_law
from .workspace import Workspace, parse_workspace, render_workspace

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

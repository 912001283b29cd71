from .hall import (
    BasicCommutator,
    LcsCoordinates,
    LieCoordinateError,
    basic_commutators_of_weight,
    collect,
    collected_word,
    collection_remainder_weight,
    hall_basis,
    lie_coordinates,
    witt_number,
)
from .magnus import (
    TruncatedSeries,
    WeightAtLeast,
    in_lower_central_paper_index,
    lcs_weight,
    magnus_expand,
)
from .solvable import (
    DEFAULT_BUDGET,
    DerivedSeriesOracle,
    ResourceBudget,
    ResourceBudgetExceeded,
    derived_depth,
    equal_mod_derived,
    in_derived_term,
)

"""Exact certificates of tautness for sutured handlebodies via twisted Fox Jacobians."""

from .certifier import (
    SuturedPresentation,
    attach_handle,
    certify,
    certify_one_dim_generic,
    certify_random,
    gallery,
    is_self_dual_sufficient,
    one_dim_obstruction,
    solvable_obstruction,
)
from .fox import fox_derivative, fox_jacobian
from .representation import Representation, dual_representation
from .words import Alphabet, Word, commutator, format_word, parse_word

__version__ = "0.1.0"

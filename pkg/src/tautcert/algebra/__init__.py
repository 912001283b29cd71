from .groupring import GroupRingElement, abelianize, group_ring_multiply
from .laurent import LaurentPolynomial, det_laurent, laurent_names
from .matrix import Matrix, det_bareiss, det_field, inverse_field
from .scalars import (
    QQ,
    QQI,
    Field,
    FpElement,
    GaussianField,
    GaussianRational,
    PrimeField,
    RationalField,
    ScalarParseError,
    field_from_tag,
    format_gaussian,
    format_rational,
    is_prime,
    parse_gaussian,
    parse_rational,
)

__all__ = [
    "GroupRingElement",
    "abelianize",
    "group_ring_multiply",
    "LaurentPolynomial",
    "det_laurent",
    "laurent_names",
    "Matrix",
    "det_bareiss",
    "det_field",
    "inverse_field",
    "QQ",
    "QQI",
    "Field",
    "FpElement",
    "GaussianField",
    "GaussianRational",
    "PrimeField",
    "RationalField",
    "ScalarParseError",
    "field_from_tag",
    "format_gaussian",
    "format_rational",
    "is_prime",
    "parse_gaussian",
    "parse_rational",
]

"""Determinant certificates for twisted homology products.

A balanced sutured handlebody ``M`` is certified by a representation
``rho`` when the evaluated Fox Jacobian of its surface words has nonzero
determinant, and either ``rho`` is homologically self-dual or the same
holds for the dual representation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from ..algebra import (
    QQ,
    GaussianField,
    LaurentPolynomial,
    Matrix,
    PrimeField,
    RationalField,
    det_field,
    det_laurent,
    laurent_names,
)
from ..fox import (
    FOX_CONVENTION,
    JACOBIAN_CONVENTION,
    abelianized_jacobian,
    evaluate_jacobian,
    fox_jacobian,
)
from ..representation import Representation, RepresentationError
from ..words import COMMUTATOR_CONVENTION, Word
from .presentation import SuturedPresentation

CERTIFIED = "certified"
NOT_CERTIFIED = "not-certified-by-this-representation"
GENERIC_CERTIFIED = "generically certified"
GENERIC_NOT_CERTIFIED = "not certified by any one-dimensional representation"
WITNESS = "WITNESS"
INCONCLUSIVE = "INCONCLUSIVE"


def convention_ledger() -> dict[str, str]:
    return {
        "commutator": COMMUTATOR_CONVENTION,
        "fox_derivative": FOX_CONVENTION,
        "jacobian": JACOBIAN_CONVENTION,
    }


def jacobian_matrix(pres: SuturedPresentation, rho: Representation) -> Matrix:
    if rho.alphabet != pres.alphabet:
        raise RepresentationError(
            f"representation generators ({rho.alphabet}) do not match the presentation ({pres.alphabet})"
        )
    return evaluate_jacobian(fox_jacobian(pres.surface_words), rho)


def is_self_dual_sufficient(rho: Representation) -> Optional[str]:
    """``"unitary"``, ``"SL2"`` or ``None``.

    ``None`` only means the dual determinant must also be checked.
    """
    fld = rho.field
    one, zero = fld.one(), fld.zero()
    if isinstance(fld, (RationalField, GaussianField)):
        eye = Matrix.identity(rho.dim, one, zero)
        if all(m @ m.transpose().map(fld.conjugate) == eye for m in rho.matrices):
            return "unitary"
    if rho.dim == 2 and all(det_field(m, one) == one for m in rho.matrices):
        return "SL2"
    return None


@dataclass
class Certificate:
    label: str
    representation: Representation
    jacobian: Matrix
    det: object
    dual_det: object = None
    self_dual_reason: Optional[str] = None
    verdict: str = NOT_CERTIFIED
    conventions: dict = field(default_factory=convention_ledger)

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_dict(self) -> dict:
        fmt = self.representation.field.format
        return {
            "kind": "certificate",
            "label": self.label,
            "representation": self.representation.describe(),
            "jacobian_evaluated": [[fmt(x) for x in r] for r in self.jacobian.rows],
            "det": fmt(self.det),
            "dual_det": None if self.dual_det is None else fmt(self.dual_det),
            "self_dual_reason": self.self_dual_reason,
            "verdict": self.verdict,
            "conventions": dict(self.conventions),
        }


def certify(pres: SuturedPresentation, rho: Representation, assume_self_dual: bool = False) -> Certificate:
    jac = jacobian_matrix(pres, rho)
    one = rho.field.one()
    det = det_field(jac, one)
    reason = "assumed" if assume_self_dual else is_self_dual_sufficient(rho)
    dual_det = None
    if reason is None:
        dual_det = det_field(jacobian_matrix(pres, rho.dual()), one)
    ok = bool(det) and (reason is not None or bool(dual_det))
    return Certificate(
        label=pres.label,
        representation=rho,
        jacobian=jac,
        det=det,
        dual_det=dual_det,
        self_dual_reason=reason,
        verdict=CERTIFIED if ok else NOT_CERTIFIED,
    )


@dataclass
class GenericCertificate:
    label: str
    polynomial: LaurentPolynomial
    variable_names: list[str]
    verdict: str

    @property
    def certified(self) -> bool:
        return self.verdict == GENERIC_CERTIFIED

    def polynomial_text(self) -> str:
        return self.polynomial.format(self.variable_names)

    def to_dict(self) -> dict:
        return {
            "kind": "generic-1d",
            "label": self.label,
            "polynomial": self.polynomial_text(),
            "verdict": self.verdict,
            "conventions": convention_ledger(),
        }


def certify_one_dim_generic(pres: SuturedPresentation) -> GenericCertificate:
    """Determinant of the abelianized Fox Jacobian.

    Nonzero exactly when some one-dimensional representation certifies;
    its zero set in ``(C*)^g`` is the non-certifying locus.  The dual of a
    one-dimensional representation inverts every variable, which keeps a
    nonzero Laurent polynomial nonzero.
    """
    d = det_laurent(abelianized_jacobian(pres.surface_words))
    return GenericCertificate(
        pres.label,
        d,
        laurent_names(pres.alphabet.names),
        GENERIC_CERTIFIED if d else GENERIC_NOT_CERTIFIED,
    )


@dataclass
class RandomReport:
    label: str
    status: str
    dim: int
    prime: int
    trials: int
    seed: int
    failures: int
    witness_trial: Optional[int] = None
    representation: Optional[Representation] = None
    det: object = None
    dual_det: object = None

    @property
    def found(self) -> bool:
        return self.status == WITNESS

    def to_dict(self) -> dict:
        return {
            "kind": "random",
            "label": self.label,
            "status": self.status,
            "dim": self.dim,
            "prime": self.prime,
            "trials": self.trials,
            "seed": self.seed,
            "failures": self.failures,
            "witness_trial": self.witness_trial,
            "representation": None if self.representation is None else self.representation.describe(),
            "det": None if self.det is None else str(self.det),
            "dual_det": None if self.dual_det is None else str(self.dual_det),
            "conventions": convention_ledger(),
        }


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent stream per trial, a pure function of ``(seed, trial)``."""
    return random.Random(f"tautcert:{seed}:{trial}")


def random_representation(pres: SuturedPresentation, fld: PrimeField, dim: int, rng: random.Random) -> Representation:
    mats = []
    for _ in range(pres.genus):
        while True:
            m = Matrix([[fld.random_element(rng) for _ in range(dim)] for _ in range(dim)])
            if det_field(m, fld.one()):
                break
        mats.append(m)
    return Representation(pres.alphabet, fld, tuple(mats), "uniform random over " + fld.tag)


def certify_random(pres: SuturedPresentation, dim: int, prime: int, trials: int, seed: int = 0) -> RandomReport:
    """Search for a representation over ``F_p`` with det and dual det nonzero.

    A hit shows the integer polynomial ``det * det_dual`` on the
    representation variety is not identically zero, so a complex
    certifying representation exists.  Misses prove nothing.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    if trials < 1:
        raise ValueError("need at least one trial")
    fld = PrimeField(prime)
    failures = 0
    for t in range(trials):
        rho = random_representation(pres, fld, dim, trial_rng(seed, t))
        det = det_field(jacobian_matrix(pres, rho), fld.one())
        if det:
            dual = det_field(jacobian_matrix(pres, rho.dual()), fld.one())
            if dual:
                return RandomReport(pres.label, WITNESS, dim, prime, trials, seed, failures, t, rho, det, dual)
        failures += 1
    return RandomReport(pres.label, INCONCLUSIVE, dim, prime, trials, seed, failures)


def one_dim_rational(pres: SuturedPresentation, values) -> Representation:
    return Representation.one_dim(pres.alphabet, QQ, values)


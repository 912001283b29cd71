from .certify import (
    CERTIFIED,
    GENERIC_CERTIFIED,
    GENERIC_NOT_CERTIFIED,
    INCONCLUSIVE,
    NOT_CERTIFIED,
    WITNESS,
    Certificate,
    GenericCertificate,
    RandomReport,
    certify,
    certify_one_dim_generic,
    certify_random,
    convention_ledger,
    is_self_dual_sufficient,
    jacobian_matrix,
    random_representation,
    trial_rng,
)
from .gallery import GALLERY_NAMES, GalleryEntry, GalleryError, gallery
from .obstruct import SolvableObstruction, attach_handle, one_dim_obstruction, solvable_obstruction
from .presentation import PresentationError, SuturedPresentation

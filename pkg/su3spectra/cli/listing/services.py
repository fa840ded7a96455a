import logging
from typing import List

from su3spectra.core.spectral.registry import SubjectRouter
from .schemas import SubjectListing

logger = logging.getLogger(__name__)


def list_subjects(kind: str, subject_router: SubjectRouter) -> List[SubjectListing]:
    """Registered subjects of one kind, in registration order."""
    listing = [SubjectListing(**entry) for entry in subject_router.listing(kind)]
    logger.debug("Listing %d %s", len(listing), kind)
    return listing

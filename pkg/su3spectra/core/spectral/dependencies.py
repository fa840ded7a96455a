from functools import lru_cache
from pathlib import Path

from su3spectra.core.config import settings
from .loader import TableLoader
from .registry import SubjectRouter


def get_data_path() -> Path:
    return Path(settings.DATA_DIR)


@lru_cache(maxsize=1)
def get_table_loader() -> TableLoader:
    return TableLoader(get_data_path())


def get_subject_router() -> SubjectRouter:
    return SubjectRouter(get_table_loader())

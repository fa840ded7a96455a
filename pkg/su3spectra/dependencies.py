from su3spectra.core.spectral.dependencies import get_subject_router, get_table_loader

__all__ = ["get_table_loader", "get_subject_router"]

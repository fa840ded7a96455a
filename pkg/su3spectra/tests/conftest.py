# su3spectra/tests/conftest.py
import pytest
from typer.testing import CliRunner

from su3spectra.core.config import settings
from su3spectra.core.spectral.loader import TableLoader


@pytest.fixture(scope="session")
def table_loader():
    return TableLoader(settings.DATA_DIR)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def cli_settings(tmp_path, monkeypatch):
    """Serial verification and a throwaway report directory."""
    monkeypatch.setattr(settings, "WORKERS", 1)
    monkeypatch.setattr(settings, "OUTPUT_DIR", tmp_path / "runs")
    return settings

from typing import Any, Dict, Optional


class SpectraError(Exception):
    """Base class for every error raised by su3spectra."""

    exit_code: int = 1

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = context

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message, **self.context}


class UnknownSubjectError(SpectraError):
    """Unknown graph id, group family or measure family."""

    exit_code = 2

    def __init__(self, kind: str, name: str, valid: Optional[list] = None):
        choices = ", ".join(valid or [])
        super().__init__(
            f"Unknown {kind} '{name}'. Valid choices: {choices}",
            kind=kind,
            name=name,
        )


class InvalidParameterError(SpectraError):
    exit_code = 2


class DataFileError(SpectraError):
    exit_code = 2


class DomainError(SpectraError):
    """A geometric or arithmetic contract broke at runtime."""

    exit_code = 1

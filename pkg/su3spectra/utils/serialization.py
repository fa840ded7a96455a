import csv
import io
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import orjson

from su3spectra.core.config import settings
from su3spectra.core.exceptions import InvalidParameterError

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY


def dump_json(payload: Any) -> bytes:
    return orjson.dumps(payload, option=JSON_OPTIONS)


def load_json(path: Path) -> Any:
    try:
        return orjson.loads(Path(path).read_bytes())
    except OSError as e:
        raise InvalidParameterError(f"Cannot read {path}: {e}") from e
    except orjson.JSONDecodeError as e:
        raise InvalidParameterError(f"{path} is not valid JSON: {e}") from e


def format_float(value: float, digits: Optional[int] = None) -> str:
    digits = settings.FLOAT_DIGITS if digits is None else digits
    return f"{value:.{digits}g}"


def dump_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text with floats written to FLOAT_DIGITS significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def write_output(content: bytes | str, out: Optional[Path]) -> None:
    """Write to a file, or to stdout when no path is given."""
    import typer

    if out is None:
        typer.echo(content.decode() if isinstance(content, bytes) else content.rstrip("\n"))
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(content, bytes):
        out.write_bytes(content)
    else:
        out.write_text(content)

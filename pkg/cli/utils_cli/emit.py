# FILE: cli/utils_cli/emit.py

import io
import logging
import math
import sys

import numpy as np
import pandas as pd

from cli.schemas import ResultEnvelope

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.9g"


class EmitError(OSError):
    """The output sink could not be written."""


def _native(value):
    if isinstance(value, np.generic):
        value = value.item()
    if value is pd.NA or (isinstance(value, float) and math.isnan(value)):
        return None
    return value


def to_records(frame: pd.DataFrame) -> list[dict]:
    return [{key: _native(value) for key, value in row.items()} for row in frame.to_dict(orient="records")]


def render_csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def render_json(frame: pd.DataFrame, meta: dict) -> str:
    return ResultEnvelope(meta=meta, data=to_records(frame)).model_dump_json() + "\n"


def load_envelope(text: str) -> ResultEnvelope:
    return ResultEnvelope.model_validate_json(text)


def emit(frame: pd.DataFrame, meta: dict, fmt: str = "csv", out: str | None = None) -> str:
    """Serialize a result frame and write it to `out` (stdout when None)."""
    text = render_csv(frame) if fmt == "csv" else render_json(frame, meta)
    try:
        if out is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(out, "w", encoding="utf-8", newline="\n") as sink:
                sink.write(text)
            logger.info(f"[emit] wrote {len(frame)} rows to {out}")
    except OSError as e:
        raise EmitError(f"could not write output: {e}") from e
    return text

"""CSV and JSON output with every float written to 17 significant digits."""
from __future__ import annotations

import csv
import io
import json
import math
import re
import sys
from contextlib import contextmanager
from typing import Iterable, Sequence

import numpy as np


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, float) or hasattr(v, "__float__") and not isinstance(v, (int, str)):
        x = float(v)
        return repr(x) if math.isnan(x) or math.isinf(x) else format(x, ".17g")
    return str(v)


@contextmanager
def _sink(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_csv(path: str | None, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with _sink(path) as fh:
        fh.write(csv_text(header, rows))


# floats travel through json.dumps as tagged strings and are unquoted afterwards
_TAG = "@@float:"
_TAGGED = re.compile('"' + _TAG + '([^"]+)"')


def _prepare(obj):
    if isinstance(obj, dict):
        return {k: _prepare(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_prepare(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if hasattr(obj, "__float__"):
        x = float(obj)
        return None if math.isnan(x) or math.isinf(x) else _TAG + format(x, ".17g")
    if hasattr(obj, "item"):
        return _prepare(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def json_text(doc) -> str:
    return _TAGGED.sub(r"\1", json.dumps(_prepare(doc), indent=2))


def write_json(path: str | None, doc) -> None:
    with _sink(path) as fh:
        fh.write(json_text(doc) + "\n")

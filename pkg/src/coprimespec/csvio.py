"""Deterministic CSV emission: fixed float format, LF endings, comment headers."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import numpy as np


def format_value(value: object) -> str:
    """Cell formatting: integers verbatim, floats at 12 significant digits."""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.12g}"


def write_csv(
    path: Path | str,
    columns: Mapping[str, Sequence[object]],
    comments: Mapping[str, object] | None = None,
) -> Path:
    """Write named columns to ``path`` with '#'-prefixed header comments.

    Output is byte-stable for identical inputs: insertion-ordered keys,
    '.' decimal separator, LF line endings, no timestamps.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names = list(columns)
    series = [list(columns[name]) for name in names]
    lengths = {len(s) for s in series}
    if len(lengths) > 1:
        raise ValueError(f"column lengths differ: { {n: len(s) for n, s in zip(names, series)} }")
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        for key, value in (comments or {}).items():
            fh.write(f"# {key}={format_value(value)}\n")
        fh.write(",".join(names) + "\n")
        for row in zip(*series) if series and series[0] else []:
            fh.write(",".join(format_value(cell) for cell in row) + "\n")
    return path

"""Minimal dependency-free SVG line plots.

These are convenience renderings of the CSV data; the CSVs are the
contract. Spectra get two stacked panels, linear and dB, since plot
scaling conventions vary.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import numpy as np

_MARGIN = 46
_DB_FLOOR = -80.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _polyline(x: np.ndarray, y: np.ndarray, box: tuple[float, float, float, float]) -> str:
    left, top, width, height = box
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    x_span = float(x.max() - x.min()) or 1.0
    y_span = float(y.max() - y.min()) or 1.0
    px = left + (x - x.min()) / x_span * width
    py = top + height - (y - y.min()) / y_span * height
    points = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px, py))
    return f'<polyline fill="none" stroke="#1f5fa6" stroke-width="1" points="{points}"/>'


def _panel(
    x: np.ndarray,
    y: np.ndarray,
    box: tuple[float, float, float, float],
    y_label: str,
) -> list[str]:
    left, top, width, height = box
    parts = [
        f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" fill="none" stroke="#444"/>',
        _polyline(x, y, box),
        f'<text x="{_fmt(left)}" y="{_fmt(top - 6)}" font-size="11" fill="#222">'
        f"{y_label}: {float(np.min(y)):.4g} .. {float(np.max(y)):.4g}</text>",
    ]
    return parts


def write_line_svg(
    path: Path | str,
    x: Sequence[float],
    y: Sequence[float],
    title: str = "",
    x_label: str = "",
    y_label: str = "value",
    size: tuple[int, int] = (720, 320),
) -> Path:
    """Single-panel line plot."""
    return _write(path, x, [(np.asarray(y, float), y_label)], title, x_label, size)


def write_dual_scale_svg(
    path: Path | str,
    x: Sequence[float],
    y: Sequence[float],
    title: str = "",
    x_label: str = "",
    size: tuple[int, int] = (720, 540),
) -> Path:
    """Two stacked panels: linear values on top, dB (re max) below."""
    y = np.asarray(y, dtype=np.float64)
    peak = float(np.max(y)) if y.size else 1.0
    safe = np.maximum(y / peak if peak > 0 else y, 10.0 ** (_DB_FLOOR / 10.0))
    db = 10.0 * np.log10(safe)
    return _write(path, x, [(y, "linear"), (db, "dB re max")], title, x_label, size)


def _write(
    path: Path | str,
    x: Sequence[float],
    panels: list[tuple[np.ndarray, str]],
    title: str,
    x_label: str,
    size: tuple[int, int],
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    width, height = size
    x = np.asarray(x, dtype=np.float64)
    inner_w = width - 2 * _MARGIN
    panel_h = (height - (len(panels) + 1) * _MARGIN) / len(panels)
    body: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{_MARGIN}" y="18" font-size="13" fill="#111">{title}</text>',
    ]
    for index, (y, label) in enumerate(panels):
        top = _MARGIN + index * (panel_h + _MARGIN)
        body.extend(_panel(x, y, (_MARGIN, top, inner_w, panel_h), label))
    body.append(
        f'<text x="{_MARGIN}" y="{height - 8}" font-size="11" fill="#222">'
        f"{x_label}: {float(x.min()):.4g} .. {float(x.max()):.4g}</text>"
    )
    body.append("</svg>")
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write("\n".join(body) + "\n")
    return path

"""Deterministic serialization of experiment outputs.

Three artifacts: ``report.json`` (full data, reals printed with 17
significant digits so parsing them back is lossless), ``curves.csv``
(fixed column order for plotting elsewhere), and ``plot.svg`` (a minimal
self-contained log-scale chart, no plotting dependency).  All emitters
build plain strings, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional, Sequence

from .bounds import BoundsReport
from .errors import FileError

__all__ = [
    "format_real",
    "dumps_document",
    "write_report_json",
    "write_curves_csv",
    "write_plot_svg",
    "CSV_COLUMNS",
]

CSV_COLUMNS = (
    "k",
    "gmres_min",
    "gmres_median",
    "gmres_max",
    "worst_case",
    "ideal",
    "starke_rhs",
    "elman_rhs",
)


def format_real(x: float) -> str:
    """17 significant digits: enough to reproduce any double exactly."""
    return format(float(x), ".17g")


def _dump(obj, indent: int) -> str:
    pad = "  " * indent
    child = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_real(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{child}{json.dumps(str(key))}: {_dump(value, indent + 1)}"
            for key, value in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            return "[]"
        items = [f"{child}{_dump(value, indent + 1)}" for value in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_document(doc: dict) -> str:
    return _dump(doc, 0) + "\n"


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise FileError(f"cannot write {path}: {exc}") from exc


def write_report_json(path, matrix_echo: dict, reports: Sequence[BoundsReport]) -> None:
    doc = {
        "matrix": matrix_echo,
        "reports": [report.to_dict() for report in reports],
    }
    _write_text(path, dumps_document(doc))


def _csv_row(report: BoundsReport) -> List[str]:
    stats = report.gmres_stats()
    cells = [
        str(report.k),
        format_real(stats["min"]),
        format_real(stats["median"]),
        format_real(stats["max"]),
        format_real(report.worst_case),
        format_real(report.ideal),
        format_real(report.starke_rhs),
        format_real(report.elman_rhs) if report.elman_rhs is not None else "",
    ]
    return cells


def write_curves_csv(path, reports: Sequence[BoundsReport]) -> None:
    lines = [",".join(CSV_COLUMNS)]
    for report in reports:
        lines.append(",".join(_csv_row(report)))
    _write_text(path, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# SVG chart
# ---------------------------------------------------------------------------

_SERIES = (
    ("gmres_min", "#9ecae1"),
    ("gmres_median", "#4292c6"),
    ("gmres_max", "#08519c"),
    ("worst_case", "#ff7f0e"),
    ("ideal", "#2ca02c"),
    ("starke_rhs", "#d62728"),
    ("elman_rhs", "#9467bd"),
)

_WIDTH, _HEIGHT = 760, 480
_LEFT, _RIGHT, _TOP, _BOTTOM = 80, 180, 36, 56


def _series_values(report: BoundsReport, name: str) -> Optional[float]:
    if name.startswith("gmres_"):
        return report.gmres_stats()[name.split("_", 1)[1]]
    return getattr(report, name)


def write_plot_svg(path, reports: Sequence[BoundsReport], title: str = "") -> None:
    """Log-scale chart of every curve column against the depth k."""
    reports = list(reports)
    ks = [report.k for report in reports]
    if not ks:
        _write_text(path, "<svg xmlns='http://www.w3.org/2000/svg'/>\n")
        return

    positive = [
        value
        for report in reports
        for name, _ in _SERIES
        if (value := _series_values(report, name)) is not None and value > 0.0
    ]
    import math

    floor = max(min(positive) / 10.0 if positive else 1e-16, 1e-16)
    log_floor = math.floor(math.log10(floor))
    log_top = 0.0  # every plotted quantity lies in [0, 1]
    span = max(log_top - log_floor, 1.0)

    kmin, kmax = min(ks), max(ks)
    inner_w = _WIDTH - _LEFT - _RIGHT
    inner_h = _HEIGHT - _TOP - _BOTTOM

    def x_of(k: int) -> float:
        if kmax == kmin:
            return _LEFT + inner_w / 2.0
        return _LEFT + (k - kmin) / (kmax - kmin) * inner_w

    def y_of(value: float) -> float:
        clamped = max(value, 10.0**log_floor)
        return _TOP + (log_top - math.log10(clamped)) / span * inner_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{_HEIGHT - _BOTTOM}" '
        'stroke="black"/>',
        f'<line x1="{_LEFT}" y1="{_HEIGHT - _BOTTOM}" x2="{_WIDTH - _RIGHT}" '
        f'y2="{_HEIGHT - _BOTTOM}" stroke="black"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_LEFT}" y="20" font-family="monospace" font-size="13">'
            f"{title}</text>"
        )

    decade_step = max(1, int(math.ceil(-log_floor / 8.0)))
    decade = 0
    while decade >= log_floor:
        y = y_of(10.0**decade)
        parts.append(
            f'<line x1="{_LEFT - 4}" y1="{y:.2f}" x2="{_LEFT}" y2="{y:.2f}" '
            'stroke="black"/>'
        )
        parts.append(
            f'<text x="{_LEFT - 8}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="monospace" font-size="11">1e{decade}</text>'
        )
        decade -= decade_step
    for k in ks:
        x = x_of(k)
        parts.append(
            f'<line x1="{x:.2f}" y1="{_HEIGHT - _BOTTOM}" x2="{x:.2f}" '
            f'y2="{_HEIGHT - _BOTTOM + 4}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{_HEIGHT - _BOTTOM + 18}" text-anchor="middle" '
            f'font-family="monospace" font-size="11">{k}</text>'
        )
    parts.append(
        f'<text x="{_LEFT + inner_w / 2:.2f}" y="{_HEIGHT - 12}" '
        'text-anchor="middle" font-family="monospace" font-size="12">k</text>'
    )
    parts.append(
        f'<text x="18" y="{_TOP + inner_h / 2:.2f}" text-anchor="middle" '
        f'font-family="monospace" font-size="12" '
        f'transform="rotate(-90 18 {_TOP + inner_h / 2:.2f})">residual ratio</text>'
    )

    legend_y = _TOP + 6
    for name, color in _SERIES:
        points = [
            (x_of(report.k), y_of(value))
            for report in reports
            if (value := _series_values(report, name)) is not None
        ]
        if points:
            path_data = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
            parts.append(
                f'<polyline points="{path_data}" fill="none" stroke="{color}" '
                'stroke-width="1.6"/>'
            )
            for x, y in points:
                parts.append(
                    f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.4" fill="{color}"/>'
                )
        lx = _WIDTH - _RIGHT + 14
        parts.append(
            f'<line x1="{lx}" y1="{legend_y}" x2="{lx + 22}" y2="{legend_y}" '
            f'stroke="{color}" stroke-width="2.2"/>'
        )
        parts.append(
            f'<text x="{lx + 28}" y="{legend_y + 4}" font-family="monospace" '
            f'font-size="11">{name}</text>'
        )
        legend_y += 18

    parts.append("</svg>")
    _write_text(path, "\n".join(parts) + "\n")

"""Data behind the reference table and the two standard figures.

* the table1 grid: r over the standard rows of alpha and columns of beta,
* fig2 curves: ln r against beta for a handful of alpha values,
* fig3 contours: the (alpha, beta) polylines of constant r.

Rendering is deliberately plain: CSV built as exact strings (so output
is byte-reproducible) and a dependency-free SVG polyline plot.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

from .core import OffContourError, StepSelectionModel, contour_beta, ratio_step

#: Row and column layout of the table1 grid. The alpha spacing is uneven
#: on purpose: fine steps through the conventional significance levels,
#: then .05 steps up to one half.
TABLE_ALPHAS = (.01, .02, .03, .04, .05, .10, .15, .20, .25, .30, .35, .40, .45, .50)
TABLE_BETAS = (.01, .05, .10, .15, .20, .25, .30, .35, .40, .45)

DEFAULT_FIG2_ALPHAS = (.01, .05, .10)
DEFAULT_FIG3_RATIOS = (.5, 1.0, 2.0, 5.0, 19.0)

_SVG_WIDTH = 800
_SVG_HEIGHT = 600
_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
)

Curve = tuple[str, list[tuple[float, float]]]


def round_half_away(x: float, places: int = 2) -> str:
    """Decimal string of x, ties rounded away from zero (9.256... -> "9.26")."""
    exponent = Decimal(1).scaleb(-places)
    return str(Decimal(x).quantize(exponent, rounding=ROUND_HALF_UP))


def _bare(x: float) -> str:
    # table style drops the leading zero: ".98" not "0.98"
    s = round_half_away(x, 2)
    return s[1:] if s.startswith("0.") else s


def table_ratios() -> list[list[float]]:
    """The r values of the full table grid, row-major over TABLE_ALPHAS."""
    return [
        [ratio_step(StepSelectionModel(a, b)).r for b in TABLE_BETAS]
        for a in TABLE_ALPHAS
    ]


def table1_csv() -> str:
    """The table1 grid as CSV, matching the reference layout byte for byte.

    Two header rows carry beta and the computed 1 - beta; each data row
    starts with alpha and the computed 1 - alpha. Cells are r rounded
    half-away-from-zero to 2 decimals, leading zeros dropped.
    """
    lines = [
        "alpha,1-alpha," + ",".join(_bare(b) for b in TABLE_BETAS),
        ",," + ",".join(_bare(1.0 - b) for b in TABLE_BETAS),
    ]
    for alpha, row in zip(TABLE_ALPHAS, table_ratios()):
        cells = ",".join(_bare(r) for r in row)
        lines.append(f"{_bare(alpha)},{_bare(1.0 - alpha)},{cells}")
    return "\n".join(lines) + "\n"


def fig2_curves(
    alphas: Sequence[float] = DEFAULT_FIG2_ALPHAS, grid: int = 99
) -> list[tuple[float, list[tuple[float, float]]]]:
    """(beta, ln r) polylines over the open interval beta in (0, 1).

    ``grid`` interior points beta_k = k / (grid + 1) keep both endpoints
    out: beta < 1 makes r positive and alpha > 0 keeps p positive, so
    ln r is finite everywhere on the grid.
    """
    if grid < 2:
        raise ValueError(f"grid resolution must be >= 2, got {grid!r}")
    for a in alphas:
        if not 0.0 < float(a) < 1.0:
            raise ValueError(f"alpha must lie strictly between 0 and 1, got {a!r}")
    betas = [k / (grid + 1) for k in range(1, grid + 1)]
    curves = []
    for a in alphas:
        points = [
            (b, math.log(ratio_step(StepSelectionModel(a, b)).r)) for b in betas
        ]
        curves.append((float(a), points))
    return curves


def fig3_contours(
    r_values: Sequence[float] = DEFAULT_FIG3_RATIOS,
    grid: int = 200,
    alpha_min: float = 0.0,
    alpha_max: float = 1.0,
) -> list[tuple[float, list[tuple[float, float]]]]:
    """(alpha, beta) polylines of constant r, one per requested value.

    The alpha grid is k / grid for k = 0..grid-1, restricted to
    [alpha_min, alpha_max]; grid points where the contour leaves the unit
    square are omitted, so an infeasible r yields an empty polyline.
    """
    if grid < 2:
        raise ValueError(f"grid resolution must be >= 2, got {grid!r}")
    alphas = [k / grid for k in range(grid) if alpha_min <= k / grid <= alpha_max]
    contours = []
    for r0 in r_values:
        points = []
        for a in alphas:
            try:
                points.append((a, contour_beta(float(r0), a)))
            except OffContourError:
                continue
        contours.append((float(r0), points))
    return contours


def csv_text(header: Sequence[str], rows: Iterable[Sequence[object]], precision: int = 4) -> str:
    """Rows as CSV with floats at fixed decimal precision."""
    def cell(value: object) -> str:
        if isinstance(value, float):
            return f"{value:.{precision}f}"
        return str(value)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    if hi <= lo:
        lo, hi = lo - 0.5, hi + 0.5
    return [lo + i * (hi - lo) / (count - 1) for i in range(count)]


def render_svg(curves: Sequence[Curve], x_label: str, y_label: str) -> str:
    """Minimal SVG line plot: fixed 800x600 viewbox, linear labeled axes,
    one polyline per curve (empty curves render as empty polylines)."""
    points = [pt for _, pts in curves for pt in pts]
    if points:
        x_lo = min(x for x, _ in points)
        x_hi = max(x for x, _ in points)
        y_lo = min(y for _, y in points)
        y_hi = max(y for _, y in points)
    else:
        x_lo, x_hi, y_lo, y_hi = 0.0, 1.0, 0.0, 1.0
    if x_hi - x_lo < 1e-300:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi - y_lo < 1e-300:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5

    left, right, top, bottom = 70.0, 20.0, 20.0, 50.0
    inner_w = _SVG_WIDTH - left - right
    inner_h = _SVG_HEIGHT - top - bottom

    def sx(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * inner_w

    def sy(y: float) -> float:
        return top + (y_hi - y) / (y_hi - y_lo) * inner_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_WIDTH} {_SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{_SVG_WIDTH}" height="{_SVG_HEIGHT}" fill="white"/>',
        f'<line x1="{left}" y1="{top + inner_h}" x2="{left + inner_w}" '
        f'y2="{top + inner_h}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + inner_h}" stroke="black"/>',
    ]
    for tx in _ticks(x_lo, x_hi):
        px = sx(tx)
        parts.append(
            f'<line x1="{px:.1f}" y1="{top + inner_h}" x2="{px:.1f}" '
            f'y2="{top + inner_h + 6}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.1f}" y="{top + inner_h + 22}" font-size="13" '
            f'text-anchor="middle">{tx:.4g}</text>'
        )
    for ty in _ticks(y_lo, y_hi):
        py = sy(ty)
        parts.append(
            f'<line x1="{left - 6}" y1="{py:.1f}" x2="{left}" y2="{py:.1f}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{left - 10}" y="{py + 4:.1f}" font-size="13" '
            f'text-anchor="end">{ty:.4g}</text>'
        )
    parts.append(
        f'<text x="{left + inner_w / 2:.1f}" y="{_SVG_HEIGHT - 12}" font-size="15" '
        f'text-anchor="middle">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{top + inner_h / 2:.1f}" font-size="15" '
        f'text-anchor="middle" transform="rotate(-90 18 {top + inner_h / 2:.1f})">'
        f'{y_label}</text>'
    )
    for i, (label, pts) in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{left + inner_w - 8:.1f}" y="{top + 16 + 18 * i}" '
            f'font-size="13" text-anchor="end" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Static SVG histogram of N*p with the Porter-Thomas density overlaid."""

from xml.sax.saxutils import escape

import numpy as np

from ...numerics.random_matrix import porter_thomas_pdf
from ..config import settings
from .io import ensure_parent

WIDTH = 640
HEIGHT = 400
MARGIN = 50
Y_MAX = 8.0


def histogram_svg(
    values: np.ndarray,
    N: int,
    bins: int = 40,
    title: str = "",
    config_hash: str | None = None,
) -> str:
    """Density histogram of ``y = N p`` on ``[0, Y_MAX]`` with the exact law of ``N p`` drawn on top.

    The tool version and, when given, the source config hash go into a comment after the root tag.
    """
    y = np.asarray(values, dtype=float) * N
    counts, edges = np.histogram(y, bins=bins, range=(0.0, Y_MAX))
    density = counts / max(1, y.size) / (edges[1] - edges[0])

    grid = np.linspace(0.0, Y_MAX, 200)
    overlay = (
        np.asarray(porter_thomas_pdf(np.clip(grid / N, 0.0, 1.0), N)) / N if N >= 2 else np.zeros_like(grid)
    )
    top = max(float(density.max(initial=0.0)), float(overlay.max(initial=0.0)), 1e-12) * 1.1

    plot_w = WIDTH - 2 * MARGIN
    plot_h = HEIGHT - 2 * MARGIN

    def sx(v: float) -> float:
        return MARGIN + plot_w * v / Y_MAX

    def sy(v: float) -> float:
        return HEIGHT - MARGIN - plot_h * v / top

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<!-- {settings.APP_NAME} {settings.APP_VERSION} config_hash={config_hash or 'unknown'} -->",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for left, right, d in zip(edges[:-1], edges[1:], density):
        x0, x1, y0 = sx(left), sx(right), sy(d)
        parts.append(
            f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{x1 - x0:.2f}" height="{HEIGHT - MARGIN - y0:.2f}" '
            f'fill="#9ecae1" stroke="#3182bd" stroke-width="0.5"/>'
        )
    path = " ".join(f"{'M' if k == 0 else 'L'}{sx(g):.2f},{sy(o):.2f}" for k, (g, o) in enumerate(zip(grid, overlay)))
    parts.append(f'<path d="{path}" fill="none" stroke="#de2d26" stroke-width="2"/>')
    parts.append(
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>'
    )
    parts.append(f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>')
    for tick in range(int(Y_MAX) + 1):
        parts.append(
            f'<text x="{sx(tick):.2f}" y="{HEIGHT - MARGIN + 18}" font-size="12" text-anchor="middle">{tick}</text>'
        )
    parts.append(
        f'<text x="{WIDTH / 2}" y="{HEIGHT - 10}" font-size="13" text-anchor="middle">N·p (N={N}, '
        f"{y.size} samples)</text>"
    )
    if title:
        parts.append(f'<text x="{WIDTH / 2}" y="24" font-size="15" text-anchor="middle">{escape(title)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_histogram_svg(
    path: str,
    values: np.ndarray,
    N: int,
    title: str = "",
    config_hash: str | None = None,
) -> None:
    ensure_parent(path)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(histogram_svg(values, N, title=title, config_hash=config_hash))

"""Graphique SVG minimal et autonome (courbes et points)."""

from collections.abc import Sequence
from dataclasses import dataclass
from xml.sax.saxutils import escape

WIDTH = 640
HEIGHT = 400
MARGIN = 60
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd")


@dataclass(frozen=True)
class Series:
    """Série à tracer."""

    label: str
    xs: Sequence[float]
    ys: Sequence[float]


def _bounds(values: list[float]) -> tuple[float, float]:
    low, high = min(values), max(values)
    if high == low:
        pad = abs(low) * 0.05 or 1.0
        return low - pad, high + pad
    return low, high


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_line_chart(
    series: list[Series],
    title: str,
    x_label: str,
    y_label: str,
    markers: bool = False,
) -> str:
    """Trace une ou plusieurs séries en SVG.

    Args:
        series: Séries non vides.
        title: Titre du graphique.
        x_label: Légende de l'axe horizontal.
        y_label: Légende de l'axe vertical.
        markers: Ajoute un point à chaque abscisse.

    Returns:
        Document SVG complet.

    Raises:
        ValueError: Si aucune série n'a de point.
    """
    xs = [float(x) for s in series for x in s.xs]
    ys = [float(y) for s in series for y in s.ys]
    if not xs:
        raise ValueError("aucun point à tracer")
    x_low, x_high = _bounds(xs)
    y_low, y_high = _bounds(ys)
    plot_w = WIDTH - 2 * MARGIN
    plot_h = HEIGHT - 2 * MARGIN

    def px(x: float) -> float:
        return MARGIN + (x - x_low) / (x_high - x_low) * plot_w

    def py(y: float) -> float:
        return HEIGHT - MARGIN - (y - y_low) / (y_high - y_low) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH // 2}" y="{MARGIN // 2}" text-anchor="middle" '
        f'font-size="16">{escape(title)}</text>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<text x="{WIDTH // 2}" y="{HEIGHT - 15}" text-anchor="middle" '
        f'font-size="12">{escape(x_label)}</text>',
        f'<text x="15" y="{HEIGHT // 2}" text-anchor="middle" '
        f'font-size="12" transform="rotate(-90 15 {HEIGHT // 2})">'
        f"{escape(y_label)}</text>",
    ]
    for value, anchor, x, y in (
        (x_low, "start", MARGIN, HEIGHT - MARGIN + 18),
        (x_high, "end", WIDTH - MARGIN, HEIGHT - MARGIN + 18),
    ):
        parts.append(
            f'<text x="{x}" y="{y}" text-anchor="{anchor}" '
            f'font-size="10">{value:.4g}</text>'
        )
    for value, y in ((y_low, HEIGHT - MARGIN), (y_high, MARGIN + 10)):
        parts.append(
            f'<text x="{MARGIN - 5}" y="{y}" text-anchor="end" '
            f'font-size="10">{value:.4g}</text>'
        )
    for index, s in enumerate(series):
        color = PALETTE[index % len(PALETTE)]
        points = " ".join(
            f"{_fmt(px(float(x)))},{_fmt(py(float(y)))}"
            for x, y in zip(s.xs, s.ys)
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
            f'points="{points}"/>'
        )
        if markers:
            for x, y in zip(s.xs, s.ys):
                parts.append(
                    f'<circle cx="{_fmt(px(float(x)))}" '
                    f'cy="{_fmt(py(float(y)))}" r="3" fill="{color}"/>'
                )
        parts.append(
            f'<text x="{WIDTH - MARGIN}" y="{MARGIN + 14 * (index + 1)}" '
            f'text-anchor="end" font-size="11" fill="{color}">'
            f"{escape(s.label)}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

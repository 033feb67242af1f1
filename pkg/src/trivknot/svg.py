"""SVG 1.1 drawing of a chord diagram with an optimal removal witness."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .chords import ChordDiagram, RemovalWitness

HEADER = (
    '<?xml version="1.0" standalone="no"?>\n'
    '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
    '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
)


def chord_diagram_svg(cd: ChordDiagram, witness: RemovalWitness, labels=None, size=320) -> str:
    """Circle with one straight chord per crossing; removed chords are dashed."""
    L = len(cd.partner)
    cx = cy = size / 2
    radius = size / 2 - 30

    def point(pos, r=radius):
        # position 0 at the top, increasing clockwise
        angle = -math.pi / 2 + 2 * math.pi * pos / max(L, 1)
        return cx + r * math.cos(angle), cy + r * math.sin(angle)

    out = [
        HEADER,
        f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">\n',
        f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{radius:.1f}" fill="none" '
        'stroke="black" stroke-width="1.5"/>\n',
    ]
    for c, (a, b) in enumerate(cd.chords):
        (x1, y1), (x2, y2) = point(a), point(b)
        removed = c in witness.removed
        style = 'stroke="#c0392b" stroke-dasharray="6,4"' if removed else 'stroke="#2c3e50"'
        cls = "removed" if removed else "kept"
        out.append(
            f'<line class="{cls}" x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            f'{style} stroke-width="2"/>\n'
        )
    for pos in range(L):
        x, y = point(pos)
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3" fill="black"/>\n')
        if labels is not None:
            tx, ty = point(pos, radius + 14)
            out.append(
                f'<text x="{tx:.1f}" y="{ty:.1f}" font-size="11" text-anchor="middle" '
                f'dominant-baseline="middle">{escape(str(labels[pos]))}</text>\n'
            )
    out.append("</svg>\n")
    return "".join(out)

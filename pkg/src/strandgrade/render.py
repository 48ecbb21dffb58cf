"""SVG pictures of strand diagrams and chord arcs.

Strands are straight segments between two vertical columns, so two strands
cross exactly when they form an inversion.  Elements carry a ``class``
attribute (level, strand, pair, arc) to keep the output easy to inspect.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import quoteattr

from .algebra import MatchedGenerator
from .errors import InputError
from .pontryagin import ChordArcDiagram
from .strands import StrandDiagram

STEP = 24
MARGIN = 20
WIDTH = 160
PANEL_GAP = 30


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">'
    )
    return "\n".join([head, *("  " + b for b in body), "</svg>"]) + "\n"


def empty_svg() -> str:
    return _svg(2 * MARGIN, 2 * MARGIN, [])


def _level_y(p: int, n: int) -> float:
    # point 1 at the bottom
    return MARGIN + (n - p) * STEP


def _line(x1, y1, x2, y2, cls: str, dashed: bool = False) -> str:
    style = ' stroke-dasharray="2,3"' if dashed else ""
    colour = "#bbb" if cls == "level" else "black"
    return (
        f'<line class={quoteattr(cls)} x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" '
        f'stroke="{colour}"{style}/>'
    )


def _strand_body(n: int, moving, pairs, x0: float = MARGIN) -> list[str]:
    x1 = x0 + WIDTH
    body = [_line(x0, _level_y(p, n), x1, _level_y(p, n), "level", dashed=True) for p in range(1, n + 1)]
    for a, b in pairs:
        for p in (a, b):
            body.append(_line(x0, _level_y(p, n), x1, _level_y(p, n), "pair", dashed=True))
    for a, b in moving:
        body.append(_line(x0, _level_y(a, n), x1, _level_y(b, n), "strand"))
    return body


def _size(n: int, panels: int = 1) -> tuple[float, float]:
    return 2 * MARGIN + panels * WIDTH + (panels - 1) * PANEL_GAP, 2 * MARGIN + (n - 1) * STEP


def generator_svg(g: MatchedGenerator) -> str:
    """Chords as rising strands; each handle of s not used by a chord as a dotted pair."""
    if not g.is_nonzero():
        return empty_svg()
    pmc = g.pmc
    n = pmc.num_points
    idle = sorted(g.s - pmc.image(g.chords.minus))
    body = _strand_body(n, [tuple(c) for c in g.chords], [pmc.points_of(h) for h in idle])
    return _svg(*_size(n), body)


def strands_svg(d: StrandDiagram) -> str:
    n = d.ambient
    body = _strand_body(n, d.moving, [])
    for p in sorted(d.horizontal):
        body.append(_line(MARGIN, _level_y(p, n), MARGIN + WIDTH, _level_y(p, n), "strand"))
    return _svg(*_size(n), body)


def arcs_svg(d: ChordArcDiagram) -> str:
    """One panel per layer, each chord a semicircle to the right of the axis."""
    if not d.layers:
        return empty_svg()
    n = d.num_points
    body = []
    for i, layer in enumerate(d.layers):
        x = MARGIN + i * (WIDTH + PANEL_GAP)
        top, bottom = _level_y(n, n), _level_y(1, n)
        body.append(f'<line class="axis" x1="{x:g}" y1="{top:g}" x2="{x:g}" y2="{bottom:g}" stroke="black"/>')
        for p in range(1, n + 1):
            body.append(f'<circle class="level" cx="{x:g}" cy="{_level_y(p, n):g}" r="2" fill="#888"/>')
        for c in layer:
            y1, y2 = _level_y(c.minus, n), _level_y(c.plus, n)
            r = (y1 - y2) / 2
            body.append(
                f'<path class="arc" d="M {x:g} {y1:g} A {r:g} {r:g} 0 0 0 {x:g} {y2:g}" '
                f'fill="none" stroke="black"/>'
            )
    return _svg(*_size(n, len(d.layers)), body)


def to_svg(element) -> str:
    if isinstance(element, MatchedGenerator):
        return generator_svg(element)
    if isinstance(element, ChordArcDiagram):
        return arcs_svg(element)
    if isinstance(element, StrandDiagram):
        return strands_svg(element)
    if element is None:
        return empty_svg()
    raise InputError(f"cannot render {type(element).__name__}")


def render_svg(element, out_path: str | Path) -> Path:
    path = Path(out_path)
    try:
        path.write_text(to_svg(element), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None
    return path

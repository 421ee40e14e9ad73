"""
render.py
---------
PNG drawings of normal forms.

Each term is a panel: bottom points along the lower edge, top points along
the upper edge, both right-aligned so through strands run straight up.
Caps are half-ellipses rising from the bottom edge, cups hang from the top
edge. Coefficients and bubble counts are written in a label box above the
panel, and the source label (when there is one) is written in the rightmost
region.
"""

from __future__ import annotations

import io
import logging
from pathlib import Path

from PIL import Image, ImageDraw, ImageFont

from .matchings import BOTTOM, Morphism
from .signwords import PLUS

logger = logging.getLogger(__name__)

_FONT_NAME = "DejaVuSans.ttf"

SPACING = 48            # pixels between neighbouring boundary points
PANEL_HEIGHT = 180
MARGIN = 30
LABEL_HEIGHT = 34

_BACKGROUND = (255, 255, 255)
_STRAND = (30, 30, 30)
_PLUS_COLOR = (0, 120, 200)
_MINUS_COLOR = (200, 60, 40)
_LABEL_FILL = (0, 0, 0)


def _load_font(size: int):
    try:
        return ImageFont.truetype(_FONT_NAME, size)
    except (OSError, IOError):
        logger.debug("Could not load font '%s'. Falling back to PIL default font.", _FONT_NAME)
        return ImageFont.load_default()


def _point_x(index: int, word_len: int, width: int, left: int) -> int:
    return left + (width - word_len + index) * SPACING + SPACING // 2


def _label_box(draw: ImageDraw.ImageDraw, x: int, y: int, text: str, font) -> None:
    bbox = draw.textbbox((0, 0), text, font=font)
    text_w, text_h = bbox[2] - bbox[0], bbox[3] - bbox[1]
    padding = 5
    draw.rectangle([x, y, x + text_w + 2 * padding, y + text_h + 2 * padding], fill=_LABEL_FILL)
    draw.text((x + padding, y + padding), text, fill=(255, 255, 255), font=font)


def _draw_term(draw, font, matching, bubbles, coeff, source, top_y: int, width: int) -> None:
    left = MARGIN
    bottom_y = top_y + PANEL_HEIGHT
    line = max(3, SPACING // 16)

    def xy(point) -> tuple[int, int]:
        side, index = point
        word = matching.bottom if side == BOTTOM else matching.top
        return _point_x(index, len(word), width, left), bottom_y if side == BOTTOM else top_y

    for a, b in matching.arcs:
        (xa, ya), (xb, yb) = xy(a), xy(b)
        if a[0] != b[0]:
            draw.line([xa, ya, xb, yb], fill=_STRAND, width=line)
            continue
        depth = (xb - xa) // 2 + SPACING // 4
        if a[0] == BOTTOM:
            box = [xa, bottom_y - depth, xb, bottom_y + depth]
            draw.arc(box, start=180, end=360, fill=_STRAND, width=line)
        else:
            box = [xa, top_y - depth, xb, top_y + depth]
            draw.arc(box, start=0, end=180, fill=_STRAND, width=line)

    for side, word, y in ((BOTTOM, matching.bottom, bottom_y + 6), (1, matching.top, top_y - 24)):
        for i, s in enumerate(word):
            x = _point_x(i, len(word), width, left)
            draw.text((x - 5, y), "+" if s == PLUS else "-",
                      fill=_PLUS_COLOR if s == PLUS else _MINUS_COLOR, font=font)

    radius = SPACING // 3
    for k, clockwise in enumerate([True] * bubbles.cw + [False] * bubbles.ccw):
        cx = left + radius + k * (2 * radius + 8)
        cy = (top_y + bottom_y) // 2
        draw.ellipse([cx - radius, cy - radius, cx + radius, cy + radius], outline=_STRAND, width=line)
        draw.text((cx - 6, cy - 8), "R" if clockwise else "L", fill=_STRAND, font=font)

    text = f"{coeff}"
    if bubbles.cw or bubbles.ccw:
        text += f"   cw={bubbles.cw} ccw={bubbles.ccw}"
    _label_box(draw, left, top_y - LABEL_HEIGHT - 24, text, font)

    if source is not None:
        draw.text((left + width * SPACING + 6, (top_y + bottom_y) // 2), str(source),
                  fill=(120, 120, 120), font=font)


def render_png(m: Morphism, path: str | Path | None = None) -> bytes:
    """
    Encode the normal form `m` as PNG bytes, also writing them to `path`
    when one is given. The zero morphism draws as a lone '0'.
    """
    font = _load_font(18)
    width = max(len(m.bottom), len(m.top), 2)
    img_width = 2 * MARGIN + (width + 1) * SPACING
    panel = PANEL_HEIGHT + LABEL_HEIGHT + 60
    terms = m.terms or ()
    img_height = 2 * MARGIN + max(1, len(terms)) * panel

    image = Image.new("RGB", (img_width, img_height), _BACKGROUND)
    draw = ImageDraw.Draw(image)

    if not terms:
        _label_box(draw, MARGIN, MARGIN, "0", font)
    for k, ((matching, bubbles), coeff) in enumerate(terms):
        top_y = MARGIN + k * panel + LABEL_HEIGHT + 30
        _draw_term(draw, font, matching, bubbles, coeff, m.source, top_y, width)

    buf = io.BytesIO()
    image.save(buf, format="PNG")
    data = buf.getvalue()
    logger.debug("Rendered %d term(s) to a %dx%d PNG.", len(terms), img_width, img_height)

    if path is not None:
        Path(path).write_bytes(data)
        logger.info("Wrote %s", path)
    return data

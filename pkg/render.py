#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""render.py

Chain tableaux as text, SVG, JSON or PNG.

ASCII layout (byte-exact, used by the golden files):
    one line per row, '|' between cells, every cell w characters wide,
    w = max(2, digits of the largest label). Base cells are '#' * w,
    labelled cells hold the step number right-aligned, empty cells blanks.
"""

from __future__ import annotations

import json
import logging
from typing import List, Optional, Sequence
from xml.sax.saxutils import escape

from PIL import Image, ImageDraw, ImageFont

import config
from chain_decomposition import ChainTableau

log = logging.getLogger(__name__)

FORMATS = ("ascii", "svg", "json", "png")


def _cell_width(tabs: Sequence[ChainTableau]) -> int:
    biggest = max((t for tab in tabs for t in tab.labels.values()), default=0)
    return max(config.ASCII_MIN_CELL, len(str(biggest)))


def _ascii_rows(tab: ChainTableau, w: int) -> List[str]:
    lines = []
    for r in range(1, tab.box.m + 1):
        cells = []
        for c in range(1, tab.box.n + 1):
            if c <= tab.base[r - 1]:
                cells.append(config.ASCII_BASE_CHAR * w)
            else:
                t = tab.label_at(r, c)
                cells.append(str(t).rjust(w) if t is not None else " " * w)
        lines.append("|" + "|".join(cells) + "|")
    return lines


def render_ascii(tab: ChainTableau) -> str:
    return "\n".join(_ascii_rows(tab, _cell_width([tab])))


def _header(tab: ChainTableau) -> str:
    return f"start={','.join(str(p) for p in tab.base)} steps={tab.steps}"


def render_ascii_many(tabs: Sequence[ChainTableau]) -> str:
    """Header line plus rows per tableau, blank line between blocks.

    Each block keeps its own cell width, so a tableau renders the same
    alone or in a batch.
    """
    blocks = []
    for tab in tabs:
        blocks.append("\n".join([_header(tab)] + _ascii_rows(tab, _cell_width([tab]))))
    return "\n\n".join(blocks) + "\n"


# ------------------------------- SVG ---------------------------------------

def _svg_group(tab: ChainTableau, y0: int) -> List[str]:
    s = config.SVG_CELL
    out = [f'<g transform="translate(0,{y0})">']
    out.append(f'<title>{escape(_header(tab))}</title>')
    for r in range(1, tab.box.m + 1):
        for c in range(1, tab.box.n + 1):
            x, y = (c - 1) * s, (r - 1) * s
            fill = config.SVG_BASE_FILL if c <= tab.base[r - 1] else config.SVG_EMPTY_FILL
            out.append(f'<rect x="{x}" y="{y}" width="{s}" height="{s}" fill="{fill}" stroke="#000000"/>')
            t = tab.label_at(r, c)
            if t is not None:
                out.append(
                    f'<text x="{x + s // 2}" y="{y + s // 2}" text-anchor="middle" '
                    f'dominant-baseline="central" font-size="{s // 2}">{t}</text>'
                )
    out.append("</g>")
    return out


def render_svg_many(tabs: Sequence[ChainTableau]) -> str:
    if not tabs:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"></svg>\n'
    s = config.SVG_CELL
    box = tabs[0].box
    block = box.m * s + config.SVG_GAP
    width = box.n * s
    height = len(tabs) * block - config.SVG_GAP
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    for i, tab in enumerate(tabs):
        lines.extend(_svg_group(tab, i * block))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ------------------------------- JSON --------------------------------------

def render_json(tab: ChainTableau) -> str:
    return json.dumps(tab.to_json(), separators=(",", ":"))


def render_json_many(tabs: Sequence[ChainTableau]) -> str:
    return json.dumps([t.to_json() for t in tabs], separators=(",", ":")) + "\n"


# ------------------------------- PNG ---------------------------------------

def render_png_many(tabs: Sequence[ChainTableau], path: str) -> str:
    """Stack the tableaux vertically into one PNG at ``path``."""
    s = config.PNG_CELL
    gap = config.PNG_GAP
    box = tabs[0].box if tabs else None
    width = max(1, box.n * s + 1) if box else 1
    block = (box.m * s + gap) if box else 0
    height = max(1, len(tabs) * block - gap + 1) if tabs else 1
    img = Image.new("RGB", (width, height), "white")
    draw = ImageDraw.Draw(img)
    font = ImageFont.load_default()
    for i, tab in enumerate(tabs):
        y0 = i * block
        for r in range(1, tab.box.m + 1):
            for c in range(1, tab.box.n + 1):
                x, y = (c - 1) * s, y0 + (r - 1) * s
                fill = config.SVG_BASE_FILL if c <= tab.base[r - 1] else config.SVG_EMPTY_FILL
                draw.rectangle([x, y, x + s, y + s], fill=fill, outline="black")
                t = tab.label_at(r, c)
                if t is not None:
                    text = str(t)
                    left, top, right, bottom = draw.textbbox((0, 0), text, font=font)
                    draw.text((x + (s - (right - left)) / 2, y + (s - (bottom - top)) / 2), text,
                              fill="black", font=font)
    img.save(path, format="PNG")
    log.info("wrote %s tableaux to %s (%sx%s px)", len(tabs), path, width, height)
    return path


# ------------------------------ Dispatch -----------------------------------

def render(tab: ChainTableau, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(tab)
    if fmt == "svg":
        return render_svg_many([tab])
    if fmt == "json":
        return render_json(tab)
    raise ValueError(f"unknown text format {fmt!r}; expected ascii, svg or json")


def render_many(tabs: Sequence[ChainTableau], fmt: str = "ascii", path: Optional[str] = None) -> str:
    """Text for ascii/svg/json; for png the image goes to ``path`` and the path comes back."""
    if fmt == "png":
        if not path:
            raise ValueError("png output needs a file path")
        return render_png_many(tabs, path)
    if fmt == "ascii":
        return render_ascii_many(tabs)
    if fmt == "svg":
        return render_svg_many(tabs)
    if fmt == "json":
        return render_json_many(tabs)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")

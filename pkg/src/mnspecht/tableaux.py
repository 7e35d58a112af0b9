"""Skew tableaux: standardness, straightening of rows and columns, orders.

A tableau stores its entries as a flat tuple aligned with ``shape.boxes``
(row-major order). The text form lists rows top to bottom separated by
``/``, entries comma-separated, with ``.`` for boxes of the inner partition,
e.g. ``.,.,5/.,.,7/6,8``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from .core import (
    Box,
    Composition,
    ParseError,
    Partition,
    Permutation,
    SkewShape,
    is_border_strip,
)


@dataclass(frozen=True)
class SkewTableau:
    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.shape.size():
            raise ValueError(f"{len(entries)} entries for a shape with {self.shape.size()} boxes")
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be exactly 1..{len(entries)}: {entries}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> "SkewTableau":
        """Build from the entries of each row (inner boxes omitted)."""
        inner = Partition(inner)
        outer = Partition(inner.part(i + 1) + len(r) for i, r in enumerate(rows))
        return cls(SkewShape(outer, inner), tuple(x for r in rows for x in r))

    @classmethod
    def from_mapping(cls, shape: SkewShape, mapping: dict) -> "SkewTableau":
        return cls(shape, tuple(mapping[b] for b in shape.boxes))

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.entries[k] for k in r) for r in self.shape.row_indices)

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.entries[k] for k in c) for c in self.shape.col_indices)

    @cached_property
    def position(self) -> dict[int, Box]:
        return {x: b for x, b in zip(self.entries, self.shape.boxes)}

    def __getitem__(self, box) -> int:
        return self.entries[self.shape.box_index[Box(*box)]]

    def __str__(self) -> str:
        return format_tableau(self)

    def __repr__(self) -> str:
        return f"SkewTableau({str(self)!r})"


class SignedTableau(NamedTuple):
    tableau: SkewTableau
    sign: int


def format_tableau(t: SkewTableau) -> str:
    if not t.shape.nrows:
        return "-"
    out = []
    for i, row in enumerate(t.rows, 1):
        out.append(",".join(["."] * t.shape.inner.part(i) + [str(x) for x in row]))
    return "/".join(out)


def parse_tableau(text: str, shape: SkewShape | None = None) -> SkewTableau:
    """Parse the text form; the shape is read off the dots and row lengths."""
    text = text.strip()
    if text == "-":
        rows_tok: list[list[str]] = []
    else:
        rows_tok = [r.split(",") for r in text.split("/")]
    inner, rows = [], []
    pos = 0
    for rtoks in rows_tok:
        dots, vals = 0, []
        for tok in rtoks:
            s = tok.strip()
            if s == ".":
                if vals:
                    raise ParseError("'.' after an entry in a row", s, pos)
                dots += 1
            elif re.fullmatch(r"\d+", s):
                vals.append(int(s))
            else:
                raise ParseError("bad tableau entry", s, pos)
            pos += len(tok) + 1
        inner.append(dots)
        rows.append(vals)
    try:
        t = SkewTableau.from_rows(rows, Partition(inner))
    except ValueError as exc:
        raise ParseError(str(exc), text) from None
    if shape is not None and t.shape != shape:
        raise ParseError(f"tableau has shape {t.shape}, expected {shape}", text)
    return t


# -- standardness -----------------------------------------------------------------


def is_row_standard(t: SkewTableau) -> bool:
    return all(all(a < b for a, b in zip(r, r[1:])) for r in t.rows)


def is_column_standard(t: SkewTableau) -> bool:
    return all(all(a < b for a, b in zip(c, c[1:])) for c in t.columns)


def is_standard(t: SkewTableau) -> bool:
    return is_row_standard(t) and is_column_standard(t)


def apply(t: SkewTableau, s: Permutation) -> SkewTableau:
    """The right action t*s: every entry x becomes s(x)."""
    if s.n != t.n:
        raise ValueError(f"permutation of degree {s.n} applied to a tableau with {t.n} entries")
    im = s.images
    return SkewTableau(t.shape, tuple(im[x - 1] for x in t.entries))


def _sort_sign(values: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(values)) for j in range(i + 1, len(values)) if values[i] > values[j])
    return -1 if inversions % 2 else 1


def sort_columns(shape: SkewShape, entries: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Sort each column of a flat entry tuple increasingly; return (entries, sign).

    The sign is the product over columns of the signs of the sorting
    permutations. This is the kernel of ``column_straighten`` and of the
    straightening engine.
    """
    out = list(entries)
    sgn = 1
    for col in shape.col_indices:
        if len(col) < 2:
            continue
        vals = [entries[k] for k in col]
        if _sort_sign(vals) < 0:
            sgn = -sgn
        vals.sort()
        for k, v in zip(col, vals):
            out[k] = v
    return tuple(out), sgn


def column_straighten(t: SkewTableau) -> SignedTableau:
    entries, sgn = sort_columns(t.shape, t.entries)
    return SignedTableau(SkewTableau(t.shape, entries), sgn)


def row_straighten(t: SkewTableau) -> SkewTableau:
    out = list(t.entries)
    for row in t.shape.row_indices:
        for k, v in zip(row, sorted(t.entries[k] for k in row)):
            out[k] = v
    return SkewTableau(t.shape, tuple(out))


# -- shapes of initial segments and orders ---------------------------------------


def m_shape(t: SkewTableau, m: int) -> Composition:
    """Per column (1..ncols), the number of entries not exceeding m."""
    return Composition(sum(1 for x in c if x <= m) for c in t.columns)


def sh_leq(t: SkewTableau, y: int) -> Composition:
    """Per row (1..nrows), the number of entries not exceeding y."""
    if not 0 <= y <= t.n:
        raise ValueError(f"y must lie in 0..{t.n}")
    return Composition(sum(1 for x in r if x <= y) for r in t.rows)


def dominates_tableau(s: SkewTableau, t: SkewTableau) -> bool:
    """s dominates t: sh_leq(s, y) dominates sh_leq(t, y) for every y."""
    if s.shape != t.shape:
        raise ValueError(f"shape mismatch: {s.shape} vs {t.shape}")
    nrows = s.shape.nrows
    srow = [0] * (s.n + 1)
    trow = [0] * (t.n + 1)
    for x, b in s.position.items():
        srow[x] = b.row
    for x, b in t.position.items():
        trow[x] = b.row
    scount = [0] * (nrows + 1)
    tcount = [0] * (nrows + 1)
    for y in range(1, s.n + 1):
        scount[srow[y]] += 1
        tcount[trow[y]] += 1
        if not _dominates_counts(scount, tcount):
            return False
    return True


def _dominates_counts(d: list[int], g: list[int]) -> bool:
    # d, g indexed from 1; equal totals by construction
    ld = max((i for i in range(1, len(d)) if d[i]), default=0)
    lg = max((i for i in range(1, len(g)) if g[i]), default=0)
    if ld > lg:
        return False
    sd = sg = 0
    for i in range(1, ld + 1):
        sd += d[i]
        sg += g[i]
        if sd < sg:
            return False
    return True


def column_order_key(t: SkewTableau) -> tuple[int, ...]:
    """Columns of n, n-1, ..., 1; lexicographic comparison realizes the '>' order."""
    cols = [0] * (t.n + 1)
    for x, b in zip(t.entries, t.shape.boxes):
        cols[x] = b.col
    return tuple(reversed(cols[1:]))


def column_order_greater(u: SkewTableau, t: SkewTableau) -> bool:
    """u > t: the greatest entry lying in different columns is further right in u."""
    if u.shape != t.shape:
        raise ValueError(f"shape mismatch: {u.shape} vs {t.shape}")
    return column_order_key(u) > column_order_key(t)


def plus_shift(t: SkewTableau) -> SkewTableau:
    """Replace each x by x+1, and n by 1."""
    n = t.n
    return SkewTableau(t.shape, tuple(x + 1 if x < n else 1 for x in t.entries))


def canonical_strip_tableau(s: SkewShape) -> SkewTableau:
    """The standard tableau of a border strip with 1..z on its columnar boxes.

    Columnar boxes (those with a box directly below) receive 1..z from the
    top row down; the bottom box of each column then receives z+1..n from
    left to right. Empty rows and columns are simply skipped.
    """
    if not is_border_strip(s):
        raise ValueError(f"{s} is not a border strip")
    columnar = sorted((b for b in s.boxes if (b.row + 1, b.col) in s), key=lambda b: b.row)
    rest = sorted((b for b in s.boxes if (b.row + 1, b.col) not in s), key=lambda b: b.col)
    mapping = {b: k for k, b in enumerate(columnar + rest, 1)}
    return SkewTableau.from_mapping(s, mapping)


# -- enumeration --------------------------------------------------------------------


def column_reading_word(t: SkewTableau) -> tuple[int, ...]:
    return tuple(x for c in t.columns for x in c)


def standard_tableaux(s: SkewShape) -> list[SkewTableau]:
    """All standard tableaux of shape s, sorted by column reading word.

    Built by placing 1, 2, ..., n in turn into any box whose left and upper
    neighbours (inside s) are already filled.
    """
    boxes = s.boxes
    index = s.box_index
    n = len(boxes)
    preds = []
    for b in boxes:
        p = [index[q] for q in (Box(b.row, b.col - 1), Box(b.row - 1, b.col)) if q in index]
        preds.append(p)
    filling = [0] * n
    found: list[tuple[int, ...]] = []

    def place(k: int):
        if k > n:
            found.append(tuple(filling))
            return
        for pos in range(n):
            if filling[pos] == 0 and all(filling[q] for q in preds[pos]):
                filling[pos] = k
                place(k + 1)
                filling[pos] = 0

    place(1)
    out = [SkewTableau(s, e) for e in found]
    out.sort(key=column_reading_word)
    return out


def column_standard_tableaux(s: SkewShape) -> Iterator[SkewTableau]:
    """All column-standard tableaux of shape s (set partitions into the columns)."""
    cols = [c for c in s.col_indices if c]
    n = s.size()

    def rec(ci: int, remaining: tuple[int, ...], filling: list[int]):
        if ci == len(cols):
            yield SkewTableau(s, tuple(filling))
            return
        col = cols[ci]
        for chosen in combinations(remaining, len(col)):
            for k, v in zip(col, chosen):
                filling[k] = v
            rest = tuple(x for x in remaining if x not in chosen)
            yield from rec(ci + 1, rest, filling)

    yield from rec(0, tuple(range(1, n + 1)), [0] * n)

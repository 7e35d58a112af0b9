"""Partitions, compositions, skew shapes and permutations.

Everything here is an immutable value. Boxes and entries are 1-based,
rows are numbered top to bottom (English convention).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence


class ParseError(ValueError):
    """Malformed text for a partition, shape, tableau or permutation."""

    def __init__(self, message: str, token: str = "", position: int | None = None):
        self.token = token
        self.position = position
        where = f" at position {position}" if position is not None else ""
        tok = f" (offending token {token!r})" if token else ""
        super().__init__(f"{message}{where}{tok}")


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. Trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {tuple(parts)}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition must be weakly decreasing: {tuple(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"

    def __str__(self) -> str:
        return format_parts(self)

    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)


class Composition(tuple):
    """Tuple of non-negative integers; zeros may appear anywhere."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Composition{tuple(self)!r}"

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        """Index of the last non-zero part; 0 for the zero composition."""
        for i in range(len(self), 0, -1):
            if self[i - 1]:
                return i
        return 0


class Box(NamedTuple):
    row: int
    col: int


def format_parts(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts)) if len(parts) else "-"


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def is_subpartition(mu: Sequence[int], la: Sequence[int]) -> bool:
    mu, la = Partition(mu), Partition(la)
    return len(mu) <= len(la) and all(m <= l for m, l in zip(mu, la))


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram of outer/inner; inner must be a subpartition of outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not is_subpartition(self.inner, self.outer):
            raise ValueError(f"{format_parts(self.inner)} is not a subpartition of {format_parts(self.outer)}")

    def __str__(self) -> str:
        if not self.inner:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"

    @property
    def nrows(self) -> int:
        return len(self.outer)

    @property
    def ncols(self) -> int:
        return self.outer[0] if self.outer else 0

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def row_span(self, i: int) -> tuple[int, int]:
        """(first, last) column of row i; first > last when the row is empty."""
        return self.inner.part(i) + 1, self.outer.part(i)

    @cached_property
    def boxes(self) -> tuple[Box, ...]:
        """All boxes in row-major order."""
        return tuple(
            Box(i, j)
            for i in range(1, self.nrows + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        )

    @cached_property
    def box_index(self) -> dict[Box, int]:
        return {b: k for k, b in enumerate(self.boxes)}

    @cached_property
    def row_indices(self) -> tuple[tuple[int, ...], ...]:
        """For each row 1..nrows, the positions (into boxes) of its boxes."""
        rows: list[list[int]] = [[] for _ in range(self.nrows)]
        for k, b in enumerate(self.boxes):
            rows[b.row - 1].append(k)
        return tuple(map(tuple, rows))

    @cached_property
    def col_indices(self) -> tuple[tuple[int, ...], ...]:
        """For each column 1..ncols, the positions of its boxes, top to bottom."""
        cols: list[list[int]] = [[] for _ in range(self.ncols)]
        for k, b in enumerate(self.boxes):
            cols[b.col - 1].append(k)
        return tuple(map(tuple, cols))

    def __contains__(self, box) -> bool:
        i, j = box
        return 1 <= i <= self.nrows and self.inner.part(i) < j <= self.outer.part(i)

    def is_normalized(self) -> bool:
        return all(self.row_indices) and all(self.col_indices)

    def normalize(self) -> "SkewShape":
        """The same diagram with empty rows and empty columns removed."""
        keep_rows = [i for i in range(1, self.nrows + 1) if self.row_indices[i - 1]]
        used_cols = sorted({b.col for b in self.boxes})
        newcol = {c: k + 1 for k, c in enumerate(used_cols)}
        outer, inner = [], []
        for i in range(1, self.nrows + 1):
            if i not in keep_rows:
                continue
            first, last = self.row_span(i)
            outer.append(newcol[last])
            inner.append(newcol[first] - 1)
        return SkewShape(Partition(outer), Partition(inner))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", "", "()"):
        return Partition()
    parts = []
    pos = 0
    for tok in text.split(","):
        if not re.fullmatch(r"\s*\d+\s*", tok):
            raise ParseError("expected a comma-separated list of positive integers", tok.strip(), pos)
        parts.append(int(tok))
        pos += len(tok) + 1
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


def parse_skew_shape(text: str) -> SkewShape:
    text = text.strip()
    if text.count("/") > 1:
        raise ParseError("a skew shape has at most one '/'", text, text.index("/", text.index("/") + 1))
    outer, _, inner = text.partition("/")
    la = parse_partition(outer)
    mu = parse_partition(inner) if inner.strip() else Partition()
    try:
        return SkewShape(la, mu)
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


# -- predicates on skew shapes ------------------------------------------------


def height(s: SkewShape) -> int:
    nonempty = sum(1 for r in s.row_indices if r)
    if not nonempty:
        raise ValueError("empty skew shape has no height")
    return nonempty - 1


def is_connected(s: SkewShape) -> bool:
    """Edge-connectivity of the box set (the empty shape counts as connected)."""
    boxes = set(s.boxes)
    if not boxes:
        return True
    start = next(iter(boxes))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in boxes and nb not in seen:
                seen.add(nb)
                stack.append(Box(*nb))
    return len(seen) == len(boxes)


def contains_square(s: SkewShape) -> bool:
    """Whether four boxes of s form the diagram of (2,2)."""
    return any(
        (i, j + 1) in s and (i + 1, j) in s and (i + 1, j + 1) in s for i, j in s.boxes
    )


def is_border_strip(s: SkewShape) -> bool:
    return s.size() > 0 and is_connected(s) and not contains_square(s)


def is_vertical_strip(s: SkewShape) -> bool:
    return all(len(r) <= 1 for r in s.row_indices)


def is_horizontal_strip(s: SkewShape) -> bool:
    return all(len(c) <= 1 for c in s.col_indices)


def border_strips(la: Sequence[int], n: int) -> list[tuple[Partition, int]]:
    """All (mu, ht) with la/mu a border strip of size n.

    Uses the rim hook of each box whose hook length is n; mu is listed in
    lexicographically decreasing order.
    """
    if n < 1:
        raise ValueError("border strip size must be positive")
    la = Partition(la)
    lac = conjugate(la)
    out = []
    for i in range(1, len(la) + 1):
        for j in range(1, la[i - 1] + 1):
            bottom = lac[j - 1]
            if la[i - 1] - j + bottom - i + 1 != n:
                continue
            mu = list(la)
            for r in range(i, bottom):
                mu[r - 1] = la[r] - 1
            mu[bottom - 1] = j - 1
            out.append((Partition(mu), bottom - i))
    out.sort(key=lambda pair: tuple(pair[0]), reverse=True)
    return out


# -- dominance and enumeration ------------------------------------------------


def dominates(d: Sequence[int], g: Sequence[int]) -> bool:
    """Dominance order on compositions of equal size."""
    d, g = Composition(d), Composition(g)
    if d.size() != g.size():
        raise ValueError(f"compositions of different sizes: {tuple(d)} vs {tuple(g)}")
    ld = d.length()
    if ld > g.length():
        return False
    sd = sg = 0
    for k in range(ld):
        sd += d[k]
        sg += g[k] if k < len(g) else 0
        if sd < sg:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def subpartitions(la: Sequence[int], size: int | None = None) -> Iterator[Partition]:
    """Every mu contained in la (optionally of a given size), lexicographically decreasing."""
    la = Partition(la)

    def rec(i: int, bound: int, remaining):
        if i == len(la):
            if remaining is None or remaining == 0:
                yield ()
            return
        top = min(la[i], bound)
        for p in range(top, -1, -1):
            if remaining is not None and p > remaining:
                continue
            if p == 0:
                if remaining is None or remaining == 0:
                    yield ()
                continue
            for rest in rec(i + 1, p, None if remaining is None else remaining - p):
                yield (p,) + rest

    for mu in rec(0, la[0] if la else 0, size):
        yield Partition(mu)


def skew_shapes_of(n: int) -> Iterator[SkewShape]:
    """Every normalized skew shape (no empty rows or columns) with n boxes.

    Shapes are built bottom row first: each row is a column interval that
    starts weakly right of, and ends weakly right of, the row below it, with
    no uncovered column in between.
    """
    if n == 0:
        yield SkewShape(Partition(), Partition())
        return

    def rec(remaining: int, a: int, b: int):
        # (a, b): column interval of the row below
        if remaining == 0:
            yield ()
            return
        for r in range(1, remaining + 1):
            for a2 in range(max(a, b - r + 1), b + 2):
                for rest in rec(remaining - r, a2, a2 + r - 1):
                    yield ((a2, a2 + r - 1),) + rest

    for r in range(1, n + 1):
        for upper in rec(n - r, 1, r):
            rows = tuple(reversed(((1, r),) + upper))
            yield SkewShape(Partition(b for _, b in rows), Partition(a - 1 for a, _ in rows))


def centralizer_order(cycle_type: Sequence[int]) -> int:
    z = 1
    for part, mult in Counter(Partition(cycle_type)).items():
        z *= part**mult * factorial(mult)
    return z


# -- permutations ---------------------------------------------------------------


class Permutation:
    """A bijection of {1..n}, acting on the right: x -> x*p.

    ``a * b`` (and ``compose(a, b)``) applies a first, then b.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def cycle(cls, *elements: int, n: int | None = None) -> "Permutation":
        deg = max(elements, default=0) if n is None else n
        images = list(range(1, deg + 1))
        for a, b in zip(elements, elements[1:] + elements[:1]):
            images[a - 1] = b
        return cls(images)

    @classmethod
    def from_cycles(cls, text: str, n: int | None = None) -> "Permutation":
        return from_cycles(text, n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({str(self)!r}, n={self.n})"

    def __str__(self) -> str:
        cycles = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles) or "()"

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return sign(self)

    def cycle_type(self) -> Partition:
        return cycle_type(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    return Permutation(b.images[x - 1] for x in a.images)


def sign(a: Permutation) -> int:
    return -1 if (a.n - len(a.cycles())) % 2 else 1


def cycle_type(a: Permutation) -> Partition:
    return Partition(sorted((len(c) for c in a.cycles()), reverse=True))


_CYCLE_TOKEN = re.compile(r"\s*(\(|\)|\d+|,)")


def from_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation such as ``(1,2)(3,4,5)``; ``()`` is the identity.

    The degree is n if given, else the largest number mentioned.
    """
    cycles: list[list[int]] = []
    current: list[int] | None = None
    pos = 0
    expect_sep = False
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _CYCLE_TOKEN.match(text, pos)
        if not m:
            at = len(text) - len(text[pos:].lstrip())
            raise ParseError("unexpected character in cycle notation", text[at], at)
        tok = m.group(1)
        at = m.start(1)
        if tok == "(":
            if current is not None:
                raise ParseError("nested '('", tok, at)
            current = []
            expect_sep = False
        elif tok == ")":
            if current is None:
                raise ParseError("unmatched ')'", tok, at)
            cycles.append(current)
            current = None
        elif tok == ",":
            if current is None or not expect_sep:
                raise ParseError("misplaced ','", tok, at)
            expect_sep = False
        else:
            if current is None:
                raise ParseError("number outside a cycle", tok, at)
            if expect_sep:
                raise ParseError("missing ',' between numbers", tok, at)
            value = int(tok)
            if value < 1:
                raise ParseError("cycle entries must be positive", tok, at)
            current.append(value)
            expect_sep = True
        pos = m.end()
    if current is not None:
        raise ParseError("unterminated cycle", text[-1:] if text else "", len(text))
    flat = [x for c in cycles for x in c]
    if len(flat) != len(set(flat)):
        dup = next(x for x in flat if flat.count(x) > 1)
        raise ParseError("repeated entry in cycle notation", str(dup))
    deg = max(flat, default=0) if n is None else n
    if flat and max(flat) > deg:
        raise ParseError(f"entry exceeds degree {deg}", str(max(flat)))
    images = list(range(1, deg + 1))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            images[a - 1] = b
    return Permutation(images)


def long_cycle(n: int) -> Permutation:
    """The n-cycle (1,2,...,n), i.e. x -> x+1 mod n."""
    return Permutation([*range(2, n + 1), 1] if n else [])


def class_representative(cycle_type: Sequence[int]) -> Permutation:
    """Cycles on consecutive blocks of integers, parts in decreasing order."""
    ct = Partition(sorted(cycle_type, reverse=True))
    images = []
    start = 1
    for part in ct:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return Permutation(images)

"""Tabloids, polytabloids, Garnir relations and the straightening engine.

Coordinates:

* ``TabloidVector`` is a sparse integer combination of tabloids. A tabloid
  is stored by its *row assignment*: the tuple whose (x-1)-th element is the
  row containing x. Two tableaux give the same tabloid iff their row
  assignments agree, so this key is canonical.
* ``SpechtVector`` is a sparse integer combination of standard polytabloids,
  i.e. coordinates in the standard basis.

Straightening works on column-standard tableaux only. A Garnir relation
rewrites e(u) as a signed sum of e(v) with every v strictly later than u in
the column order (``tableaux.column_order_key``), so processing a worklist in
increasing key order expands each tableau exactly once.
"""

from __future__ import annotations

import heapq
import threading
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Mapping

from . import tableaux as tab
from .core import Box, Permutation, SkewShape
from .tableaux import SkewTableau, column_reading_word, standard_tableaux

CACHE_SIZE = 200_000


@dataclass(frozen=True)
class Tabloid:
    shape: SkewShape
    row_of: tuple[int, ...]

    @property
    def rows(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.shape.nrows)]
        for x, r in enumerate(self.row_of, 1):
            out[r - 1].add(x)
        return tuple(frozenset(r) for r in out)

    def act(self, s: Permutation) -> "Tabloid":
        """{t}s = {ts}: the entry s(x) lands in the row that held x."""
        out = [0] * len(self.row_of)
        for x, r in enumerate(self.row_of, 1):
            out[s(x) - 1] = r
        return Tabloid(self.shape, tuple(out))


def tabloid_of(t: SkewTableau) -> Tabloid:
    return Tabloid(t.shape, _row_assignment(t.shape, t.entries))


def _row_assignment(shape: SkewShape, entries: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(entries)
    for x, b in zip(entries, shape.boxes):
        out[x - 1] = b.row
    return tuple(out)


def _add(terms: dict, key, coeff: int) -> None:
    v = terms.get(key, 0) + coeff
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


@dataclass(frozen=True)
class TabloidVector:
    shape: SkewShape
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    def __getitem__(self, tabloid) -> int:
        key = tabloid.row_of if isinstance(tabloid, Tabloid) else tuple(tabloid)
        return self.terms.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, TabloidVector) and self.shape == other.shape and self.terms == other.terms

    def __add__(self, other: "TabloidVector") -> "TabloidVector":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            _add(terms, k, v)
        return TabloidVector(self.shape, terms)

    def __neg__(self) -> "TabloidVector":
        return TabloidVector(self.shape, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TabloidVector") -> "TabloidVector":
        return self + (-other)

    def scale(self, c: int) -> "TabloidVector":
        return TabloidVector(self.shape, {k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def tabloids(self) -> list[tuple[Tabloid, int]]:
        return [(Tabloid(self.shape, k), v) for k, v in sorted(self.terms.items())]

    def act(self, s: Permutation) -> "TabloidVector":
        """The permutation action on M^{shape}."""
        out: dict = {}
        im = s.images
        for key, v in self.terms.items():
            new = [0] * len(key)
            for x, r in enumerate(key):
                new[im[x] - 1] = r
            out[tuple(new)] = v
        return TabloidVector(self.shape, out)


@lru_cache(maxsize=None)
def _signed_permutations(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((p, tab._sort_sign(p)) for p in permutations(range(k)))


def _polytabloid_terms(shape: SkewShape, entries: tuple[int, ...], coeff: int, out: dict) -> None:
    """Accumulate coeff * e(t) into out (keys are row assignments)."""
    rows = [b.row for b in shape.boxes]
    base = [0] * len(entries)
    columns = []
    for col in shape.col_indices:
        if not col:
            continue
        vals = [entries[k] for k in col]
        col_rows = [rows[k] for k in col]
        if len(col) == 1:
            base[vals[0] - 1] = col_rows[0]
            continue
        columns.append((vals, col_rows))
    choices = [_signed_permutations(len(vals)) for vals, _ in columns]
    for combo in product(*choices):
        assignment = base[:]
        sgn = coeff
        for (vals, col_rows), (perm, ps) in zip(columns, combo):
            for v, p in zip(vals, perm):
                assignment[v - 1] = col_rows[p]
            if ps < 0:
                sgn = -sgn
        _add(out, tuple(assignment), sgn)


def polytabloid(t: SkewTableau) -> TabloidVector:
    """e(t): the signed sum of {t sigma} over the column group of t."""
    out: dict = {}
    _polytabloid_terms(t.shape, t.entries, 1, out)
    return TabloidVector(t.shape, out)


# -- Garnir relations -----------------------------------------------------------------


@dataclass(frozen=True)
class GarnirData:
    X: frozenset[int]
    Y: frozenset[int]
    swaps: tuple[tuple[Permutation, int], ...]


def _garnir_positions(shape: SkewShape, box: Box) -> tuple[list[int], list[int]]:
    i, j = box
    if (i, j) not in shape or (i, j + 1) not in shape:
        raise ValueError(f"boxes ({i},{j}) and ({i},{j + 1}) must both lie in {shape}")
    idx = shape.box_index
    xs = [k for k in shape.col_indices[j - 1] if shape.boxes[k].row >= i]
    ys = [k for k in shape.col_indices[j] if shape.boxes[k].row <= i]
    assert idx[Box(i, j)] == xs[0] and idx[Box(i, j + 1)] == ys[-1]
    return xs, ys


def garnir_data(t: SkewTableau, box) -> GarnirData:
    """X: column j weakly below box; Y: column j+1 weakly above its right neighbour."""
    xs, ys = _garnir_positions(t.shape, Box(*box))
    X = sorted(t.entries[k] for k in xs)
    Y = sorted(t.entries[k] for k in ys)
    swaps = []
    for k in range(1, min(len(X), len(Y)) + 1):
        for xsub in combinations(X, k):
            for ysub in combinations(Y, k):
                images = list(range(1, t.n + 1))
                for x, y in zip(xsub, ysub):
                    images[x - 1], images[y - 1] = y, x
                swaps.append((Permutation(images), -1 if k % 2 else 1))
    return GarnirData(frozenset(X), frozenset(Y), tuple(swaps))


def garnir_expansion(t: SkewTableau, box) -> TabloidVector:
    """e(t) G_{X,Y} in tabloid coordinates; always zero."""
    g = garnir_data(t, box)
    out: dict = {}
    _polytabloid_terms(t.shape, t.entries, 1, out)
    for s, sgn in g.swaps:
        _polytabloid_terms(t.shape, tab.apply(t, s).entries, sgn, out)
    return TabloidVector(t.shape, out)


# -- straightening ----------------------------------------------------------------------


class Straightener:
    """Straightening for one shape, with a bounded LRU cache of results.

    Cached values are keyed by the entries of a column-standard tableau and
    hold its full standard-basis expansion. The cache is guarded by a lock,
    so concurrent callers see the same results as a sequential run.
    """

    def __init__(self, shape: SkewShape, maxsize: int = CACHE_SIZE):
        self.shape = shape
        self.maxsize = maxsize
        self._cache: OrderedDict[tuple[int, ...], dict] = OrderedDict()
        self._lock = threading.Lock()
        boxes = shape.boxes
        idx = shape.box_index
        self._col = [b.col for b in boxes]
        self._right = [idx.get(Box(b.row, b.col + 1)) for b in boxes]
        # for each box with a right neighbour: Garnir X/Y positions
        self._garnir = {}
        for k, b in enumerate(boxes):
            if self._right[k] is not None:
                xs, ys = _garnir_positions(shape, b)
                self._garnir[k] = _swap_patterns(xs, ys)

    def _key(self, entries: tuple[int, ...]) -> tuple[int, ...]:
        cols = [0] * len(entries)
        for x, c in zip(entries, self._col):
            cols[x - 1] = c
        cols.reverse()
        return tuple(cols)

    def _lookup(self, entries):
        with self._lock:
            hit = self._cache.get(entries)
            if hit is not None:
                self._cache.move_to_end(entries)
            return hit

    def _store(self, entries, result) -> None:
        with self._lock:
            self._cache[entries] = result
            self._cache.move_to_end(entries)
            while len(self._cache) > self.maxsize:
                self._cache.popitem(last=False)

    def _pivot(self, entries) -> int | None:
        # row-major least box whose right neighbour holds a smaller entry
        for k, r in enumerate(self._right):
            if r is not None and entries[k] > entries[r]:
                return k
        return None

    def straighten_column_standard(self, start: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        """Expansion of e(start), start column standard, over standard tableaux."""
        cached = self._lookup(start)
        if cached is not None:
            return cached
        sort_columns = tab.sort_columns
        shape = self.shape
        result: dict = {}
        pending = {start: 1}
        heap = [(self._key(start), start)]
        while heap:
            _, u = heapq.heappop(heap)
            coeff = pending.pop(u)
            if not coeff:
                continue
            sub = self._lookup(u) if u is not start else None
            if sub is not None:
                for s, c in sub.items():
                    _add(result, s, coeff * c)
                continue
            k = self._pivot(u)
            if k is None:
                _add(result, u, coeff)
                continue
            # e(u) = -sum_{sigma in C_{X,Y}} sgn(sigma) e(u sigma)
            for pairs, sgn in self._garnir[k]:
                w = list(u)
                for a, b in pairs:
                    w[a], w[b] = w[b], w[a]
                v, eps = sort_columns(shape, tuple(w))
                c = -coeff * sgn * eps
                if v in pending:
                    pending[v] += c
                else:
                    pending[v] = c
                    heapq.heappush(heap, (self._key(v), v))
        self._store(start, result)
        return result

    def straighten_entries(self, entries: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        u, eps = tab.sort_columns(self.shape, entries)
        expansion = self.straighten_column_standard(u)
        if eps == 1:
            return dict(expansion)
        return {s: -c for s, c in expansion.items()}

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()


def _swap_patterns(xs: list[int], ys: list[int]) -> tuple:
    """Position pairs and signs for C_{X,Y}; in a column-standard tableau the
    positions listed top to bottom carry increasing entries, so pairing the
    k-th chosen x with the k-th chosen y pairs entries in increasing order."""
    out = []
    for k in range(1, min(len(xs), len(ys)) + 1):
        for xsub in combinations(xs, k):
            for ysub in combinations(ys, k):
                out.append((tuple(zip(xsub, ysub)), -1 if k % 2 else 1))
    return tuple(out)


_straighteners: dict[SkewShape, Straightener] = {}
_registry_lock = threading.Lock()


def straightener_for(shape: SkewShape) -> Straightener:
    with _registry_lock:
        st = _straighteners.get(shape)
        if st is None:
            st = _straighteners[shape] = Straightener(shape)
        return st


def clear_caches() -> None:
    with _registry_lock:
        _straighteners.clear()
    _basis.cache_clear()


@dataclass(frozen=True)
class SpechtVector:
    """Coordinates in the standard polytabloid basis of the Specht module."""

    shape: SkewShape
    terms: Mapping[SkewTableau, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {t: c for t, c in self.terms.items() if c})

    def __getitem__(self, t: SkewTableau) -> int:
        return self.terms.get(t, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, SpechtVector) and self.shape == other.shape and self.terms == other.terms

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            _add(terms, t, c)
        return SpechtVector(self.shape, terms)

    def scale(self, c: int) -> "SpechtVector":
        return SpechtVector(self.shape, {t: c * v for t, v in self.terms.items()})

    def items(self) -> list[tuple[SkewTableau, int]]:
        """Terms in the enumeration order of the standard basis."""
        return sorted(self.terms.items(), key=lambda tc: column_reading_word(tc[0]))

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "terms": [{"tableau": str(t), "coeff": c} for t, c in self.items()],
        }


def straighten(t: SkewTableau) -> SpechtVector:
    """Write e(t) in the standard basis using column and Garnir relations."""
    st = straightener_for(t.shape)
    expansion = st.straighten_entries(t.entries)
    return SpechtVector(t.shape, {SkewTableau(t.shape, e): c for e, c in expansion.items()})


def expand(v: SpechtVector) -> TabloidVector:
    out: dict = {}
    for t, c in v.terms.items():
        _polytabloid_terms(v.shape, t.entries, c, out)
    return TabloidVector(v.shape, out)


def act(v: SpechtVector, s: Permutation) -> SpechtVector:
    """v * s, using e(t) s = e(t s)."""
    result = SpechtVector(v.shape)
    for t, c in v.terms.items():
        result = result + straighten(tab.apply(t, s)).scale(c)
    return result


@lru_cache(maxsize=256)
def _basis(shape: SkewShape) -> tuple[tuple[tuple[int, ...], ...], dict]:
    basis = tuple(t.entries for t in standard_tableaux(shape))
    return basis, {e: i for i, e in enumerate(basis)}


def standard_basis(shape: SkewShape) -> list[SkewTableau]:
    return [SkewTableau(shape, e) for e in _basis(shape)[0]]


def dimension(shape: SkewShape) -> int:
    return len(_basis(shape)[0])


def _matrix_row(shape: SkewShape, entries: tuple[int, ...], s: Permutation) -> list[int]:
    basis, index = _basis(shape)
    im = s.images
    row = [0] * len(basis)
    for e, c in straightener_for(shape).straighten_entries(tuple(im[x - 1] for x in entries)).items():
        row[index[e]] = c
    return row


def representing_matrix(shape: SkewShape, s: Permutation, workers: int = 1) -> list[list[int]]:
    """Row for basis tableau t holds the standard coordinates of e(t s).

    With this convention M(a) M(b) = M(compose(a, b)).
    """
    if s.n != shape.size():
        raise ValueError(f"permutation of degree {s.n} on a shape with {shape.size()} boxes")
    basis, _ = _basis(shape)
    if workers > 1 and len(basis) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda e: _matrix_row(shape, e, s), basis))
    return [_matrix_row(shape, e, s) for e in basis]


def diagonal(shape: SkewShape, s: Permutation) -> list[int]:
    """Diagonal of the representing matrix (each row is still fully straightened)."""
    if s.n != shape.size():
        raise ValueError(f"permutation of degree {s.n} on a shape with {shape.size()} boxes")
    basis, _ = _basis(shape)
    st = straightener_for(shape)
    im = s.images
    return [st.straighten_entries(tuple(im[x - 1] for x in e)).get(e, 0) for e in basis]


def trace(shape: SkewShape, s: Permutation) -> int:
    return sum(diagonal(shape, s))


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]

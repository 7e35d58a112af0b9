"""Characters of symmetric groups, by border-strip recursion and by trace.

``mn_char`` peels border strips (Murnaghan-Nakayama). ``skew_char_trace``
takes the trace of a representing matrix in the standard basis of a skew
Specht module, and never touches the recursion, so the two engines can be
checked against each other.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import specht
from .core import (
    Partition,
    Permutation,
    SkewShape,
    border_strips,
    centralizer_order,
    class_representative,
    conjugate,
    height,
    is_border_strip,
    is_subpartition,
    partitions_of,
    subpartitions,
)


@lru_cache(maxsize=None)
def _mn(la: Partition, ct: tuple[int, ...]) -> int:
    if not ct:
        return 1
    total = 0
    for mu, ht in border_strips(la, ct[0]):
        total += (-1) ** ht * _mn(mu, ct[1:])
    return total


def mn_char(la: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi^la at a permutation of the given cycle type, largest cycle peeled first."""
    la = Partition(la)
    ct = Partition(sorted(cycle_type, reverse=True))
    if la.size() != ct.size():
        raise ValueError(f"|{la}| = {la.size()} but the cycle type has size {ct.size()}")
    return _mn(la, tuple(ct))


def mn_char_order(la: Sequence[int], cycles: Sequence[int]) -> int:
    """Same recursion, peeling cycles in the given order (for order-independence checks)."""
    la = Partition(la)
    if la.size() != sum(cycles):
        raise ValueError("size mismatch")
    if not cycles:
        return 1
    return sum((-1) ** ht * mn_char_order(mu, cycles[1:]) for mu, ht in border_strips(la, cycles[0]))


def skew_char_ncycle(s: SkewShape) -> int:
    """Closed form at an n-cycle: (-1)^ht for a border strip, else 0."""
    if s.size() == 0:
        raise ValueError("empty skew shape")
    return (-1) ** height(s) if is_border_strip(s) else 0


def skew_char_trace(s: SkewShape, sigma: Permutation) -> int:
    if sigma.n != s.size():
        raise ValueError(f"permutation of degree {sigma.n} on a shape with {s.size()} boxes")
    return specht.trace(s, sigma)


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Mapping[Partition, int | Fraction]

    def __call__(self, cycle_type: Sequence[int]) -> int | Fraction:
        return self.values[Partition(sorted(cycle_type, reverse=True))]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("class functions on different groups")
        return ClassFunction(self.n, {c: v * other.values[c] for c, v in self.values.items()})


def character(la: Sequence[int]) -> ClassFunction:
    la = Partition(la)
    n = la.size()
    return ClassFunction(n, {c: mn_char(la, c) for c in partitions_of(n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {c: 1 for c in partitions_of(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {c: (-1) ** (n - len(c)) for c in partitions_of(n)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise ValueError(f"class functions of S_{f.n} and S_{g.n}")
    return sum(
        (Fraction(f.values[c] * g.values[c], centralizer_order(c)) for c in partitions_of(f.n)),
        Fraction(0),
    )


@lru_cache(maxsize=4096)
def _skew_char(s: SkewShape) -> ClassFunction:
    n = s.size()
    return ClassFunction(n, {c: specht.trace(s, class_representative(c)) for c in partitions_of(n)})


def skew_char(s: SkewShape) -> ClassFunction:
    """chi^{s} by traces at one representative per cycle type."""
    return _skew_char(s.normalize())


def restriction_mismatches(la: Sequence[int], m: int, n: int) -> list[tuple[Partition, Partition, int, int]]:
    """(alpha, beta, lhs, rhs) wherever chi^la(alpha u beta) differs from
    sum_mu chi^mu(alpha) chi^{la/mu}(beta)."""
    la = Partition(la)
    if la.size() != m + n:
        raise ValueError(f"|{la}| = {la.size()} is not {m} + {n}")
    mus = list(subpartitions(la, m))
    skews = {mu: skew_char(SkewShape(la, mu)) for mu in mus}
    bad = []
    for alpha in partitions_of(m):
        for beta in partitions_of(n):
            lhs = mn_char(la, tuple(alpha) + tuple(beta))
            rhs = sum(mn_char(mu, alpha) * skews[mu](beta) for mu in mus)
            if lhs != rhs:
                bad.append((alpha, beta, lhs, rhs))
    return bad


def restriction_check(la: Sequence[int], m: int, n: int) -> bool:
    return not restriction_mismatches(la, m, n)


def _multiplicity(la, mu, psi_of) -> int:
    la, mu = Partition(la), Partition(mu)
    if not is_subpartition(mu, la):
        raise ValueError(f"{mu} is not a subpartition of {la}")
    chi = skew_char(SkewShape(la, mu))
    value = inner_product(chi, psi_of(chi.n))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"multiplicity {value} is not a natural number")
    return int(value)


def pieri_multiplicity(la: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of sgn in the skew character la/mu."""
    return _multiplicity(la, mu, sign_character)


def young_multiplicity(la: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of the trivial character in the skew character la/mu."""
    return _multiplicity(la, mu, trivial_character)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    labels: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def row(self, la: Sequence[int]) -> ClassFunction:
        i = self.labels.index(Partition(la))
        return ClassFunction(self.n, dict(zip(self.classes, self.values[i])))

    def value(self, la, cycle_type) -> int:
        return self.values[self.labels.index(Partition(la))][self.classes.index(Partition(cycle_type))]

    def row_orthogonality_defects(self) -> list[tuple[Partition, Partition, Fraction]]:
        z = [centralizer_order(c) for c in self.classes]
        bad = []
        for i, a in enumerate(self.values):
            for j, b in enumerate(self.values):
                ip = sum((Fraction(x * y, zc) for x, y, zc in zip(a, b, z)), Fraction(0))
                if ip != (i == j):
                    bad.append((self.labels[i], self.labels[j], ip))
        return bad

    def column_orthogonality_defects(self) -> list[tuple[Partition, Partition, int]]:
        bad = []
        cols = list(zip(*self.values))
        for i, a in enumerate(cols):
            for j, b in enumerate(cols):
                s = sum(x * y for x, y in zip(a, b))
                want = centralizer_order(self.classes[i]) if i == j else 0
                if s != want:
                    bad.append((self.classes[i], self.classes[j], s))
        return bad

    def is_orthogonal(self) -> bool:
        return not self.row_orthogonality_defects() and not self.column_orthogonality_defects()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": [str(p) for p in self.labels],
            "classes": [str(c) for c in self.classes],
            "values": [list(r) for r in self.values],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharacterTable":
        from .core import parse_partition

        return cls(
            int(data["n"]),
            tuple(parse_partition(s) for s in data["labels"]),
            tuple(parse_partition(s) for s in data["classes"]),
            tuple(tuple(int(v) for v in r) for r in data["values"]),
        )


def table_labels(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...]]:
    """Row labels in reverse lexicographic order; classes from 1^n up to (n)."""
    labels = tuple(partitions_of(n))
    return labels, tuple(reversed(labels))


def char_table(n: int, method: str = "mn", workers: int = 1) -> CharacterTable:
    """Full character table of S_n by ``mn`` recursion or ``trace``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    labels, classes = table_labels(n)
    if method == "mn":
        def row(la):
            return tuple(mn_char(la, c) for c in classes)
    elif method == "trace":
        reps = [class_representative(c) for c in classes]

        def row(la):
            shape = SkewShape(la)
            return tuple(specht.trace(shape, r) for r in reps)
    else:
        raise ValueError(f"unknown method {method!r}")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = tuple(pool.map(row, labels))
    else:
        values = tuple(row(la) for la in labels)
    return CharacterTable(n, labels, classes, values)


def hook(n: int, legs: int) -> Partition:
    """The hook (n - legs, 1^legs)."""
    return Partition((n - legs,) + (1,) * legs)


def is_hook(la: Sequence[int]) -> bool:
    la = Partition(la)
    return len(la) <= 1 or la[1] <= 1


def conjugate_symmetry_defect(la: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi^{la'}(c) - (-1)^{|la| - len(c)} chi^la(c); zero for all inputs."""
    la = Partition(la)
    ct = Partition(sorted(cycle_type, reverse=True))
    return mn_char(conjugate(la), ct) - (-1) ** (la.size() - len(ct)) * mn_char(la, ct)


def clear_caches() -> None:
    _mn.cache_clear()
    _skew_char.cache_clear()

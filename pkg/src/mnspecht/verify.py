"""Named property suites, each checked exhaustively up to a size budget."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple

from . import characters as ch
from . import specht
from . import tableaux as tab
from .core import (
    SkewShape,
    class_representative,
    conjugate,
    height,
    is_border_strip,
    is_horizontal_strip,
    is_vertical_strip,
    long_cycle,
    partitions_of,
    skew_shapes_of,
    subpartitions,
)


@dataclass(frozen=True)
class Budgets:
    """Default size limit for each suite."""

    straighten_oracle: int = 6
    garnir_zero: int = 6
    dominance_lemma: int = 6
    unique_trace_tableau: int = 7
    skew_ncycle: int = 6
    restriction: int = 7
    pieri_young: int = 7
    hook_orthogonality: int = 10
    mn_vs_trace: int = 6

    def for_suite(self, name: str) -> int:
        return getattr(self, name.replace("-", "_"))


class Failure(NamedTuple):
    input: str
    expected: str
    actual: str


@dataclass
class SuiteReport:
    suite: str
    budget: int
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        d = asdict(self)
        d["failures"] = [f._asdict() for f in self.failures]
        d["passed"] = self.passed
        return d

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite} budget={self.budget} cases={self.cases_run} failures={len(self.failures)}"]
        for f in self.failures:
            lines.append(f"  {f.input}: expected {f.expected}, got {f.actual}")
        return "\n".join(lines)


class Case(NamedTuple):
    input: str
    check: Callable[[], tuple[object, object] | None]


def _cs_tableaux(budget: int) -> Iterator[tab.SkewTableau]:
    for n in range(1, budget + 1):
        for s in skew_shapes_of(n):
            yield from tab.column_standard_tableaux(s)


def _case_oracle(t):
    lhs = specht.expand(specht.straighten(t))
    rhs = specht.polytabloid(t)
    if lhs != rhs:
        return "expand(straighten(t)) == polytabloid(t)", f"{len((lhs - rhs).terms)} differing tabloids"
    return None


def suite_straighten_oracle(budget: int) -> Iterator[Case]:
    for t in _cs_tableaux(budget):
        yield Case(str(t), lambda t=t: _case_oracle(t))


def _case_garnir(t):
    bad = []
    for b in t.shape.boxes:
        if (b.row, b.col + 1) in t.shape:
            g = specht.garnir_expansion(t, b)
            if not g.is_zero():
                bad.append(f"({b.row},{b.col})")
    return ("0", "nonzero at " + " ".join(bad)) if bad else None


def suite_garnir_zero(budget: int) -> Iterator[Case]:
    for t in _cs_tableaux(budget):
        yield Case(str(t), lambda t=t: _case_garnir(t))


def _case_dominance(t):
    top = tab.row_straighten(t)
    if not tab.is_standard(top):
        return "row straightening standard", f"{top} not standard"
    v = specht.straighten(t)
    if v[top] != 1:
        return f"coefficient +1 on {top}", str(v[top])
    for s in v.terms:
        if s != top and not tab.dominates_tableau(top, s):
            return f"{s} dominated by {top}", "not dominated"
    return None


def suite_dominance_lemma(budget: int) -> Iterator[Case]:
    for t in _cs_tableaux(budget):
        yield Case(str(t), lambda t=t: _case_dominance(t))


def _case_unique_trace(s):
    n = s.size()
    basis = specht.standard_basis(s)
    diag = specht.diagonal(s, long_cycle(n))
    nonzero = [(str(t), d) for t, d in zip(basis, diag) if d]
    want = [(str(tab.canonical_strip_tableau(s)), (-1) ** height(s))]
    if nonzero != want:
        return want, nonzero
    return None


def suite_unique_trace_tableau(budget: int) -> Iterator[Case]:
    for n in range(1, budget + 1):
        for s in skew_shapes_of(n):
            if is_border_strip(s):
                yield Case(str(s), lambda s=s: _case_unique_trace(s))


def _case_skew_ncycle(s):
    want = ch.skew_char_ncycle(s)
    got = ch.skew_char_trace(s, long_cycle(s.size()))
    return (want, got) if want != got else None


def suite_skew_ncycle(budget: int) -> Iterator[Case]:
    for n in range(1, budget + 1):
        for s in skew_shapes_of(n):
            yield Case(str(s), lambda s=s: _case_skew_ncycle(s))


def _case_restriction(la, m, n):
    bad = ch.restriction_mismatches(la, m, n)
    if bad:
        alpha, beta, lhs, rhs = bad[0]
        return f"{lhs} at ({alpha}|{beta})", str(rhs)
    return None


def suite_restriction(budget: int) -> Iterator[Case]:
    for k in range(0, budget + 1):
        for la in partitions_of(k):
            for m in range(0, k + 1):
                yield Case(f"{la} m={m} n={k - m}", lambda la=la, m=m, k=k: _case_restriction(la, m, k - m))


def _case_pieri_young(la, mu):
    s = SkewShape(la, mu)
    want = (int(is_vertical_strip(s)), int(is_horizontal_strip(s)))
    got = (ch.pieri_multiplicity(la, mu), ch.young_multiplicity(la, mu))
    conj = ch.pieri_multiplicity(conjugate(la), conjugate(mu))
    if got != want or conj != got[1]:
        return f"pieri,young,pieri'={want + (want[1],)}", str(got + (conj,))
    return None


def suite_pieri_young(budget: int) -> Iterator[Case]:
    for k in range(0, budget + 1):
        for la in partitions_of(k):
            for mu in subpartitions(la):
                yield Case(f"{SkewShape(la, mu)}", lambda la=la, mu=mu: _case_pieri_young(la, mu))


def _case_hooks(n):
    vals = {la: ch.mn_char(la, (n,)) for la in partitions_of(n)}
    total = sum(v * v for v in vals.values())
    if total != n:
        return f"sum of squares {n}", str(total)
    for la, v in vals.items():
        if ch.is_hook(la):
            legs = len(la) - 1
            if v != (-1) ** legs:
                return f"chi^{la}((n)) = {(-1) ** legs}", str(v)
        elif v:
            return f"chi^{la}((n)) = 0", str(v)
    return None


def suite_hook_orthogonality(budget: int) -> Iterator[Case]:
    for n in range(2, budget + 1):
        yield Case(f"n={n}", lambda n=n: _case_hooks(n))


def _case_mn_vs_trace(la, c):
    want = ch.mn_char(la, c)
    got = ch.skew_char_trace(SkewShape(la), class_representative(c))
    return (want, got) if want != got else None


def suite_mn_vs_trace(budget: int) -> Iterator[Case]:
    for n in range(1, budget + 1):
        for la in partitions_of(n):
            for c in partitions_of(n):
                yield Case(f"{la} at {c}", lambda la=la, c=c: _case_mn_vs_trace(la, c))


SUITES: dict[str, Callable[[int], Iterable[Case]]] = {
    "straighten-oracle": suite_straighten_oracle,
    "garnir-zero": suite_garnir_zero,
    "dominance-lemma": suite_dominance_lemma,
    "unique-trace-tableau": suite_unique_trace_tableau,
    "skew-ncycle": suite_skew_ncycle,
    "restriction": suite_restriction,
    "pieri-young": suite_pieri_young,
    "hook-orthogonality": suite_hook_orthogonality,
    "mn-vs-trace": suite_mn_vs_trace,
}


def run_suite(name: str, budget: int | None = None, workers: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; registered suites: {', '.join(SUITES)}")
    if budget is None:
        budget = Budgets().for_suite(name)
    cases = list(SUITES[name](budget))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda c: c.check(), cases))
    else:
        outcomes = [c.check() for c in cases]
    failures = [
        Failure(c.input, str(out[0]), str(out[1])) for c, out in zip(cases, outcomes) if out is not None
    ]
    failures.sort()
    return SuiteReport(name, budget, len(cases), failures)


def run_suites(names: Iterable[str] | None = None, budget: int | None = None, workers: int = 1) -> list[SuiteReport]:
    return [run_suite(n, budget, workers) for n in (names or SUITES)]


def reports_json(reports: list[SuiteReport]) -> str:
    return json.dumps([r.to_json() for r in reports])

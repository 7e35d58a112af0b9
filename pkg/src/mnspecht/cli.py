"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import characters as ch
from . import specht, verify
from .core import (
    ParseError,
    border_strips,
    class_representative,
    format_parts,
    from_cycles,
    parse_partition,
    parse_skew_shape,
)
from .tableaux import parse_tableau

CACHE_ENV = "MNSPECHT_CACHE_DIR"
CACHE_SCHEMA_VERSION = 1


@dataclass
class CliConfig:
    command: str
    format: str
    cache_dir: Path | None
    threads: int
    args: argparse.Namespace

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CliConfig":
        cache_dir = None
        if not getattr(ns, "no_cache", False):
            raw = ns.cache_dir or os.environ.get(CACHE_ENV)
            cache_dir = Path(raw) if raw else Path.home() / ".cache" / "mnspecht"
        return cls(ns.command, getattr(ns, "format", "text"), cache_dir, max(1, ns.threads), ns)


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    print(json.dumps(obj))


# -- table cache ---------------------------------------------------------------------


def _cache_path(cache_dir: Path, n: int) -> Path:
    return cache_dir / f"table-{n}.json"


def load_cached_table(cache_dir: Path, n: int) -> ch.CharacterTable | None:
    """A cached table if present, of the current schema, and row-orthogonal."""
    path = _cache_path(cache_dir, n)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(data, dict) or data.get("schema_version") != CACHE_SCHEMA_VERSION:
        return None
    try:
        table = ch.CharacterTable.from_json(data)
    except (KeyError, ValueError, TypeError):
        return None
    labels, classes = ch.table_labels(n)
    if table.n != n or table.labels != labels or table.classes != classes:
        return None
    if any(len(r) != len(classes) for r in table.values) or len(table.values) != len(labels):
        return None
    if table.row_orthogonality_defects():
        return None
    return table


def store_table(cache_dir: Path, table: ch.CharacterTable) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = {"schema_version": CACHE_SCHEMA_VERSION, **table.to_json()}
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=".table-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, _cache_path(cache_dir, table.n))
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def get_table(n: int, cfg: CliConfig) -> ch.CharacterTable:
    if cfg.cache_dir is not None:
        cached = load_cached_table(cfg.cache_dir, n)
        if cached is not None:
            return cached
    table = ch.char_table(n, "mn", workers=cfg.threads)
    if cfg.cache_dir is not None:
        try:
            store_table(cfg.cache_dir, table)
        except OSError as exc:
            print(f"warning: could not write table cache: {exc}", file=sys.stderr)
    return table


# -- subcommands ---------------------------------------------------------------------


def cmd_char(cfg: CliConfig) -> int:
    la = parse_partition(cfg.args.partition)
    ct = parse_partition(cfg.args.cycle_type)
    if la.size() != ct.size():
        raise UsageError(f"partition {la} has size {la.size()} but cycle type {ct} has size {ct.size()}")
    value = ch.mn_char(la, ct)
    if cfg.format == "json":
        _emit_json({"partition": str(la), "cycle_type": str(ct), "value": value})
    else:
        print(value)
    return 0


def cmd_skew_char(cfg: CliConfig) -> int:
    shape = parse_skew_shape(cfg.args.shape)
    arg = cfg.args.element.strip()
    n = shape.size()
    if "(" in arg:
        sigma = from_cycles(arg, n)
    else:
        ct = parse_partition(arg)
        if ct.size() != n:
            raise UsageError(f"cycle type {ct} has size {ct.size()} but {shape} has {n} boxes")
        sigma = class_representative(ct)
    value = ch.skew_char_trace(shape, sigma)
    if cfg.format == "json":
        _emit_json({"shape": str(shape), "permutation": str(sigma), "value": value})
    else:
        print(value)
    return 0


def cmd_table(cfg: CliConfig) -> int:
    n = cfg.args.n
    if n < 1:
        raise UsageError("n must be at least 1")
    table = get_table(n, cfg)
    status = 0
    problems: list[str] = []
    if cfg.args.check == "orthogonality":
        problems += [f"rows {a} {b}: {v}" for a, b, v in table.row_orthogonality_defects()]
        problems += [f"columns {a} {b}: {v}" for a, b, v in table.column_orthogonality_defects()]
    elif cfg.args.check == "trace":
        if n > cfg.args.trace_limit:
            raise UsageError(f"trace check limited to n <= {cfg.args.trace_limit} (raise --trace-limit)")
        other = ch.char_table(n, "trace", workers=cfg.threads)
        for i, la in enumerate(table.labels):
            for j, c in enumerate(table.classes):
                if table.values[i][j] != other.values[i][j]:
                    problems.append(f"{la} at {c}: mn {table.values[i][j]} trace {other.values[i][j]}")
    if cfg.format == "json":
        _emit_json(table.to_json())
    else:
        print("\t".join(["label"] + [str(c) for c in table.classes]))
        for la, row in zip(table.labels, table.values):
            print("\t".join([str(la)] + [str(v) for v in row]))
    if problems:
        for p in problems:
            print(f"check failed: {p}", file=sys.stderr)
        status = 1
    return status


def cmd_straighten(cfg: CliConfig) -> int:
    shape = parse_skew_shape(cfg.args.shape)
    t = parse_tableau(cfg.args.tableau, shape)
    v = specht.straighten(t)
    if cfg.format == "json":
        _emit_json(v.to_json())
    else:
        for s, c in v.items():
            print(f"{c} {s}")
    return 0


def cmd_border_strips(cfg: CliConfig) -> int:
    la = parse_partition(cfg.args.partition)
    k = cfg.args.k
    if k < 1:
        raise UsageError("strip size must be at least 1")
    strips = border_strips(la, k)
    if cfg.format == "json":
        _emit_json({"partition": str(la), "size": k, "strips": [{"inner": str(mu), "height": h} for mu, h in strips]})
    else:
        for mu, h in strips:
            print(f"{format_parts(mu)} ht={h}")
    return 0


def cmd_dim(cfg: CliConfig) -> int:
    shape = parse_skew_shape(cfg.args.shape)
    d = specht.dimension(shape)
    if cfg.format == "json":
        _emit_json({"shape": str(shape), "dimension": d})
    else:
        print(d)
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    names = list(cfg.args.suites or []) + list(cfg.args.suite or [])
    if not names:
        names = list(verify.SUITES)
    unknown = [x for x in names if x not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; registered suites: {', '.join(verify.SUITES)}")
    reports = [verify.run_suite(name, cfg.args.budget, workers=cfg.threads) for name in names]
    if cfg.format == "json":
        print(verify.reports_json(reports))
    else:
        for r in reports:
            print(r.to_text())
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "char": cmd_char,
    "skew-char": cmd_skew_char,
    "table": cmd_table,
    "straighten": cmd_straighten,
    "border-strips": cmd_border_strips,
    "dim": cmd_dim,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="cap on worker threads (default 1)")
    common.add_argument("--cache-dir", default=None, help=f"character table cache directory (env {CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="mnspecht", description="Symmetric group characters two ways.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("--format", choices=formats, default=formats[0])
        return p

    p = add("char", "character value by border-strip recursion")
    p.add_argument("partition", help="e.g. 4,4,4")
    p.add_argument("cycle_type", help="e.g. 5,5,2")

    p = add("skew-char", "skew character value by trace in the standard basis")
    p.add_argument("shape", help="e.g. 4,4,4/3,3,1")
    p.add_argument("element", help="cycle type (5) or permutation in cycle notation (1,2,3,4,5)")

    p = add("table", "full character table of S_n", formats=("tsv", "json"))
    p.add_argument("n", type=int)
    p.add_argument("--check", choices=("orthogonality", "trace"))
    p.add_argument("--trace-limit", type=int, default=8, help="largest n for --check trace (default 8)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the table cache")

    p = add("straighten", "standard-basis expansion of a polytabloid")
    p.add_argument("shape", help="e.g. 3,3,2")
    p.add_argument("tableau", help="e.g. 1,2,5/4,3,7/6,8")

    p = add("border-strips", "border strips of a given size")
    p.add_argument("partition")
    p.add_argument("k", type=int)

    p = add("dim", "dimension of a (skew) Specht module")
    p.add_argument("shape")

    p = add("verify", "run property suites")
    p.add_argument("suites", nargs="*", help="suite names (default: all)")
    p.add_argument("--suite", action="append", help="suite name; repeatable")
    p.add_argument("--budget", type=int, default=None, help="size limit overriding each suite's default")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CliConfig.from_namespace(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except (ParseError, UsageError) as exc:
        print(f"mnspecht {cfg.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"mnspecht {cfg.command}: error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())

"""Benchmark harness: mean search times per algorithm and pattern length.

Each cell times `runs` searches, one per freshly extracted pattern, with
pattern preprocessing inside the timed region. Times are reported in
hundredths of a second. The speed-up row compares the best of the new
heap-based algorithms with the best baseline, as a percentage: positive
means slower, negative means faster.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass, field

from .corpus import GOLDEN_GAMMA, MASK64, CorpusSpec, extract_patterns, mix64
from .engine import AlgorithmId, run_algorithm

DEFAULT_LENGTHS = tuple(2 ** i for i in range(1, 9))
DEFAULT_RUNS = 200
DEFAULT_ALGORITHMS = ("wm", "hcam", "hfam", "bhcam", "bhfam")

# Algorithms benchmarked in the literature but not implemented here. They can
# be requested so tables keep their usual rows, but every cell is unavailable.
COMPETITORS = {"gfg": "prefix", "efs": "prefix", "bwm": "suffix", "bam": "suffix", "ebl": "suffix", "ea": "simd"}

GROUPS = ("prefix", "suffix", "simd", "other")
GROUP_OF = {
    "wm": "prefix",
    "hcam": "prefix",
    "hfam": "prefix",
    "bhcam": "suffix",
    "bhfam": "suffix",
    "oracle": "other",
    "auto": "other",
    **COMPETITORS,
}
# Row order inside each group when rendering.
ROW_ORDER = ("wm", "gfg", "efs", "hcam", "hfam", "bwm", "bam", "ebl", "bhcam", "bhfam", "ea", "oracle", "auto")
NEW_ALGORITHMS = frozenset({"hcam", "bhcam", "hfam", "bhfam"})
BASELINES = frozenset({"oracle", "wm", *COMPETITORS})

CSV_FIELDS = ("algorithm", "m", "mean_cs", "stddev_cs", "inspections", "candidates")


@dataclass(frozen=True)
class BenchConfig:
    corpus: CorpusSpec
    lengths: tuple[int, ...] = DEFAULT_LENGTHS
    runs: int = DEFAULT_RUNS
    algorithms: tuple[str, ...] = DEFAULT_ALGORITHMS
    seed: int = 0
    counters: bool = True

    def __post_init__(self) -> None:
        if not self.lengths or any(m < 1 for m in self.lengths):
            raise ValueError("lengths must be a nonempty list of positive integers")
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        for name in self.algorithms:
            if name not in COMPETITORS:
                AlgorithmId.parse(name)


@dataclass
class BenchCell:
    algorithm: str
    m: int
    available: bool = True
    mean_cs: float | None = None
    stddev_cs: float | None = None
    inspections: float | None = None
    candidates: float | None = None
    occurrences: int | None = None

    def as_record(self) -> dict:
        return {f: getattr(self, f) for f in CSV_FIELDS}


@dataclass
class BenchTable:
    corpus: str
    corpus_length: int
    runs: int
    seed: int
    algorithms: tuple[str, ...]
    lengths: tuple[int, ...]
    cells: dict[tuple[str, int], BenchCell] = field(default_factory=dict)
    speedup_row: dict[int, float | None] = field(default_factory=dict)

    def cell(self, algorithm: str, m: int) -> BenchCell:
        return self.cells[(algorithm, m)]

    def group_best(self, group: str, m: int) -> str | None:
        timed = [
            (c.mean_cs, a)
            for a in self.algorithms
            if GROUP_OF[a] == group and (c := self.cells[(a, m)]).available
        ]
        return min(timed)[1] if timed else None

    def overall_best(self, m: int) -> str | None:
        timed = [(c.mean_cs, a) for a in self.algorithms if (c := self.cells[(a, m)]).available]
        return min(timed)[1] if timed else None


def pattern_seed(seed: int, m: int) -> int:
    """Seed for the patterns of length `m`; shared by every algorithm."""
    return mix64((seed + m * GOLDEN_GAMMA) & MASK64)


def speedup(new_cs: float, base_cs: float) -> float:
    return 100.0 * (new_cs - base_cs) / base_cs


def _speedup_for(table: BenchTable, m: int) -> float | None:
    def best(names):
        times = [
            table.cells[(a, m)].mean_cs
            for a in table.algorithms
            if a in names and table.cells[(a, m)].available
        ]
        return min(times) if times else None

    new, base = best(NEW_ALGORITHMS), best(BASELINES)
    if new is None or base is None or base <= 0:
        return None
    return speedup(new, base)


def run_benchmark(config: BenchConfig, text: bytes | None = None) -> BenchTable:
    """Run every (algorithm, length) cell sequentially on one thread.

    `text` may be passed to skip materialising the corpus again.
    """
    if text is None:
        text = config.corpus.materialize()
    table = BenchTable(
        corpus=config.corpus.describe(),
        corpus_length=len(text),
        runs=config.runs,
        seed=config.seed,
        algorithms=tuple(config.algorithms),
        lengths=tuple(config.lengths),
    )
    clock = time.perf_counter
    for m in config.lengths:
        patterns = None
        if m <= len(text):
            patterns = extract_patterns(text, m, config.runs, pattern_seed(config.seed, m))
        for name in config.algorithms:
            if patterns is None or name in COMPETITORS:
                table.cells[(name, m)] = BenchCell(name, m, available=False)
                continue
            algorithm = AlgorithmId.parse(name)
            times = []
            found = 0
            for x in patterns:
                start = clock()
                report = run_algorithm(algorithm, x, text)
                times.append((clock() - start) * 100.0)
                found += len(report)
            cell = BenchCell(
                name,
                m,
                mean_cs=statistics.fmean(times),
                stddev_cs=statistics.stdev(times) if len(times) > 1 else 0.0,
                occurrences=found,
            )
            if config.counters:
                reports = [run_algorithm(algorithm, x, text, instrument=True) for x in patterns]
                cell.inspections = statistics.fmean(r.inspections for r in reports)
                cell.candidates = statistics.fmean(r.candidates for r in reports)
            table.cells[(name, m)] = cell
    table.speedup_row = {m: _speedup_for(table, m) for m in config.lengths}
    return table


# -- rendering -----------------------------------------------------------------


def _label(name: str) -> str:
    return name.upper() + (" *" if name in NEW_ALGORITHMS else "")


def render_text(table: BenchTable) -> str:
    width = 10
    label_width = max(12, *(len(_label(a)) + 1 for a in table.algorithms))
    lines = [
        f"corpus: {table.corpus} ({table.corpus_length} bytes), "
        f"runs: {table.runs}, seed: {table.seed}, unit: hundredths of a second",
    ]
    header = "m".ljust(label_width) + "".join(str(m).rjust(width) for m in table.lengths)
    rule = "-" * len(header)
    lines += [header, rule]
    for group in GROUPS:
        members = sorted((a for a in table.algorithms if GROUP_OF[a] == group), key=ROW_ORDER.index)
        if not members:
            continue
        for name in members:
            row = _label(name).ljust(label_width)
            for m in table.lengths:
                c = table.cells[(name, m)]
                if not c.available:
                    text = "-"
                else:
                    text = f"{c.mean_cs:.2f}"
                    if table.group_best(group, m) == name:
                        text = f"[{text}]"
                    if table.overall_best(m) == name:
                        text = "!" + text
                row += text.rjust(width)
            lines.append(row)
        lines.append(rule)
    row = "Speed-Up".ljust(label_width)
    for m in table.lengths:
        v = table.speedup_row.get(m)
        row += ("-" if v is None else f"{v:+.2f}%").rjust(width)
    lines.append(row)
    lines.append("* new heap-based algorithm; [x] best in group; ! best overall; "
                 "speed-up > 0 means slower than the best baseline")
    return "\n".join(lines) + "\n"


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return v


def render_csv(table: BenchTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for name in table.algorithms:
        for m in table.lengths:
            record = table.cells[(name, m)].as_record()
            writer.writerow([_csv_value(record[f]) for f in CSV_FIELDS])
    return buf.getvalue()


def render_jsonl(table: BenchTable) -> str:
    rows = []
    for name in table.algorithms:
        for m in table.lengths:
            record = table.cells[(name, m)].as_record()
            rows.append(json.dumps(record, allow_nan=False))
    return "\n".join(rows) + "\n"


RENDERERS = {"text": render_text, "csv": render_csv, "jsonl": render_jsonl, "json-lines": render_jsonl}


def render_table(table: BenchTable, fmt: str = "text") -> str:
    try:
        renderer = RENDERERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r} (expected text, csv or jsonl)") from None
    return renderer(table)


def parse_csv(rendered: str) -> list[dict]:
    """Read `render_csv` output back into typed records."""
    out = []
    for row in csv.DictReader(io.StringIO(rendered)):
        rec = {"algorithm": row["algorithm"], "m": int(row["m"])}
        for f in CSV_FIELDS[2:]:
            rec[f] = float(row[f]) if row[f] != "" else None
        out.append(rec)
    return out


def trend_violations(table: BenchTable, faster: str = "hcam", slower: str = "wm") -> list[tuple[int, float, float]]:
    """Lengths where `faster` was measured slower than `slower`, with both means."""
    bad = []
    for m in table.lengths:
        a, b = table.cells.get((faster, m)), table.cells.get((slower, m))
        if a and b and a.available and b.available and a.mean_cs > b.mean_cs:
            bad.append((m, a.mean_cs, b.mean_cs))
    return bad

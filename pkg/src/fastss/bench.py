"""Benchmark harness: dictionary files, perturbed query workloads, timed
runs and CSV reports.

Every benchmark run doubles as a correctness check: each query is also
answered by an exhaustive scan and any disagreement aborts the run with
the offending configuration spelled out.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .baselines import BKTree, NaiveScanner
from .index import Dictionary, FastSSIndex, IndexParams

__all__ = [
    "QueryCase",
    "Workload",
    "BenchReport",
    "LosslessnessError",
    "CSV_HEADER",
    "load_dictionary",
    "bundled_words_path",
    "perturb",
    "run_benchmark",
    "compare_baselines",
    "write_csv",
]

LOWERCASE = "abcdefghijklmnopqrstuvwxyz"

CSV_HEADER = ("dataset", "n", "d", "m", "stored_pairs", "distinct_keys",
              "build_ms", "mean_query_us", "mean_cand", "mean_matches",
              "method", "seed")


class QueryCase(NamedTuple):
    query: str
    source_id: int
    edits: int


@dataclass(frozen=True)
class Workload:
    """Reproducible query set: perturbed dictionary entries plus the seed
    that generated them."""

    seed: int
    max_errors: int
    cases: tuple[QueryCase, ...]

    def __len__(self) -> int:
        return len(self.cases)


@dataclass(frozen=True)
class BenchReport:
    """Aggregates for one (dataset, method, d, m) configuration."""

    dataset: str
    n: int
    d: int
    m: int | None
    stored_pairs: int | None
    distinct_keys: int | None
    build_ms: float
    mean_query_us: float
    median_query_us: float
    mean_cand: float
    mean_matches: float
    method: str
    seed: int

    def csv_row(self) -> list[str]:
        if self.method == "fastss":
            m_field = "inf" if self.m is None else str(self.m)
        else:
            m_field = ""
        pairs = "" if self.stored_pairs is None else str(self.stored_pairs)
        keys = "" if self.distinct_keys is None else str(self.distinct_keys)
        return [
            self.dataset, str(self.n), str(self.d), m_field, pairs, keys,
            f"{self.build_ms:.3f}", f"{self.mean_query_us:.3f}",
            f"{self.mean_cand:.6f}", f"{self.mean_matches:.6f}",
            self.method, str(self.seed),
        ]


class LosslessnessError(RuntimeError):
    """A filtered method returned a different match set than the
    exhaustive scan."""


def load_dictionary(path: str | Path) -> Dictionary:
    """Read a one-word-per-line UTF-8 file. Trailing newlines (and a
    carriage return before them) are stripped, blank lines are skipped and
    duplicate lines are dropped keeping the first occurrence."""
    data = Path(path).read_bytes()
    words = []
    seen = set()
    for lineno, raw in enumerate(data.split(b"\n"), 1):
        raw = raw.rstrip(b"\r")
        try:
            word = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValueError(f"{path}:{lineno}: invalid UTF-8 ({exc.reason})") from exc
        if word and word not in seen:
            seen.add(word)
            words.append(word)
    return Dictionary(words)


def bundled_words_path() -> Path:
    """Path of the word list shipped with the package (20k English words
    harvested from documentation prose)."""
    return Path(__file__).parent / "data" / "words.txt"


def perturb(dictionary: Dictionary, count: int, max_errors: int, seed: int) -> Workload:
    """Draw ``count`` dictionary entries uniformly with replacement and
    distort each with k ~ uniform{0..max_errors} random edits: insert,
    delete or substitute at a uniform position, inserted and substituted
    characters uniform over a-z. Same seed, same workload."""
    if len(dictionary) == 0:
        raise ValueError("cannot perturb an empty dictionary")
    if max_errors < 0:
        raise ValueError("max_errors must be non-negative")
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        source_id = rng.randrange(len(dictionary))
        word = dictionary[source_id]
        edits = rng.randint(0, max_errors)
        for _ in range(edits):
            op = rng.choice("ids") if word else "i"
            if op == "i":
                pos = rng.randint(0, len(word))
                word = word[:pos] + rng.choice(LOWERCASE) + word[pos:]
            elif op == "d":
                pos = rng.randrange(len(word))
                word = word[:pos] + word[pos + 1:]
            else:
                pos = rng.randrange(len(word))
                word = word[:pos] + rng.choice(LOWERCASE) + word[pos + 1:]
        cases.append(QueryCase(word, source_id, edits))
    return Workload(seed, max_errors, tuple(cases))


def run_benchmark(dictionary: Dictionary, params: IndexParams, workload: Workload,
                  dataset: str = "", scanner: NaiveScanner | None = None) -> BenchReport:
    """Build an index, answer the whole workload, and cross-check every
    result against the exhaustive scan. Raises LosslessnessError on the
    first disagreement."""
    start = time.perf_counter()
    index = FastSSIndex.build(dictionary, params)
    build_ms = (time.perf_counter() - start) * 1e3

    if scanner is None:
        scanner = NaiveScanner(dictionary)
    d = params.max_distance
    times_us = []
    candidate_total = 0
    match_total = 0
    for case in workload.cases:
        start = time.perf_counter()
        matches = index.search(case.query)
        times_us.append((time.perf_counter() - start) * 1e6)
        candidate_total += len(index.candidates(case.query))
        match_total += len(matches)
        expected = scanner.scan(case.query, d)
        if matches != expected:
            raise LosslessnessError(
                f"match set differs from exhaustive scan for query "
                f"{case.query!r} (d={d}, m={params.split_threshold}, "
                f"seed={workload.seed})")
    return _report(dataset, dictionary, d, params.split_threshold,
                   index.stats.stored_pairs, index.stats.distinct_keys,
                   build_ms, times_us, candidate_total, match_total,
                   "fastss", workload)


def compare_baselines(dictionary: Dictionary, max_distance: int, workload: Workload,
                      dataset: str = "") -> list[BenchReport]:
    """One row per method over a shared workload: exhaustive scan, BK-tree,
    unsplit index, and an index split at the rounded mean word length. All
    four must agree on every query."""
    d = max_distance
    reports = []

    start = time.perf_counter()
    scanner = NaiveScanner(dictionary)
    scanner_build_ms = (time.perf_counter() - start) * 1e3
    times_us = []
    reference = []
    match_total = 0
    for case in workload.cases:
        start = time.perf_counter()
        matches = scanner.scan(case.query, d)
        times_us.append((time.perf_counter() - start) * 1e6)
        reference.append(matches)
        match_total += len(matches)
    reports.append(_report(dataset, dictionary, d, None, None, None,
                           scanner_build_ms, times_us,
                           len(dictionary) * len(workload), match_total,
                           "naive", workload))

    start = time.perf_counter()
    tree = BKTree.build(dictionary)
    tree_build_ms = (time.perf_counter() - start) * 1e3
    times_us = []
    computation_total = 0
    match_total = 0
    for case, expected in zip(workload.cases, reference):
        start = time.perf_counter()
        matches, computations = tree.query(case.query, d)
        times_us.append((time.perf_counter() - start) * 1e6)
        computation_total += computations
        match_total += len(matches)
        if matches != expected:
            raise LosslessnessError(
                f"bktree disagrees with exhaustive scan for query "
                f"{case.query!r} (d={d}, seed={workload.seed})")
    reports.append(_report(dataset, dictionary, d, None, None, None,
                           tree_build_ms, times_us, computation_total,
                           match_total, "bktree", workload))

    mean_length = round(dictionary.mean_length()) if len(dictionary) else 1
    split_at = max(mean_length, d + 1)
    for m in (None, split_at):
        reports.append(run_benchmark(dictionary, IndexParams(d, m), workload,
                                     dataset=dataset, scanner=scanner))
    return reports


def _report(dataset, dictionary, d, m, stored_pairs, distinct_keys, build_ms,
            times_us, candidate_total, match_total, method, workload) -> BenchReport:
    count = max(len(workload), 1)
    return BenchReport(
        dataset=dataset,
        n=len(dictionary),
        d=d,
        m=m,
        stored_pairs=stored_pairs,
        distinct_keys=distinct_keys,
        build_ms=build_ms,
        mean_query_us=sum(times_us) / count if times_us else 0.0,
        median_query_us=statistics.median(times_us) if times_us else 0.0,
        mean_cand=candidate_total / count,
        mean_matches=match_total / count,
        method=method,
        seed=workload.seed,
    )


def write_csv(reports: list[BenchReport], path: str | Path) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_HEADER)
        for report in reports:
            writer.writerow(report.csv_row())

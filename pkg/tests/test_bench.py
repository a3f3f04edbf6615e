import csv
import random

import pytest

from fastss.bench import (
    CSV_HEADER,
    LosslessnessError,
    bundled_words_path,
    compare_baselines,
    load_dictionary,
    perturb,
    run_benchmark,
    write_csv,
)
from fastss.distance import full_edit_distance
from fastss.index import Dictionary, IndexParams
from helpers import random_unique_words


@pytest.fixture
def small_dictionary():
    rng = random.Random(50)
    return Dictionary(random_unique_words(rng, 200, 2, 12))


def test_load_dictionary_dedup_and_order(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("a\nb\na\n\nc\nb\n")
    assert load_dictionary(path).words == ("a", "b", "c")


def test_load_dictionary_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert len(load_dictionary(path)) == 0


def test_load_dictionary_crlf_and_missing_final_newline(tmp_path):
    path = tmp_path / "crlf.txt"
    path.write_bytes(b"one\r\ntwo\r\nthree")
    assert load_dictionary(path).words == ("one", "two", "three")


def test_load_dictionary_invalid_utf8_names_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"good\nalso good\n\xff\xfe broken\nmore\n")
    with pytest.raises(ValueError, match=r"bad\.txt:3"):
        load_dictionary(path)


def test_load_dictionary_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_dictionary(tmp_path / "nope.txt")


def test_bundled_word_list_loads():
    # 20,000 unique non-blank lines, counted independently of the loader.
    path = bundled_words_path()
    raw_lines = [l for l in path.read_text().split("\n") if l]
    assert len(raw_lines) == 20_000
    assert len(set(raw_lines)) == 20_000
    dictionary = load_dictionary(path)
    assert len(dictionary) == 20_000


def test_perturb_zero_errors_is_identity(small_dictionary):
    workload = perturb(small_dictionary, 50, 0, seed=1)
    assert len(workload) == 50
    for case in workload.cases:
        assert case.query == small_dictionary[case.source_id]
        assert case.edits == 0


def test_perturb_deterministic(small_dictionary):
    first = perturb(small_dictionary, 80, 3, seed=99)
    second = perturb(small_dictionary, 80, 3, seed=99)
    assert first == second
    third = perturb(small_dictionary, 80, 3, seed=100)
    assert first != third


def test_perturb_stays_within_distance(small_dictionary):
    workload = perturb(small_dictionary, 300, 3, seed=7)
    for case in workload.cases:
        source = small_dictionary[case.source_id]
        # k edits can cancel out to fewer, never compose to more
        assert full_edit_distance(source, case.query) <= case.edits <= 3


def test_perturb_rejects_empty_dictionary():
    with pytest.raises(ValueError):
        perturb(Dictionary([]), 10, 2, seed=0)


def test_run_benchmark_d0_finds_sources(small_dictionary):
    workload = perturb(small_dictionary, 60, 0, seed=3)
    report = run_benchmark(small_dictionary, IndexParams(0), workload)
    assert report.method == "fastss"
    assert report.n == len(small_dictionary)
    # at d=0 the only possible match is the untouched source word itself
    assert report.mean_matches == 1.0
    assert report.mean_cand >= 1.0
    assert report.seed == 3


def test_run_benchmark_candidates_grow_with_distance(small_dictionary):
    means = []
    for d in (0, 1, 2, 3):
        workload = perturb(small_dictionary, 60, d, seed=4)
        report = run_benchmark(small_dictionary, IndexParams(d), workload)
        means.append(report.mean_cand)
    assert means == sorted(means)
    assert means[-1] > means[0]


def test_run_benchmark_counts_deterministic(small_dictionary):
    workload = perturb(small_dictionary, 40, 2, seed=5)
    params = IndexParams(2, 6)
    a = run_benchmark(small_dictionary, params, workload)
    b = run_benchmark(small_dictionary, params, workload)
    assert (a.mean_cand, a.mean_matches, a.stored_pairs, a.distinct_keys) == \
           (b.mean_cand, b.mean_matches, b.stored_pairs, b.distinct_keys)


def test_compare_baselines_rows_agree(small_dictionary):
    workload = perturb(small_dictionary, 40, 2, seed=6)
    reports = compare_baselines(small_dictionary, 2, workload, dataset="unit")
    assert [r.method for r in reports] == ["naive", "bktree", "fastss", "fastss"]
    assert len(reports) >= 3
    # mutual oracle check already ran inside; verify the aggregates line up
    assert len({r.mean_matches for r in reports}) == 1
    assert reports[0].mean_cand == len(small_dictionary)
    # splitting must store fewer pairs than the unsplit index
    unsplit, split = reports[2], reports[3]
    assert unsplit.m is None and split.m is not None
    assert split.stored_pairs < unsplit.stored_pairs


def test_csv_schema(tmp_path, small_dictionary):
    workload = perturb(small_dictionary, 10, 1, seed=8)
    reports = compare_baselines(small_dictionary, 1, workload, dataset="unit")
    out = tmp_path / "report.csv"
    write_csv(reports, out)
    with open(out, newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == list(CSV_HEADER)
    assert len(rows) == 1 + len(reports)
    header_index = {name: i for i, name in enumerate(rows[0])}
    for row in rows[1:]:
        assert row[header_index["dataset"]] == "unit"
        assert int(row[header_index["n"]]) == len(small_dictionary)
        float(row[header_index["mean_query_us"]])
        float(row[header_index["mean_cand"]])
    fastss_rows = [r for r in rows[1:] if r[header_index["method"]] == "fastss"]
    assert fastss_rows[0][header_index["m"]] == "inf"
    assert fastss_rows[1][header_index["m"]].isdigit()
    naive_row = next(r for r in rows[1:] if r[header_index["method"]] == "naive")
    assert naive_row[header_index["stored_pairs"]] == ""


def test_losslessness_error_reports_context(small_dictionary, monkeypatch):
    # Sabotage the index's verification threshold to force a mismatch.
    from fastss import index as index_module

    workload = perturb(small_dictionary, 10, 2, seed=9)
    original = index_module.FastSSIndex.search

    def broken_search(self, query):
        return original(self, query)[:-1] if original(self, query) else []

    monkeypatch.setattr(index_module.FastSSIndex, "search", broken_search)
    with pytest.raises(LosslessnessError, match=r"d=2.*seed=9"):
        run_benchmark(small_dictionary, IndexParams(2), workload)

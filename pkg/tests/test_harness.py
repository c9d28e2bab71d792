import os
import json

import numpy as np
import pandas as pd
import pytest

from canonical_bases import harness, weyl
from canonical_bases.algebra import canonical
from canonical_bases.suites import (
    get_all_suite_names,
    get_suite_function,
    parameters_up_to,
    run_pbwstring,
    sample,
    weights_up_to,
)
from canonical_bases.utils.cache_utils import TableCache, table_key
from canonical_bases.utils.misc_utils import CapacityError, PreconditionError
from canonical_bases.utils.report_utils import Report, write_report, write_summary_csv


def make_config(tmp_path, rank=2, bound=3, **kwargs):
    return harness.RunConfig(rank=rank, weight_bound=bound, cache_dir=str(tmp_path / "cache"),
                             root_dir=str(tmp_path / "results"), **kwargs)


def test_parse_word_option():
    assert harness.parse_word_option("1,2,1") == (1, 2, 1)
    assert harness.parse_word_option("adapted:rl") == (1, 2, 1)
    assert harness.parse_word_option("all-adapted") == harness.ALL_ADAPTED
    assert harness.parse_word_option(None) is None


def test_run_config_validation(tmp_path):
    with pytest.raises(CapacityError):
        make_config(tmp_path, rank=5, bound=1)
    with pytest.raises(CapacityError):
        make_config(tmp_path, rank=2, bound=9)
    with pytest.raises(PreconditionError):
        make_config(tmp_path, rank=2, bound=-1)
    with pytest.raises(PreconditionError):
        make_config(tmp_path, rank=3, bound=2, word=(1, 2, 1))
    config = make_config(tmp_path, rank=2, bound=2, word=(2, 1, 2))
    assert config.words() == [(2, 1, 2)]
    assert make_config(tmp_path, rank=3, bound=1).words() == [weyl.seed_word(3)]


def test_run_config_from_config(tmp_path):
    config = {"rank": 2, "weight_caps": {"1": 12, "2": 8}, "cache_dir": str(tmp_path), "seed": 5}
    run_config = harness.RunConfig.from_config(config, bound=3, word="all-adapted")
    assert run_config.weight_caps == {1: 12, 2: 8}
    assert run_config.seed == 5
    assert run_config.words() == sorted(weyl.adapted_words(2))
    assert harness.RunConfig.from_config(config).weight_bound == 8
    assert "cache_dir" not in run_config.to_json()


def test_weights_up_to():
    assert weights_up_to(2, 2) == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert len(weights_up_to(1, 3)) == 3


def test_sample_is_seeded():
    items = list(range(50))
    first = sample(items, 5, np.random.default_rng(3))
    assert first == sample(items, 5, np.random.default_rng(3))
    assert first == sorted(first)
    assert sample(items[:3], 5, np.random.default_rng(3)) == items[:3]


def test_table_cache_round_trip(tmp_path):
    cache = TableCache(str(tmp_path / "cache"))
    canonical.clear_memo()
    table = canonical.canonical_basis((1, 2, 1), (2, 1), cache=cache)
    assert cache.stats() == {"hits": 0, "misses": 1, "rejected": 0}
    assert os.path.exists(cache.path_for((1, 2, 1), (2, 1)))
    canonical.clear_memo()
    assert canonical.canonical_basis((1, 2, 1), (2, 1), cache=cache) == table
    assert cache.hits == 1
    assert table_key(2, (1, 2, 1), (2, 1)) != table_key(2, (2, 1, 2), (2, 1))


def test_table_cache_rejects_corruption(tmp_path):
    cache = TableCache(str(tmp_path / "cache"))
    table = canonical.compute_table((1, 2, 1), (1, 1))
    path = cache.store(table)
    with open(path, "r") as f:
        data = json.load(f)
    data["payload"]["canonical"][0][1] = {"2": "1"}
    with open(path, "w") as f:
        json.dump(data, f)
    assert cache.load((1, 2, 1), (1, 1)) is None
    assert cache.rejected == 1
    with open(path, "w") as f:
        f.write("not json")
    assert cache.load((1, 2, 1), (1, 1)) is None
    assert cache.rejected == 2


def test_cmd_basis_reuses_cache(tmp_path):
    config = make_config(tmp_path, rank=1, bound=3)
    report = harness.cmd_basis(config)
    assert report.passed
    assert report.summary()["total"] == 3
    assert [c["dimension"] for c in report.cases] == [1, 1, 1]
    again = harness.cmd_basis(config)
    assert again.runtime["hits"] == 3
    assert again.to_json() == report.to_json()
    assert os.path.exists(os.path.join(config.root_dir, "reports", "basis.json"))


def test_cmd_basis_recovers_corrupted_table(tmp_path):
    config = make_config(tmp_path, rank=2, bound=2)
    harness.cmd_basis(config)
    cache = TableCache(config.cache_dir)
    with open(cache.path_for((1, 2, 1), (1, 1)), "w") as f:
        f.write("{}")
    report = harness.cmd_basis(config)
    assert report.passed
    assert report.runtime["rejected"] == 1
    assert report.runtime["hits"] == 4


def test_cmd_reparam(tmp_path):
    report_path = str(tmp_path / "reparam.json")
    config = make_config(tmp_path, rank=2, bound=2, report_path=report_path)
    report = harness.cmd_reparam(config, (1, 2, 1), (2, 1, 2), (1, 0, 0))
    (case,) = report.cases
    assert case["inputs"]["output"] == [0, 0, 1]
    assert case["inputs"]["algebraic"] == [0, 0, 1]
    assert case["verdict"] is True
    assert os.path.exists(report_path)
    report = harness.cmd_reparam(config, (1, 2, 1), (1, 2, 1), (0, 2, 1))
    assert report.cases[0]["inputs"]["output"] == [0, 2, 1]
    assert report.cases[0]["inputs"]["path"] == []


def test_cmd_reparam_rejects(tmp_path):
    config = make_config(tmp_path, rank=2, bound=2)
    with pytest.raises(PreconditionError):
        harness.cmd_reparam(config, (1, 2, 1), (1, 2, 1, 3, 2, 1), (1, 0, 0))
    with pytest.raises(PreconditionError):
        harness.cmd_reparam(config, (1, 2, 1), (2, 1, 2), (1, -1, 0))


def test_suite_registry():
    for name in get_all_suite_names():
        assert callable(get_suite_function(name))
    assert get_suite_function("pbwstring") is run_pbwstring
    with pytest.raises(PreconditionError):
        get_suite_function("bogus")


@pytest.mark.parametrize("suite", ["pbwstring", "main", "graded"])
def test_cmd_verify_small(tmp_path, suite):
    config = make_config(tmp_path, rank=2, bound=3)
    report = harness.cmd_verify(suite, config)
    assert report.cases
    assert report.passed, report.failures[:3]
    assert os.path.exists(os.path.join(config.root_dir, "reports", "{}.json".format(suite)))
    summary = pd.read_csv(os.path.join(config.root_dir, "summaries", "{}.csv".format(suite)))
    assert "case" in summary.columns


def test_main_suite_records_flag_minors(tmp_path):
    report = harness.cmd_verify("main", make_config(tmp_path, rank=2, bound=2))
    assert len(report.data["flag_minors"]) == 4


def test_analogue_is_deterministic(tmp_path):
    config = make_config(tmp_path, rank=2, bound=2)
    first = harness.cmd_verify("analogue", config)
    second = harness.cmd_verify("analogue", config)
    assert first.passed
    assert first.to_json() == second.to_json()
    assert any(c["case"] == "analogue" for c in first.cases)


def test_report_files(tmp_path):
    report = Report("demo", {"rank": 1})
    report.add_case("ok", True, {"x": 1})
    report.add_case("bad", False, {"x": 2})
    report.add_case("data", None, {"x": 3})
    assert report.summary() == {"total": 3, "passed": 1, "failed": 1, "recorded": 1}
    assert report.failures[0]["witness"] == {"x": 2}
    assert not report.passed
    path = write_report(report, str(tmp_path / "out" / "demo.json"))
    with open(path, "r") as f:
        assert json.load(f)["schema_version"] == 1
    df = pd.read_csv(write_summary_csv(report, str(tmp_path / "summaries")))
    assert sorted(df["case"]) == ["bad", "data", "ok"]


def test_cmd_verify_fan(tmp_path):
    report = harness.cmd_verify("fan", make_config(tmp_path, rank=2, bound=2, sample_size=20))
    assert report.passed, report.failures[:3]
    fans = [c for c in report.cases if c["case"] == "fan"]
    assert [c["result"]["domain_count"] for c in fans] == [2, 2]
    assert report.data["samedomain"]["candidates"] == 378 * 27 + 20


def test_main_suite_multiplies_minors_of_different_words(tmp_path):
    report = harness.cmd_verify("main", make_config(tmp_path, rank=2, bound=3))
    assert report.passed, report.failures[:3]
    sources = {tuple(m["word"]) for m in report.data["flag_minors"]}
    assert sources == {(1, 2, 1), (2, 1, 2)}
    cross = [c for c in report.cases if c["case"] == "cross_word"]
    mixed = [c for c in cross if len({tuple(m["word"]) for m in c["inputs"]["minors"]}) > 1]
    assert mixed
    assert all(c["verdict"] for c in cross)
    assert all(c["product"] == c["expected"] for c in cross)


@pytest.mark.parametrize("suite", ["main", "graded", "pbwstring"])
def test_cmd_verify_rank_three(tmp_path, suite):
    config = make_config(tmp_path, rank=3, bound=3, sample_size=5)
    report = harness.cmd_verify(suite, config)
    assert report.cases
    assert report.passed, report.failures[:3]


def test_pbwstring_suite_at_default_bound(tmp_path):
    config = make_config(tmp_path, rank=2, bound=8, word=(1, 2, 1))
    report = harness.cmd_verify("pbwstring", config)
    assert report.passed, report.failures[:3]
    strings = [c for c in report.cases if c["case"] == "pbw_string"]
    assert len(strings) == len(parameters_up_to((1, 2, 1), 8))

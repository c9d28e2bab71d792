"""Run configuration and the three commands behind the driver scripts."""

import os
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from tqdm import tqdm

from canonical_bases import tropical, weyl
from canonical_bases.algebra import canonical
from canonical_bases.algebra.canonical import dual_canonical, lusztig_parameter
from canonical_bases.suites import get_suite_function, weights_up_to
from canonical_bases.utils.cache_utils import TableCache
from canonical_bases.utils.misc_utils import (
    DEFAULT_MAX_RANK,
    DEFAULT_WEIGHT_CAPS,
    CapacityError,
    PreconditionError,
    check_rank,
    parse_word,
    weight_cap,
)
from canonical_bases.utils.report_utils import Report, write_report, write_summary_csv

ALL_ADAPTED = "all-adapted"


def parse_word_option(text):
    # Input: text - "1,2,1", "adapted:lr,rl" or "all-adapted"
    # Output: tuple word, ALL_ADAPTED or None
    if text is None:
        return None
    text = text.strip()
    if text == ALL_ADAPTED:
        return ALL_ADAPTED
    if text.startswith("adapted:"):
        return weyl.adapted_word(weyl.Quiver.parse(text[len("adapted:"):]))
    return parse_word(text)


@dataclass
class RunConfig:
    rank: int
    weight_bound: int
    word: Union[tuple, str, None] = None
    cache_dir: str = "./cache"
    report_path: Optional[str] = None
    root_dir: str = "./results"
    seed: int = 97
    sample_size: int = 1000
    max_minor_subset: int = 3
    n_jobs: int = 1
    max_rank: int = DEFAULT_MAX_RANK
    weight_caps: Dict[int, int] = field(default_factory=lambda: dict(DEFAULT_WEIGHT_CAPS))

    def __post_init__(self):
        self.weight_caps = {int(k): int(v) for k, v in self.weight_caps.items()}
        self.validate()

    def validate(self):
        check_rank(self.rank, self.max_rank)
        cap = weight_cap(self.rank, self.weight_caps)
        if self.weight_bound < 0:
            raise PreconditionError("Weight bound must be nonnegative, got {}".format(self.weight_bound))
        if self.weight_bound > cap:
            raise CapacityError("Weight bound {} exceeds the cap {} for rank {}".format(self.weight_bound, cap, self.rank))
        if isinstance(self.word, tuple):
            n = weyl.check_w0_word(self.word)
            if n != self.rank:
                raise PreconditionError("Word {} has rank {}, expected {}".format(self.word, n, self.rank))
        elif self.word not in (None, ALL_ADAPTED):
            raise PreconditionError("Unknown word option {}".format(self.word))
        if self.max_minor_subset < 1 or self.sample_size < 1:
            raise PreconditionError("max_minor_subset and sample_size must be positive")

    @classmethod
    def from_config(cls, config, rank=None, bound=None, word=None, cache_dir=None, report_path=None,
                    seed=None, n_jobs=None):
        # flags override config.json values
        rank = rank if rank is not None else config.get("rank", 2)
        caps = config.get("weight_caps", DEFAULT_WEIGHT_CAPS)
        if bound is None:
            bound = config.get("weight_bound", weight_cap(rank, caps))
        return cls(
            rank=rank,
            weight_bound=bound,
            word=parse_word_option(word),
            cache_dir=cache_dir if cache_dir is not None else config.get("cache_dir", "./cache"),
            report_path=report_path,
            root_dir=config.get("root_dir", "./results"),
            seed=seed if seed is not None else config.get("seed", 97),
            sample_size=config.get("sample_size", 1000),
            max_minor_subset=config.get("max_minor_subset", 3),
            n_jobs=n_jobs if n_jobs is not None else config.get("n_jobs", 1),
            max_rank=config.get("max_rank", DEFAULT_MAX_RANK),
            weight_caps=caps,
        )

    def words(self):
        if isinstance(self.word, tuple):
            return [self.word]
        if self.word == ALL_ADAPTED:
            return sorted(weyl.adapted_words(self.rank))
        return [weyl.seed_word(self.rank)]

    def to_json(self):
        # paths and worker counts do not change results and stay out of reports
        return {
            "rank": self.rank,
            "weight_bound": self.weight_bound,
            "word": list(self.word) if isinstance(self.word, tuple) else self.word,
            "seed": self.seed,
            "sample_size": self.sample_size,
            "max_minor_subset": self.max_minor_subset,
        }


def default_report_path(config, name):
    return os.path.join(config.root_dir, "reports", "{}.json".format(name))


def finish_report(report, config, name):
    report_path = config.report_path or default_report_path(config, name)
    write_report(report, report_path)
    summary_path = write_summary_csv(report, os.path.join(config.root_dir, "summaries"))
    print("Report written to {} (summary {})".format(report_path, summary_path))
    return report_path


def cmd_basis(config):
    canonical.clear_memo()
    cache = TableCache(config.cache_dir)
    report = Report("basis", config.to_json())
    for word in config.words():
        print("Building tables for word {}".format(word))
        for weight in tqdm(weights_up_to(config.rank, config.weight_bound)):
            table = canonical.canonical_basis(word, weight, cache=cache, weight_caps=config.weight_caps,
                                              max_rank=config.max_rank)
            problems = canonical.table_problems(table)
            report.add_case("table", not problems, {"word": list(word), "weight": list(weight)},
                            witness=problems or None, dimension=table.dim)
    report.runtime = cache.stats()
    print("Cache hits = {}, misses = {}, rejected = {}".format(cache.hits, cache.misses, cache.rejected))
    finish_report(report, config, "basis")
    return report


def cmd_verify(suite, config):
    run_suite = get_suite_function(suite)
    cache = TableCache(config.cache_dir)
    canonical.use_table_cache(cache)
    try:
        print("Running suite {} at rank {} with bound {}".format(suite, config.rank, config.weight_bound))
        report = run_suite(config)
    finally:
        canonical.use_table_cache(None)
    summary = report.summary()
    print("{}: {} passed, {} failed, {} recorded".format(suite, summary["passed"], summary["failed"], summary["recorded"]))
    finish_report(report, config, suite)
    return report


def cmd_reparam(config, source, target, m):
    source, target, m = tuple(source), tuple(target), tuple(m)
    if weyl.check_w0_word(source) != weyl.check_w0_word(target):
        raise PreconditionError("Words {} and {} have different ranks".format(source, target))
    if any(x < 0 for x in m):
        raise PreconditionError("Lusztig parameters are nonnegative, got {}".format(m))
    output = tropical.reparametrize(source, target, m)
    path = weyl.braid_move_path(source, target)
    report = Report("reparam", config.to_json())
    record = {"from": list(source), "to": list(target), "input": list(m), "output": list(output),
              "path": [list(move) for move in path]}
    weight = tropical.weight_of_parameter(source, m)
    rank = len(weight)
    algebraic = None
    if 0 < sum(weight) <= weight_cap(rank, config.weight_caps):
        algebraic = lusztig_parameter(dual_canonical(source, m), target)
    record["algebraic"] = list(algebraic) if algebraic is not None else None
    verdict = None if algebraic is None else algebraic == output
    report.add_case("reparametrize", verdict, record)
    print("R({}) from {} to {} = {}".format(list(m), list(source), list(target), list(output)))
    if algebraic is not None:
        print("Algebraic Lusztig parameter over {} = {}".format(list(target), list(algebraic)))
    if config.report_path:
        write_report(report, config.report_path)
    return report

import os
import sys
import json
import argparse

from canonical_bases import harness
from canonical_bases.suites import get_all_suite_names
from canonical_bases.utils.misc_utils import PreconditionError, CapacityError, InvariantViolation

args = argparse.ArgumentParser()
args.add_argument("--config_path", type=str, default="./config.json", help="Path to config file")
args.add_argument("--suite", type=str, default="all", help="Suite to run, one of {} or 'all'".format(get_all_suite_names()))
args.add_argument("--rank", type=int, default=None, help="Rank n of A_n, at most max_rank from the config")
args.add_argument("--bound", type=int, default=None, help="Largest tr(weight) considered")
args.add_argument("--word", type=str, default=None, help="Comma separated reduced word, 'adapted:EDGELIST' or 'all-adapted'")
args.add_argument("--cache-dir", dest="cache_dir", type=str, default=None, help="Directory holding cached transition tables")
args.add_argument("--report", type=str, default=None, help="Path of the JSON report (single suite only)")
args.add_argument("--seed", type=int, default=None, help="Seed for the sampled suites")
args.add_argument("--n_jobs", type=int, default=None, help="Number of joblib workers")
args = args.parse_args()

assert os.path.exists(args.config_path), "Config file does not exist"
# Load config file
with open(args.config_path, "r") as config_file:
    config = json.load(config_file)

suites = get_all_suite_names() if args.suite == "all" else [args.suite]
if args.report is not None and len(suites) > 1:
    print("Usage error: --report needs a single --suite")
    sys.exit(2)

all_passed = True
try:
    run_config = harness.RunConfig.from_config(config, rank=args.rank, bound=args.bound, word=args.word,
                                               cache_dir=args.cache_dir, report_path=args.report,
                                               seed=args.seed, n_jobs=args.n_jobs)
    for suite in suites:
        report = harness.cmd_verify(suite, run_config)
        if not report.passed:
            all_passed = False
            for failure in report.failures[:10]:
                print("FAILED {}: {}".format(failure["case"], failure["witness"]))
except (PreconditionError, CapacityError) as e:
    print("Usage error: {}".format(e))
    sys.exit(2)
except InvariantViolation as e:
    print("Invariant violated: {}".format(e))
    sys.exit(1)

print("ALL DONE!")
sys.exit(0 if all_passed else 1)

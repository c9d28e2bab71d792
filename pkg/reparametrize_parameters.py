import os
import sys
import json
import argparse

from canonical_bases import harness, weyl
from canonical_bases.utils.misc_utils import PreconditionError, CapacityError, InvariantViolation, parse_word

args = argparse.ArgumentParser()
args.add_argument("--config_path", type=str, default="./config.json", help="Path to config file")
args.add_argument("--from", dest="source", type=str, required=True, help="Comma separated reduced word the parameter is given in")
args.add_argument("--to", dest="target", type=str, required=True, help="Comma separated reduced word to reparametrize to")
args.add_argument("--m", type=str, required=True, help="Comma separated Lusztig parameter over --from")
args.add_argument("--report", type=str, default=None, help="Optional path of the JSON report")
args = args.parse_args()

assert os.path.exists(args.config_path), "Config file does not exist"
# Load config file
with open(args.config_path, "r") as config_file:
    config = json.load(config_file)

try:
    source, target, m = parse_word(args.source), parse_word(args.target), parse_word(args.m)
    run_config = harness.RunConfig.from_config(config, rank=weyl.rank_from_length(len(source)), bound=0,
                                               report_path=args.report)
    report = harness.cmd_reparam(run_config, source, target, m)
except (PreconditionError, CapacityError) as e:
    print("Usage error: {}".format(e))
    sys.exit(2)
except InvariantViolation as e:
    print("Invariant violated: {}".format(e))
    sys.exit(1)

print("ALL DONE!")
sys.exit(0 if report.passed else 1)

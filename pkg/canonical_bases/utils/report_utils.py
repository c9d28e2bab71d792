import os
import json

import pandas as pd

from canonical_bases.utils.misc_utils import ensure_dir

REPORT_SCHEMA_VERSION = 1


class Report():
    """Per-suite case records with summary counts.

    A case is a dict with at least "case" (a short label), "verdict" (True,
    False or None for recorded-only data) and "inputs". Failed cases carry a
    "witness" entry.
    """

    def __init__(self, suite, config=None, notes=None):
        self.suite = suite
        self.config = config or {}
        self.notes = list(notes or [])
        self.cases = []
        self.data = {}
        # counters that vary between runs, kept out of the JSON
        self.runtime = {}

    def add_case(self, case, verdict, inputs, witness=None, **extra):
        record = {"case": case, "verdict": verdict, "inputs": inputs}
        if witness is not None:
            record["witness"] = witness
        elif verdict is False:
            record["witness"] = inputs
        record.update(extra)
        self.cases.append(record)
        return record

    def extend(self, records):
        for record in records:
            if record.get("verdict") is False and "witness" not in record:
                record["witness"] = record.get("inputs")
            self.cases.append(record)

    def record_data(self, key, value):
        self.data[key] = value

    @property
    def failures(self):
        return [c for c in self.cases if c["verdict"] is False]

    @property
    def passed(self):
        return not self.failures

    def summary(self):
        return {
            "total": len(self.cases),
            "passed": sum(1 for c in self.cases if c["verdict"] is True),
            "failed": len(self.failures),
            "recorded": sum(1 for c in self.cases if c["verdict"] is None),
        }

    def to_json(self):
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "suite": self.suite,
            "config": self.config,
            "notes": self.notes,
            "summary": self.summary(),
            "data": self.data,
            "cases": self.cases,
        }


def write_report(report, report_path):
    # Input: report - Report
    #        report_path - destination JSON file
    # Output: report_path
    ensure_dir(os.path.dirname(os.path.abspath(report_path)))
    with open(report_path, "w") as f:
        json.dump(report.to_json(), f, indent=4, sort_keys=True)
    return report_path


def write_summary_csv(report, summaries_dir):
    # one row per case label with pass/fail/recorded counts
    ensure_dir(summaries_dir)
    rows = []
    for c in report.cases:
        rows.append({"case": c["case"], "verdict": "recorded" if c["verdict"] is None else ("pass" if c["verdict"] else "fail")})
    df = pd.DataFrame(rows, columns=["case", "verdict"])
    if len(df) > 0:
        df = df.groupby(["case", "verdict"]).size().unstack(fill_value=0).reset_index()
    path = os.path.join(summaries_dir, "{}.csv".format(report.suite))
    df.to_csv(path, index=False)
    return path

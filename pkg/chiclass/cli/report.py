"""
Reports: the ordered results of a job, an optional PASS/FAIL verdict,
and their rendering as a plain text table or as JSON.
"""

import json

from sympy import Poly

from chiclass.algebra import format_ypoly

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def format_value(v):
    """ exact text for the values that appear in reports """
    if isinstance(v, Poly):
        return format_ypoly(v)
    if isinstance(v, (list, tuple)):
        return "{" + ", ".join(format_value(x) for x in v) + "}"
    return str(v)


class Report(object):
    """ the outcome of one job """

    def __init__(self, command, payload=None):
        self.command = command
        self.payload = payload
        self.results = []
        self.verdict = None
        self.detail = ""

    def add(self, key, value):
        self.results.append((key, format_value(value)))

    def passed(self, detail=""):
        if self.verdict != "FAIL":
            self.verdict = "PASS"
            self.detail = detail

    def failed(self, detail=""):
        self.verdict = "FAIL"
        self.detail = detail

    @property
    def exit_code(self):
        return EXIT_FAIL if self.verdict == "FAIL" else EXIT_OK

    def verdict_line(self):
        if self.verdict is None:
            return None
        if self.detail:
            return "{} ({})".format(self.verdict, self.detail)
        return self.verdict

    def as_table(self):
        lines = ["{}: {}".format(k, v) for k, v in self.results]
        v = self.verdict_line()
        if v is not None:
            lines.append(v)
        return "\n".join(lines) + "\n"

    def as_json(self):
        out = {"command": self.command,
               "payload": self.payload,
               "results": [[k, v] for k, v in self.results]}
        if self.verdict is not None:
            out["verdict"] = self.verdict
            out["detail"] = self.detail
        return json.dumps(out, sort_keys=True, indent=2) + "\n"

    def render(self, output_format):
        if output_format == "json":
            return self.as_json()
        return self.as_table()

# tests of the command line tool, its job files and reports
import io
import json
import os

import pytest
from sympy import Rational

from chiclass.algebra import Y, ypoly
from chiclass.cli import JobSpecError, Report, job_from_dict, max_dim, run
from chiclass.cli.checks import (check_cor2, check_ghrr, check_prop14, check_series,
                                 check_specializations, complete_intersection_family,
                                 node_resolution)
from chiclass.cli.main import main
from chiclass.cli.report import EXIT_FAIL, EXIT_INPUT, EXIT_OK, format_value


def write_job(tmp_path, job, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(job))
    return str(path)


def run_main(args):
    out = io.StringIO()
    code = main(args, stdout=out)
    return code, out.getvalue()


NODAL_CUBIC = {"ambient": 3, "degrees": [3],
               "singularities": [{"label": "node", "weights": ["1/2", "1/2", "1/2"]}]}

NODE_RESOLUTION = {
    "components": [{"id": "strict", "m": 1}, {"id": "exceptional", "m": 2}],
    "strata": [{"components": ["exceptional"], "over_sigma": True, "base": "y^2",
                "table": [[0, "1 - 2y + y^2"], [1, "1 - y"]]},
               {"components": ["strict", "exceptional"], "over_sigma": True, "base": "1 - y",
                "table": [[0, "1 - y"]]}],
    "sigma": "1"}


class TestCommands(object):

    def test_classes(self, tmp_path):
        job = write_job(tmp_path, {"command": "classes", "payload": {"ambient": 3, "degrees": [4]}})
        code, out = run_main(["classes", "--input", job])
        assert code == EXIT_OK
        assert "variety: (4) in P3" in out
        assert "chi_y: 2 - 20y + 2y^2" in out
        assert "euler characteristic: 24" in out
        assert "signature: -16" in out

    def test_virtual_json(self, tmp_path):
        job = write_job(tmp_path, {"command": "virtual", "ambient": 4, "degrees": [5]})
        code, out = run_main(["virtual", "--input", job, "--format", "json"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["verdict"] == "PASS"
        assert ["degree 0", "100y - 100y^2"] in data["results"]
        assert ["virtual euler characteristic", "-200"] in data["results"]
        assert data["payload"] == {"ambient": 4, "degrees": [5]}

    def test_chi_y(self, tmp_path):
        job = write_job(tmp_path, {"command": "chi-y",
                                   "payload": {"ambient": [1, 1], "degrees": [[2, 2]]}})
        code, out = run_main(["chi-y", "--input", job])
        assert code == EXIT_OK
        assert "chi_y: 0" in out
        assert "chi_y (sheaf Euler oracle): 0" in out
        assert out.strip().endswith("PASS (class and oracle agree)")

    def test_scissor(self, tmp_path):
        payload = {"definitions": {"cubic": {"blowup": {"piece": "P", "dim": 2}, "points": 6}},
                   "scissor": {"contract": {"ref": "cubic"}}}
        job = write_job(tmp_path, {"command": "chi-y", "payload": payload})
        code, out = run_main(["chi-y", "--input", job])
        assert code == EXIT_OK
        assert "chi_y (scissor): 1 - 6y + y^2" in out

    def test_milnor(self, tmp_path):
        payload = dict(NODAL_CUBIC, chi_y="1 - 6y + y^2")
        job = write_job(tmp_path, {"command": "milnor", "payload": payload})
        code, out = run_main(["milnor", "--input", job])
        assert code == EXIT_OK
        assert "M_y: -y" in out
        assert "residual: 0" in out
        assert "euler residual: 0" in out
        assert "PASS" in out

    def test_milnor_fail(self, tmp_path):
        payload = dict(NODAL_CUBIC, chi_y="1 - 7y + y^2")
        job = write_job(tmp_path, {"command": "milnor", "payload": payload})
        code, out = run_main(["milnor", "--input", job])
        assert code == EXIT_FAIL
        assert "residual: y" in out
        assert "FAIL" in out

    def test_milnor_scissor(self, tmp_path):
        payload = dict(NODAL_CUBIC, scissor={"contract": {"blowup": {"piece": "P", "dim": 2},
                                                          "points": 6}})
        job = write_job(tmp_path, {"command": "milnor", "payload": payload})
        code, out = run_main(["milnor", "--input", job])
        assert code == EXIT_OK
        assert "chi_y (scissor): 1 - 6y + y^2" in out

    def test_spectrum(self, tmp_path):
        job = write_job(tmp_path, {"command": "spectrum",
                                   "payload": {"weights": ["1/2", "1/3", "1/5"]}})
        code, out = run_main(["spectrum", "--input", job])
        assert code == EXIT_OK
        assert "mu: 8" in out
        assert "chi_y: -8y" in out
        job = write_job(tmp_path, {"command": "spectrum",
                                   "payload": {"weights": ["1/3", "1/5"]}}, "curve.json")
        code, out = run_main(["spectrum", "--input", job])
        assert "mu: 8" in out
        assert "chi_y: -4 + 4y" in out
        job = write_job(tmp_path, {"command": "spectrum",
                                   "payload": {"spectrum": ["5/6", "7/6"], "n": 2}}, "s.json")
        code, out = run_main(["spectrum", "--input", job])
        assert "spectrum: {5/6, 7/6}" in out
        assert "chi_y: -1 + y" in out

    def test_spectrum_table(self, tmp_path):
        # one "key: value" line per field
        job = write_job(tmp_path, {"command": "spectrum",
                                   "payload": {"weights": ["1/2", "1/2", "1/2"]}})
        code, out = run_main(["spectrum", "--input", job])
        assert code == EXIT_OK
        assert out == "spectrum: {3/2}\nmu: 1\nchi_y: -y\n"

    def test_nearby(self, tmp_path):
        job = write_job(tmp_path, {"command": "nearby", "payload": NODE_RESOLUTION})
        code, out = run_main(["nearby", "--input", job])
        assert code == EXIT_OK
        assert "psi: 1 - y" in out
        assert "phi on sigma: -y" in out
        assert "A'Campo euler characteristic: 2" in out

    def test_log_pair(self, tmp_path):
        payload = {"log_pair": {"ambient": 2, "divisors": [1, 1]},
                   "stratification": [{"chi_c": "y^2"}, {"chi_c": "-y"}, {"chi_c": 1}]}
        job = write_job(tmp_path, {"command": "nearby", "payload": payload})
        code, out = run_main(["nearby", "--input", job])
        assert code == EXIT_OK
        assert "chi_y (log forms): y + y^2" in out
        assert "chi_y (strata): 1 - y + y^2" in out

    def test_log_pair_fibers(self, tmp_path):
        payload = {"log_pair": {"ambient": [1, 1], "divisors": [[1, 0], [0, 1]]}}
        job = write_job(tmp_path, {"command": "nearby", "payload": payload})
        code, out = run_main(["nearby", "--input", job])
        assert code == EXIT_OK
        assert "chi_y (log forms): y^2" in out

    def test_verify(self, tmp_path):
        job = write_job(tmp_path, {"command": "verify",
                                   "payload": {"check": "prop14", "nMax": 3, "dMax": 2}})
        code, out = run_main(["verify", "--input", job])
        assert code == EXIT_OK
        assert "PASS (all 10 cases exact)" in out

    def test_verify_order(self, tmp_path):
        job = write_job(tmp_path, {"command": "verify", "payload": {"check": "series"}})
        code, out = run_main(["verify", "--input", job, "--order", "4"])
        assert code == EXIT_OK
        assert "cases: 4" in out


class TestInputErrors(object):

    def test_float(self, tmp_path, capsys):
        job = write_job(tmp_path, {"command": "spectrum", "payload": {"weights": [0.5, "1/3"]}})
        code, out = run_main(["spectrum", "--input", job])
        assert code == EXIT_INPUT
        assert out == ""
        assert "payload.weights[0]" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        code, _ = run_main(["classes", "--input", str(tmp_path / "nothing.json")])
        assert code == EXIT_INPUT

    def test_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{\"command\": ")
        code, _ = run_main(["classes", "--input", str(path)])
        assert code == EXIT_INPUT

    def test_unknown_command(self, tmp_path):
        job = write_job(tmp_path, {"command": "classes", "ambient": 2})
        with pytest.raises(SystemExit):
            main(["hodge", "--input", job])

    def test_field_paths(self):
        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "classes", "payload": {"ambient": 3, "degrees": [0]}})
        assert excinfo.value.field == "payload.degrees[0][0]"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "classes", "payload": {"ambient": 3}}, command="virtual")
        assert excinfo.value.field == "command"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "nearby", "payload": NODE_RESOLUTION, "extra": 1})
        assert excinfo.value.field == "job.extra"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "classes", "ambient": 3, "degrees": [1, 1, 1]})
        assert excinfo.value.field == "payload.degrees"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "chi-y", "scissor": {"ref": "a"},
                           "definitions": {"a": {"ref": "a"}}})
        assert excinfo.value.field == "payload.definitions.a.ref"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "classes", "ambient": [1, 1], "degrees": [[1, 0]]})
        assert excinfo.value.field == "payload.degrees[0][1]"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "nearby",
                           "log_pair": {"ambient": [1, 1], "divisors": [[0, 0]]}})
        assert excinfo.value.field == "payload.log_pair.divisors[0]"

        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "nearby",
                           "log_pair": {"ambient": [1, 1], "divisors": [[-1, 1]]}})
        assert excinfo.value.field == "payload.log_pair.divisors[0][0]"

    def test_max_dim(self, monkeypatch, tmp_path):
        monkeypatch.delenv("CHICLASS_MAX_DIM", raising=False)
        assert max_dim() == 8
        monkeypatch.setenv("CHICLASS_MAX_DIM", "3")
        assert max_dim() == 3
        with pytest.raises(JobSpecError) as excinfo:
            job_from_dict({"command": "classes", "ambient": 4, "degrees": [2]})
        assert excinfo.value.field == "payload.ambient"

        monkeypatch.setenv("CHICLASS_MAX_DIM", "many")
        job = write_job(tmp_path, {"command": "classes", "ambient": 2, "degrees": [3]})
        code, _ = run_main(["classes", "--input", job])
        assert code == EXIT_INPUT


class TestReport(object):

    def setup_method(self):
        """ this is run before each test """
        self.report = Report("spectrum", {"n": 2})

    def test_format_value(self):
        assert format_value(ypoly(1 - Y)) == "1 - y"
        assert format_value([Rational(1, 2), Rational(3, 2)]) == "{1/2, 3/2}"
        assert format_value(Rational(-7, 3)) == "-7/3"

    def test_verdict(self):
        assert self.report.exit_code == EXIT_OK
        assert self.report.verdict_line() is None
        self.report.failed("first")
        self.report.passed("second")
        assert self.report.verdict_line() == "FAIL (first)"
        assert self.report.exit_code == EXIT_FAIL

    def test_render(self):
        self.report.add("mu", 2)
        self.report.passed()
        assert self.report.render("table") == "mu: 2\nPASS\n"
        data = json.loads(self.report.render("json"))
        assert data["results"] == [["mu", "2"]]
        assert data["verdict"] == "PASS"

    def test_run_job(self):
        job = job_from_dict({"command": "spectrum", "weights": ["1/2", "1/2"]})
        report = run(job)
        assert ["mu", "1"] in [list(r) for r in report.results]


class TestChecks(object):

    def test_family(self):
        family = complete_intersection_family(3, 2)
        assert len(family) == 10
        assert all(ci.r < ci.ambient.dim for ci in family)

    def test_node_resolution(self):
        r = node_resolution()
        assert r.m_I(["exceptional"]) == 2

    def test_cor2(self):
        assert check_cor2() == (3, [])

    def test_virtual_routes_full_family(self):
        # n <= 5, r <= 2, degrees <= 4
        assert len(complete_intersection_family(5, 4)) == 51
        assert check_prop14(5, 4) == (51, [])

    def test_sheaf_oracle_full_family(self):
        assert check_ghrr(5, 4) == (51, [])

    def test_specializations(self):
        assert check_specializations(12) == (3, [])

    def test_series(self):
        assert check_series(12) == (12, [])


class TestExampleJobs(object):
    @classmethod
    def setup_class(cls):
        """ this is run once for each class before any tests """
        base = os.path.dirname(os.path.realpath(__file__))
        cls.examples = os.path.join(base, "..", "..", "..", "docs", "examples")

    def test_examples(self):
        names = sorted(f for f in os.listdir(self.examples) if f.endswith(".json"))
        assert names
        for name in names:
            with open(os.path.join(self.examples, name)) as f:
                command = json.load(f)["command"]
            code, out = run_main([command, "--input", os.path.join(self.examples, name)])
            assert code == EXIT_OK, name
            assert "FAIL" not in out


class TestJobSchema(object):
    @classmethod
    def setup_class(cls):
        """ this is run once for each class before any tests """
        jsonschema = pytest.importorskip("jsonschema")
        base = os.path.join(os.path.dirname(os.path.realpath(__file__)), "..", "..", "..", "docs")
        with open(os.path.join(base, "source", "job_schema.json")) as f:
            schema = json.load(f)
        jsonschema.Draft7Validator.check_schema(schema)
        cls.validator = jsonschema.Draft7Validator(schema)
        cls.examples = os.path.join(base, "examples")

    def loads(self, job):
        try:
            job_from_dict(job)
        except JobSpecError:
            return False
        return True

    def test_examples_valid(self):
        for name in sorted(os.listdir(self.examples)):
            if not name.endswith(".json"):
                continue
            with open(os.path.join(self.examples, name)) as f:
                job = json.load(f)
            assert self.validator.is_valid(job), name
            assert self.loads(job), name

    def test_schema_and_loader_agree(self):
        accepted = [
            {"command": "nearby",
             "payload": {"log_pair": {"ambient": [1, 1], "divisors": [[1, 0], [0, 1]]}}},
            {"command": "chi-y",
             "payload": {"scissor": {"product": [{"piece": "A", "dim": 1},
                                                 {"piece": "Cstar", "dim": 1}]}}},
            {"command": "milnor", "payload": {"levels": ["-y", 0]}},
            {"command": "spectrum", "payload": {"spectrum": ["5/6", "7/6"], "n": 2}},
        ]
        rejected = [
            {"command": "spectrum", "payload": {"weights": [0.5, "1/3"]}},
            {"command": "classes", "payload": {"ambient": 3, "degrees": [0]}},
            {"command": "classes", "payload": {"ambient": 3, "degrees": [4], "extra": 1}},
            {"command": "nearby",
             "payload": {"log_pair": {"ambient": [1, 1], "divisors": [[0, 0]]}}},
            {"command": "verify", "payload": {"check": "hodge"}},
            {"command": "chi-y", "payload": {"scissor": {"piece": "Q", "dim": 1}}},
            {"command": "spectrum",
             "payload": {"weights": ["1/2", "1/2"], "spectrum": ["1"], "n": 2}},
        ]
        for job in accepted:
            assert self.validator.is_valid(job), job
            assert self.loads(job), job
        for job in rejected:
            assert not self.validator.is_valid(job), job
            assert not self.loads(job), job

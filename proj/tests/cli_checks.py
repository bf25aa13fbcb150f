"""End-to-end checks of the hyperchow command line: exit codes, output formats,
determinism and schema conformance. Usage: cli_checks.py <binary> <data dir>."""

import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

BINARY = None
DATA = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("HYPERCHOW_PRECISION", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name)


class ExitCodes(unittest.TestCase):
    def test_missing_subcommand_is_usage_error(self):
        self.assertEqual(run()[0], 64)

    def test_unknown_flag_is_usage_error(self):
        self.assertEqual(run("scan-i", "--grid", "2", "--frobnicate")[0], 64)

    def test_empty_config_is_usage_error(self):
        code, _, err = run("verify-cycles", "--config", data("empty.yaml"))
        self.assertEqual(code, 64)
        self.assertIn("empty", err)

    def test_missing_config_file_is_usage_error(self):
        self.assertEqual(run("verify-cycles", "--config", data("no_such_file.yaml"))[0], 64)

    def test_bad_precision_mode_is_usage_error(self):
        self.assertEqual(run("scan-i", "--grid", "2", env={"HYPERCHOW_PRECISION": "quad"})[0], 64)

    def test_bad_format_is_usage_error(self):
        self.assertEqual(run("--format", "xml", "scan-i", "--grid", "2")[0], 64)


class VerifyCycles(unittest.TestCase):
    def test_default_genus3_config_passes(self):
        code, out, _ = run("verify-cycles", "--config", data("genus3.yaml"))
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["records"])
        self.assertTrue(all(r["status"] == "pass" for r in report["records"]))

    def test_genus2_config_includes_decomposition(self):
        code, out, _ = run("verify-cycles", "--config", data("genus2.yaml"))
        self.assertEqual(code, 0)
        names = [r["name"] for r in json.loads(out)["records"]]
        self.assertTrue(any(n.startswith("genus-2 decomposition") for n in names))

    def test_t_equal_to_w1_passes_with_zero_precycle_note(self):
        code, out, _ = run("verify-cycles", "--config", data("degenerate_t.yaml"))
        self.assertEqual(code, 0)
        notes = " ".join(r["note"] for r in json.loads(out)["records"])
        self.assertIn("zero precycle", notes)


class ScanI(unittest.TestCase):
    def rows(self, *args):
        code, out, _ = run("scan-i", *args)
        return code, list(csv.DictReader(io.StringIO(out)))

    def test_grid_of_three(self):
        code, rows = self.rows("--grid", "2,3,5")
        self.assertEqual(code, 0)
        self.assertEqual(len(rows), 3)
        for row, lam in zip(rows, (2, 3, 5)):
            self.assertEqual(row["status"], "pass")
            self.assertAlmostEqual(float(row["I"]), 0.5 * math.log(lam), delta=1e-6)

    def test_lambda_one_is_flagged_invalid(self):
        code, rows = self.rows("--grid", "2,1,3")
        self.assertEqual(code, 1)
        self.assertEqual([r["status"] for r in rows], ["pass", "invalid", "pass"])

    def test_paired_difference_is_log_lambda(self):
        code, rows = self.rows("--grid", "2,3/2", "--paired")
        self.assertEqual(code, 0)
        for row, lam in zip(rows, (2.0, 1.5)):
            self.assertLessEqual(abs(float(row["difference"]) - math.log(lam)), 1e-6)

    def test_svg_is_written(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "plot.svg")
            code, _ = self.rows("--grid", "2,3", "--svg", path)
            self.assertEqual(code, 0)
            with open(path) as f:
                self.assertTrue(f.read().startswith("<svg"))


class FullReport(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(os.path.join(DATA, "schema", "report.schema.json")) as f:
            cls.schema = json.load(f)
        cls.code, cls.out, _ = run("full-report")

    def test_default_run_passes(self):
        self.assertEqual(self.code, 0)

    def test_json_validates_against_schema(self):
        report = json.loads(self.out)
        jsonschema.validate(report, self.schema)
        self.assertEqual(report["summary"]["exit_code"], 0)
        self.assertEqual({r["criterion"] for r in report["records"]} - {0}, set(range(1, 9)))
        self.assertTrue(all(r["anchor"] for r in report["records"]))

    def test_output_is_byte_identical_across_runs(self):
        self.assertEqual(run("full-report")[1], self.out)

    def test_reduced_budget_is_indeterminate(self):
        code, out, _ = run("--budget", "800", "full-report")
        self.assertEqual(code, 2)
        report = json.loads(out)
        jsonschema.validate(report, self.schema)
        self.assertEqual(report["summary"]["fail"], 0)
        self.assertGreater(report["summary"]["indeterminate"], 0)


class NumericCommands(unittest.TestCase):
    def test_functional_eq_text_and_csv(self):
        code, out, _ = run("--format", "text", "functional-eq", "--lambda", "2")
        self.assertEqual(code, 0)
        self.assertIn("[PASS] functional equation", out)
        code, out, _ = run("--format", "csv", "numerics", "functional-eq", "--lambda", "3")
        self.assertEqual(code, 0)
        self.assertEqual(len(list(csv.DictReader(io.StringIO(out)))), 1)

    def test_timing_adds_runtime(self):
        code, out, _ = run("--timing", "numerics", "i-lambda", "--lambda", "2+1i")
        self.assertEqual(code, 0)
        record = json.loads(out)["records"][0]
        self.assertIn("runtime", record)
        self.assertAlmostEqual(record["value"], 0.5 * math.log(abs(2 + 1j)), delta=1e-6)

    def test_degenerate_lambda_is_usage_error(self):
        self.assertEqual(run("numerics", "i-lambda", "--lambda", "1")[0], 64)

    def test_pairing_k_is_nonzero(self):
        code, out, _ = run("pairing-k", "--curve", data("pairing_genus2.yaml"))
        self.assertEqual(code, 0)
        record = json.loads(out)["records"][0]
        self.assertGreater(abs(record["value"]), 5 * record["error"])

    def test_bielliptic_needs_both_values(self):
        self.assertEqual(run("bielliptic", "--l1", "2")[0], 64)


class ExactCommands(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(os.path.join(DATA, "schema", "hyperchow.schema.json")) as f:
            cls.schema = json.load(f)
        cls.registry = Registry().with_resource(cls.schema["$id"], Resource.from_contents(cls.schema))

    def conforms(self, instance, definition):
        ref = {"$ref": self.schema["$id"] + "#/$defs/" + definition}
        jsonschema.Draft202012Validator(ref, registry=self.registry).validate(instance)

    def test_exact_outputs_validate_against_schema(self):
        _, out, _ = run("cycles", "verify", "--config", data("genus2.yaml"))
        self.conforms(json.loads(out), "cycles_verify_output")
        _, out, _ = run("jacobian", "add", "--config", data("genus3.yaml"),
                        "--divisor", "x 22/5; -infinity", "--divisor", "branch 3; -infinity")
        for key in ("a", "b", "sum"):
            self.conforms(json.loads(out)[key], "pic_point")
        _, out, _ = run("jacobian", "reduce", "--config", data("genus2.yaml"), "--divisor", "x 9/4; x 2/3; -2*infinity")
        self.conforms(json.loads(out)["divisor"], "divisor")
        self.conforms(json.loads(out)["class"], "pic_point")

    def test_cycles_verify_emits_configuration_reports(self):
        code, out, _ = run("cycles", "verify", "--config", data("genus3.yaml"))
        self.assertEqual(code, 0)
        reports = json.loads(out)
        self.assertEqual(reports[0]["configuration"], "four-curve")
        self.assertTrue(all(r["report"]["is_cycle"] for r in reports))
        self.assertTrue(all(r["report"]["boundary"] == [] for r in reports))

    def test_sweep_without_rational_point_is_indeterminate(self):
        code, out, _ = run("cycles", "sweep-t", "--config", data("genus3.yaml"), "--grid", "22/5,1/2")
        self.assertEqual(code, 2)

    def test_jacobian_two_torsion_is_principal(self):
        code, out, _ = run("jacobian", "is-principal", "--config", data("genus2.yaml"),
                           "--divisor", "2*branch 1; -2*infinity")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["principal"])

    def test_jacobian_add_of_inverse_is_identity(self):
        code, out, _ = run("jacobian", "add", "--config", data("genus2.yaml"),
                           "--divisor", "x 8; -infinity", "--divisor", "-x 8; infinity")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["sum"]["class"], [["1"], []])

    def test_jacobian_reduce_round_trips_rationals(self):
        code, out, _ = run("jacobian", "reduce", "--config", data("genus2.yaml"), "--divisor", "x 2/3; -infinity")
        self.assertEqual(code, 0)
        point = json.loads(out)["divisor"]["points"][0]["point"]
        self.assertEqual(point["x"], "2/3")


if __name__ == "__main__":
    BINARY, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])

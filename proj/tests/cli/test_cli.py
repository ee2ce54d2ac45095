# (C) Copyright 2026 rcbethe developers
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
"""End-to-end checks of the rcbethe command line tool and its JSON schema."""

import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = None
SCHEMA = None


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)
    if proc.returncode != expect:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc


def run_json(*args, expect=0):
    return json.loads(run(*args, expect=expect).stdout)


class SchemaTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.validator = jsonschema.Draft202012Validator(json.load(f))

    def check(self, doc):
        errors = sorted(self.validator.iter_errors(doc), key=str)
        self.assertFalse(errors, "\n".join(e.message for e in errors[:5]))

    def test_rc_reports(self):
        self.check(run_json("rc", "enumerate", "--N", "6", "--ell", "3"))
        self.check(run_json("rc", "count", "--N", "14", "--ell", "7", "--census", "physical-singular"))
        self.check(run_json("rc", "count", "--N", "12", "--ell", "5", "--census", "physical-singular"))
        self.check(run_json("rc", "count", "--N", "7", "--ell", "3", "--census", "physical-singular"))
        self.check(run_json("rc", "count", "--N", "8", "--ell", "10", "--two-s", "3", "--timing"))

    def test_solve_reports(self):
        self.check(run_json("bae", "solve", "--N", "6", "--ell", "3"))
        self.check(run_json("bae", "solve", "--N", "8", "--ell", "4", "--all", "--timing"))

    def test_verify_reports(self):
        self.check(run_json("aba", "verify", "--N", "4", "--ell", "2"))
        self.check(run_json("aba", "verify", "--N", "6", "--ell", "3"))

    def test_census_table(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "census.json")
            run("census", "table", "--N-min", "9", "--N-max", "14", "--json", path)
            with open(path) as f:
                self.check(json.load(f))


class CommandTest(unittest.TestCase):
    def test_rc_examples(self):
        self.assertEqual(run_json("rc", "count", "--N", "14", "--ell", "7", "--census",
                                  "physical-singular")["totals"]["n_sp"], 15)
        doc = run_json("rc", "enumerate", "--N", "6", "--ell", "3")
        self.assertEqual(sum(len(p["riggings"]) for p in doc["partitions"]), 5)
        self.assertEqual(run_json("rc", "count", "--N", "4", "--ell", "0")["totals"]["n_rc"], 1)

    def test_out_of_scope_census_is_marked(self):
        totals = run_json("rc", "count", "--N", "7", "--ell", "3", "--census", "physical-singular")["totals"]
        self.assertIsNone(totals["n_sp"])
        self.assertTrue(totals["census"].startswith("out_of_scope"))

    def test_solve_examples(self):
        doc = run_json("bae", "solve", "--N", "6", "--ell", "3")
        self.assertEqual(len(doc["records"]), 5)
        self.assertEqual([r["index"] for r in doc["records"] if r["starred"]], [3])
        doc = run_json("bae", "solve", "--N", "2", "--ell", "1")
        self.assertEqual([r["roots"] for r in doc["records"]], [[[0.0, 0.0]]])

    def test_solve_n9_counts(self):
        doc = run_json("bae", "solve", "--N", "9", "--ell", "3", "--all")
        s = doc["summary"]
        self.assertEqual((s["regular"], s["singular_physical"], s["n_distinct"]), (46, 2, 54))
        self.assertEqual(sum(r["starred"] for r in doc["records"]), 2)

    def test_verify_examples(self):
        for n, ell, rank in ((4, 2, 2), (6, 0, 1), (8, 4, 14)):
            c = run_json("aba", "verify", "--N", str(n), "--ell", str(ell))["completeness"]
            self.assertEqual((c["rank"], c["target"]), (rank, rank))

    def test_census_rows(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "census.json")
            run("census", "table", "--N-min", "12", "--N-max", "14", "--json", path)
            with open(path) as f:
                rows = {(r["N"], r["ell"]): r for r in json.load(f)["rows"]}
        self.assertEqual((rows[14, 6]["n_sp"], rows[14, 6]["n_total_pred"], rows[14, 6]["n_s_pred"]), (15, 1716, 715))
        self.assertEqual((rows[14, 5]["n_sp"], rows[14, 5]["n_s_pred"]), (6, 286))
        self.assertTrue(rows[12, 5]["anomalous"])
        self.assertEqual(rows[12, 5]["n_sp"], 4)
        self.assertIn("460 < C(11,5) = 462", rows[12, 5]["note"])

    def test_determinism(self):
        a = run("bae", "solve", "--N", "8", "--ell", "4", "--all").stdout
        b = run("bae", "solve", "--N", "8", "--ell", "4", "--all").stdout
        self.assertEqual(a, b)

    def test_seed_is_recorded(self):
        doc = run_json("bae", "solve", "--N", "4", "--ell", "2", "--seed", "7")
        self.assertEqual(doc["manifest"]["rng_seed"], 7)

    def test_thread_count_does_not_change_output(self):
        env = dict(os.environ, RCBETHE_THREADS="3")
        a = subprocess.run([CLI, "bae", "solve", "--N", "8", "--ell", "4"], capture_output=True, text=True, env=env)
        b = run("bae", "solve", "--N", "8", "--ell", "4")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)
        bad = subprocess.run([CLI, "bae", "solve", "--N", "4", "--ell", "2"], capture_output=True,
                             env=dict(os.environ, RCBETHE_THREADS="zero"))
        self.assertEqual(bad.returncode, 2)

    def test_svg_matches_json(self):
        with tempfile.TemporaryDirectory() as d:
            doc = run_json("bae", "solve", "--N", "8", "--ell", "4", "--svg", d)
            names = sorted(os.listdir(d))
            self.assertEqual(len(names), len(doc["records"]))
            self.assertEqual(sum(n.endswith("_star.svg") for n in names), 3)
            for rec, name in zip(doc["records"], names):
                self.assertEqual(name.endswith("_star.svg"), rec["starred"])
                with open(os.path.join(d, name)) as f:
                    svg = f.read()
                self.assertIn('viewBox="-1.5 -1.5 3 3"', svg)
                pts = [[float(x), float(y)] for x, y in re.findall(r'<circle cx="([^"]+)" cy="([^"]+)"', svg)]
                self.assertEqual(pts, rec["roots"])

    def test_exit_codes(self):
        run("rc", "count", "--N", "4", expect=2)
        run("rc", "count", "--N", "4", "--ell", "1", "--census", "everything", expect=2)
        run("bae", "solve", "--N", "20", "--ell", "3", expect=2)
        run("bae", "solve", "--N", "4", "--ell", "3", expect=2)
        run("bae", "solve", "--N", "4", "--ell", "2", "--tol", "-1", expect=2)
        run("frobnicate", expect=2)


if __name__ == "__main__":
    CLI, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])

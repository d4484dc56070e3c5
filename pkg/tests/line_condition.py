# Core imports
import importlib.util
import os
import shutil
import subprocess
import sys
import tempfile

# Unit test imports
import unittest

class TestLineCondition(unittest.TestCase):
    """
    Tests for the scripts at the root, which run in a separate interpreter
    like they do from the command line.
    """

    def setUp(self):
        self.root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _run(self, script, *args):
        return subprocess.run([sys.executable, script] + list(args),
                              cwd=self.root, stdout=subprocess.PIPE,
                              stderr=subprocess.PIPE, universal_newlines=True)

    def test_assess(self):
        out = os.path.join(self.directory, "assessments.csv")
        process = self._run("line_condition.py", "assess",
                            "--deductions", "tests/corpus/deductions.csv",
                            "--out", out)

        self.assertEqual(process.returncode, 0, process.stderr)
        self.assertRegex(process.stdout, "L001: ")
        with open(out) as assessments_file:
            self.assertEqual(assessments_file.readline().strip(),
                             "segment_id,score,grade")

    def test_data_error(self):
        out = os.path.join(self.directory, "assessments.csv")
        process = self._run("line_condition.py", "assess",
                            "--deductions", "tests/corpus/bad_deductions.csv",
                            "--out", out)

        self.assertEqual(process.returncode, 3, process.stderr)
        self.assertRegex(process.stdout, "Error: ")
        self.assertFalse(os.path.exists(out))

    def test_invalid_arguments(self):
        process = self._run("line_condition.py", "assess", "--factor-rank", "0")
        self.assertEqual(process.returncode, 2)
        self.assertRegex(process.stderr, "factor_rank")

        process = self._run("line_condition.py", "train")
        self.assertEqual(process.returncode, 2)
        self.assertRegex(process.stderr, "must be one of")

    def test_help(self):
        process = self._run("line_condition.py", "fit", "--help")
        self.assertEqual(process.returncode, 0, process.stderr)
        self.assertRegex(process.stdout, "--factor-rank")
        self.assertRegex(process.stdout, r"Embedding network \(embedding\)")

    @unittest.skipIf(importlib.util.find_spec("coverage") is None,
                     "The test runner needs the coverage package")
    def test_test_runner(self):
        process = self._run("test.py", "--pattern", "no_such_tests_*.py")
        self.assertEqual(process.returncode, 0, process.stderr)

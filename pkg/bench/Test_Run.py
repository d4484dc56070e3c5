# Core imports
import io
import os

# Unit test imports
import unittest

# Additional test report imports
import coverage

class Test_Run(object):
    """
    Test runner class.

    This class provides the means for running the unit tests and an optional
    statement coverage report around them.
    """

    def __init__(self, arguments):
        self._arguments = arguments
        self._settings = self._arguments.get_settings("test_runner")
        self._failed = False

        self._loader = unittest.TestLoader()

        if self._settings.get("coverage"):
            # Only consider our own package, and exclude the test bench, test
            # runner and tests themselves from code coverage.
            path = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
            include_path = "{}/*".format(path)
            excluded_patterns = ["test.py", "bench/*", "tests/*", "examples/*"]
            excluded_paths = [
                "{}/{}".format(path, pattern) for pattern in excluded_patterns
            ]
            self._statement_coverage = coverage.Coverage(include=include_path,
                                                         omit=excluded_paths)
        else:
            self._statement_coverage = None

    def is_passed(self):
        """
        Check whether all the test run parts succeeded.
        """

        return not self._failed

    def _run_directory(self, directory):
        pattern = self._settings.get("pattern")
        verbosity = self._settings.get("verbosity")

        tests = self._loader.discover(directory, pattern=pattern,
                                      top_level_dir="..")

        runner = unittest.runner.TextTestRunner(verbosity=verbosity)
        result = runner.run(tests)
        if not result.wasSuccessful():
            self._failed = True

    def execute_unit_tests(self):
        """
        Execute the unit tests.
        """

        if self._statement_coverage is not None:
            self._statement_coverage.start()

        self._run_directory("tests")

        if self._statement_coverage is not None:
            self._statement_coverage.stop()

    def execute_experiments(self):
        """
        Execute the experiments that check the outcomes of the full pipeline
        on generated corpora.
        """

        self._run_directory("bench/experiments")

    def execute_statement_coverage_report(self):
        """
        Create a statement coverage report if coverage is enabled. Coverage is
        not reported if we do not run all tests or a test has failed.

        This method returns the report text if coverage is enabled, otherwise
        it returns `None`.
        """

        if self._statement_coverage is None:
            return None

        if self._failed or not self._settings.is_default("pattern"):
            return None

        report = io.StringIO()
        self._statement_coverage.report(file=report, show_missing=True,
                                        skip_covered=True)

        return report.getvalue()

import sys
from __init__ import __package__
from .bench.Test_Run import Test_Run
from .settings import Arguments

def main(argv):
    arguments = Arguments("settings.json", argv)

    test_run = Test_Run(arguments)

    arguments.check_help()

    print("> Executing unit tests")
    test_run.execute_unit_tests()

    if arguments.get_settings("test_runner").get("experiments"):
        print("> Executing experiments")
        test_run.execute_experiments()

    statement_coverage_report = test_run.execute_statement_coverage_report()
    if statement_coverage_report is not None:
        print("> Executing statement coverage")
        print(statement_coverage_report)

    if not test_run.is_passed():
        sys.exit(1)

if __name__ == "__main__":
    main(sys.argv[1:])

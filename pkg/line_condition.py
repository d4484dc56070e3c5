"""
line_condition.py: Condition assessment of transmission line segments.

The first argument is the command to run, optionally followed by a settings
file and then the options of the settings components. Use `--help` to list
all the options.
"""

import sys

# Package imports
# Register the current directory as a package, so that the relative imports
# below resolve when the script runs directly.
from __init__ import __package__
from .core.Log_Manager import Log_Manager
from .pipeline.Command_Runner import Command_Runner
from .settings import Arguments

def main(argv):
    positionals = [{
        "name": "command",
        "type": "string",
        "required": True,
        "options": Command_Runner.COMMANDS,
        "help": "Command to run"
    }]
    arguments = Arguments("settings.json", argv, positionals=positionals)

    log_manager = Log_Manager(arguments)
    runner = Command_Runner(arguments, log_manager)

    arguments.check_help()

    try:
        code = runner.run(arguments.get_positional_value("command"))
    finally:
        log_manager.close()

    return code

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

import os
import sys
from argparse import ArgumentParser, HelpFormatter
from copy import copy
from ..core.Import_Manager import Import_Manager
from .Settings import Settings

class ArgumentsHelpFormatter(HelpFormatter):
    """
    Help formatter that lists the positional arguments of an `Arguments`
    handler, such as the command, before the options of the components.
    """

    def __init__(self, *a, **kw):
        super(ArgumentsHelpFormatter, self).__init__(*a, **kw)
        self._in_positionals = False

    def _format_actions_usage(self, actions, groups):
        text = super(ArgumentsHelpFormatter, self)._format_actions_usage(actions, groups)
        if text and isinstance(self._prog, Arguments):
            names = ["[{}]".format(info["name"]) for info in self._prog.get_positional_args()]
            return " ".join(names + [text])

        return text

    def start_section(self, heading):
        super(ArgumentsHelpFormatter, self).start_section(heading)
        self._in_positionals = heading == Arguments.POSITIONAL_GROUP
        if self._in_positionals:
            self._current_section.heading = "Positional arguments"

    def end_section(self):
        super(ArgumentsHelpFormatter, self).end_section()
        self._in_positionals = False

    def add_arguments(self, actions):
        if self._in_positionals and isinstance(self._prog, Arguments):
            actions = self._prog.get_positional_actions()

        super(ArgumentsHelpFormatter, self).add_arguments(actions)

class Arguments(object):
    """
    Command line handler for the settings components.

    Positional arguments are taken from the start of the argument list. Every
    settings component that is retrieved through `get_settings` registers its
    options and takes its values from the remaining arguments, so that the
    options are parsed incrementally. `check_help` finishes the parsing.
    """

    POSITIONAL_GROUP = "$positional"

    TYPES = {
        "int": int,
        "float": float,
        "bool": bool,
        "string": str,
        "file": str,
        "class": str,
        "list": list
    }

    def __init__(self, default_settings_file, argv, program_name=None,
                 defaults_file=Settings.DEFAULTS_FILE, positionals=None):
        """
        Set up the handler for the command line arguments `argv`, which is
        a list such as `sys.argv[1:]`.

        The `default_settings_file` is the JSON file with settings overrides.
        It can be replaced by a positional argument after the `positionals`,
        which is a list of registries with at least a `name` and otherwise the
        same fields as the settings in the defaults file. The `program_name`
        defaults to the name of the running script, and the `defaults_file`
        is passed on to the `Settings` components.
        """

        if program_name is None:
            program_name = os.path.basename(sys.argv[0])

        self._program_name = program_name
        self.argv = list(argv)
        self.defaults_file = defaults_file

        self._positional_args = copy(positionals) if positionals is not None else []
        self._positional_args.append({
            "name": "settings",
            "help": "Settings file to read from",
            "type": "string",
            "value": default_settings_file
        })
        self._positional_values = {}

        self._import_manager = Import_Manager()
        self.parser = self._create_parser()
        self.parser.add_argument_group(self.POSITIONAL_GROUP,
                                       "If provided, must be given in order at the start of the arguments")

        # The positionals are parsed by hand, so their actions only live in
        # a separate parser for the help output.
        help_parser = self._create_parser()
        self._positional_actions = [
            help_parser.add_argument(**self._get_argument_options(info["name"], info))
            for info in self._positional_args
        ]

        self.groups = {}
        self._registered = set()
        self._done_help = False

        self._handle_positionals()
        self.settings_file = self.get_positional_value("settings")

    def _create_parser(self):
        # Help is only added in `check_help`, once all components are known.
        # Abbreviations would match options of components registered later.
        return ArgumentParser(prog=self, add_help=False, allow_abbrev=False,
                              formatter_class=ArgumentsHelpFormatter)

    def __str__(self):
        # The parser shows the handler as its program name.
        return self._program_name

    def _handle_positionals(self):
        for info in self._positional_args:
            name = info["name"]
            if self.argv and not self.argv[0].startswith('-'):
                value = self.argv.pop(0)
            elif info.get("required", False):
                self.error("Positional argument '{}' is required".format(name))
            else:
                value = info.get("value")

            if value is not None and "options" in info and value not in info["options"]:
                self.error("Positional argument '{}' must be one of {}, not '{}'".format(name, ", ".join(info["options"]), value))

            try:
                self._positional_values[name] = self._type_cast(value, info)
            except ValueError as e:
                self.error(str(e))

    def get_positional_args(self):
        return self._positional_args

    def get_positional_actions(self):
        return self._positional_actions

    def get_positional_value(self, name):
        """
        Retrieve the value of the positional argument `name`, which is its
        registry `value` or `None` when it was not given.
        """

        return self._positional_values[name]

    def get_settings(self, group):
        """
        Retrieve the `Settings` component `group`.

        The component is created on first use, and its values are then
        overridden by the options in the remaining arguments.
        """

        if group not in self.groups:
            settings = Settings(self.settings_file, group, arguments=self,
                                defaults_file=self.defaults_file)
            if not self._done_help:
                keys = self._add_arguments(settings)
                self._fill_settings(settings, keys)

            self.groups[group] = settings

        return self.groups[group]

    def get_help(self, key, info):
        """
        Retrieve the help text of the setting `key` with registry `info`,
        falling back to a readable form of the key.
        """

        if "help" in info:
            return info["help"]

        parts = key.split('_')
        return ' '.join([parts[0].title()] + parts[1:])

    def get_choices(self, info):
        """
        Retrieve the allowed values of a setting with registry `info`.

        These are its `options`, or the names in `__all__` (or otherwise in
        `dir`) of its `module`, relative to the package. Returns `None` if
        any value is allowed or the module cannot be imported.
        """

        if "options" in info:
            return copy(info["options"])
        if "module" not in info:
            return None

        try:
            module = self._import_manager.load(info["module"])
        except ImportError:
            return None

        if hasattr(module, "__all__"):
            return list(module.__all__)

        return dir(module)

    def _get_argument_options(self, key, info):
        kw = {
            "dest": key,
            "help": self.get_help(key, info)
        }
        if "value" in info:
            kw["default"] = info["value"]

        required = info.get("required", True)
        if info["type"] == "list":
            kw["nargs"] = info.get("length", "*")
            if "subtype" not in info:
                return kw

            # List items are checked against the subtype.
            info = dict(info, type=info["subtype"])
            info.pop("options", None)

        choices = self.get_choices(info)
        if choices is not None:
            if not required:
                choices.append('')

            kw["choices"] = choices

        if info["type"] == "bool":
            kw["action"] = "store_true"
        elif info["type"] in self.TYPES and info["type"] != "list":
            kw["type"] = self.TYPES[info["type"]]

        return kw

    def _add_arguments(self, settings):
        """
        Register the options of the `Settings` component `settings`.

        A key that a parent component already registered is skipped, so its
        option sets the parent value. Returns the registered keys.
        """

        group = self.parser.add_argument_group("{} ({})".format(settings.name, settings.component_name))
        keys = []
        for key, info in settings.get_info():
            if key in self._registered:
                continue

            kw = self._get_argument_options(key, info)
            option = "--{}".format(key.replace('_', '-'))
            if info["type"] == "bool":
                toggle = group.add_mutually_exclusive_group()
                toggle.add_argument(option, **kw)
                kw.update(action="store_false", help="Disable the setting above")
                toggle.add_argument("--no-{}".format(option[2:]), **kw)
            else:
                group.add_argument(option, **kw)

            self._registered.add(key)
            keys.append(key)

        return keys

    def _type_cast(self, value, info):
        if value is None or info.get("type") not in self.TYPES:
            return value

        if info["type"] == "list":
            cast = self.TYPES.get(info.get("subtype"))
            if cast is None:
                return list(value)

            return [item if isinstance(item, list) else cast(item) for item in value]

        return self.TYPES[info["type"]](value)

    def _fill_settings(self, settings, keys):
        args, self.argv = self.parser.parse_known_args(self.argv)
        info = dict(settings.get_info())
        for key in keys:
            try:
                settings.set(key, self._type_cast(getattr(args, key), info[key]))
            except ValueError as e:
                self.error(str(e))

    def error(self, message):
        """
        Stop the program with exit code 2 after showing the error `message`,
        preceded by the full help if the arguments ask for it.
        """

        try:
            self.check_help()
        except SystemExit:
            self.parser.exit(2, "{}: error: {}\n".format(self._program_name, message))

        self.parser.error(message)

    def check_help(self):
        """
        Finish parsing the arguments once all components are registered.

        This shows the help and stops the program if the arguments contain
        `--help`, and stops with exit code 2 if options are left that no
        component knows.
        """

        if self._done_help:
            return

        group = self.parser.add_argument_group("Optional arguments")
        group.add_argument('-h', '--help', action='help', help="Show this help message and exit")
        self.parser.parse_args(self.argv)
        self.argv = []
        self._done_help = True

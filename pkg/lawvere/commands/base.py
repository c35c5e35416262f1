"""Command types for the command line.

Each concrete command declares its GROUP (the first word on the command
line), an optional NAME (the second word) and an ARGUMENTS table which is
turned into argparse options.  Argument entries look like:

    {
        'name': '--n',
        'type': INT,
        'required': True,
        'help': "Number of programs",
        'validation': 'validate_n',
    }

`validation` names a method taking the converted value and returning a
`(valid, message)` tuple.
"""
from lawvere.core.exceptions import InputError
from lawvere.commands.registry import register_command_type
from lawvere.formal.text import parse_formula
from lawvere.universe.text import program_index

BOOLEAN = 'boolean'
STRING = 'string'
INT = 'int'
PATH = 'path'
PROGRAM = 'program'
FORMULA = 'formula'

# converters applied after argparse has collected the raw strings
ARGUMENT_CONVERTERS = {
    STRING: str,
    INT: int,
    PATH: str,
    PROGRAM: program_index,
    FORMULA: parse_formula,
}


class BaseCommand:

    GROUP = ""
    NAME = ""
    HELP = ""
    ARGUMENTS = []

    def __init_subclass__(cls, **kwargs):
        """When a subclass of this class is created, register it as a command type"""
        super().__init_subclass__(**kwargs)
        register_command_type(cls)

    @property
    def command_name(self):
        return " ".join(w for w in (self.GROUP, self.NAME) if w)

    def add_arguments(self, parser):
        """Add this command's ARGUMENTS to an argparse parser"""
        for arg in self.ARGUMENTS:
            kwargs = {"help": arg.get("help", "")}
            if arg.get("type") == BOOLEAN:
                kwargs["action"] = "store_true"
            elif arg.get("choices"):
                kwargs["choices"] = arg["choices"]
            if arg["name"].startswith("-"):
                kwargs["required"] = arg.get("required", False)
                kwargs["dest"] = self.dest(arg)
            parser.add_argument(arg["name"], **kwargs)

    @staticmethod
    def dest(arg):
        return arg["name"].lstrip("-").replace("-", "_")

    def clean(self, args):
        """Convert and validate raw argument values.  Returns a dict of
        cleaned values keyed by destination name.  Raises InputError naming
        the offending argument."""
        cleaned = {}
        for arg in self.ARGUMENTS:
            dest = self.dest(arg)
            value = getattr(args, dest)
            kind = arg.get("type", STRING)
            if value is not None and kind in ARGUMENT_CONVERTERS:
                try:
                    value = ARGUMENT_CONVERTERS[kind](value)
                except InputError as e:
                    raise InputError(e.args[0], field=arg["name"], position=e.position) from e
                except ValueError as e:
                    raise InputError(f"invalid value {value!r}", field=arg["name"]) from e

            validator = arg.get("validation")
            if validator and value is not None:
                valid, msg = getattr(self, validator)(value)
                if not valid:
                    raise InputError(msg, field=arg["name"])

            cleaned[dest] = value
        return cleaned

    def validate_natural(self, value):
        if value < 0:
            return False, f"must be a natural number, got {value}"
        return True, "OK"

    def validate_positive(self, value):
        if value < 1:
            return False, f"must be at least 1, got {value}"
        return True, "OK"

    def input_paths(self, values):
        """Files whose bytes contribute to the report's inputs digest"""
        return []

    def run(self, values):
        """Run the command and return its certificate"""
        raise NotImplementedError

    def verify(self, certificate):
        return bool(certificate.verified)

    def payload(self, certificate, values):
        return certificate.to_dict()

    def render_text(self, certificate, values):
        """Alternative plain text output, or None to emit the JSON report"""
        return None

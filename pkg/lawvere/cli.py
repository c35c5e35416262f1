"""Command line front end.

    lawvere diagonal --input FILE [--section]
    lawvere demo {powerset,russell,grelling,liar,strong-liar,richard,nonre} [--text]
    lawvere universe {quine,recursion,refute-halt,rice,halt-matrix} ...
    lawvere formal {goedel,rosser,tarski,parikh,curry} ... [--print-number]

Reports go to stdout as JSON.  Exit status is 0 when the certificate
verifies, 1 when it does not (or the theorem does not apply) and 2 for
malformed input.
"""
import argparse
from itertools import groupby
import sys

from lawvere import utils
from lawvere.commands.registry import get_commands, register_command_types
from lawvere.core.exceptions import InputError, NotApplicable
from lawvere.logs import get_logger
from lawvere.reports import build_report
from lawvere.settings import Settings

logger = get_logger("lawvere")
settings = Settings()

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_INPUT = 2

GROUP_HELP = {
    "demo": "Classical diagonal arguments on bundled tables",
    "diagonal": "Diagonalize a matrix file",
    "formal": "Diagonal sentences of first order formulas",
    "universe": "Fixed points and refutations in a small programming language",
}


def build_parser():
    register_command_types()

    parser = argparse.ArgumentParser(prog="lawvere", description="Diagonal arguments with checkable certificates")
    parser.add_argument("--version", action="version", version=settings.VERSION)
    groups = parser.add_subparsers(dest="group", metavar="command")
    groups.required = True

    for group, commands in groupby(get_commands(), key=lambda c: c.GROUP):
        commands = list(commands)
        if len(commands) == 1 and not commands[0].NAME:
            command = commands[0]()
            sub = groups.add_parser(group, help=command.HELP, description=command.HELP)
            command.add_arguments(sub)
            sub.set_defaults(command=command)
            continue

        group_parser = groups.add_parser(group, help=GROUP_HELP.get(group, ""))
        names = group_parser.add_subparsers(dest="name", metavar="name")
        names.required = True
        for cls in commands:
            command = cls()
            sub = names.add_parser(cls.NAME, help=cls.HELP, description=cls.HELP)
            command.add_arguments(sub)
            sub.set_defaults(command=command)

    return parser


def run_command(argv, stdout=None, stderr=None):
    """Run one command line (without the program name) and return its exit status"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(argv)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse has already printed usage (or help / version)
        return EXIT_INPUT if e.code else EXIT_OK

    command = args.command
    try:
        values = command.clean(args)
        certificate = command.run(values)
        digest = utils.inputs_digest(argv, command.input_paths(values))
    except InputError as e:
        logger.info(f"{command.command_name}: invalid input: {e}")
        stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except NotApplicable as e:
        logger.info(f"{command.command_name}: not applicable: {e}")
        stderr.write(f"not applicable: {e}\n")
        return EXIT_UNVERIFIED

    report = build_report(command, certificate, values, argv, digest)
    text = command.render_text(certificate, values)
    stdout.write(report.to_json() if text is None else text)

    logger.info(f"{report.command}: verified={report.verified}")
    if not report.verified:
        stderr.write("certificate did not verify\n")
        return EXIT_UNVERIFIED
    return EXIT_OK


def main():
    """Launch the lawvere command line"""
    try:
        status = run_command(sys.argv[1:])
    except Exception:
        logger.exception("Unhandled exception while running command")
        raise
    sys.exit(status)

"""Commands exercising the programming universe: quines, fixed points,
and refutations of would-be halting and property deciders."""
from lawvere.commands.base import INT, PROGRAM, BaseCommand
from lawvere.instances.demos import halt_matrix_result
from lawvere.settings import Settings
from lawvere.universe import theorems
from lawvere.universe.text import index_text

settings = Settings()

QUINE_INPUTS = (0, 1, 2)


def fuel_argument(default_name):
    return {
        'name': '--fuel',
        'type': INT,
        'required': False,
        'help': f"Step budget (default: the {default_name} setting)",
        'validation': 'validate_natural',
    }


class UniverseCommand(BaseCommand):

    def fuel(self, values, default):
        return default if values.get("fuel") is None else values["fuel"]


class QuineCommand(UniverseCommand):

    GROUP = "universe"
    NAME = "quine"
    HELP = "Construct a program that outputs its own index and run it"

    def run(self, values):
        q = theorems.quine()
        return theorems.check_quine(q, QUINE_INPUTS, settings.QUINE_FUEL)

    def payload(self, certificate, values):
        doc = {"program": index_text(certificate.q)}
        doc.update(certificate.to_dict())
        return doc


class RecursionCommand(UniverseCommand):

    GROUP = "universe"
    NAME = "recursion"
    HELP = "Find n0 with phi_n0 = phi_h(n0) and sample both sides"

    ARGUMENTS = [
        {
            'name': '--h',
            'type': PROGRAM,
            'required': True,
            'help': "Index or program text of a total unary transformer",
        },
        fuel_argument("SAMPLE_FUEL"),
    ]

    def run(self, values):
        h = values["h"]
        n0 = theorems.recursion_fixed_point(h)
        return theorems.check_fixed_point(h, n0, fuel=self.fuel(values, settings.SAMPLE_FUEL))

    def payload(self, certificate, values):
        doc = certificate.to_dict()
        doc["n0_program"] = index_text(certificate.n0)
        return doc


class RefuteHaltCommand(UniverseCommand):

    GROUP = "universe"
    NAME = "refute-halt"
    HELP = "Show that a candidate halting decider is wrong about its own wrapper"

    ARGUMENTS = [
        {
            'name': '--candidate',
            'type': PROGRAM,
            'required': True,
            'help': "Binary program claiming (n, m) -> 1 iff phi_n(m) halts",
        },
        fuel_argument("DEFAULT_FUEL"),
    ]

    def run(self, values):
        return theorems.refute_halting(values["candidate"], self.fuel(values, settings.DEFAULT_FUEL))


class RiceCommand(UniverseCommand):

    GROUP = "universe"
    NAME = "rice"
    HELP = "Show that a candidate decider for a behavioural property is wrong on a fixed point"

    ARGUMENTS = [
        {
            'name': '--decider',
            'type': PROGRAM,
            'required': True,
            'help': "Unary program claiming n -> nonzero iff phi_n has the property",
        },
        {
            'name': '--a',
            'type': PROGRAM,
            'required': True,
            'help': "A program with the property",
        },
        {
            'name': '--b',
            'type': PROGRAM,
            'required': True,
            'help': "A program without the property",
        },
        fuel_argument("SAMPLE_FUEL"),
    ]

    def run(self, values):
        return theorems.rice_contradiction(
            values["decider"], values["a"], values["b"], fuel=self.fuel(values, settings.SAMPLE_FUEL)
        )


class HaltMatrixCommand(UniverseCommand):

    GROUP = "universe"
    NAME = "halt-matrix"
    HELP = "Bounded halting table of the first n programs and its diagonal language"

    ARGUMENTS = [
        {
            'name': '--n',
            'type': INT,
            'required': True,
            'help': "Number of programs (rows and columns)",
            'validation': 'validate_n',
        },
        {
            'name': '--fuel',
            'type': INT,
            'required': True,
            'help': "Step budget for every run",
            'validation': 'validate_natural',
        },
    ]

    def validate_n(self, value):
        if not 1 <= value <= settings.HALT_MATRIX_MAX:
            return False, f"must be between 1 and {settings.HALT_MATRIX_MAX}, got {value}"
        return True, "OK"

    def run(self, values):
        return halt_matrix_result(values["n"], values["fuel"])

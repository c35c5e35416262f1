from lawvere.commands.base import BOOLEAN, FORMULA, INT, BaseCommand
from lawvere.formal import sentences
from lawvere.formal.lemma import free_variables
from lawvere.formal.syntax import variable_name
from lawvere.formal.text import formula_text

PRINT_NUMBER = {
    'name': '--print-number',
    'type': BOOLEAN,
    'help': "Include the Goedel numbers of G and C",
}


class FormalCommand(BaseCommand):
    """Diagonal sentence of one of the named formulas E(x)"""

    GROUP = ""
    ARGUMENTS = [PRINT_NUMBER]

    def builder_args(self, values):
        return ()

    def run(self, values):
        return sentences.named_sentence(self.NAME, *self.builder_args(values))

    def verify(self, certificate):
        return certificate.verified and certificate.recheck()

    def payload(self, certificate, values):
        return certificate.to_dict(numbers=values["print_number"])


class GoedelCommand(FormalCommand):

    GROUP = "formal"
    NAME = "goedel"
    HELP = "C says: no y proves me"


class RosserCommand(FormalCommand):

    GROUP = "formal"
    NAME = "rosser"
    HELP = "C says: every proof of me is preceded by a proof of my negation"


class TarskiCommand(FormalCommand):

    GROUP = "formal"
    NAME = "tarski"
    HELP = "C says: I am not true"


class ParikhCommand(FormalCommand):

    GROUP = "formal"
    NAME = "parikh"
    HELP = "C says: I have no proof shorter than n"

    ARGUMENTS = [
        {
            'name': '--n',
            'type': INT,
            'required': True,
            'help': "Proof length bound",
            'validation': 'validate_positive',
        },
        PRINT_NUMBER,
    ]

    def builder_args(self, values):
        return (values["n"],)


class CurryCommand(FormalCommand):

    GROUP = "formal"
    NAME = "curry"
    HELP = "C says: if I am true then A"

    ARGUMENTS = [
        {
            'name': '--a',
            'type': FORMULA,
            'required': True,
            'help': "A closed formula, e.g. \"(P 0)\"",
            'validation': 'validate_closed',
        },
        PRINT_NUMBER,
    ]

    def validate_closed(self, value):
        free = sorted(variable_name(v) for v in free_variables(value))
        if free:
            return False, f"must be a closed formula, {', '.join(free)} occur free"
        return True, "OK"

    def builder_args(self, values):
        return (values["a"],)

    def payload(self, certificate, values):
        doc = super().payload(certificate, values)
        doc["unfolded"] = formula_text(sentences.curry_unfolding(certificate))
        return doc

"""The JSON report every command writes to stdout."""
from dataclasses import dataclass
import json

from lawvere.core.json import LawvereJSONEncoder


@dataclass(frozen=True)
class Report:
    command: str
    inputs_digest: str
    certificate: dict
    verified: bool

    def to_dict(self):
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "certificate": self.certificate,
            "verified": self.verified,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, cls=LawvereJSONEncoder) + "\n"


def build_report(command, certificate, values, argv, digest):
    """Assemble a report, re-running the command's check on the certificate"""
    return Report(
        command=" ".join(argv),
        inputs_digest=digest,
        certificate=command.payload(certificate, values),
        verified=command.verify(certificate),
    )

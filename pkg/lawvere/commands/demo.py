from lawvere.commands.base import BOOLEAN, BaseCommand
from lawvere.instances.certificates import certificate_text
from lawvere.instances.demos import DEMOS, demo_path, run_demo


class DemoCommand(BaseCommand):

    GROUP = "demo"
    HELP = "Run one of the classical diagonal arguments on its bundled table"

    ARGUMENTS = [
        {
            'name': 'demo',
            'choices': list(DEMOS),
            'help': "Which instance to run",
        },
        {
            'name': '--text',
            'type': BOOLEAN,
            'help': "Print a readable certificate instead of the JSON report",
        },
    ]

    def input_paths(self, values):
        return [demo_path(values["demo"])]

    def run(self, values):
        return run_demo(values["demo"])

    def render_text(self, certificate, values):
        if values["text"]:
            return certificate_text(certificate)
        return None

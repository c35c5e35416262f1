from lawvere.commands.base import BOOLEAN, PATH, BaseCommand
from lawvere.diagonal.matrix_file import diagonalize, load_matrix_file
from lawvere.logs import get_logger

logger = get_logger("lawvere")


class DiagonalCommand(BaseCommand):

    GROUP = "diagonal"
    HELP = "Build the diagonal map of a matrix file and certify that it is no column"

    ARGUMENTS = [
        {
            'name': '--input',
            'type': PATH,
            'required': True,
            'help': "JSON matrix file with y_labels, t_labels, alpha and f (optionally s_labels, beta, beta_bar)",
        },
        {
            'name': '--section',
            'type': BOOLEAN,
            'help': "Diagonalize along the file's section beta instead of the diagonal",
        },
    ]

    def input_paths(self, values):
        return [values["input"]]

    def run(self, values):
        problem = load_matrix_file(values["input"])
        logger.debug(f"Loaded {problem.f.rows.size}x{problem.f.cols.size} matrix from {values['input']}")
        return diagonalize(problem, use_section=values["section"])

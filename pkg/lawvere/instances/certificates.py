"""Plain text certificates for the demo instances, rendered with Jinja2."""
import jinja2

from lawvere.settings import resource_path

TEMPLATE_DIR = resource_path("instances/templates")

environment = jinja2.Environment(
    loader=jinja2.FileSystemLoader(TEMPLATE_DIR),
    undefined=jinja2.StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)

HEADINGS = {
    "powerset": (
        "Cantor: no enumeration of subsets is complete",
        "G = {n : n not in S_n} is missing from the family S_0 ... S_{n-1}.",
    ),
    "russell": (
        "Russell: the sets that are not members of themselves",
        "f(a, b) = 1 iff a is a member of b; g collects the sets outside themselves.",
    ),
    "grelling": (
        "Grelling: heterological words",
        "f(a, b) = 1 iff word b describes word a; g picks the words that do not describe themselves.",
    ),
    "liar": (
        "The Liar",
        "f(a, b) = 1 iff sentence b is true of sentence a; g is the sentence 'I am not true of myself'.",
    ),
    "strong-liar": (
        "The Strong Liar",
        "Values are T(rue), M(eaningless) and F(alse); alpha(T) = F and alpha(M) = alpha(F) = T.",
    ),
    "richard": (
        "Richard: a real number no listed description names",
        "f(n, m) is the n-th decimal of the m-th real; alpha(i) = 9 - i.",
    ),
    "nonre": (
        "A language no listed program accepts",
        "f(i, j) = 1 iff program j halts on input i within the fuel bound; divergence is only bounded evidence.",
    ),
}


def _summary(result):
    extra = result.extra
    if "members" in extra:
        return "g = {" + ", ".join(str(m) for m in extra["members"]) + "}"
    if "G" in extra:
        return "G = {" + ", ".join(str(m) for m in extra["G"]) + "}"
    if "number" in extra:
        return f"g = {extra['number']}... and f(4, 15) = {extra['pi_column_row_4']}"
    return ""


def certificate_text(result):
    """Render a DemoResult as a human readable certificate"""
    title, description = HEADINGS[result.name]
    f, g = result.f, result.report.g
    rows = [
        {"label": f.rows.label(t), "diagonal": f.y.label(f[t, t]), "g": g.y.label(g.values[t])}
        for t in f.rows
    ]
    witnesses = [
        {
            "column": f.cols.label(s),
            "row": f.rows.label(t),
            "g": g.y.label(g.values[t]),
            "f": f.y.label(f[t, s]),
        }
        for s, t in enumerate(result.report.witness)
    ]
    template = environment.get_template("diagonal.txt")
    return template.render(
        title=title,
        description=description,
        rows=rows,
        witnesses=witnesses,
        summary=_summary(result),
        verified=result.verified,
    )

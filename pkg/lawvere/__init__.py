from lawvere.core.numerals import allow_long_numerals

allow_long_numerals()

from lawvere.cli import main  # noqa: E402,F401

"""
clean_filename Url: https://gist.github.com/wassname/1393c4a57cfcbf03641dbc31886123b8
"""
import hashlib
import string
import unicodedata

valid_filename_chars = "-_.() %s%s" % (string.ascii_letters, string.digits)
char_limit = 255


def clean_filename(filename, whitelist=valid_filename_chars, replace=' '):
    """Generate a valid filename from the input filename variable"""

    # replace spaces
    for r in replace:
        filename = filename.replace(r, '_')

    # keep only valid ascii chars
    cleaned_filename = unicodedata.normalize('NFKD', filename).encode('ASCII', 'ignore').decode()

    # keep only whitelisted chars
    cleaned_filename = ''.join(c for c in cleaned_filename if c in whitelist)
    return cleaned_filename[:char_limit]


def inputs_digest(argv, paths=()):
    """Digest of a command line plus the raw bytes of every file it read.

    The command words are joined by single spaces; each file contributes a
    newline followed by its bytes, in the order given.
    """
    h = hashlib.sha256()
    h.update(" ".join(argv).encode("utf-8"))
    for p in paths:
        h.update(b"\n")
        with open(p, "rb") as f:
            h.update(f.read())
    return "sha256:" + h.hexdigest()

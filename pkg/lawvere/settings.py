import json
import os
from pathlib import Path
import sys

import appdirs

from lawvere.core.exceptions import LawvereError

# first figure out where the package is running from.  This will differ
# when the application is frozen by pyinstaller/cx_freeze
frozen = getattr(sys, 'frozen', '')
if not frozen:
    root = os.path.abspath(os.path.dirname(__file__))
    frozen = False
else:
    frozen = True
    try:
        # pyinstaller
        root = os.path.join(sys._MEIPASS, "lawvere")
    except Exception:
        # cx_freeze
        root = os.path.join(os.path.dirname(sys.executable), "lawvere")


def resource_path(relative_path):
    """Get absolute path to a bundled resource, works for dev and for PyInstaller"""
    return os.path.join(root, relative_path)


def get_config_dir():
    """Return a Path object corresponding to the directory where program data files are stored"""
    return Path(appdirs.user_config_dir(Settings.APPNAME, Settings.VENDOR))


def get_settings_file_path():
    return get_config_dir() / "settings.json"


class Settings:
    """A class to hold Lawvere settings.  Default settings can be
    overridden using a settings.json file"""

    ROOT = root  # where is the package directory
    FROZEN = frozen
    DATA = resource_path(os.path.join("instances", "data"))  # bundled demo tables

    LOG_LEVEL = "info"  # debug | info | warning | error | critical
    LOG_TO_CONSOLE = False  # should logs be written to stderr as well as log files?

    VERSION = "v0.1.0"
    VENDOR = "Lawvere Project"
    APPNAME = "lawvere"

    DEFAULT_FUEL = 10_000  # fuel for universe commands run without --fuel
    SAMPLE_INPUTS = 6  # inputs 0..SAMPLE_INPUTS-1 used when comparing two programs
    SAMPLE_FUEL = 100_000
    RETRY_FUEL = 1_000_000  # second attempt unless both sides of a sample are equal values
    QUINE_FUEL = 1_000_000
    HALT_MATRIX_MAX = 64

    def __init__(self):
        """Load settings.json file and override any settings defined in it"""

        self.fname = get_settings_file_path()

        # if the settings.json file doesn't exist, create it and stick a minimal json doc in it
        if not self.fname.exists():
            try:
                self.fname.parent.mkdir(parents=True, exist_ok=True)
                with open(self.fname, "w") as f:
                    f.write(json.dumps({
                        "LOG_LEVEL": "info",
                        "LOG_TO_CONSOLE": False,
                    }, indent=2))
            except OSError:
                # read only home directories still get the defaults
                return

        # now load settings file
        try:
            with open(self.fname, 'rt') as f:
                settings = json.load(f)
        except OSError:
            return
        except ValueError as e:
            raise LawvereError("Settings file %s is not valid json. Error was %s" % (self.fname, str(e)))

        # override any settings user has set in settings.json
        for k, v in settings.items():
            if hasattr(self, k):
                setattr(self, k, v)

    @classmethod
    def defaults(cls):
        """Return the class level defaults (ignoring any settings.json overrides)"""
        return {k: v for k, v in vars(cls).items() if k.isupper()}

    def data_path(self, file_name):
        """return full path for a bundled data file"""
        return os.path.join(self.DATA, file_name)

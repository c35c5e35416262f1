import importlib

from lawvere.logs import get_logger

logger = get_logger("lawvere")


# dictionary to hold all the registered command types
__COMMAND_REGISTRY = {}

# modules defining the built in commands
COMMAND_MODULES = [
    "lawvere.commands.diagonal",
    "lawvere.commands.demo",
    "lawvere.commands.universe",
    "lawvere.commands.formal",
]


def register_command_type(target_class):
    """Called when BaseCommand is subclassed to add the new command type to the registry"""
    if target_class.__name__ in __COMMAND_REGISTRY:
        msg = "Trying to register %s but a class with the name %s already exists in the command registry" % (
            target_class, target_class.__name__
        )
        raise ValueError(msg)
    __COMMAND_REGISTRY[target_class.__name__] = target_class


def get_command_types():
    """Return the command registry (in form {'CommandClassName': CommandClass})"""
    return __COMMAND_REGISTRY


def get_commands():
    """Registered commands that can be run, i.e. those with a GROUP, ordered by (GROUP, NAME)"""
    commands = [c for c in __COMMAND_REGISTRY.values() if c.GROUP]
    return sorted(commands, key=lambda c: (c.GROUP, c.NAME))


def register_command_types():
    """Import every built in command module so its commands register themselves"""
    for name in COMMAND_MODULES:
        logger.debug(f"Importing commands from {name}")
        importlib.import_module(name)

"""The commands of the command line."""

##############################################################################
# Python imports.
from types import ModuleType

##############################################################################
# Local imports.
from . import ablate, evaluate, features, ingest, label, rank, repro_tables, synth, train
from .common import setup_logging

##############################################################################
COMMANDS: tuple[ModuleType, ...] = (
    ingest,
    features,
    label,
    train,
    evaluate,
    rank,
    ablate,
    synth,
    repro_tables,
)
"""The modules of the commands, in the order they're listed in help."""

##############################################################################
# Exports.
__all__ = ["COMMANDS", "setup_logging"]

### __init__.py ends here

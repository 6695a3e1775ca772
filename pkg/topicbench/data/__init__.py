"""Code relating to the data stored by the application."""

##############################################################################
# Local imports.
from .config import Configuration, load_configuration, save_configuration
from .exit_states import ExitStates
from .locations import config_dir, data_dir, packaged_resource, resource
from .manifest import RunManifest, file_digest

##############################################################################
# Exports.
__all__ = [
    "config_dir",
    "Configuration",
    "data_dir",
    "ExitStates",
    "file_digest",
    "load_configuration",
    "packaged_resource",
    "resource",
    "RunManifest",
    "save_configuration",
]

### __init__.py ends here

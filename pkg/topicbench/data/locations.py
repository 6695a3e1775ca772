"""Where topicbench keeps its configuration and local resources."""

##############################################################################
# Python imports.
from pathlib import Path

##############################################################################
# XDG imports.
from xdg_base_dirs import xdg_config_home, xdg_data_home


##############################################################################
def _home_within(root: Path) -> Path:
    """Make sure topicbench has a directory under an XDG root."""
    (home := root / "topicbench").mkdir(parents=True, exist_ok=True)
    return home


##############################################################################
def data_dir() -> Path:
    """The directory that local lexicons and wordlists are looked up in.

    Returns:
        The directory, created if needed.
    """
    return _home_within(xdg_data_home())


##############################################################################
def config_dir() -> Path:
    """The directory that holds the default configuration file.

    Returns:
        The directory, created if needed.
    """
    return _home_within(xdg_config_home())


##############################################################################
def packaged_resource(name: str) -> Path:
    """The path to a resource file as shipped with the package.

    Args:
        name: The name of the resource.

    Returns:
        The path to the resource.
    """
    return Path(__file__).parent.parent / "resources" / name


##############################################################################
def resource(name: str) -> Path:
    """The path to a resource file.

    Args:
        name: The name of the resource.

    Returns:
        The path to the resource.

    Note:
        A copy of the resource placed in the data directory wins over the
        one shipped with the package.
    """
    if (local := data_dir() / name).exists():
        return local
    return packaged_resource(name)


### locations.py ends here

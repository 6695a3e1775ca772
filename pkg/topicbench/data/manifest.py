"""Code relating to the manifest written beside every run's output."""

##############################################################################
# Python imports.
import os
from dataclasses import dataclass, field
from datetime import datetime
from hashlib import sha256
from json import JSONEncoder, dumps, loads
from pathlib import Path
from tempfile import NamedTemporaryFile
from typing import Any, Iterable

##############################################################################
# pytz imports.
from pytz import UTC

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from .. import __version__
from .config import Configuration


##############################################################################
def file_digest(path: Path) -> str:
    """Calculate the digest of a file.

    Args:
        path: The path to the file.

    Returns:
        The hex SHA-256 digest of the file's content.
    """
    digest = sha256()
    with path.open("rb") as source:
        for block in iter(lambda: source.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


##############################################################################
@dataclass
class RunManifest:
    """The record of a single command run."""

    command: str
    """The command that was run."""

    configuration: dict[str, Any]
    """The configuration the command ran with."""

    seed: int
    """The seed the command ran with."""

    inputs: dict[str, str] = field(default_factory=dict)
    """The digests of the input files, keyed by path."""

    outputs: dict[str, str] = field(default_factory=dict)
    """The digests of the output files, keyed by path."""

    version: str = __version__
    """The version of topicbench that did the run."""

    started: datetime = field(default_factory=lambda: datetime.now(UTC))
    """When the run started."""

    finished: datetime | None = None
    """When the run finished."""

    @classmethod
    def start(
        cls, command: str, configuration: Configuration, inputs: Iterable[Path] = ()
    ) -> Self:
        """Start the manifest for a run.

        Args:
            command: The command being run.
            configuration: The configuration in use.
            inputs: The input files of the run.

        Returns:
            The manifest.
        """
        return cls(
            command=command,
            configuration=configuration.as_json,
            seed=configuration.seed,
            inputs={str(path): file_digest(path) for path in inputs},
        )

    class _Encoder(JSONEncoder):
        """Encoder for turning the manifest into JSON data."""

        def default(self, o: object) -> Any:
            """Handle unknown values.

            Args:
                o: The object to handle.
            """
            return o.isoformat() if isinstance(o, datetime) else super().default(o)

    @property
    def as_json(self) -> dict[str, Any]:
        """The manifest in JSON-friendly form."""
        return {
            "command": self.command,
            "configuration": self.configuration,
            "seed": self.seed,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "version": self.version,
            "started": self.started,
            "finished": self.finished,
        }

    @classmethod
    def load(cls, path: Path) -> Self:
        """Load a manifest.

        Args:
            path: The path to load from.

        Returns:
            The manifest.
        """
        data = loads(path.read_text(encoding="utf-8"))
        return cls(
            command=data["command"],
            configuration=data["configuration"],
            seed=data["seed"],
            inputs=data["inputs"],
            outputs=data["outputs"],
            version=data["version"],
            started=datetime.fromisoformat(data["started"]),
            finished=None
            if data["finished"] is None
            else datetime.fromisoformat(data["finished"]),
        )

    def finish(self, directory: Path, outputs: Iterable[Path] = ()) -> Path:
        """Finish the run and write the manifest.

        Args:
            directory: The directory to write the manifest into.
            outputs: The output files of the run.

        Returns:
            The path to the manifest.

        Note:
            The manifest is written to a temporary file and then moved into
            place, so a partial manifest is never left behind.
        """
        self.finished = datetime.now(UTC)
        self.outputs = {str(path): file_digest(path) for path in outputs}
        directory.mkdir(parents=True, exist_ok=True)
        with NamedTemporaryFile(
            "w", encoding="utf-8", dir=directory, suffix=".tmp", delete=False
        ) as target:
            target.write(dumps(self.as_json, indent=4, cls=self._Encoder))
        os.replace(target.name, manifest := directory / "manifest.json")
        return manifest


### manifest.py ends here

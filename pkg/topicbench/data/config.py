"""Code relating to the application's configuration file."""

##############################################################################
# Python imports.
from dataclasses import asdict, dataclass, field, fields, replace
from functools import lru_cache
from json import JSONDecodeError, dumps, loads
from pathlib import Path
from typing import Any

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..errors import ConfigurationError
from .locations import config_dir


##############################################################################
@dataclass(frozen=True)
class Configuration:
    """The configuration data for the application."""

    bucket_period: int = 86400
    """The length of a time bucket, in seconds."""

    series_window: int = 5
    """The number of buckets in the time-series feature window."""

    denoise_window: int = 5
    """The trailing window used when denoising candidate topics."""

    denoise_min_active: int = 1
    """The minimum number of active buckets in the denoise window."""

    denoise_min_count: int = 1
    """The minimum count a candidate needs in the current bucket."""

    min_topic_count: int = 1
    """The minimum corpus-wide message count for a hashtag to be a topic."""

    labeling_mode: str = "quantile"
    """How popular is decided; either `quantile` or `threshold`."""

    labeling_quantile: float = 0.9
    """The quantile used when labeling by quantile."""

    labeling_threshold: int = 50
    """The count used when labeling by threshold."""

    learning_rate: float = 0.1
    """The gradient descent step size."""

    iterations: int = 500
    """The number of gradient descent iterations."""

    l2: float = 1e-3
    """The L2 regularisation strength."""

    seed: int = 0
    """The seed used by every seeded part of a run."""

    folds: int = 10
    """The number of cross-validation folds."""

    lda_topics: int = 20
    """The number of LDA topics."""

    lda_iterations: int = 50
    """The number of Gibbs sweeps used to train the topic model."""

    lda_fold_in_iterations: int = 20
    """The number of Gibbs sweeps used to infer a topic vector."""

    lda_alpha: float = 0.1
    """The document-topic Dirichlet prior."""

    lda_beta: float = 0.01
    """The topic-word Dirichlet prior."""

    lda_max_documents: int = 2000
    """The most documents the topic model is trained on."""

    lda_fold_in_max_tokens: int = 500
    """The most tokens used when inferring a topic vector."""

    pagerank_damping: float = 0.85
    """The PageRank damping factor."""

    pagerank_tolerance: float = 1e-9
    """The PageRank convergence tolerance."""

    rmse_mode: str = "labels"
    """What RMSE is computed over; either `labels` or `scores`."""

    ablation_mode: str = "dimension"
    """The unit removed by ablation; either `dimension` or `feature`."""

    workers: int = 0
    """The number of parallel workers; zero means all available cores."""

    disabled_categories: list[str] = field(default_factory=list)
    """Feature categories that are zero-filled rather than extracted."""

    lexicon: str = ""
    """Path to a sentiment lexicon; empty means the shipped one."""

    wordlist: str = ""
    """Path to a hashtag segmentation wordlist; empty means the shipped one."""

    emoticons: list[str] = field(default_factory=list)
    """The emoticons counted in message text; empty means the built-in set."""

    language_allowlist: list[str] = field(default_factory=list)
    """The languages kept when ingesting; empty keeps every message."""

    def __post_init__(self) -> None:
        """Validate the configuration.

        Raises:
            ConfigurationError: If a value is out of range.
        """
        problems = []
        if self.bucket_period <= 0:
            problems.append("bucket_period must be positive")
        if self.series_window < 1:
            problems.append("series_window must be at least 1")
        if not 0 <= self.denoise_min_active <= self.denoise_window:
            problems.append("denoise_min_active must be within the denoise window")
        if self.labeling_mode not in ("quantile", "threshold"):
            problems.append("labeling_mode must be quantile or threshold")
        if not 0 < self.labeling_quantile < 1:
            problems.append("labeling_quantile must be within (0, 1)")
        if self.labeling_threshold < 1:
            problems.append("labeling_threshold must be at least 1")
        if self.folds < 2:
            problems.append("folds must be at least 2")
        if self.lda_topics < 1:
            problems.append("lda_topics must be at least 1")
        if not 0 < self.pagerank_damping < 1:
            problems.append("pagerank_damping must be within (0, 1)")
        if self.rmse_mode not in ("labels", "scores"):
            problems.append("rmse_mode must be labels or scores")
        if self.ablation_mode not in ("dimension", "feature"):
            problems.append("ablation_mode must be dimension or feature")
        if self.workers < 0:
            problems.append("workers can't be negative")
        if any(not emoticon.strip() for emoticon in self.emoticons):
            problems.append("emoticons can't be blank")
        if any(not language.strip() for language in self.language_allowlist):
            problems.append("language_allowlist can't hold blank languages")
        if problems:
            raise ConfigurationError("; ".join(problems))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create a configuration from JSON data.

        Args:
            data: The data to create the configuration from.

        Returns:
            The configuration.

        Raises:
            ConfigurationError: If the data holds unknown keys.
        """
        if unknown := set(data) - {known.name for known in fields(cls)}:
            raise ConfigurationError(
                f"Unknown configuration keys: {', '.join(sorted(unknown))}"
            )
        return cls(**data)

    @property
    def as_json(self) -> dict[str, Any]:
        """The configuration in JSON-friendly form."""
        return asdict(self)

    def with_overrides(self, **overrides: Any) -> Self:
        """Apply overrides, ignoring any that are `None`.

        Args:
            overrides: The values to override.

        Returns:
            A new configuration.
        """
        return replace(
            self, **{name: value for name, value in overrides.items() if value is not None}
        )


##############################################################################
def configuration_file() -> Path:
    """The path to the file that holds the application configuration.

    Returns:
        The path to the configuration file.
    """
    return config_dir() / "configuration.json"


##############################################################################
def save_configuration(
    configuration: Configuration, path: Path | None = None
) -> Configuration:
    """Save the given configuration.

    Args:
        configuration: The configuration to store.
        path: Where to store it; defaults to the configuration file.

    Returns:
        The configuration.
    """
    load_configuration.cache_clear()
    (path or configuration_file()).write_text(
        dumps(configuration.as_json, indent=4), encoding="utf-8"
    )
    return load_configuration(path)


##############################################################################
@lru_cache(maxsize=None)
def load_configuration(path: Path | None = None) -> Configuration:
    """Load the configuration.

    Args:
        path: The file to load from; defaults to the configuration file.

    Returns:
        The configuration.

    Raises:
        ConfigurationError: If the configuration can't be read.

    Note:
        As a side-effect, if the default configuration doesn't exist a
        default one will be saved to storage. An explicitly-named file that
        doesn't exist is an error.

        This function is designed so that it's safe and low-cost to
        repeatedly call it. The configuration is cached and will only be
        loaded from storage when necessary.
    """
    source = path or configuration_file()
    if not source.exists():
        if path is not None:
            raise ConfigurationError(f"No such configuration file: {path}")
        return save_configuration(Configuration())
    try:
        data = loads(source.read_text(encoding="utf-8"))
    except (OSError, JSONDecodeError) as error:
        raise ConfigurationError(f"Unable to read {source}: {error}") from error
    if not isinstance(data, dict):
        raise ConfigurationError(f"{source} doesn't hold a JSON object")
    return Configuration.from_json(data)


### config.py ends here

"""The schema of the feature space."""

##############################################################################
# Python imports.
from enum import Enum
from hashlib import sha256
from typing import Final, Iterable, NamedTuple


##############################################################################
class Category(Enum):
    """The categories that features fall into."""

    CONTENT = "Content"
    USER = "User"
    NETWORK = "Network"
    MEME = "Meme"
    HASHTAG = "Hashtag"
    TIMESERIES = "TimeSeries"


##############################################################################
class FeatureSpec(NamedTuple):
    """The description of one named feature."""

    code: str
    """The short code of the feature, for example `c1`."""

    name: str
    """The name of the feature."""

    description: str
    """A human-readable description of the feature."""

    category: Category
    """The category the feature belongs to."""

    complexity: str
    """How costly the feature is to extract."""

    temporal: bool
    """Does the feature vary with time?"""

    graphic: bool
    """Does the feature describe the topic's interaction graph?"""

    fraction: bool = False
    """Are the feature's values fractions in [0, 1]?"""

    dimensions: tuple[str, ...] = ()
    """The suffixes of a multi-dimension feature; empty for a scalar."""

    @property
    def columns(self) -> tuple[str, ...]:
        """The column names of the feature."""
        if not self.dimensions:
            return (f"F_{self.code}",)
        return tuple(f"F_{self.code}.{dimension}" for dimension in self.dimensions)

    @property
    def width(self) -> int:
        """The number of dimensions of the feature."""
        return len(self.columns)


##############################################################################
TOPIC_DIMENSIONS: Final[int] = 20
"""The number of dimensions of the topic vector."""

EXPOSURE_DIMENSIONS: Final[int] = 15
"""The number of dimensions of the exposure vector."""

_C, _U, _N, _M, _H, _T = Category

FEATURES: Final[tuple[FeatureSpec, ...]] = (
    FeatureSpec("c1", "NumEmo", "Count of Emoticons", _C, "Medium", True, False),
    FeatureSpec("c2", "NumSpeSig", "Count of Special Signals", _C, "Medium", True, False),
    FeatureSpec(
        "c3", "SentiOHash", "Sentiment of Hashtag", _C, "Medium", False, False,
        dimensions=("pos", "neg"),
    ),
    FeatureSpec(
        "c4", "Topics", "Topic Vector", _C, "High", False, False, fraction=True,
        dimensions=tuple(f"D{index}" for index in range(1, TOPIC_DIMENSIONS + 1)),
    ),
    FeatureSpec("u1", "ActOUser", "Activity of User", _U, "Medium", True, True),
    FeatureSpec("u2", "MaxOF", "Max of Followers", _U, "Medium", True, True),
    FeatureSpec("u3", "AvOF", "Average of Followers", _U, "Medium", True, True),
    FeatureSpec("h1", "Length", "Length of Hashtag", _H, "Low", False, False),
    FeatureSpec(
        "h2", "multiFreq", "Co-occurrence Frequency", _H, "Medium", True, False,
        fraction=True,
    ),
    FeatureSpec("h3", "Clarity", "Clarity", _H, "High", False, False),
    FeatureSpec("h4", "ExtClar", "Extension Clarity", _H, "Quite High", False, False),
    FeatureSpec("h5", "NumInHash", "Number in Hashtag", _H, "Low", False, False),
    FeatureSpec("h6", "NumOWord", "Number of Words", _H, "Low", False, False),
    FeatureSpec("n1", "Degree", "Average Degree", _N, "High", True, True),
    FeatureSpec("n2", "Density", "Graph Density", _N, "High", True, True, fraction=True),
    FeatureSpec("n3", "Order", "Graph Order", _N, "High", True, True),
    FeatureSpec("n4", "EntrODD", "Entropy of Degree Distribution", _N, "High", True, True),
    FeatureSpec("n5", "NumOBUser", "Number of Border User", _N, "Quite High", True, True),
    FeatureSpec(
        "n6", "ExpVec", "Exposure vector", _N, "Quite High", True, True,
        dimensions=tuple(f"D{index}" for index in range(1, EXPOSURE_DIMENSIONS + 1)),
    ),
    FeatureSpec(
        "n7", "CompFrac", "Component Fraction", _N, "High", True, True, fraction=True
    ),
    FeatureSpec("n8", "Weight", "Edge Weight", _N, "High", True, True),
    FeatureSpec(
        "n9", "TriFrac", "Triangle Fraction", _N, "High", True, True, fraction=True
    ),
    FeatureSpec("m1", "NumOUser", "Number of User", _M, "Medium", True, False),
    FeatureSpec(
        "m2", "FracOUser", "Fraction of User", _M, "High", True, False, fraction=True
    ),
    FeatureSpec("m3", "NumO@", "Number of @", _M, "Medium", True, False),
    FeatureSpec("m4", "FracO@", "Fraction of @", _M, "Medium", True, False, fraction=True),
    FeatureSpec("m5", "NumORT", "Number of Retweet", _M, "Medium", True, False),
    FeatureSpec(
        "m6", "FracORT", "Fraction of Retweet", _M, "Medium", True, False, fraction=True
    ),
    FeatureSpec("m7", "NumOT", "Number of Tweet", _M, "Medium", True, False),
    FeatureSpec(
        "m8", "FracOURL", "Fraction of URL", _M, "Medium", True, False, fraction=True
    ),
    FeatureSpec("t1", "Mn", "Mean of the fitted series", _T, "High", True, False),
    FeatureSpec("t2", "MnD", "Deviation of the fitted series", _T, "High", True, False),
    FeatureSpec("t3", "Sd", "Mean of the absolute derivative", _T, "High", True, False),
    FeatureSpec(
        "t4", "SdD", "Deviation of the absolute derivative", _T, "High", True, False
    ),
)
"""Every feature, in schema order."""


##############################################################################
def schema_hash(columns: Iterable[str]) -> str:
    """Calculate the hash of a list of columns.

    Args:
        columns: The column names, in order.

    Returns:
        A short hex digest identifying the columns.
    """
    return sha256("\n".join(columns).encode()).hexdigest()[:16]


##############################################################################
class FeatureSchema:
    """The ordered dimensions of the feature space."""

    def __init__(self, features: Iterable[FeatureSpec] = FEATURES) -> None:
        """Initialise the schema.

        Args:
            features: The features of the schema, in order.
        """
        self._features = tuple(features)
        """The features of the schema."""
        self._columns = tuple(
            column for feature in self._features for column in feature.columns
        )
        """The column names of the schema."""
        self._owners: dict[str, FeatureSpec] = {
            column: feature for feature in self._features for column in feature.columns
        }
        """The feature that owns each column."""

    @property
    def features(self) -> tuple[FeatureSpec, ...]:
        """The features of the schema."""
        return self._features

    @property
    def columns(self) -> tuple[str, ...]:
        """The column names of the schema, in order."""
        return self._columns

    @property
    def hash(self) -> str:
        """The hash of the schema."""
        return schema_hash(self._columns)

    def feature(self, code: str) -> FeatureSpec:
        """Get a feature by its code."""
        for feature in self._features:
            if feature.code == code:
                return feature
        raise KeyError(code)

    def owner(self, column: str) -> FeatureSpec:
        """Get the feature that owns a column."""
        return self._owners[column]

    def index(self, column: str) -> int:
        """Get the position of a column."""
        return self._columns.index(column)

    def block(self, code: str) -> list[int]:
        """Get the positions of every column of a feature."""
        return [self.index(column) for column in self.feature(code).columns]

    def category_columns(self, category: Category) -> list[int]:
        """Get the positions of every column of a category."""
        return [
            index
            for index, column in enumerate(self._columns)
            if self._owners[column].category == category
        ]

    def fraction_columns(self) -> list[int]:
        """Get the positions of every fraction-typed column."""
        return [
            index
            for index, column in enumerate(self._columns)
            if self._owners[column].fraction
        ]

    def describe(self, column: str) -> str:
        """Describe a column for a human.

        Args:
            column: The column name.

        Returns:
            A description such as `F_c4: D-15 of Topic Vector`.
        """
        feature = self._owners[column]
        if feature.dimensions:
            suffix = column.rsplit(".", 1)[1]
            if suffix.startswith("D"):
                return f"F_{feature.code}: D-{suffix[1:]} of {feature.description}"
            return f"F_{feature.code}: {feature.description} ({suffix})"
        return f"F_{feature.code}: {feature.description}"

    def __len__(self) -> int:
        """The number of dimensions."""
        return len(self._columns)


##############################################################################
SCHEMA: Final[FeatureSchema] = FeatureSchema()
"""The full 68-dimension feature schema."""

### schema.py ends here

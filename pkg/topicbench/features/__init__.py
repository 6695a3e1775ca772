"""The 68-dimension feature space and the code that extracts it."""

##############################################################################
# Local imports.
from .content import (
    EMOTICONS,
    ContentFeatures,
    content_features,
    count_emoticons,
    count_special_signals,
    emoticon_pattern,
)
from .hashtag import (
    CorpusStats,
    HashtagFeatures,
    Wordlist,
    hashtag_features,
    kl_divergence,
    segment,
)
from .lda import TopicModel, lda_fit, topic_vector
from .matrix import FeatureExtractor, FeatureMatrix, feature_matrix, feature_matrix_range
from .meme import MemeFeatures, meme_features
from .network import NetworkFeatures, border_users, exposure, network_features, topic_graph
from .schema import (
    EXPOSURE_DIMENSIONS,
    FEATURES,
    SCHEMA,
    TOPIC_DIMENSIONS,
    Category,
    FeatureSchema,
    FeatureSpec,
    schema_hash,
)
from .sentiment import Sentiment, SentimentLexicon
from .timeseries import TimeSeriesFeatures, timeseries_features
from .users import UserFeatures, pagerank, pagerank_links, user_features

##############################################################################
# Exports.
__all__ = [
    "border_users",
    "Category",
    "content_features",
    "ContentFeatures",
    "CorpusStats",
    "count_emoticons",
    "count_special_signals",
    "EMOTICONS",
    "emoticon_pattern",
    "exposure",
    "EXPOSURE_DIMENSIONS",
    "feature_matrix",
    "feature_matrix_range",
    "FeatureExtractor",
    "FeatureMatrix",
    "FEATURES",
    "FeatureSchema",
    "FeatureSpec",
    "hashtag_features",
    "HashtagFeatures",
    "kl_divergence",
    "lda_fit",
    "meme_features",
    "MemeFeatures",
    "network_features",
    "NetworkFeatures",
    "pagerank",
    "pagerank_links",
    "SCHEMA",
    "schema_hash",
    "segment",
    "Sentiment",
    "SentimentLexicon",
    "timeseries_features",
    "TimeSeriesFeatures",
    "topic_graph",
    "topic_vector",
    "TOPIC_DIMENSIONS",
    "TopicModel",
    "user_features",
    "UserFeatures",
    "Wordlist",
]

### __init__.py ends here

"""Code for ingesting corpora and building datasets from them."""

##############################################################################
# Local imports.
from .followers import FollowerReport, parse_followers
from .interactions import build_interaction_graph
from .loader import build_dataset, load_dataset
from .messages import parse_messages
from .report import IngestReport
from .tokens import strip_urls, tokenize
from .topics import extract_topics

##############################################################################
# Exports.
__all__ = [
    "build_dataset",
    "build_interaction_graph",
    "extract_topics",
    "FollowerReport",
    "IngestReport",
    "load_dataset",
    "parse_followers",
    "parse_messages",
    "strip_urls",
    "tokenize",
]

### __init__.py ends here

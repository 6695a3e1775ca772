"""Code for building the interaction graph of a corpus."""

##############################################################################
# Python imports.
from typing import Iterable

##############################################################################
# Local imports.
from ..core import InteractionGraph, Message, interactions


##############################################################################
def build_interaction_graph(messages: Iterable[Message]) -> InteractionGraph:
    """Build the interaction graph of a corpus.

    Args:
        messages: The messages of the corpus.

    Returns:
        A graph with a node for every author and every mentioned user, and
        an edge weighted by the number of times one user mentioned another.
    """
    messages = list(messages)
    return InteractionGraph.from_interactions(
        (message.author for message in messages), interactions(messages)
    )


### interactions.py ends here

"""The user features of a topic, and the PageRank they depend on."""

##############################################################################
# Python imports.
from typing import Iterable, Mapping, NamedTuple

##############################################################################
# NumPy/SciPy imports.
import numpy as np
from scipy.sparse import csr_matrix

##############################################################################
# Local imports.
from ..core import FollowerGraph, InteractionGraph, TopicSnapshot


##############################################################################
def pagerank_links(
    nodes: Iterable[str],
    links: Mapping[tuple[str, str], float],
    damping: float = 0.85,
    tolerance: float = 1e-9,
    max_iterations: int = 1000,
) -> dict[str, float]:
    """Calculate PageRank over weighted directed links.

    Args:
        nodes: The nodes of the graph.
        links: The link weights, keyed by `(source, target)`.
        damping: The damping factor.
        tolerance: Iteration stops once the L1 change drops below this.
        max_iterations: The most iterations to run.

    Returns:
        The score of each node; the scores sum to 1.

    Note:
        Rank held by nodes without outgoing links is spread uniformly over
        every node.
    """
    order = sorted(set(nodes).union(*({source, target} for source, target in links)))
    if not order:
        return {}
    position = {node: index for index, node in enumerate(order)}
    size = len(order)
    sources = np.array([position[source] for source, _ in links], dtype=np.int64)
    targets = np.array([position[target] for _, target in links], dtype=np.int64)
    weights = np.array(list(links.values()), dtype=np.float64)
    out_weight = np.bincount(sources, weights=weights, minlength=size)
    dangling = out_weight == 0
    # Column-stochastic transition matrix; column j holds the links out of j.
    transition = csr_matrix(
        (weights / out_weight[sources], (targets, sources)), shape=(size, size)
    )
    rank = np.full(size, 1.0 / size)
    for _ in range(max_iterations):
        updated = (
            damping * (transition @ rank + rank[dangling].sum() / size)
            + (1.0 - damping) / size
        )
        change = np.abs(updated - rank).sum()
        rank = updated
        if change < tolerance:
            break
    rank /= rank.sum()
    return {node: float(rank[position[node]]) for node in order}


##############################################################################
def pagerank(
    graph: InteractionGraph, damping: float = 0.85, tolerance: float = 1e-9
) -> dict[str, float]:
    """Calculate the PageRank of every user of an interaction graph.

    Args:
        graph: The interaction graph.
        damping: The damping factor.
        tolerance: The convergence tolerance.

    Returns:
        The score of each user; the scores sum to 1.

    Note:
        Rank flows from the interacting user to the user they interacted
        with, so being mentioned raises a user's score.
    """
    return pagerank_links(graph.nodes, graph.links, damping, tolerance)


##############################################################################
class UserFeatures(NamedTuple):
    """The user features of a topic snapshot."""

    activity: float
    """The mean PageRank of the snapshot's users."""

    max_followers: float
    """The most followers any of the snapshot's users has."""

    mean_followers: float
    """The mean follower count of the snapshot's users."""


##############################################################################
def user_features(
    snapshot: TopicSnapshot,
    follower_graph: FollowerGraph,
    pagerank_scores: Mapping[str, float],
) -> UserFeatures:
    """Calculate the user features of a topic snapshot.

    Args:
        snapshot: The snapshot.
        follower_graph: Who follows whom, globally.
        pagerank_scores: The PageRank of every user.

    Returns:
        The user features; all zero for an empty snapshot.
    """
    if not snapshot.users:
        return UserFeatures(0.0, 0.0, 0.0)
    users = sorted(snapshot.users)
    followers = np.array([follower_graph.follower_count(user) for user in users], dtype=float)
    return UserFeatures(
        float(np.mean([pagerank_scores.get(user, 0.0) for user in users])),
        float(followers.max()),
        float(followers.mean()),
    )


### users.py ends here

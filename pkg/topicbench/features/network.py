"""The network features of a topic."""

##############################################################################
# Python imports.
from collections import Counter
from typing import Final, NamedTuple

##############################################################################
# NetworkX/SciPy imports.
import networkx as nx
from scipy.stats import entropy

##############################################################################
# Local imports.
from ..core import FollowerGraph, TopicSnapshot
from .schema import EXPOSURE_DIMENSIONS

##############################################################################
MAX_EXPOSURE: Final[int] = EXPOSURE_DIMENSIONS
"""Border users following this many members or more share the last dimension."""


##############################################################################
def topic_graph(snapshot: TopicSnapshot) -> nx.Graph:
    """Project the interactions of a snapshot onto a simple undirected graph.

    Args:
        snapshot: The snapshot.

    Returns:
        A graph with a node for every user of the snapshot, and an edge
        for every pair of users who interacted, weighted with the total
        number of interactions in either direction.
    """
    graph = nx.Graph()
    graph.add_nodes_from(sorted(snapshot.users))
    for (target, source), weight in sorted(snapshot.edges.items()):
        if graph.has_edge(target, source):
            graph[target][source]["weight"] += weight
        else:
            graph.add_edge(target, source, weight=weight)
    return graph


##############################################################################
def border_users(snapshot: TopicSnapshot, follower_graph: FollowerGraph) -> set[str]:
    """Find the border users of a topic snapshot.

    Args:
        snapshot: The snapshot.
        follower_graph: Who follows whom.

    Returns:
        The users outside the snapshot who follow at least one of its users.
    """
    return {
        follower
        for user in snapshot.users
        for follower in follower_graph.followers_of(user)
        if follower not in snapshot.users
    }


##############################################################################
def exposure(snapshot: TopicSnapshot, follower_graph: FollowerGraph) -> list[int]:
    """Count border users by how many of the snapshot's users they follow.

    Args:
        snapshot: The snapshot.
        follower_graph: Who follows whom.

    Returns:
        Dimension `i` holds the number of border users following exactly
        `i + 1` users of the snapshot; the last dimension also takes every
        border user following more.
    """
    histogram = [0] * MAX_EXPOSURE
    for border_user in border_users(snapshot, follower_graph):
        following = len(follower_graph.follows(border_user) & snapshot.users)
        histogram[min(following, MAX_EXPOSURE) - 1] += 1
    return histogram


##############################################################################
class NetworkFeatures(NamedTuple):
    """The network features of a topic snapshot."""

    mean_degree: float
    """The mean degree of the interaction graph."""

    density: float
    """The density of the interaction graph."""

    nodes: float
    """The number of users in the interaction graph."""

    degree_entropy: float
    """The entropy of the degree distribution."""

    border_users: float
    """The number of users outside the topic who follow someone inside it."""

    exposure: tuple[float, ...]
    """Border users counted by how many of the topic's users they follow."""

    component_ratio: float
    """The number of connected components per node."""

    mean_weight: float
    """The mean number of interactions behind an edge."""

    triangle_ratio: float
    """The triangles in the graph as a fraction of those possible."""

    def flatten(self) -> list[float]:
        """The features as a flat list, with the exposure spread out."""
        return [
            self.mean_degree,
            self.density,
            self.nodes,
            self.degree_entropy,
            self.border_users,
            *self.exposure,
            self.component_ratio,
            self.mean_weight,
            self.triangle_ratio,
        ]


##############################################################################
def network_features(
    snapshot: TopicSnapshot, follower_graph: FollowerGraph
) -> NetworkFeatures:
    """Calculate the network features of a topic snapshot.

    Args:
        snapshot: The snapshot.
        follower_graph: Who follows whom.

    Returns:
        The network features; all zero for an empty snapshot.
    """
    graph = topic_graph(snapshot)
    if not (nodes := graph.number_of_nodes()):
        return NetworkFeatures(
            0.0, 0.0, 0.0, 0.0, 0.0, (0.0,) * MAX_EXPOSURE, 0.0, 0.0, 0.0
        )
    edges = graph.number_of_edges()
    degrees = Counter(degree for _, degree in graph.degree())
    histogram = exposure(snapshot, follower_graph)
    triangles = sum(nx.triangles(graph).values()) // 3
    return NetworkFeatures(
        mean_degree=2.0 * edges / nodes,
        density=nx.density(graph) if nodes > 1 else 0.0,
        nodes=float(nodes),
        degree_entropy=float(entropy(list(degrees.values()))),
        border_users=float(sum(histogram)),
        exposure=tuple(float(count) for count in histogram),
        component_ratio=nx.number_connected_components(graph) / nodes,
        mean_weight=(
            graph.size(weight="weight") / edges if edges else 0.0
        ),
        triangle_ratio=(
            triangles / (nodes * (nodes - 1) * (nodes - 2) / 3) if nodes > 2 else 0.0
        ),
    )


### network.py ends here

"""The graphs that describe how users relate to each other."""

##############################################################################
# Python imports.
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..errors import InvariantViolation
from .message import Message


##############################################################################
def interactions(messages: Iterable[Message]) -> Iterator[tuple[str, str]]:
    """Find the interactions held in messages.

    Args:
        messages: The messages to look in.

    Yields:
        An `(interacted_with, interacting)` pair for every mention in every
        message. Users mentioning themselves are skipped.
    """
    for message in messages:
        for mentioned in message.mentions:
            if mentioned != message.author:
                yield mentioned, message.author


##############################################################################
@dataclass(frozen=True)
class InteractionGraph:
    """The weighted graph of who interacts with whom.

    An edge `(u_q, u_p)` is recorded each time `u_p` mentions (or replies
    to) `u_q`; its weight is the number of such interactions.
    """

    nodes: frozenset[str]
    """The users in the graph."""

    edges: Mapping[tuple[str, str], int]
    """The interaction counts, keyed by `(interacted_with, interacting)`."""

    def __post_init__(self) -> None:
        """Check the graph.

        Raises:
            InvariantViolation: If an edge is unusable.
        """
        for (target, source), weight in self.edges.items():
            if target not in self.nodes or source not in self.nodes:
                raise InvariantViolation(
                    f"Edge {target!r}<-{source!r} has an endpoint outside the graph"
                )
            if weight < 1:
                raise InvariantViolation(
                    f"Edge {target!r}<-{source!r} has weight {weight}"
                )
        object.__setattr__(self, "edges", dict(self.edges))

    @classmethod
    def from_interactions(
        cls, nodes: Iterable[str], interactions: Iterable[tuple[str, str]]
    ) -> Self:
        """Build a graph from individual interactions.

        Args:
            nodes: The users in the graph.
            interactions: `(interacted_with, interacting)` pairs, one per
                interaction.

        Returns:
            The graph.
        """
        edges = Counter(interactions)
        return cls(
            frozenset(nodes).union(*({target, source} for target, source in edges)),
            dict(sorted(edges.items())),
        )

    @property
    def links(self) -> dict[tuple[str, str], int]:
        """The edges as `(source, target)` links, pointing at who was interacted with."""
        return {(source, target): weight for (target, source), weight in self.edges.items()}


##############################################################################
@dataclass(frozen=True)
class FollowerGraph:
    """Who follows whom."""

    adjacency: Mapping[str, frozenset[str]] = field(default_factory=dict)
    """The users each user follows, keyed by the follower."""

    def __post_init__(self) -> None:
        """Check the graph and build the reverse index.

        Raises:
            InvariantViolation: If a user follows themselves.
        """
        followers: dict[str, set[str]] = {}
        for follower, followees in self.adjacency.items():
            if follower in followees:
                raise InvariantViolation(f"{follower!r} follows themselves")
            for followee in followees:
                followers.setdefault(followee, set()).add(follower)
        object.__setattr__(
            self,
            "adjacency",
            {user: frozenset(followees) for user, followees in self.adjacency.items()},
        )
        object.__setattr__(
            self,
            "_followers",
            {user: frozenset(found) for user, found in followers.items()},
        )

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> Self:
        """Build a follower graph from `(follower, followee)` edges.

        Args:
            edges: The edges.

        Returns:
            The graph.
        """
        adjacency: dict[str, set[str]] = {}
        for follower, followee in edges:
            adjacency.setdefault(follower, set()).add(followee)
        return cls({user: frozenset(followees) for user, followees in adjacency.items()})

    def follows(self, user: str) -> frozenset[str]:
        """The users that a user follows."""
        return self.adjacency.get(user, frozenset())

    def followers_of(self, user: str) -> frozenset[str]:
        """The users who follow a user."""
        return self._followers.get(user, frozenset())  # type: ignore[attr-defined]

    def follower_count(self, user: str) -> int:
        """The number of users who follow a user."""
        return len(self.followers_of(user))

    def __len__(self) -> int:
        """The number of follow edges."""
        return sum(len(followees) for followees in self.adjacency.values())


### graphs.py ends here

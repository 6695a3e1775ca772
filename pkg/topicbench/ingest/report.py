"""Provides the report of an ingest run."""

##############################################################################
# Python imports.
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self


##############################################################################
@dataclass
class IngestReport:
    """The counts gathered while ingesting a message corpus."""

    messages_ok: int = 0
    """The number of lines that became messages."""

    messages_rejected: int = 0
    """The number of lines that were rejected."""

    reject_reasons: Counter[str] = field(default_factory=Counter)
    """The number of rejections for each reason."""

    users: int = 0
    """The number of distinct authors."""

    topics: int = 0
    """The number of distinct hashtags."""

    tagged: int = 0
    """The number of messages carrying at least one hashtag."""

    @property
    def lines(self) -> int:
        """The number of input lines seen."""
        return self.messages_ok + self.messages_rejected

    @property
    def hashtag_fraction(self) -> float:
        """The fraction of messages that carry a hashtag."""
        return self.tagged / self.messages_ok if self.messages_ok else 0.0

    def reject(self, reason: str) -> Self:
        """Record a rejected line.

        Args:
            reason: Why the line was rejected.

        Returns:
            Self.
        """
        self.messages_rejected += 1
        self.reject_reasons[reason] += 1
        return self

    @property
    def as_json(self) -> dict[str, Any]:
        """The report in JSON-friendly form."""
        return {
            "messages_ok": self.messages_ok,
            "messages_rejected": self.messages_rejected,
            "reject_reasons": dict(sorted(self.reject_reasons.items())),
            "users": self.users,
            "topics": self.topics,
            "hashtag_fraction": self.hashtag_fraction,
        }


### report.py ends here

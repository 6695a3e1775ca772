"""Provides a class for holding data on a message."""

##############################################################################
# Python imports.
from dataclasses import dataclass
from typing import Any, Iterable

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from .parse_time import parse_time


##############################################################################
def normalise_hashtags(hashtags: Iterable[str]) -> tuple[str, ...]:
    """Normalise a collection of hashtags.

    Args:
        hashtags: The hashtags to normalise.

    Returns:
        The hashtags, case-folded, without any leading `#`, deduplicated,
        in the order they were first seen.
    """
    return tuple(
        dict.fromkeys(
            tag for tag in (raw.lstrip("#").casefold() for raw in hashtags) if tag
        )
    )


##############################################################################
@dataclass(frozen=True)
class Message:
    """A single message posted to the social network."""

    id: str
    """The unique ID of the message."""

    author: str
    """The ID of the user who posted the message."""

    timestamp: float
    """When the message was posted, in seconds since the epoch (UTC)."""

    text: str = ""
    """The text of the message."""

    hashtags: tuple[str, ...] = ()
    """The hashtags of the message, case-folded and deduplicated."""

    mentions: tuple[str, ...] = ()
    """The IDs of the users mentioned in (or replied to by) the message."""

    retweet_of: str | None = None
    """The ID of the message this one retweets, if any."""

    urls: int = 0
    """The number of links embedded in the message."""

    language: str | None = None
    """The language of the message, if known."""

    def __post_init__(self) -> None:
        """Check the message.

        Raises:
            ValueError: If the message breaks one of its invariants.
        """
        if not self.id:
            raise ValueError("A message needs an ID")
        if not self.author:
            raise ValueError("A message needs an author")
        if self.timestamp < 0:
            raise ValueError("A message can't predate the epoch")
        if self.urls < 0:
            raise ValueError("A message can't have a negative URL count")
        object.__setattr__(self, "hashtags", normalise_hashtags(self.hashtags))
        object.__setattr__(self, "mentions", tuple(self.mentions))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create an instance of `Message` from JSON data.

        Args:
            data: The data to create the message from.

        Returns:
            An instance of `Message`.

        Raises:
            KeyError: If a required field is missing.
            ValueError: If a field holds an unusable value.
            TypeError: If a field holds a value of the wrong type.
        """

        def strings(name: str) -> tuple[str, ...]:
            if not isinstance(value := data.get(name) or [], list) or not all(
                isinstance(item, str) for item in value
            ):
                raise TypeError(f"{name} must be a list of strings")
            return tuple(value)

        if not isinstance(text := data.get("text") or "", str):
            raise TypeError("text must be a string")
        if isinstance(urls := data.get("urls") or 0, list):
            urls = len(strings("urls"))
        elif isinstance(urls, bool) or not isinstance(urls, int):
            raise TypeError("urls must be a list of strings or a count")
        return cls(
            id=str(data["id"]),
            author=str(data["user"]),
            timestamp=parse_time(data["ts"]),
            text=text,
            hashtags=strings("hashtags"),
            mentions=strings("mentions"),
            retweet_of=None if data.get("retweet_of") is None else str(data["retweet_of"]),
            urls=urls,
            language=data.get("lang"),
        )

    @property
    def as_json(self) -> dict[str, Any]:
        """The message in JSON-friendly form."""
        data: dict[str, Any] = {
            "id": self.id,
            "user": self.author,
            "ts": self.timestamp,
            "text": self.text,
            "hashtags": list(self.hashtags),
            "mentions": list(self.mentions),
            "retweet_of": self.retweet_of,
            "urls": self.urls,
        }
        if self.language is not None:
            data["lang"] = self.language
        return data

    @property
    def has_hashtags(self) -> bool:
        """Does the message have any hashtags?"""
        return bool(self.hashtags)

    def is_tagged(self, tag: str) -> bool:
        """Is this message tagged with the given hashtag?

        Args:
            tag: The hashtag to check for.

        Returns:
            `True` if the message carries the hashtag, `False` if not.
        """
        return tag.lstrip("#").casefold() in self.hashtags


### message.py ends here

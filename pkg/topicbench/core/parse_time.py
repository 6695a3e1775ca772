"""Provides a function for parsing message timestamps."""

##############################################################################
# Python imports.
from datetime import datetime

##############################################################################
# pytz imports.
from pytz import UTC


##############################################################################
def parse_time(value: str | int | float) -> float:
    """Parse a message timestamp.

    Args:
        value: Either seconds since the epoch, or an ISO-8601 time.

    Returns:
        The time as seconds since the epoch.

    Raises:
        ValueError: If the value can't be parsed as a time.

    Many exports end their times in a `Z`. Older Pythons can't parse that,
    so we swap that for a `+00:00` and then parse. A time without any zone
    information is taken to be UTC.
    """
    if isinstance(value, bool):
        raise ValueError("A boolean isn't a timestamp")
    if isinstance(value, (int, float)):
        return float(value)
    parsed = datetime.fromisoformat(
        (value.removesuffix("Z") + "+00:00") if value.endswith("Z") else value
    )
    if parsed.tzinfo is None:
        parsed = UTC.localize(parsed)
    return parsed.timestamp()


### parse_time.py ends here

"""Filtering out candidate topics that are just noise."""

##############################################################################
# Python imports.
from typing import Iterable, Mapping

##############################################################################
# Local imports.
from ..core import TimeSeries
from ..errors import InputError


##############################################################################
def denoise_ts(
    candidates: Iterable[str],
    series_map: Mapping[str, TimeSeries],
    bucket: int,
    window: int = 5,
    min_active_buckets: int = 1,
    min_count: int = 1,
) -> list[str]:
    """Keep only the candidates with enough recent activity.

    Args:
        candidates: The candidate topics.
        series_map: The popularity series of each topic.
        bucket: The current bucket; the last of the trailing window.
        window: The length of the trailing window.
        min_active_buckets: How many buckets of the window need a message.
        min_count: The count needed in the current bucket.

    Returns:
        The candidates that pass, in their original order.

    Raises:
        InputError: If the window is shorter than the active buckets needed.
    """
    if not window >= min_active_buckets >= 0:
        raise InputError(
            f"Can't need {min_active_buckets} active buckets in a window of {window}"
        )
    kept = []
    for topic in candidates:
        counts = (
            series_map[topic].window(bucket, window) if topic in series_map else (0,) * window
        )
        if sum(1 for count in counts if count) >= min_active_buckets and (
            counts[-1] if counts else 0
        ) >= min_count:
            kept.append(topic)
    return kept


### denoise.py ends here

"""The time series features of a topic."""

##############################################################################
# Python imports.
from typing import Final, NamedTuple, Sequence

##############################################################################
# NumPy imports.
import numpy as np
from numpy.polynomial import polynomial

##############################################################################
# Local imports.
from ..errors import InputError

##############################################################################
MAX_DEGREE: Final[int] = 3
"""The highest degree of polynomial fitted to a window."""


##############################################################################
class TimeSeriesFeatures(NamedTuple):
    """The time series features of a window of popularity counts."""

    mean: float
    """The mean of the fitted curve."""

    deviation: float
    """The population standard deviation of the fitted curve."""

    mean_slope: float
    """The mean absolute first derivative of the fitted curve."""

    slope_deviation: float
    """The population standard deviation of the absolute first derivative."""


##############################################################################
def timeseries_features(counts: Sequence[float]) -> TimeSeriesFeatures:
    """Calculate the time series features of a window of counts.

    Args:
        counts: The popularity counts, oldest first.

    Returns:
        The features of a least-squares polynomial fitted to the counts,
        sampled at each point of the window.

    Raises:
        InputError: If the window is empty.
    """
    if not (width := len(counts)):
        raise InputError("Time series features need at least one count")
    points = np.arange(width, dtype=np.float64)
    coefficients = polynomial.polyfit(
        points, np.asarray(counts, dtype=np.float64), min(MAX_DEGREE, width - 1)
    )
    fitted = polynomial.polyval(points, coefficients)
    slope = np.abs(polynomial.polyval(points, polynomial.polyder(coefficients)))
    return TimeSeriesFeatures(
        float(fitted.mean()),
        float(fitted.std()),
        float(slope.mean()),
        float(slope.std()),
    )


### timeseries.py ends here

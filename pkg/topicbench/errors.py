"""The exceptions raised by topicbench."""


##############################################################################
class TopicBenchError(Exception):
    """Base class for all topicbench errors."""


##############################################################################
class InputError(TopicBenchError):
    """Raised when the input given to an operation can't be used."""


##############################################################################
class InvariantViolation(TopicBenchError):
    """Raised when an internal invariant doesn't hold."""


##############################################################################
class ConfigurationError(InputError):
    """Raised when the configuration is unusable."""


##############################################################################
class SchemaMismatch(InputError):
    """Raised when a model and a feature matrix disagree on their schema."""


##############################################################################
class DegenerateLabels(InputError):
    """Raised when a training set doesn't hold both classes."""


### errors.py ends here

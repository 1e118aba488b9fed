"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside an operation's domain (bad ground set, mismatched
    partitions, unknown variable, violated precondition)."""


class DistributionParseError(ValueError):
    """A distribution file or JSON object could not be parsed; the message
    names the offending atom index where one exists."""

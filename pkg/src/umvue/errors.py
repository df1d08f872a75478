class UmvueError(Exception):
    """Base class for all errors raised by this package.

    The CLI maps any UmvueError to exit code 2 (bad input); mathematically
    negative verdicts (a statistic that is not a UMVUE, a target without one)
    are ordinary return values, not exceptions.
    """

"""Exception types shared across the toolkit."""


class InvalidParameterError(ValueError):
    """An argument is outside its documented domain (non-finite, negative, ...)."""


class JointLimitError(ValueError):
    """A joint vector violates the configured limits.

    ``joints`` holds the 0-based indices of the offending entries.
    """

    def __init__(self, message, joints):
        super().__init__(message)
        self.joints = list(joints)


class ConfigError(ValueError):
    """A config file failed to parse or validate."""


class ContractViolationError(RuntimeError):
    """An API was called outside its allowed protocol (e.g. step after done)."""


class DivergenceError(RuntimeError):
    """A training update produced non-finite values.

    ``diagnostics`` is a dict of the offending loss/statistic values.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})

class SeifertError(ValueError):
    """Invalid or unsupported invariant data."""


class NontrivialMonodromy(SeifertError):
    pass


class ResourceGuardExceeded(RuntimeError):
    """A finite enumeration would exceed its desk-scale bound."""


class WitnessMismatch(AssertionError):
    pass

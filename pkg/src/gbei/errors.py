"""Exception hierarchy shared by every module."""


class GBEIError(Exception):
    """Base class for all library errors."""


class InvalidGraph(GBEIError, ValueError):
    pass


class DisconnectedInput(GBEIError, ValueError):
    pass


class CompleteInput(GBEIError, ValueError):
    pass


class NotACutset(GBEIError, ValueError):
    pass


class NotSquarefree(GBEIError, ValueError):
    """The initial ideal has a non-squarefree generator; the oracle refuses."""


class CapExceeded(GBEIError):
    """An instance is larger than the configured cap for an exponential routine."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap} (raise it via GBEI_CAPS)")
        self.what = what
        self.size = size
        self.cap = cap


class GBTimeout(GBEIError):
    pass

"""Exception hierarchy."""


class MultipletkitError(Exception):
    """Base class for library errors."""


class CapExceeded(MultipletkitError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, size, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"cap exceeded: {what} needs {size} > cap {cap}")


class NonRegularWeight(MultipletkitError):
    """Weight lies on a reflection hyperplane, so no unique chamber exists."""

    def __init__(self, weight, root):
        self.weight = weight
        self.root = root
        super().__init__(f"non-regular weight {weight}: fixed by the reflection in {root}")


class VerificationError(MultipletkitError):
    """An exact identity failed; ``witness`` carries the offending data."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)

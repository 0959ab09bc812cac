"""Exception hierarchy shared by every module of the package."""


class AlgisoError(Exception):
    """Base class for all errors raised by algiso."""


class FieldMismatch(AlgisoError):
    pass


class DimensionMismatch(AlgisoError):
    pass


class SingularMatrix(AlgisoError):
    pass


class NotSymmetric(AlgisoError):
    pass


class CapExceeded(AlgisoError):
    pass


class WrongField(AlgisoError):
    pass


class ParseError(AlgisoError):
    pass


class NotInV0(AlgisoError):
    """The trace form T1 of the algebra is singular."""


class FrameDeficient(AlgisoError):
    """The covariant rows available up to ``k_max`` span less than the full space."""

    def __init__(self, achieved_rank, m, k_max):
        super().__init__(
            f"covariant rows reach rank {achieved_rank} < {m} with k_max={k_max}"
        )
        self.achieved_rank = achieved_rank
        self.m = m
        self.k_max = k_max


class InternalInconsistency(AlgisoError):
    """Invariants matched but the reconstructed witness failed verification.

    ``diagnostics`` holds every intermediate needed to reproduce the failure.
    """

    def __init__(self, message, diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics

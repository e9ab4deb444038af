from dapoly.dapoly_error import DapolyError


class SemilatticeError(DapolyError):
    pass


class NoMinimumError(SemilatticeError):
    pass


class NotAPartialOrderError(SemilatticeError):
    pass


class MissingMeetError(SemilatticeError):
    pass


class RankViolationError(SemilatticeError):
    pass


class UnknownFlatError(SemilatticeError):
    pass

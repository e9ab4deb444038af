from dapoly.dapoly_error import DapolyError


class GeometryError(DapolyError):
    pass


class DimensionMismatchError(GeometryError):
    pass


class DuplicateHyperplaneError(GeometryError):
    pass


class FlatNotInLatticeError(GeometryError):
    pass

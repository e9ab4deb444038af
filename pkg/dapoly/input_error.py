from dapoly.dapoly_error import DapolyError


class InputError(DapolyError):
    pass


class ParseError(InputError):
    pass


class UnsupportedKindError(InputError):
    pass


class ParamError(InputError):
    pass

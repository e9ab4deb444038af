from dapoly.dapoly_error import DapolyError
from dapoly.cap_exceeded_error import CapExceededError
from dapoly.geometry_error import (
    DimensionMismatchError,
    DuplicateHyperplaneError,
    FlatNotInLatticeError,
    GeometryError,
)
from dapoly.input_error import InputError, ParamError, ParseError, UnsupportedKindError
from dapoly.negative_coefficient_error import NegativeCoefficientError
from dapoly.semilattice_error import (
    MissingMeetError,
    NoMinimumError,
    NotAPartialOrderError,
    RankViolationError,
    SemilatticeError,
    UnknownFlatError,
)
from dapoly.wiring_error import OutOfRangeError, RepeatedCrossingError, WiringError
from dapoly.bi_polynomial import BiPolynomial
from dapoly.semilattice import Flat, MobiusTable, Semilattice
from dapoly.hyperplane_arrangement import AffineFlat, Arrangement, Hyperplane
from dapoly.face_enumerator import FaceRecord, SignVector
from dapoly.wiring_diagram import CrossingEvent, WiringDiagram
from dapoly.input_document import InputDocument

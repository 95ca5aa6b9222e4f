"""Exception hierarchy.

Every expected failure raised by the library derives from
:class:`GeometryError`, so callers (the CLI in particular) can report it as a
one-line diagnostic.  Class names are part of the public surface.
"""


class GeometryError(ValueError):
    """Base class for all expected library errors."""


# jets
class DivisionByZero(GeometryError, ZeroDivisionError):
    pass


class DomainError(GeometryError):
    pass


# curve language
class ParseError(GeometryError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.reason = message


class CurveFileError(GeometryError):
    pass


class UnknownPreset(GeometryError):
    pass


class BadParameter(GeometryError):
    pass


class DegenerateSpeed(GeometryError):
    pass


# frames
class DegenerateCurvature(GeometryError):
    pass


class WrongCausalType(GeometryError):
    pass


class UnsupportedNormal(GeometryError):
    pass


class LightLikeDarboux(GeometryError):
    pass


class NotOnSphere(GeometryError):
    pass


class NotUnitSpeed(GeometryError):
    pass


class EvoluteUndefined(GeometryError):
    pass


# constructions
class QuadratureFailure(GeometryError):
    pass


class DegenerateBertrandPoint(GeometryError):
    def __init__(self, message: str, parameter: float):
        super().__init__(f"{message} (v = {parameter!r})")
        self.parameter = parameter


class ThetaZero(GeometryError):
    pass


class BadCone(GeometryError):
    pass


class DegenerateNormal(GeometryError):
    pass


class IoError(GeometryError):
    pass

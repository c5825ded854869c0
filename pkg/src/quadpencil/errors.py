"""Exception hierarchy.

Every domain error derives from :class:`QuadPencilError`, itself a
``ValueError``, so callers that only care about bad input can catch either.
"""


class QuadPencilError(ValueError):
    pass


class ZeroForm(QuadPencilError):
    pass


class SingularMatrix(QuadPencilError):
    pass


class DependentPencil(QuadPencilError):
    pass


class NotInSlice(QuadPencilError):
    pass


class NotSmooth(QuadPencilError):
    pass


class BadPrime(QuadPencilError):
    pass


class TooLarge(QuadPencilError):
    pass


class SizeMismatch(QuadPencilError):
    pass


class LevelMismatch(QuadPencilError):
    pass


class WrongLevel(QuadPencilError):
    pass


class NotDivisor(QuadPencilError):
    pass


class TooManyPoints(QuadPencilError):
    pass


class PointsNotDistinct(QuadPencilError):
    pass


class BadParams(QuadPencilError):
    pass


class EvenN(QuadPencilError):
    pass


class NotOnCurve(QuadPencilError):
    pass


class BadGenus(QuadPencilError):
    pass

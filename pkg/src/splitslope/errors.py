"""Exception types raised by the split-quaternion and slope-surface routines."""


class SplitSlopeError(Exception):
    """Base class for every error raised by this package."""


class LightlikeNoInverse(SplitSlopeError, ZeroDivisionError):
    pass


class DegenerateQuaternion(SplitSlopeError, ValueError):
    pass


class LightlikeVectorPart(SplitSlopeError, ValueError):
    pass


class NotUnitTimelike(SplitSlopeError, ValueError):
    pass


class AxisNotUnitSpacelike(SplitSlopeError, ValueError):
    pass


class DomainError(SplitSlopeError, ValueError):
    pass


class UnknownCurve(SplitSlopeError, KeyError):
    def __str__(self) -> str:
        # KeyError would otherwise repr() the message
        return str(self.args[0]) if self.args else ""


class NonPureProduct(SplitSlopeError, ArithmeticError):
    pass


class DegenerateNormal(SplitSlopeError, ArithmeticError):
    pass

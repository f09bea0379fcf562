"""Exception types shared across the package."""


class RegionflipError(Exception):
    """Base class for all domain errors raised by this package."""


class PDSyntaxError(RegionflipError):
    """Malformed PD text. Carries the character offset of the bad token."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at offset {position})")
        self.position = position


class LabelError(RegionflipError):
    """Arc labels do not form a consistent double cover of 1..2c."""


class DegenerateError(RegionflipError):
    """A quadruple repeats a label in a forbidden slot pattern."""


class NonPlanarError(RegionflipError):
    """The rotation system does not close up into a sphere diagram."""


class SplitError(RegionflipError):
    """The underlying 4-valent graph is disconnected."""


class SelfCrossingError(RegionflipError):
    """Smoothing requested at a crossing both of whose strands belong to one component."""


class MultiComponentError(RegionflipError):
    """A knot-only operation was applied to a multi-component diagram."""


class NotProperError(RegionflipError):
    """Some component has odd total linking number with the rest of the link."""


class NotUnknottingError(RegionflipError):
    """The supplied region set does not trivialize the diagram."""


class TooLargeError(RegionflipError):
    """Instance exceeds the exhaustive-enumeration bound."""

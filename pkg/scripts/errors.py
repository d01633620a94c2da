"""Exception types raised by the workbench modules."""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for every error raised on purpose by the workbench."""


class SizeError(WorkbenchError, ValueError):
    """A graph would fall outside the supported order range [0, 64]."""


class ArgumentError(WorkbenchError, ValueError):
    """An operation was called outside its stated preconditions."""


class CapacityError(WorkbenchError, ValueError):
    """A computation was refused because it exceeds a documented capacity."""


class EnumerationCapError(CapacityError):
    """Exhaustive enumeration was requested beyond the hard vertex cap."""


class ConstructionError(WorkbenchError, ValueError):
    """A builder received a component that breaks the construction's guarantee."""


class Graph6ParseError(WorkbenchError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int, data: Optional[bytes] = None):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset
        self.data = data

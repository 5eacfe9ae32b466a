"""Exception types shared across the library.

Error names follow the operation contracts: protocol replies carry
``type(exc).__name__`` as the machine-readable code.
"""


class DpeError(Exception):
    """Base class for all library errors."""


class MalformedRotation(DpeError):
    """The rotation system is structurally inconsistent."""


class NotPlanarEmbedding(DpeError):
    """Euler's formula fails for some component of the stored embedding."""


class NotSameFace(DpeError):
    """Corners required to share a face do not."""


class SameFace(DpeError):
    """Corners required to lie on distinct faces share one."""


class NotSameVertex(DpeError):
    """Corners required to share a vertex do not."""


class SameTree(DpeError):
    """link() endpoints already belong to the same tree."""


class NotSameTree(DpeError):
    """expose() arguments belong to different trees."""


class NotTreeEdge(DpeError):
    """cut() argument is not a tree edge."""


class NoSuchEdge(DpeError):
    """The referenced edge does not exist."""


class NoSuchVertex(DpeError):
    """The referenced vertex does not exist."""


class NoSuchCorner(DpeError):
    """The referenced corner does not exist (it may have been retired)."""


class BadCorners(DpeError):
    """Flip corner arguments violate the incidence preconditions."""


class AlreadyMarked(DpeError):
    """A mark token is already outstanding for this structure."""


class ParseError(DpeError):
    """An embedding file or script line could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)

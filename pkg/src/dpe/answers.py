"""Answer shapes shared by the engine and the oracle.

Corners are addressed as ``(vertex, pred_dart)`` references everywhere a
result crosses a module boundary (see :mod:`dpe.rotation`); engines may
additionally expose their own opaque corner ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rotation import CornerRef

LINKABLE = "linkable"
NOT_LINKABLE = "not-linkable"
DIFFERENT_COMPONENTS = "different-components"


@dataclass
class FaceAnswer:
    """One common face with the corner lists for both query vertices."""

    face: int
    corners_u: list[CornerRef]
    corners_v: list[CornerRef]

    def key(self) -> tuple:
        return (tuple(sorted(self.corners_u)), tuple(sorted(self.corners_v)))


@dataclass
class LinkableAnswer:
    status: str
    faces: list[FaceAnswer] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in (LINKABLE, DIFFERENT_COMPONENTS)

    def comparable(self) -> tuple:
        """Order-insensitive structural form for differential comparison."""
        return (self.status, tuple(sorted(f.key() for f in self.faces)))

    def first_pair(self) -> tuple[CornerRef, CornerRef] | None:
        if not self.faces:
            return None
        f = self.faces[0]
        return f.corners_u[0], f.corners_v[0]


ALREADY_LINKABLE = "already-linkable"
ARTICULATION = "articulation"
SEPARATION = "separation"
NONE = "none"


@dataclass
class FlipSuggestion:
    kind: str
    corners: tuple[CornerRef, ...] = ()

    @staticmethod
    def already() -> "FlipSuggestion":
        return FlipSuggestion(ALREADY_LINKABLE)

    @staticmethod
    def none() -> "FlipSuggestion":
        return FlipSuggestion(NONE)

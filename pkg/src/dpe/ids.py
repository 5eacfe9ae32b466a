"""Monotone id allocation.

All entity ids (vertices, edges, faces, corners) are opaque 64-bit
integers drawn from one counter per embedding instance; ids destroyed by
an update are never reissued.  Darts are not allocated separately: edge
``e`` owns darts ``2*e`` and ``2*e + 1``, so dart ids inherit uniqueness
from edge ids.  ``twin(d) == d ^ 1`` and ``edge_of(d) == d >> 1``.
"""


def twin(dart: int) -> int:
    return dart ^ 1


def edge_of(dart: int) -> int:
    return dart >> 1


def darts_of(edge: int) -> tuple[int, int]:
    return 2 * edge, 2 * edge + 1


class IdAllocator:
    __slots__ = ("_next",)

    def __init__(self, start: int = 0):
        self._next = start

    def fresh(self) -> int:
        value = self._next
        self._next += 1
        return value

    def reserve(self, floor: int) -> None:
        """Ensure future ids are strictly greater than ``floor``."""
        if floor >= self._next:
            self._next = floor + 1

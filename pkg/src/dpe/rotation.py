"""Explicit rotation systems: the static combinatorial-embedding core.

A rotation system stores, per vertex, the cyclic order of incident darts
(directed edge sides).  Everything else — faces, corners, the dual, the
tree/cotree decomposition and the extended Euler tour — is derived here
by plain traversals.  The dynamic engine uses this module for initial
builds and audits; the oracle uses it as its entire state.

Conventions (fixed once, relied on everywhere):

* edge ``e`` owns darts ``2e`` (from ``u``) and ``2e+1`` (from ``v``);
  ``twin(d) = d ^ 1``.
* the face walk successor of dart ``d`` is the rotation successor of
  ``twin(d)`` around ``head(d)``; a face is an orbit of that map.
* a corner is addressed as ``(vertex, pred_dart)``: the gap that follows
  ``pred_dart`` in the rotation around ``vertex``.  An isolated vertex
  has the single corner ``(v, None)``.
* the corner ``(v, g)`` lies on the face of dart ``twin(g)``.
"""

from __future__ import annotations

from collections import deque

from .errors import MalformedRotation, NotPlanarEmbedding
from .ids import edge_of, twin

CornerRef = tuple[int, int | None]


class RotationSystem:
    """Mutable rotation system over integer vertex and dart ids."""

    __slots__ = ("vertices", "dart_tail")

    def __init__(self):
        self.vertices: dict[int, list[int]] = {}
        self.dart_tail: dict[int, int] = {}

    # ------------------------------------------------------------------
    # construction and bookkeeping
    # ------------------------------------------------------------------

    def copy(self) -> "RotationSystem":
        rs = RotationSystem()
        rs.vertices = {v: list(rot) for v, rot in self.vertices.items()}
        rs.dart_tail = dict(self.dart_tail)
        return rs

    def add_vertex(self, v: int) -> None:
        if v in self.vertices:
            raise MalformedRotation(f"duplicate vertex {v}")
        self.vertices[v] = []

    def add_edge(self, e: int, u: int, v: int,
                 after_u: int | None = None, after_v: int | None = None) -> None:
        """Embed edge ``e`` between ``u`` and ``v``.

        ``after_u`` / ``after_v`` name the dart after which the new dart
        is spliced into each rotation (None appends; for an isolated
        vertex the rotation starts with the new dart).
        """
        d0, d1 = 2 * e, 2 * e + 1
        if d0 in self.dart_tail or d1 in self.dart_tail:
            raise MalformedRotation(f"edge {e} already present")
        self.dart_tail[d0] = u
        self.dart_tail[d1] = v
        self._splice(u, d0, after_u)
        self._splice(v, d1, after_v)

    def _splice(self, v: int, dart: int, after: int | None) -> None:
        rot = self.vertices[v]
        if after is None:
            rot.append(dart)
        else:
            rot.insert(rot.index(after) + 1, dart)

    def remove_edge(self, e: int) -> None:
        for d in (2 * e, 2 * e + 1):
            v = self.dart_tail.pop(d)
            self.vertices[v].remove(d)

    def head(self, dart: int) -> int:
        return self.dart_tail[twin(dart)]

    def edge_ids(self) -> list[int]:
        return sorted({edge_of(d) for d in self.dart_tail})

    def edge_ends(self, e: int) -> tuple[int, int]:
        return self.dart_tail[2 * e], self.dart_tail[2 * e + 1]

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def rot_next(self, dart: int) -> int:
        rot = self.vertices[self.dart_tail[dart]]
        return rot[(rot.index(dart) + 1) % len(rot)]

    def rot_prev(self, dart: int) -> int:
        rot = self.vertices[self.dart_tail[dart]]
        return rot[rot.index(dart) - 1]

    def check_valid(self) -> None:
        seen: set[int] = set()
        for v, rot in self.vertices.items():
            for d in rot:
                if d in seen:
                    raise MalformedRotation(f"dart {d} appears twice")
                seen.add(d)
                if self.dart_tail.get(d) != v:
                    raise MalformedRotation(f"dart {d} tail mismatch at {v}")
        for d in self.dart_tail:
            if d not in seen:
                raise MalformedRotation(f"dart {d} missing from rotations")
            if twin(d) not in self.dart_tail:
                raise MalformedRotation(f"dart {d} lacks twin")

    # ------------------------------------------------------------------
    # derived structure
    # ------------------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, sorted by min id."""
        seen: set[int] = set()
        out: list[list[int]] = []
        for v0 in sorted(self.vertices):
            if v0 in seen:
                continue
            comp = []
            queue = deque([v0])
            seen.add(v0)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for d in self.vertices[v]:
                    w = self.head(d)
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def face_next(self, dart: int) -> int:
        return self.rot_next(twin(dart))

    def face_cycles(self) -> list[list[int]]:
        """All face boundary walks, each a dart cycle in walk order.

        Cycles are normalized to start at their smallest dart and sorted
        by that dart, so the output is deterministic.
        """
        cycles: list[list[int]] = []
        visited: set[int] = set()
        for d0 in sorted(self.dart_tail):
            if d0 in visited:
                continue
            cycle = []
            d = d0
            while True:
                cycle.append(d)
                visited.add(d)
                d = self.face_next(d)
                if d == d0:
                    break
            cycles.append(cycle)
        return cycles

    def face_of_darts(self) -> dict[int, int]:
        """Map dart -> face index (into ``face_cycles()`` order)."""
        out: dict[int, int] = {}
        for i, cycle in enumerate(self.face_cycles()):
            for d in cycle:
                out[d] = i
        return out

    def corner_refs(self, v: int) -> list[CornerRef]:
        rot = self.vertices[v]
        if not rot:
            return [(v, None)]
        return [(v, d) for d in rot]

    def all_corners(self) -> list[CornerRef]:
        out: list[CornerRef] = []
        for v in sorted(self.vertices):
            out.extend(self.corner_refs(v))
        return out

    def corner_face(self, corner: CornerRef, face_of: dict[int, int],
                    isolated_faces: dict[int, int] | None = None) -> int:
        """Face index of a corner; isolated vertices need the extra map."""
        v, g = corner
        if g is None:
            if isolated_faces is None or v not in isolated_faces:
                raise MalformedRotation(f"no face for isolated vertex {v}")
            return isolated_faces[v]
        return face_of[twin(g)]

    def corner_succ_dart(self, corner: CornerRef) -> int | None:
        v, g = corner
        if g is None:
            return None
        return self.rot_next(g)

    def euler_check(self) -> None:
        """Raise NotPlanarEmbedding unless every component satisfies
        v - e + f = 2 for the walk-derived faces."""
        face_of = self.face_of_darts()
        for comp in self.components():
            vs = set(comp)
            edges = {edge_of(d) for v in comp for d in self.vertices[v]}
            faces = {face_of[d] for v in comp for d in self.vertices[v]}
            nf = len(faces) if edges else 1
            if len(vs) - len(edges) + nf != 2:
                raise NotPlanarEmbedding(
                    f"component of {min(comp)}: "
                    f"{len(vs)} - {len(edges)} + {nf} != 2")

    # ------------------------------------------------------------------
    # dual
    # ------------------------------------------------------------------

    def dual(self) -> tuple["RotationSystem", dict[int, int]]:
        """The dual rotation system plus the dart->face map used.

        Dual vertex ids are face indices.  Dual dart ids equal primal dart
        ids: dual dart ``d`` has tail ``face_of[d]``, so the dual of edge
        ``e`` joins the faces on its two sides and ``twin`` is preserved.
        The rotation around a face lists its walk's darts in *reversed*
        walk order, which embeds the dual with the same orientation of
        the sphere as the primal: the extended Euler tours of a tree and
        its co-tree then come out as mutual cyclic reversals, and the
        double dual is the original system with every dart renamed to its
        twin (same cyclic orientation).

        Corner bijection: primal ``(v, g)`` <-> dual
        ``(face_of[twin(g)], rot_next(g))``; it is an involution under
        the dart-twin renaming of the double dual.
        """
        face_of = self.face_of_darts()
        dual = RotationSystem()
        for i, cycle in enumerate(self.face_cycles()):
            cyc = list(reversed(cycle))
            dual.add_vertex(i)
            dual.vertices[i] = cyc
            for d in cyc:
                dual.dart_tail[d] = i
        return dual, face_of

    def dual_corner(self, corner: CornerRef, face_of: dict[int, int]) -> CornerRef:
        v, g = corner
        if g is None:
            raise MalformedRotation("isolated vertex corner has no dual dart")
        return (face_of[twin(g)], self.rot_next(g))

    # ------------------------------------------------------------------
    # tree / cotree and the extended Euler tour
    # ------------------------------------------------------------------

    def bfs_tree(self) -> set[int]:
        """Spanning forest edge ids: breadth-first from each component's
        smallest vertex, scanning rotations in order."""
        tree: set[int] = set()
        seen: set[int] = set()
        for v0 in sorted(self.vertices):
            if v0 in seen:
                continue
            seen.add(v0)
            queue = deque([v0])
            while queue:
                v = queue.popleft()
                for d in self.vertices[v]:
                    w = self.head(d)
                    if w not in seen:
                        seen.add(w)
                        tree.add(edge_of(d))
                        queue.append(w)
        return tree

    def eet_tokens(self, tree: set[int], root: int) -> list[tuple]:
        """The extended Euler tour of ``root``'s component.

        Tokens: ``('T', dart)`` a tree-edge crossing (tail to head),
        ``('N', dart)`` a non-tree occurrence, ``('C', (v, g))`` a corner.
        Each edge contributes exactly two tokens and each corner one; a
        single-vertex component is just its corner.
        """
        if not self.vertices[root]:
            return [("C", (root, None))]
        tokens: list[tuple] = []
        start = (root, 0)
        v, i = start
        while True:
            rot = self.vertices[v]
            tokens.append(("C", (v, rot[i])))
            j = (i + 1) % len(rot)
            d = rot[j]
            if edge_of(d) in tree:
                tokens.append(("T", d))
                w = self.head(d)
                v, i = w, self.vertices[w].index(twin(d))
            else:
                tokens.append(("N", d))
                i = j
            if (v, i) == start:
                break
        return tokens


def cotree_is_dual_spanning_tree(rs: RotationSystem, tree: set[int]) -> bool:
    """Observation: duals of non-tree edges span the dual of each component."""
    face_of = rs.face_of_darts()
    for comp in rs.components():
        edges = {edge_of(d) for v in comp for d in rs.vertices[v]}
        faces = {face_of[d] for v in comp for d in rs.vertices[v]}
        if not edges:
            continue
        nontree = [e for e in edges if e not in tree]
        # spanning: |nontree| == |faces| - 1 and connected & acyclic
        if len(nontree) != len(faces) - 1:
            return False
        parent: dict[int, int] = {f: f for f in faces}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in nontree:
            f0, f1 = face_of[2 * e], face_of[2 * e + 1]
            r0, r1 = find(f0), find(f1)
            if r0 == r1:
                return False
            parent[r0] = r1
    return True


def cyclic_equal(a: list, b: list) -> bool:
    """True if ``b`` is a rotation of ``a``."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    n = len(a)
    for s in range(n):
        if doubled[s:s + n] == b:
            return True
    return False

"""Brute-force reference implementation of the public embedding API.

``NaiveEmbedding`` keeps nothing but an explicit rotation system and an
id allocator; every query recomputes faces by a full face walk and every
update is plain list surgery.  It is the ground truth for differential
testing, so it must never share machinery with the engine beyond the
rotation-system conventions.

Corner arguments and results are ``(vertex, pred_dart)`` references; see
:mod:`dpe.rotation`.
"""

from __future__ import annotations

import random
from collections import deque

from .answers import (
    DIFFERENT_COMPONENTS,
    LINKABLE,
    NOT_LINKABLE,
    FaceAnswer,
    LinkableAnswer,
)
from .errors import (
    BadCorners,
    NoSuchCorner,
    NoSuchEdge,
    NoSuchVertex,
    NotSameFace,
    NotSameVertex,
)
from .ids import IdAllocator, twin
from .rotation import CornerRef, RotationSystem


class NaiveEmbedding:
    def __init__(self, rs: RotationSystem | None = None):
        self.rs = rs.copy() if rs is not None else RotationSystem()
        self.alloc = IdAllocator()
        for v in self.rs.vertices:
            self.alloc.reserve(v)
        for e in self.rs.edge_ids():
            self.alloc.reserve(e)

    def copy(self) -> "NaiveEmbedding":
        out = NaiveEmbedding(self.rs)
        out.alloc._next = self.alloc._next
        return out

    # ------------------------------------------------------------------
    # bookkeeping helpers
    # ------------------------------------------------------------------

    def check_corner(self, c: CornerRef) -> None:
        v, g = c
        if v not in self.rs.vertices:
            raise NoSuchCorner(f"no vertex {v}")
        rot = self.rs.vertices[v]
        if g is None:
            if rot:
                raise NoSuchCorner(f"vertex {v} is not isolated")
        elif g not in rot:
            raise NoSuchCorner(f"dart {g} not at vertex {v}")

    def corner_face(self, c: CornerRef, face_of=None) -> object:
        """Face key of a corner: the face index, or the component root for
        an isolated vertex (isolated vertices see a private sphere face)."""
        v, g = c
        if g is None:
            return ("isolated", v)
        if face_of is None:
            face_of = self.rs.face_of_darts()
        return face_of[twin(g)]

    def same_component(self, u: int, v: int) -> bool:
        if u == v:
            return True
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for d in self.rs.vertices[x]:
                w = self.rs.head(d)
                if w == v:
                    return True
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return False

    def component_vertices(self, v0: int) -> list[int]:
        seen = {v0}
        queue = deque([v0])
        out = [v0]
        while queue:
            x = queue.popleft()
            for d in self.rs.vertices[x]:
                w = self.rs.head(d)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
                    out.append(w)
        return out

    def _reverse_component(self, v0: int) -> None:
        for v in self.component_vertices(v0):
            self.rs.vertices[v].reverse()

    @staticmethod
    def _corner_after_reversal(rs_before: RotationSystem, c: CornerRef) -> CornerRef:
        """The same gap renamed after its vertex's rotation is reversed."""
        v, g = c
        if g is None:
            return c
        return (v, rs_before.rot_next(g))

    # ------------------------------------------------------------------
    # updates
    # ------------------------------------------------------------------

    def insert(self, c_u: CornerRef, c_v: CornerRef) -> int:
        self.check_corner(c_u)
        self.check_corner(c_v)
        u, gu = c_u
        v, gv = c_v
        if self.same_component(u, v):
            face_of = self.rs.face_of_darts()
            if self.corner_face(c_u, face_of) != self.corner_face(c_v, face_of):
                raise NotSameFace("insert corners lie on different faces")
        e = self.alloc.fresh()
        if u == v and gu == gv:
            # self-loop through a single corner: the loop encloses nothing
            self.rs.add_edge(e, u, v, after_u=gu, after_v=None)
            rot = self.rs.vertices[u]
            rot.remove(2 * e + 1)
            rot.insert(rot.index(2 * e) + 1, 2 * e + 1)
        else:
            self.rs.add_edge(e, u, v, after_u=gu, after_v=gv)
        return e

    def _corner_skipping(self, v: int, start: int, skip: tuple[int, ...]) -> CornerRef:
        """The corner left behind at ``v`` once ``skip`` darts are removed:
        the gap after the first non-skipped dart at or before ``start``."""
        rot = self.rs.vertices[v]
        i = rot.index(start)
        for k in range(len(rot)):
            d = rot[(i - k) % len(rot)]
            if d not in skip:
                return (v, d)
        return (v, None)

    def delete(self, e: int) -> tuple[CornerRef, CornerRef]:
        d0, d1 = 2 * e, 2 * e + 1
        if d0 not in self.rs.dart_tail:
            raise NoSuchEdge(f"no edge {e}")
        u, v = self.rs.dart_tail[d0], self.rs.dart_tail[d1]
        c_u = self._corner_skipping(u, d0, (d0, d1))
        c_v = self._corner_skipping(v, d1, (d0, d1))
        self.rs.remove_edge(e)
        return c_u, c_v

    def vertex_split(self, c1: CornerRef, c2: CornerRef) -> tuple[CornerRef, CornerRef]:
        """Cut a vertex through two corners.

        Corners on different faces merge those faces; corners on one face
        must disconnect the component (a non-disconnecting same-face cut
        would pinch the sphere and break Euler's formula, and is refused).
        Returns the two cut-gap corners.
        """
        self.check_corner(c1)
        self.check_corner(c2)
        w, g1 = c1
        w2, g2 = c2
        if w != w2:
            raise NotSameVertex("split corners lie on different vertices")
        face_of = self.rs.face_of_darts()
        same_face = self.corner_face(c1, face_of) == self.corner_face(c2, face_of)
        before = self.rs.copy()
        alloc_before = self.alloc._next
        ca, cb = self._split_raw(c1, c2)
        if same_face and self.same_component(ca[0], cb[0]):
            self.rs = before
            self.alloc._next = alloc_before
            raise NotSameFace("same-face split must disconnect the component")
        return ca, cb

    def _split_raw(self, c1: CornerRef, c2: CornerRef) -> tuple[CornerRef, CornerRef]:
        w, g1 = c1
        _, g2 = c2
        rot = self.rs.vertices[w]
        chain_a: list[int] = []
        if g1 is not None and g1 != g2:
            i = rot.index(g1)
            while True:
                i = (i + 1) % len(rot)
                chain_a.append(rot[i])
                if rot[i] == g2:
                    break
        chain_b = [d for d in rot if d not in chain_a]
        va = self.alloc.fresh()
        vb = self.alloc.fresh()
        self.rs.add_vertex(va)
        self.rs.add_vertex(vb)
        self.rs.vertices[va] = chain_a
        self.rs.vertices[vb] = chain_b
        for d in chain_a:
            self.rs.dart_tail[d] = va
        for d in chain_b:
            self.rs.dart_tail[d] = vb
        del self.rs.vertices[w]
        ca: CornerRef = (va, g2) if chain_a else (va, None)
        cb: CornerRef = (vb, g1) if chain_b else (vb, None)
        return ca, cb

    def vertex_join(self, c_u: CornerRef, c_v: CornerRef) -> tuple[CornerRef, CornerRef]:
        """Fuse two vertices at the given corners into one fresh vertex.

        The new rotation is u's list cut open at ``c_u`` followed by v's
        cut open at ``c_v``; returns the two seam corners for re-split.
        """
        self.check_corner(c_u)
        self.check_corner(c_v)
        u, gu = c_u
        v, gv = c_v
        if u == v:
            raise BadCorners("cannot join a vertex to itself")
        if self.same_component(u, v):
            face_of = self.rs.face_of_darts()
            if self.corner_face(c_u, face_of) != self.corner_face(c_v, face_of):
                raise NotSameFace("join corners lie on different faces")
        return self._join_raw(c_u, c_v)

    def _join_raw(self, c_u: CornerRef, c_v: CornerRef) -> tuple[CornerRef, CornerRef]:
        u, gu = c_u
        v, gv = c_v

        def cut_open(vertex: int, g: int | None) -> list[int]:
            rot = self.rs.vertices[vertex]
            if g is None:
                return []
            i = rot.index(g)
            return rot[i + 1:] + rot[:i + 1]

        chain_u = cut_open(u, gu)
        chain_v = cut_open(v, gv)
        w = self.alloc.fresh()
        self.rs.add_vertex(w)
        self.rs.vertices[w] = chain_u + chain_v
        for d in chain_u + chain_v:
            self.rs.dart_tail[d] = w
        del self.rs.vertices[u]
        del self.rs.vertices[v]
        if not chain_u and not chain_v:
            return (w, None), (w, None)
        c1: CornerRef = (w, gu if chain_u else chain_v[-1])
        c2: CornerRef = (w, gv if chain_v else chain_u[-1])
        return c1, c2

    # ------------------------------------------------------------------
    # flips
    # ------------------------------------------------------------------

    def _arc_darts(self, c1: CornerRef, c2: CornerRef) -> list[int]:
        """Darts strictly after corner c1 up to c2's pred dart, inclusive."""
        v, g1 = c1
        _, g2 = c2
        rot = self.rs.vertices[v]
        if g1 is None or g1 == g2:
            return []
        out = []
        i = rot.index(g1)
        while True:
            i = (i + 1) % len(rot)
            out.append(rot[i])
            if rot[i] == g2:
                break
        return out

    def articulation_flip(self, c1: CornerRef, c2: CornerRef, c3: CornerRef) -> None:
        for c in (c1, c2, c3):
            self.check_corner(c)
        w = c1[0]
        if c2[0] != w or c3[0] != w:
            raise BadCorners("articulation corners must share a vertex")
        face_of = self.rs.face_of_darts()
        if self.corner_face(c1, face_of) != self.corner_face(c2, face_of):
            raise BadCorners("c1 and c2 must share a face")
        arc = self._arc_darts(c1, c2)
        if c3[1] is not None and c3[1] in arc:
            raise BadCorners("c3 lies inside the flipped arc")
        before = self.rs.copy()
        alloc_before = self.alloc._next
        ca, cb = self._split_raw(c1, c2)
        # the cut part must hang off the articulation alone
        if self.same_component(ca[0], cb[0]):
            self.rs = before
            self.alloc._next = alloc_before
            raise BadCorners("c1,c2 do not delimit a hanging subgraph")
        c3b: CornerRef = (cb[0], c3[1]) if c3[1] is not None else cb
        snap = self.rs.copy()
        self._reverse_component(ca[0])
        ca_rev = self._corner_after_reversal(snap, ca)
        self._join_raw(c3b, ca_rev)

    def separation_flip(self, c1: CornerRef, c2: CornerRef,
                        c3: CornerRef, c4: CornerRef) -> None:
        """Seclude the subgraph delimited by the four corners, reverse its
        orientation, and glue it back crosswise.

        c1,c2 share a vertex v; c3,c4 share a vertex u; c2,c3 share a face
        and c1,c4 share a face.  The secluded side carries v's darts in
        the arc (c1 -> c2] and u's darts in (c3 -> c4].
        """
        for c in (c1, c2, c3, c4):
            self.check_corner(c)
        v, u = c1[0], c3[0]
        if c2[0] != v or c4[0] != u or u == v:
            raise BadCorners("separation corners must pair on two vertices")
        face_of = self.rs.face_of_darts()
        if self.corner_face(c2, face_of) != self.corner_face(c3, face_of):
            raise BadCorners("c2 and c3 must share a face")
        if self.corner_face(c1, face_of) != self.corner_face(c4, face_of):
            raise BadCorners("c1 and c4 must share a face")
        before = self.rs.copy()
        alloc_before = self.alloc._next
        try:
            cva, cvb = self.vertex_split(c1, c2)
            cua, cub = self.vertex_split(c3, c4)
            inside = set(self.component_vertices(cva[0]))
            if cua[0] not in inside or cub[0] in inside or cvb[0] in inside:
                raise BadCorners("corners do not delimit a separable subgraph")
            snap = self.rs.copy()
            self._reverse_component(cva[0])
            cva_r = self._corner_after_reversal(snap, cva)
            cua_r = self._corner_after_reversal(snap, cua)
            self.vertex_join(cvb, cva_r)
            self.vertex_join(cub, cua_r)
        except BadCorners:
            self.rs = before
            self.alloc._next = alloc_before
            raise

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def _vertex_face_corners(self, face_of) -> dict[int, dict[object, list[CornerRef]]]:
        out: dict[int, dict[object, list[CornerRef]]] = {}
        for v, rot in self.rs.vertices.items():
            per: dict[object, list[CornerRef]] = {}
            for c in ([(v, None)] if not rot else [(v, g) for g in rot]):
                per.setdefault(self.corner_face(c, face_of), []).append(c)
            out[v] = per
        return out

    def any_corner(self, v: int) -> CornerRef:
        rot = self.rs.vertices[v]
        return (v, rot[0]) if rot else (v, None)

    def linkable(self, u: int, v: int) -> LinkableAnswer:
        if u not in self.rs.vertices or v not in self.rs.vertices:
            raise NoSuchVertex(f"no vertex {u if u not in self.rs.vertices else v}")
        if not self.same_component(u, v):
            return LinkableAnswer(DIFFERENT_COMPONENTS, [
                FaceAnswer(-1, [self.any_corner(u)], [self.any_corner(v)])])
        face_of = self.rs.face_of_darts()
        fu: dict[object, list[CornerRef]] = {}
        for c in ([(u, None)] if not self.rs.vertices[u] else
                  [(u, g) for g in self.rs.vertices[u]]):
            fu.setdefault(self.corner_face(c, face_of), []).append(c)
        fv: dict[object, list[CornerRef]] = {}
        for c in ([(v, None)] if not self.rs.vertices[v] else
                  [(v, g) for g in self.rs.vertices[v]]):
            fv.setdefault(self.corner_face(c, face_of), []).append(c)
        faces = []
        for f in fu:
            if f in fv:
                key = f if isinstance(f, int) else -1
                faces.append(FaceAnswer(key, fu[f], fv[f]))
        faces.sort(key=lambda a: a.key())
        if not faces:
            return LinkableAnswer(NOT_LINKABLE)
        return LinkableAnswer(LINKABLE, faces)

    # ------------------------------------------------------------------
    # exhaustive flip enumeration (small instances only)
    # ------------------------------------------------------------------

    def enumerate_articulation_flips(self) -> list[tuple[CornerRef, CornerRef, CornerRef]]:
        face_of = self.rs.face_of_darts()
        out = []
        for w, rot in self.rs.vertices.items():
            if len(rot) < 2:
                continue
            corners = [(w, g) for g in rot]
            for c1 in corners:
                for c2 in corners:
                    if c1 == c2:
                        continue
                    if self.corner_face(c1, face_of) != self.corner_face(c2, face_of):
                        continue
                    arc = set(self._arc_darts(c1, c2))
                    for c3 in corners:
                        if c3[1] in arc:
                            continue
                        out.append((c1, c2, c3))
        return out

    def enumerate_separation_flips(self):
        face_of = self.rs.face_of_darts()
        out = []
        verts = sorted(v for v, rot in self.rs.vertices.items() if len(rot) >= 2)
        for v in verts:
            for u in verts:
                if u <= v:
                    continue
                cvs = [(v, g) for g in self.rs.vertices[v]]
                cus = [(u, g) for g in self.rs.vertices[u]]
                for c1 in cvs:
                    for c2 in cvs:
                        if c1 == c2:
                            continue
                        for c3 in cus:
                            if self.corner_face(c2, face_of) != self.corner_face(c3, face_of):
                                continue
                            for c4 in cus:
                                if c3 == c4:
                                    continue
                                if self.corner_face(c1, face_of) != self.corner_face(c4, face_of):
                                    continue
                                trial = self.copy()
                                try:
                                    trial.separation_flip(c1, c2, c3, c4)
                                except BadCorners:
                                    continue
                                out.append((c1, c2, c3, c4))
        return out

    def enumerate_single_flips(self):
        """Every legal flip argument tuple, tagged by kind."""
        flips = [("aflip", t) for t in self.enumerate_articulation_flips()]
        flips += [("sflip", t) for t in self.enumerate_separation_flips()]
        return flips

    def naive_one_flip_linkable(self, u: int, v: int):
        """(achievable, witness): exhaustively try every single flip."""
        if self.linkable(u, v).ok:
            return True, ("already", ())
        for kind, corners in self.enumerate_single_flips():
            trial = self.copy()
            try:
                if kind == "aflip":
                    trial.articulation_flip(*corners)
                else:
                    trial.separation_flip(*corners)
            except BadCorners:
                continue
            if u not in trial.rs.vertices or v not in trial.rs.vertices:
                continue
            if trial.linkable(u, v).status == LINKABLE:
                return True, (kind, corners)
        return False, None

    # ------------------------------------------------------------------
    # canonical form
    # ------------------------------------------------------------------

    def canonical_form(self) -> tuple:
        """Label-free signature of the embedding, component by component.

        For each component the signature is the minimum, over all start
        darts, of a traversal encoding with darts renumbered in
        first-visit order (fixed orientation, so chirality matters).
        """
        comps = self.rs.components()
        sigs = []
        for comp in comps:
            darts = [d for v in comp for d in self.rs.vertices[v]]
            if not darts:
                sigs.append(("lone",))
                continue
            best = None
            for d0 in darts:
                label: dict[int, int] = {}
                order: list[int] = []

                def visit(d: int) -> int:
                    if d not in label:
                        label[d] = len(label)
                        order.append(d)
                    return label[d]

                visit(d0)
                enc: list[tuple] = []
                qi = 0
                while qi < len(order):
                    d = order[qi]
                    qi += 1
                    rot = self.rs.vertices[self.rs.dart_tail[d]]
                    i = rot.index(d)
                    cyc = rot[i:] + rot[:i]
                    enc.append((tuple(visit(x) for x in cyc), visit(twin(d))))
                sig = tuple(enc)
                if best is None or sig < best:
                    best = sig
            sigs.append(best)
        return tuple(sorted(sigs))

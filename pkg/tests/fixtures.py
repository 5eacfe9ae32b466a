"""Shared fixture embeddings, built as explicit rotation systems.

All the standard instances the test suite keeps coming back to:

* TRI      triangle a,b,c
* C4       4-cycle a,b,c,d
* STAR_IN  triangle a,b,c with pendant d on b inside the triangle face
           and pendant e on a on the other face (d and e share no face)
* THETA    cycle alpha-p-beta-q with pendant u on p inside one face and
           pendant v on q in the other (separation pair alpha,beta)

Vertex name -> id maps are returned alongside so tests stay readable.
"""

from __future__ import annotations

from dpe.rotation import RotationSystem

A, B, C, D, E = 0, 1, 2, 3, 4


def triangle() -> RotationSystem:
    rs = RotationSystem()
    for v in (A, B, C):
        rs.add_vertex(v)
    rs.add_edge(0, A, B)      # darts 0,1
    rs.add_edge(1, B, C)      # darts 2,3
    rs.add_edge(2, C, A)      # darts 4,5
    return rs


def square() -> RotationSystem:
    rs = RotationSystem()
    for v in (A, B, C, D):
        rs.add_vertex(v)
    rs.add_edge(0, A, B)
    rs.add_edge(1, B, C)
    rs.add_edge(2, C, D)
    rs.add_edge(3, D, A)
    return rs


def star_in() -> RotationSystem:
    """Triangle with pendant d on b (inner face) and pendant e on a (outer).

    Rotation at b places the bd dart between ba and bc, which puts d in
    the face whose walk runs a->b->c; e sits in the other face of a.
    """
    rs = triangle()
    rs.add_vertex(D)
    rs.add_vertex(E)
    rs.add_edge(3, B, D, after_u=1)   # dart 6 at b, inserted after dart ba
    rs.add_edge(4, A, E, after_u=0)   # dart 8 at a, after dart ab
    return rs


def theta() -> RotationSystem:
    """Cycle alpha-p-beta-q with pendants u (on p, inside face f) and
    v (on q, inside face g), so u and v share no face.

    ids: alpha=0, p=1, beta=2, q=3, u=4, v=5.
    """
    al, p, be, q, u, v = 0, 1, 2, 3, 4, 5
    rs = RotationSystem()
    for w in (al, p, be, q, u, v):
        rs.add_vertex(w)
    rs.add_edge(0, al, p)    # darts 0,1
    rs.add_edge(1, p, be)    # darts 2,3
    rs.add_edge(2, be, q)    # darts 4,5
    rs.add_edge(3, q, al)    # darts 6,7
    # pendant u on p in the face walked 1,7,5,3; pendant v on q in the
    # face walked 0,2,4,6 (the corner after dart 5 at q).
    rs.add_edge(4, p, u, after_u=2)    # dart 8 after dart p->beta
    rs.add_edge(5, q, v, after_u=5)    # dart 10 after dart q->beta(twin)
    return rs


def single_vertex() -> RotationSystem:
    rs = RotationSystem()
    rs.add_vertex(A)
    return rs


def single_edge() -> RotationSystem:
    rs = RotationSystem()
    rs.add_vertex(A)
    rs.add_vertex(B)
    rs.add_edge(0, A, B)
    return rs


def two_components() -> RotationSystem:
    """A triangle plus a disjoint single edge (vertices 3,4)."""
    rs = triangle()
    rs.add_vertex(3)
    rs.add_vertex(4)
    rs.add_edge(3, 3, 4)
    return rs


def k5() -> RotationSystem:
    rs = RotationSystem()
    for v in range(5):
        rs.add_vertex(v)
    e = 0
    for i in range(5):
        for j in range(i + 1, 5):
            rs.add_edge(e, i, j)
            e += 1
    return rs


ALL_FIXTURES = {
    "TRI": triangle,
    "C4": square,
    "STAR_IN": star_in,
    "THETA": theta,
    "single_vertex": single_vertex,
    "single_edge": single_edge,
    "two_components": two_components,
}

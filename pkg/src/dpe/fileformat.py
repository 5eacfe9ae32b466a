"""The ``dpe v1`` embedding file format.

Text, line based::

    dpe v1
    V <id>: <dart list in cyclic order>
    E <id> <dart0> <dart1> <u> <v>
    T <edge ids>          (optional; pins the spanning tree)

Vertex lines list darts space separated; an isolated vertex has an empty
list.  Parsing then serializing reproduces the input bit-exactly for
files produced by :func:`serialize`.
"""

from __future__ import annotations

import io

from .errors import MalformedRotation, ParseError
from .rotation import RotationSystem

MAGIC = "dpe v1"


def parse(text: str) -> tuple[RotationSystem, set[int] | None]:
    """Parse an embedding file into a rotation system and optional tree."""
    rs = RotationSystem()
    tree: set[int] | None = None
    edge_lines: list[tuple[int, int, int, int, int, int]] = []
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise ParseError(f"missing '{MAGIC}' header", 1)
    for no, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, _, rest = line.partition(" ")
        try:
            if kind == "V":
                ident, _, darts = rest.partition(":")
                v = int(ident)
                rs.add_vertex(v)
                rs.vertices[v] = [int(tok) for tok in darts.split()]
            elif kind == "E":
                e, d0, d1, u, v = (int(tok) for tok in rest.split())
                edge_lines.append((no, e, d0, d1, u, v))
            elif kind == "T":
                tree = {int(tok) for tok in rest.split()}
            else:
                raise ParseError(f"unknown record {kind!r}", no)
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), no) from exc
    for no, e, d0, d1, u, v in edge_lines:
        if (d0, d1) != (2 * e, 2 * e + 1):
            raise ParseError(f"edge {e} must own darts {2*e},{2*e+1}", no)
        for d, w in ((d0, u), (d1, v)):
            if w not in rs.vertices:
                raise ParseError(f"edge {e} references missing vertex {w}", no)
            rs.dart_tail[d] = w
    try:
        rs.check_valid()
    except MalformedRotation as exc:
        raise ParseError(str(exc)) from exc
    return rs, tree


def serialize(rs: RotationSystem, tree: set[int] | None = None) -> str:
    out = io.StringIO()
    out.write(MAGIC + "\n")
    for v in sorted(rs.vertices):
        darts = " ".join(str(d) for d in rs.vertices[v])
        out.write(f"V {v}:{' ' + darts if darts else ''}\n")
    for e in rs.edge_ids():
        u, v = rs.edge_ends(e)
        out.write(f"E {e} {2 * e} {2 * e + 1} {u} {v}\n")
    if tree is not None:
        out.write("T " + " ".join(str(e) for e in sorted(tree)) + "\n")
    return out.getvalue()


def load(path: str) -> tuple[RotationSystem, set[int] | None]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(path: str, rs: RotationSystem, tree: set[int] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(rs, tree))

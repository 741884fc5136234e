"""Reading and writing the line-oriented PLD diagram format.

Statements are separated by newlines or ``;`` and ``#`` starts a comment::

    boundary 4                # first statement, number of boundary points
    edge e1                   # optional declaration (fixes edge order)
    edge e2: bp0 -- bp3       # shorthand for two endpoint statements
    edge u: loop              # closed circle without crossings
    endpoint 0 e1
    crossing e1 e2 e3 e4      # counterclockwise, e1-e3 passes under
    label 0 a                 # face symbol override
    exterior 1                # boundary-free diagrams: face along the circle
"""

import re

from projknot.diagram import Diagram
from projknot.errors import ParseError

NAME = r"[^\s;#:]+"
EDGE_RE = re.compile(rf"edge\s+({NAME})\s*(?::\s*(.*?))?\s*$")
ENDS_RE = re.compile(r"bp(\d+)\s*--\s*bp(\d+)$")
INT_RE = re.compile(r"\d+$")


def _statements(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        offset = 0
        for chunk in line.split(";"):
            stripped = chunk.strip()
            if stripped:
                column = offset + chunk.index(stripped) + 1
                yield lineno, column, stripped
            offset += len(chunk) + 1


def _int(token, line, column, what):
    if not INT_RE.match(token):
        raise ParseError(f"expected a nonnegative integer for {what}, got {token!r}", line, column)
    return int(token)


def parse_pld(text):
    boundary = None
    endpoints = {}
    crossings = []
    loops = []
    labels = {}
    exterior = None
    mentions = {}  # edge -> (line, column) of first mention
    ends_seen = {}

    def mention(name, line, column, ends=0):
        mentions.setdefault(name, (line, column))
        ends_seen[name] = ends_seen.get(name, 0) + ends

    def attach(i, name, line, column):
        if boundary is not None and i >= boundary:
            raise ParseError(f"boundary point {i} out of range 0..{boundary - 1}", line, column)
        if i in endpoints:
            raise ParseError(f"duplicate endpoint attachment for boundary point {i}", line, column)
        endpoints[i] = name
        mention(name, line, column, 1)

    for line, column, stmt in _statements(text):
        tokens = stmt.split()
        keyword = tokens[0]
        if boundary is None and keyword != "boundary":
            raise ParseError("the first statement must be 'boundary <count>'", line, column)
        if keyword == "boundary":
            if boundary is not None:
                raise ParseError("'boundary' given twice", line, column)
            if len(tokens) != 2:
                raise ParseError("usage: boundary <count>", line, column)
            boundary = _int(tokens[1], line, column, "boundary count")
            if boundary % 2:
                raise ParseError(f"odd boundary count {boundary}", line, column)
        elif keyword == "endpoint":
            if len(tokens) != 3:
                raise ParseError("usage: endpoint <index> <edge>", line, column)
            attach(_int(tokens[1], line, column, "boundary point"), tokens[2], line, column)
        elif keyword == "crossing":
            if len(tokens) != 5:
                raise ParseError("usage: crossing <e1> <e2> <e3> <e4>", line, column)
            crossings.append(tuple(tokens[1:]))
            for name in tokens[1:]:
                mention(name, line, column, 1)
        elif keyword == "edge":
            m = EDGE_RE.match(stmt)
            if not m:
                raise ParseError("usage: edge <name> [: loop | : bp<i> -- bp<j>]", line, column)
            name, tail = m.group(1), m.group(2)
            if tail is None:
                mention(name, line, column)
            elif tail == "loop":
                if name in loops:
                    raise ParseError(f"loop {name} declared twice", line, column)
                loops.append(name)
                mention(name, line, column)
            else:
                ends = ENDS_RE.match(tail)
                if not ends:
                    raise ParseError(f"cannot read edge ends {tail!r}", line, column + stmt.index(tail))
                mention(name, line, column)
                attach(int(ends.group(1)), name, line, column)
                attach(int(ends.group(2)), name, line, column)
        elif keyword == "label":
            if len(tokens) != 3:
                raise ParseError("usage: label <face-index> <symbol>", line, column)
            idx = _int(tokens[1], line, column, "face index")
            if idx in labels:
                raise ParseError(f"face {idx} labelled twice", line, column)
            labels[idx] = tokens[2]
        elif keyword == "exterior":
            if len(tokens) != 2:
                raise ParseError("usage: exterior <face-index>", line, column)
            exterior = _int(tokens[1], line, column, "face index")
        else:
            raise ParseError(f"unknown statement {keyword!r}", line, column)

    if boundary is None:
        raise ParseError("missing 'boundary' statement", 1, 1)
    for i in range(boundary):
        if i not in endpoints:
            raise ParseError(f"boundary point {i} is not attached to an edge")
    for name, n in ends_seen.items():
        line, column = mentions[name]
        if name in loops:
            if n:
                raise ParseError(f"loop {name} also attached to {n} end-slot(s)", line, column)
        elif n < 2:
            raise ParseError(f"dangling edge end-slot: edge {name} attached {n} time(s)", line, column)
        elif n > 2:
            raise ParseError(f"edge {name} attached {n} times, expected 2", line, column)

    return Diagram(
        boundary_count=boundary,
        endpoints=tuple(endpoints[i] for i in range(boundary)),
        crossings=tuple(crossings),
        loops=tuple(loops),
        edges=tuple(mentions),
        labels=tuple(labels.items()),
        exterior=exterior,
    )


def serialize_pld(d):
    lines = [f"boundary {d.boundary_count}"]
    loops = set(d.loops)
    for name in d.edges:
        lines.append(f"edge {name}: loop" if name in loops else f"edge {name}")
    for i, name in enumerate(d.endpoints):
        lines.append(f"endpoint {i} {name}")
    for record in d.crossings:
        lines.append("crossing " + " ".join(record))
    for idx, symbol in d.labels:
        lines.append(f"label {idx} {symbol}")
    if d.exterior is not None:
        lines.append(f"exterior {d.exterior}")
    return "\n".join(lines) + "\n"


def load_pld(path):
    with open(path, encoding="utf-8") as fh:
        return parse_pld(fh.read())

"""Projective link diagrams: incidence data, faces, coloring, components.

A diagram lives in a disk whose boundary carries ``boundary_count = 2b``
endpoints numbered counterclockwise; endpoint ``i`` is identified with its
antipode ``(i + b) % 2b``. Crossings are PD-style records listing four edge
names counterclockwise, the strand through slots 0 and 2 passing under the
strand through slots 1 and 3.
"""

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import count, product
from string import ascii_lowercase

from projknot.errors import ValidationError
from projknot.maps import CombinatorialMap

DARK = "dark"
LIGHT = "light"

SYMBOL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


def auto_symbols():
    for n in count(1):
        for letters in product(ascii_lowercase, repeat=n):
            yield "".join(letters)


@dataclass(frozen=True)
class Diagram:
    boundary_count: int
    endpoints: tuple = ()
    crossings: tuple = ()
    loops: tuple = ()
    edges: tuple = ()
    labels: tuple = ()
    exterior: int = None

    def __post_init__(self):
        object.__setattr__(self, "endpoints", tuple(self.endpoints))
        object.__setattr__(self, "crossings", tuple(tuple(x) for x in self.crossings))
        object.__setattr__(self, "loops", tuple(self.loops))
        object.__setattr__(self, "labels", tuple(sorted((int(i), s) for i, s in self.labels)))
        if not self.edges:
            object.__setattr__(self, "edges", self._mentioned_edges())
        else:
            object.__setattr__(self, "edges", tuple(self.edges))

    def _mentioned_edges(self):
        seen = {}
        for name in self.loops:
            seen.setdefault(name, None)
        for record in self.crossings:
            for name in record:
                seen.setdefault(name, None)
        for name in self.endpoints:
            if name is not None:
                seen.setdefault(name, None)
        return tuple(seen)

    @property
    def b(self):
        return self.boundary_count // 2

    def antipode(self, i):
        return (i + self.b) % self.boundary_count

    @cached_property
    def ends(self):
        """Edge name -> list of attachment points, crossings first then endpoints.

        An attachment point is ``('x', k, slot)`` or ``('bp', i)``; the first
        entry is the edge's tail in its recorded direction.
        """
        ends = {name: [] for name in self.edges}
        for k, record in enumerate(self.crossings):
            for s, name in enumerate(record):
                ends.setdefault(name, []).append(("x", k, s))
        for i, name in enumerate(self.endpoints):
            if name is not None:
                ends.setdefault(name, []).append(("bp", i))
        return ends

    def edge_at(self, end):
        if end[0] == "x":
            return self.crossings[end[1]][end[2]]
        return self.endpoints[end[1]]

    def continue_strand(self, end):
        """Where a strand arriving at ``end`` carries on."""
        if end[0] == "x":
            return ("x", end[1], (end[2] + 2) % 4)
        return ("bp", self.antipode(end[1]))

    def is_empty(self):
        return not self.edges

    @cached_property
    def combinatorial_map(self):
        n = self.boundary_count
        rotations = {}
        partner = {}
        for k in range(len(self.crossings)):
            rotations[("x", k)] = tuple(("x", k, s) for s in range(4))
        for i in range(n):
            # counterclockwise at a boundary point: along the circle towards
            # i + 1, into the disk, back along the circle towards i - 1
            rotations[("bp", i)] = (("a+", i), ("bp", i), ("a-", (i - 1) % n))
            partner[("a+", i)] = ("a-", i)
            partner[("a-", i)] = ("a+", i)
        if n == 0 and not self.is_empty():
            rotations[("C",)] = (("C+",), ("C-",))
            partner[("C+",)] = ("C-",)
            partner[("C-",)] = ("C+",)
        for name in self.loops:
            rotations[("L", name)] = (("L+", name), ("L-", name))
            partner[("L+", name)] = ("L-", name)
            partner[("L-", name)] = ("L+", name)
        for name, occ in self.ends.items():
            if len(occ) == 2:
                partner[occ[0]] = occ[1]
                partner[occ[1]] = occ[0]
        return CombinatorialMap(rotations, partner)

    def dart_order(self):
        n = self.boundary_count
        order = [("a+", i) for i in range(n)]
        if n == 0 and not self.is_empty():
            order.append(("C+",))
        order += [("x", k, s) for k in range(len(self.crossings)) for s in range(4)]
        order += [("bp", i) for i in range(n)]
        for name in self.loops:
            order += [("L+", name), ("L-", name)]
        order += [("a-", i) for i in range(n)]
        if n == 0 and not self.is_empty():
            order.append(("C-",))
        return order


@dataclass(frozen=True)
class Face:
    index: int
    symbol: str
    darts: tuple
    corners: tuple
    annulus: bool = False


@dataclass(frozen=True)
class Component:
    index: int
    edges: tuple  # (edge name, traversed tail-to-head?)
    endpoints: tuple  # boundary points in traversal order

    @property
    def endpoint_count(self):
        return len(self.endpoints)


@dataclass(frozen=True)
class Coloring:
    colors: tuple

    def __getitem__(self, face_index):
        return self.colors[face_index]

    def __len__(self):
        return len(self.colors)

    def flipped(self):
        return Coloring(tuple(LIGHT if c == DARK else DARK for c in self.colors))


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return bool(self.problems)

    def __iter__(self):
        return iter(self.problems)

    def __contains__(self, text):
        return any(text in p for p in self.problems)


def _corner(dart):
    kind = dart[0]
    if kind == "x":
        return dart
    if kind == "a+":
        return ("arc", dart[1])
    if kind == "L+":
        return ("loop", dart[1], "+")
    if kind == "L-":
        return ("loop", dart[1], "-")
    if kind == "C+":
        return ("circle",)
    return None


def incidence_problems(d):
    problems = []
    n = d.boundary_count
    if not isinstance(n, int) or n < 0:
        return [f"boundary count must be a nonnegative integer, got {n!r}"]
    if n % 2:
        problems.append(f"odd boundary count {n}")
    if len(d.endpoints) != n:
        problems.append(f"{len(d.endpoints)} endpoint slots for boundary count {n}")
    for i, name in enumerate(d.endpoints):
        if name is None:
            problems.append(f"boundary point {i} is not attached to an edge")
    for k, record in enumerate(d.crossings):
        if len(record) != 4:
            problems.append(f"crossing {k} has {len(record)} slots")
    if d.is_empty():
        problems.append("empty diagram")
    loops = set(d.loops)
    if len(loops) != len(d.loops):
        problems.append("loop declared twice")
    if len(set(d.edges)) != len(d.edges):
        problems.append("edge declared twice")
    for name, occ in d.ends.items():
        if name in loops:
            if occ:
                problems.append(f"loop edge {name} is also attached {len(occ)} times")
        elif len(occ) < 2:
            problems.append(f"dangling edge {name}: {len(occ)} end-slot(s) attached, expected 2")
        elif len(occ) > 2:
            problems.append(f"edge {name} attached {len(occ)} times, expected 2")
    if set(d.ends) != set(d.edges):
        problems.append("edge list does not match the attached edges")
    return problems


def euler_counts(d, faces):
    """(V, E, F) for the disk, with vertex-free circles given one vertex.

    For boundary_count 0 the exterior face is an annulus and is left out of F.
    """
    n = d.boundary_count
    circle = 1 if n == 0 and not d.is_empty() else 0
    v = len(d.crossings) + n + len(d.loops) + circle
    e = len(d.edges) + n + circle
    f = sum(1 for face in faces if not face.annulus)
    return v, e, f


def _trace(d):
    cmap = d.combinatorial_map
    cycles = cmap.face_cycles(d.dart_order())
    n = d.boundary_count
    outer = ("a-", 0) if n else ("C-",)
    inner_circle = ("C+",)
    keep = [c for c in cycles if outer not in c and inner_circle not in c]
    exterior = None
    if n == 0:
        if d.exterior is not None:
            if not 0 <= d.exterior < len(keep):
                raise ValidationError(f"exterior face {d.exterior} out of range")
            exterior = d.exterior
        else:
            longest = max(len(c) for c in keep)
            exterior = max(i for i, c in enumerate(keep) if len(c) == longest)
    elif d.exterior is not None:
        raise ValidationError("'exterior' only applies to diagrams without boundary points")

    overrides = dict(d.labels)
    taken = set(overrides.values())
    auto = (s for s in auto_symbols() if s not in taken)
    faces = []
    for idx, cyc in enumerate(keep):
        darts = cyc
        if idx == exterior:
            darts = (inner_circle,) + cyc
        corners = tuple(c for c in map(_corner, darts) if c is not None)
        symbol = overrides.get(idx) or next(auto)
        faces.append(Face(idx, symbol, darts, corners, annulus=idx == exterior))
    return faces


def trace_faces(d):
    """Interior faces of the diagram, in tracing order.

    Raises ValidationError if the incidence data is broken or the map is not
    a connected planar disk (Euler relation V - E + F = 1).
    """
    problems = incidence_problems(d)
    if problems:
        raise ValidationError(problems)
    faces = _trace(d)
    pieces = len(d.combinatorial_map.connected_components())
    if d.boundary_count == 0:
        pieces -= 1  # the boundary circle on its own
    if pieces != 1:
        raise ValidationError(f"disconnected diagram: the link projection has {pieces} separate pieces")
    v, e, f = euler_counts(d, faces)
    if v - e + f != 1:
        raise ValidationError(f"Euler relation fails: V - E + F = {v} - {e} + {f} = {v - e + f}")
    bad = [i for i, _ in d.labels if not 0 <= i < len(faces)]
    if bad:
        raise ValidationError(f"label for nonexistent face {bad[0]}")
    symbols = [face.symbol for face in faces]
    if len(set(symbols)) != len(symbols):
        raise ValidationError("face symbols are not distinct")
    for s in symbols:
        if not SYMBOL_RE.match(s):
            raise ValidationError(f"invalid face symbol {s!r}")
    return tuple(faces)


def dart_faces(faces):
    where = {}
    for face in faces:
        for dart in face.darts:
            where[dart] = face.index
    return where


def crossing_corner_faces(d, faces, k):
    """Face indices at the four corners of crossing k; corner j sits between slots j and j+1."""
    where = dart_faces(faces)
    return tuple(where[("x", k, j)] for j in range(4))


def arc_face(d, faces, i):
    """Face on the interior side of the boundary arc from endpoint i to i+1."""
    return dart_faces(faces)[("a+", i)]


def exterior_face(faces):
    for face in faces:
        if face.annulus:
            return face.index
    return None


def _edge_sides(d, faces):
    where = dart_faces(faces)
    sides = []
    for name in d.edges:
        if name in d.loops:
            sides.append((name, where[("L+", name)], where[("L-", name)]))
        else:
            a, b = d.ends[name]
            sides.append((name, where[a], where[b]))
    return sides


def checkerboard(d, faces=None):
    """Two-color the faces so colors flip across every diagram edge.

    The face inside boundary arc (0, 1) is dark; without boundary points the
    face along the boundary circle is dark.
    """
    if faces is None:
        faces = trace_faces(d)
    adjacency = {f.index: [] for f in faces}
    for name, f, g in _edge_sides(d, faces):
        if f == g:
            raise ValidationError(f"inconsistent coloring: edge {name} has the same face on both sides")
        adjacency[f].append(g)
        adjacency[g].append(f)
    if d.boundary_count:
        seed = arc_face(d, faces, 0)
    else:
        seed = exterior_face(faces)
    colors = {seed: DARK}
    queue = deque([seed])
    while queue:
        f = queue.popleft()
        other = LIGHT if colors[f] == DARK else DARK
        for g in adjacency[f]:
            if g not in colors:
                colors[g] = other
                queue.append(g)
            elif colors[g] != other:
                raise ValidationError("inconsistent coloring: odd cycle of faces")
    if len(colors) != len(faces):
        raise ValidationError("inconsistent coloring: some faces unreachable across edges")
    return Coloring(tuple(colors[f.index] for f in faces))


def components(d):
    """Split the edges into closed strands.

    Strands go straight through crossings (slot s to s+2) and jump from a
    boundary point to its antipode.
    """
    visited = set()
    result = []
    for start in d.edges:
        if start in visited:
            continue
        if start in d.loops:
            visited.add(start)
            result.append(Component(len(result), ((start, True),), ()))
            continue
        edges, points = [], []
        tail = d.ends[start][0]
        name = start
        while True:
            occ = d.ends[name]
            forward = tail == occ[0]
            head = occ[1] if forward else occ[0]
            if name in visited:
                break
            visited.add(name)
            edges.append((name, forward))
            nxt = d.continue_strand(head)
            if head[0] == "bp":
                points += [head[1], nxt[1]]
            tail = nxt
            name = d.edge_at(nxt)
        result.append(Component(len(result), tuple(edges), tuple(points)))
    return tuple(result)


def homology_class(d, c):
    """Class in H_1(RP^3; Z/2): half the component's boundary points, mod 2."""
    return (len(c.endpoints) // 2) % 2


def validate(d):
    report = ValidationReport()
    problems = incidence_problems(d)
    report.problems += problems
    if problems:
        return report
    try:
        faces = trace_faces(d)
        checkerboard(d, faces)
    except ValidationError as err:
        report.problems += err.problems
    return report

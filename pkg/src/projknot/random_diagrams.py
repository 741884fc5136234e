"""Build diagrams from polylines drawn in the unit disk, and random ones.

Used to transcribe figures into PLD data and to feed the property tests.
Arcs run between boundary points on the unit circle; the boundary points must
come in antipodal pairs. Closed polygons give components that stay inside
the disk.
"""

import math
import random
from dataclasses import replace

from projknot.diagram import Diagram, trace_faces
from projknot.errors import ValidationError

EPS = 1e-9


class Degenerate(ValueError):
    """The drawing is not in general position."""


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _segment_hit(p, p2, q, q2):
    rx, ry = p2[0] - p[0], p2[1] - p[1]
    sx, sy = q2[0] - q[0], q2[1] - q[1]
    denom = _cross(rx, ry, sx, sy)
    qpx, qpy = q[0] - p[0], q[1] - p[1]
    if abs(denom) < EPS:
        if abs(_cross(qpx, qpy, rx, ry)) < EPS:
            raise Degenerate("overlapping segments")
        return None
    t = _cross(qpx, qpy, sx, sy) / denom
    u = _cross(qpx, qpy, rx, ry) / denom
    if -EPS < t < 1 + EPS and -EPS < u < 1 + EPS:
        if min(t, 1 - t, u, 1 - u) < 1e-6:
            raise Degenerate("intersection at a polyline vertex")
        return t, u
    return None


def _signed_area(points):
    return 0.5 * sum(_cross(x0, y0, x1, y1) for (x0, y0), (x1, y1) in zip(points, points[1:]))


def diagram_from_polylines(arcs=(), polygons=(), over=None, labels=()):
    """Turn a drawing into a Diagram.

    ``over`` decides each crossing: a sequence of booleans (True when the
    strand met first, in piece order, goes over), a callable taking the
    crossing index, or None for "first strand over" everywhere.
    """
    arcs = [list(map(tuple, a)) for a in arcs]
    polygons = [list(map(tuple, p)) for p in polygons]
    ends = []
    for a in arcs:
        for pt in (a[0], a[-1]):
            if abs(math.hypot(*pt) - 1) > 1e-6:
                raise ValueError(f"arc end {pt} is not on the unit circle")
            ends.append(pt)
    angles = sorted(math.atan2(y, x) % (2 * math.pi) for x, y in ends)
    n = len(angles)
    for a0, a1 in zip(angles, angles[1:]):
        if a1 - a0 < 1e-6:
            raise Degenerate("repeated boundary point")
    for i in range(n // 2):
        if abs((angles[i + n // 2] - angles[i]) - math.pi) > 1e-6:
            raise ValueError("boundary points are not antipodal in pairs")

    def bp_index(pt):
        ang = math.atan2(pt[1], pt[0]) % (2 * math.pi)
        return min(range(n), key=lambda i: abs(angles[i] - ang))

    pieces = [(pts, False) for pts in arcs] + [(pts, True) for pts in polygons]
    segments = []  # (piece, j, start, stop)
    for pi, (pts, closed) in enumerate(pieces):
        m = len(pts) if closed else len(pts) - 1
        for j in range(m):
            segments.append((pi, j, pts[j], pts[(j + 1) % len(pts)]))

    def adjacent(s, t):
        if s[0] != t[0]:
            return False
        pts, closed = pieces[s[0]]
        m = len(pts) if closed else len(pts) - 1
        dj = abs(s[1] - t[1])
        return dj == 1 or (closed and dj == m - 1)

    hits = []
    for x in range(len(segments)):
        for y in range(x + 1, len(segments)):
            s, t = segments[x], segments[y]
            if adjacent(s, t):
                continue
            hit = _segment_hit(s[2], s[3], t[2], t[3])
            if hit:
                pt = (s[2][0] + hit[0] * (s[3][0] - s[2][0]), s[2][1] + hit[0] * (s[3][1] - s[2][1]))
                hits.append(((s[0], s[1], hit[0]), (t[0], t[1], hit[1]), pt))
    for i in range(len(hits)):
        for j in range(i + 1, len(hits)):
            if math.dist(hits[i][2], hits[j][2]) < 1e-6:
                raise Degenerate("three strands through one point")
    hits.sort(key=lambda h: (min(h[0], h[1]), max(h[0], h[1])))

    passages = {pi: [] for pi in range(len(pieces))}
    for k, (a, b, pt) in enumerate(hits):
        first, second = sorted((a, b))
        passages[first[0]].append((first[1], first[2], k, 0))
        passages[second[0]].append((second[1], second[2], k, 1))

    edge_names = []
    loops = []
    half = {}  # (crossing, strand, 'in'|'out') -> edge name
    endpoint_edge = {}
    geometry = {}  # edge -> polyline from its start to its stop

    def new_edge(points):
        name = f"e{len(edge_names) + 1}"
        edge_names.append(name)
        geometry[name] = points
        return name

    for pi, (pts, closed) in enumerate(pieces):
        stops = sorted(passages[pi])
        m = len(pts) if closed else len(pts) - 1

        def point_at(j, t):
            p, q = pts[j], pts[(j + 1) % len(pts)]
            return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))

        def path(a, b):
            # polyline from position a = (j, t) to b, walking forward
            (ja, ta), (jb, tb) = a, b
            out = [point_at(ja, ta)]
            j = ja
            steps = (jb - ja) % m if closed else jb - ja
            if closed and steps == 0 and tb <= ta:
                steps = m
            for _ in range(steps):
                j = (j + 1) % len(pts)
                out.append(pts[j])
            out.append(point_at(jb, tb))
            return out

        if not stops:
            if closed:
                name = new_edge(pts + [pts[0]])
                loops.append(name)
            else:
                name = new_edge(list(pts))
                endpoint_edge[bp_index(pts[0])] = name
                endpoint_edge[bp_index(pts[-1])] = name
            continue
        if closed:
            for s0, s1 in zip(stops, stops[1:] + stops[:1]):
                name = new_edge(path(s0[:2], s1[:2]))
                half[(s0[2], s0[3], "out")] = name
                half[(s1[2], s1[3], "in")] = name
        else:
            first = new_edge(path((0, 0.0), stops[0][:2]))
            endpoint_edge[bp_index(pts[0])] = first
            half[(stops[0][2], stops[0][3], "in")] = first
            for s0, s1 in zip(stops, stops[1:]):
                name = new_edge(path(s0[:2], s1[:2]))
                half[(s0[2], s0[3], "out")] = name
                half[(s1[2], s1[3], "in")] = name
            last = new_edge(path(stops[-1][:2], (m - 1, 1.0)))
            half[(stops[-1][2], stops[-1][3], "out")] = last
            endpoint_edge[bp_index(pts[-1])] = last

    crossings = []
    slot_ends = {}  # edge -> {('x', k, slot): 'start'|'stop'}
    for k, (a, b, pt) in enumerate(hits):
        first, second = sorted((a, b))
        if over is None:
            first_over = True
        elif callable(over):
            first_over = bool(over(k))
        else:
            first_over = bool(over[k])
        spokes = []
        for strand, pos in ((0, first), (1, second)):
            pts = pieces[pos[0]][0]
            p, q = pts[pos[1]], pts[(pos[1] + 1) % len(pts)]
            ang = math.atan2(q[1] - p[1], q[0] - p[0])
            spokes.append((ang % (2 * math.pi), strand, "out"))
            spokes.append(((ang + math.pi) % (2 * math.pi), strand, "in"))
        spokes.sort()
        under = 1 if first_over else 0
        start = min(i for i, s in enumerate(spokes) if s[1] == under)
        spokes = spokes[start:] + spokes[:start]
        record = []
        for slot, (_, strand, way) in enumerate(spokes):
            name = half[(k, strand, way)]
            record.append(name)
            slot_ends.setdefault(name, {})[("x", k, slot)] = "stop" if way == "in" else "start"
        crossings.append(tuple(record))

    d = Diagram(
        boundary_count=n,
        endpoints=tuple(endpoint_edge[i] for i in range(n)),
        crossings=tuple(crossings),
        loops=tuple(loops),
        edges=tuple(edge_names),
        labels=tuple(labels),
    )
    if n == 0:
        d = replace(d, exterior=_outer_face(d, geometry, slot_ends))
    trace_faces(d)
    return d


def _outer_face(d, geometry, slot_ends):
    faces = trace_faces(d)

    def dart_path(dart):
        if dart[0] in ("L+", "L-"):
            pts = geometry[dart[1]]
            return pts if dart[0] == "L+" else pts[::-1]
        name = d.edge_at(dart)
        pts = geometry[name]
        return pts if slot_ends[name][dart] == "start" else pts[::-1]

    areas = []
    for face in faces:
        darts = [x for x in face.darts if x[0] in ("x", "L+", "L-")]
        areas.append(sum(_signed_area(dart_path(x)) for x in darts))
    negative = [i for i, a in enumerate(areas) if a < 0]
    if len(negative) != 1:
        raise Degenerate(f"could not identify the outer face (areas {areas})")
    return negative[0]


def _random_point(rng, radius=0.9):
    r = radius * math.sqrt(rng.random())
    t = rng.uniform(0, 2 * math.pi)
    return (r * math.cos(t), r * math.sin(t))


def random_drawing(rng, max_boundary_pairs=4, max_waypoints=2, closed_probability=0.1):
    if rng.random() < closed_probability:
        polys = [[_random_point(rng) for _ in range(rng.randint(3, 6))]]
        if rng.random() < 0.3:
            polys.append([_random_point(rng) for _ in range(rng.randint(3, 5))])
        return [], polys
    b = rng.randint(1, max_boundary_pairs)
    base = sorted(rng.uniform(0, math.pi) for _ in range(b))
    angles = base + [a + math.pi for a in base]
    pts = [(math.cos(a), math.sin(a)) for a in angles]
    order = list(range(2 * b))
    rng.shuffle(order)
    arcs = []
    for x, y in zip(order[::2], order[1::2]):
        mid = [_random_point(rng) for _ in range(rng.randint(0, max_waypoints))]
        arcs.append([pts[x]] + mid + [pts[y]])
    return arcs, []


def random_diagram(rng=None, max_crossings=8, min_crossings=0, **kwargs):
    """A random valid diagram with between ``min_crossings`` and ``max_crossings`` crossings."""
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    while True:
        arcs, polys = random_drawing(rng, **kwargs)
        try:
            d = diagram_from_polylines(arcs, polys, over=lambda k: rng.random() < 0.5)
        except (Degenerate, ValidationError):
            continue
        if min_crossings <= len(d.crossings) <= max_crossings:
            return d

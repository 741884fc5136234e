"""Lifting a projective diagram through the double cover S^3 -> RP^3.

The projection sphere of the lift is two copies of the diagram disk glued
along the boundary circle by the antipodal map. The second copy is seen from
the other side, so its rotations are reversed and its crossings change over
and under. The boundary circle stays in the map as the equator, which keeps
the lifted map connected whenever the diagram touches the boundary.
"""

from dataclasses import dataclass, field

from projknot.diagram import components, homology_class, trace_faces
from projknot.errors import PreconditionError
from projknot.maps import CombinatorialMap


@dataclass
class ClassicalDiagram:
    map: CombinatorialMap
    crossings: dict  # (k, copy) -> darts (t0, t1, t2, t3) counterclockwise, t0-t2 under
    link_darts: set
    straight: dict  # link dart -> dart across the same vertex along the strand
    involution: dict  # dart -> dart, and vertex -> vertex
    edge_labels: dict  # link dart -> (copy, edge index, end index)
    components: tuple = ()

    def euler_characteristic(self):
        """V - E + F on the sphere, F counting face cycles.

        Every connected piece of a sphere map contributes 2, so the value is
        normalized to 2 by subtracting 2 for each extra piece.
        """
        pieces = len(self.map.connected_components())
        return self.map.euler_characteristic() - 2 * (pieces - 1)

    def pieces(self):
        return len(self.map.connected_components())


@dataclass
class OrientedDiagram:
    classical: ClassicalDiagram
    direction: dict  # link dart -> +1 leaving its vertex along the orientation, -1 arriving
    component_of: dict  # link dart -> component index
    components: tuple  # per component, the darts the strand leaves through, in order
    reversed_components: frozenset = field(default_factory=frozenset)


def _dart(end, copy, b, n):
    if end[0] == "x":
        return ("x", end[1], copy, end[2])
    i = end[1]
    if copy == 1:
        return ("eq", i, "e1")
    return ("eq", (i + b) % n, "e2")


def lift_diagram(d):
    trace_faces(d)
    n, b = d.boundary_count, d.b
    rotations, partner, straight, deck, labels = {}, {}, {}, {}, {}
    crossings = {}
    link = set()

    for k in range(len(d.crossings)):
        s = [("x", k, 1, j) for j in range(4)]
        t = [("x", k, 2, j) for j in range(4)]
        rotations[("X", k, 1)] = tuple(s)
        rotations[("X", k, 2)] = (t[0], t[3], t[2], t[1])
        crossings[(k, 1)] = tuple(s)
        crossings[(k, 2)] = (t[1], t[0], t[3], t[2])
        for c in (1, 2):
            deck[("X", k, c)] = ("X", k, 3 - c)
            for j in range(4):
                dart = ("x", k, c, j)
                straight[dart] = ("x", k, c, (j + 2) % 4)
                deck[dart] = ("x", k, 3 - c, j)
                link.add(dart)

    if n:
        for i in range(n):
            e1, e2 = ("eq", i, "e1"), ("eq", i, "e2")
            ap, am = ("eq", i, "A+"), ("eq", i, "A-")
            rotations[("E", i)] = (ap, e1, am, e2)
            partner[ap] = ("eq", (i + 1) % n, "A-")
            partner[("eq", (i + 1) % n, "A-")] = ap
            straight[e1], straight[e2] = e2, e1
            link.update((e1, e2))
            j = (i + b) % n
            deck[("E", i)] = ("E", j)
            deck[e1], deck[e2] = ("eq", j, "e2"), ("eq", j, "e1")
            deck[ap], deck[am] = ("eq", j, "A+"), ("eq", j, "A-")
    else:
        for i in (0, 1):
            ap, am = ("eq", i, "A+"), ("eq", i, "A-")
            rotations[("E", i)] = (ap, am)
            partner[ap] = ("eq", 1 - i, "A-")
            partner[("eq", 1 - i, "A-")] = ap
            deck[("E", i)] = ("E", 1 - i)
            deck[ap], deck[am] = ("eq", 1 - i, "A+"), ("eq", 1 - i, "A-")

    for idx, name in enumerate(d.edges):
        for c in (1, 2):
            if name in d.loops:
                lp, lm = ("L+", name, c), ("L-", name, c)
                rotations[("L", name, c)] = (lp, lm)
                partner[lp], partner[lm] = lm, lp
                straight[lp], straight[lm] = lm, lp
                deck[("L", name, c)] = ("L", name, 3 - c)
                deck[lp], deck[lm] = ("L+", name, 3 - c), ("L-", name, 3 - c)
                link.update((lp, lm))
                labels[lp], labels[lm] = (c, idx, 0), (c, idx, 1)
            else:
                a, z = (_dart(end, c, b, n) for end in d.ends[name])
                partner[a], partner[z] = z, a
                labels[a], labels[z] = (c, idx, 0), (c, idx, 1)

    cd = ClassicalDiagram(
        map=CombinatorialMap(rotations, partner),
        crossings=crossings,
        link_darts=link,
        straight=straight,
        involution=deck,
        edge_labels=labels,
    )
    cd.components = _strands(cd)
    return cd


def _strands(cd):
    """Closed strands, each given by the darts it leaves through, starting at
    the lowest-labelled edge in its recorded direction."""
    starts = sorted((lab, dart) for dart, lab in cd.edge_labels.items() if lab[2] == 0)
    seen = set()
    comps = []
    for _, start in starts:
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            arrive = cd.map.partner[d]
            seen.add(arrive)
            d = cd.straight[arrive]
        comps.append(tuple(walk))
    return tuple(comps)


def orient(cd, reverse=()):
    """Orient every lifted component; components listed in ``reverse`` run backwards."""
    direction, component_of = {}, {}
    walks = []
    for ci, walk in enumerate(cd.components):
        if ci in reverse:
            walk = tuple(cd.map.partner[x] for x in reversed(cd.components[ci]))
        for dart in walk:
            direction[dart] = 1
            direction[cd.map.partner[dart]] = -1
            component_of[dart] = component_of[cd.map.partner[dart]] = ci
        walks.append(walk)
    return OrientedDiagram(cd, direction, component_of, tuple(walks), frozenset(reverse))


def crossing_sign(od, x):
    """Right-hand rule sign of crossing ``x`` = (k, copy)."""
    t0, t1, _, _ = od.classical.crossings[x]
    under_in_first = od.direction[t0] == -1
    over_out_second = od.direction[t1] == 1
    return 1 if under_in_first == over_out_second else -1


def linking_number(od, c1, c2):
    if c1 == c2:
        raise PreconditionError("linking number needs two different components")
    total = 0
    for x, (t0, t1, _, _) in od.classical.crossings.items():
        if {od.component_of[t0], od.component_of[t1]} == {c1, c2}:
            total += crossing_sign(od, x)
    if total % 2:
        raise AssertionError(f"odd signed crossing sum {total} between two components")
    return total // 2


def self_linking(d):
    """Linking number (absolute value) of the two lifts of a zero-homologous knot."""
    comps = components(d)
    if len(comps) != 1:
        raise PreconditionError(f"self-linking needs a knot, got {len(comps)} components")
    if homology_class(d, comps[0]) != 0:
        raise PreconditionError(
            "knot is not zero-homologous: its preimage is connected, so self-linking is undefined")
    od = orient(lift_diagram(d))
    if len(od.components) != 2:
        raise AssertionError(f"lift of a zero-homologous knot has {len(od.components)} components")
    return abs(linking_number(od, 0, 1))


def pd_code(od):
    """PD records X(i, j, k, l): i the incoming under edge, then counterclockwise.

    Edges are numbered consecutively along the oriented components; strands
    without crossings do not appear.
    """
    cd = od.classical
    label = {}
    next_label = 1
    for walk in od.components:
        passes = [i for i, x in enumerate(walk) if x[0] == "x"]
        if not passes:
            continue
        order = walk[passes[0]:] + walk[:passes[0]]
        current = next_label
        for i, leave in enumerate(order):
            if i and leave[0] == "x":
                current += 1
            label[leave] = label[cd.map.partner[leave]] = current
        next_label = current + 1
    records = []
    for x in sorted(cd.crossings):
        t = cd.crossings[x]
        if od.direction[t[0]] != -1:
            t = (t[2], t[3], t[0], t[1])
        records.append(tuple(label[dart] for dart in t))
    return records


def lift_table(od):
    cd = od.classical
    deck_component, deck_reverses = [], []
    for walk in od.components:
        image = cd.involution[walk[0]]
        deck_component.append(od.component_of[image])
        deck_reverses.append(od.direction[image] == -1)
    crossing_names = sorted(cd.crossings)
    return {
        "crossings": [list(x) for x in crossing_names],
        "components": [
            {"index": ci, "crossings": sorted(
                crossing_names.index(x) for x, t in cd.crossings.items()
                if ci in (od.component_of[t[0]], od.component_of[t[1]]))}
            for ci in range(len(od.components))
        ],
        "involution": {
            "crossings": [crossing_names.index((k, 3 - c)) for k, c in crossing_names],
            "components": deck_component,
            "reverses_orientation": deck_reverses,
        },
        "euler_characteristic": cd.euler_characteristic(),
    }

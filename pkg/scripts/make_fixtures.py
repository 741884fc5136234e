"""Regenerate the PLD fixtures in src/projknot/data from their drawings.

Each drawing lists arcs as polylines in the unit disk (ends on the circle),
closed polygons, over/under choices per crossing, and face labels. The
script checks every annotated invariant before writing anything.
"""

import math
import sys
from dataclasses import replace
from pathlib import Path

from projknot import (
    classify,
    components,
    dehn_presentation,
    h1_from_presentation,
    homology_class,
    recognize,
    serialize_pld,
    simplify,
    trace_faces,
)
from projknot.cover import self_linking
from projknot.random_diagrams import diagram_from_polylines

DATA = Path(__file__).resolve().parents[1] / "src" / "projknot" / "data"


def on_circle(degrees):
    t = math.radians(degrees)
    return (math.cos(t), math.sin(t))


def quarter_turn(points):
    return [(-y, x) for x, y in points]


K2_1 = [[on_circle(45), (0.3, -0.4), (-0.3, -0.4), on_circle(135)],
        [on_circle(225), (-0.3, 0.4), (0.3, 0.4), on_circle(315)]]

K5_2 = [[(0.724554409, -0.689217605985), (-0.16, 0.48), (-0.33, -0.04), (0.14, 0.69),
         (-0.8829142686, 0.469534231236)],
        [(-0.724554409, 0.689217605985), (-0.37, 0.43), (0.8829142686, -0.469534231236)]]

K5_9 = [[(0.246950227422, 0.969028165316), (-0.24, 0.67), (-0.48, -0.61), (-0.61, -0.69),
         (0.8829142686, -0.469534231236)],
        [(-0.724554409, 0.689217605985), (0.83, 0.06), (0.35, 0.17), (-0.246950227422, -0.969028165316)],
        [(0.724554409, -0.689217605985), (-0.32, 0.39), (-0.8829142686, 0.469534231236)]]

FIXTURES = {
    "line": dict(
        arcs=[[on_circle(0), on_circle(180)]],
        notes=["projective line 0_1: one chord between antipodal points",
               "faces 2, components 1, class 1",
               "group < a | > (infinite cyclic), H1 = Z",
               "verdict: projective line; not contractible (homology)"],
        expect=dict(faces=2, classes=[1], h1="Z", kind="InfiniteCyclic"),
    ),
    "affine_unknot": dict(
        polygons=[[(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)]],
        labels="inside-a",
        notes=["affine unknot: a circle missing the boundary, a inside, b outside",
               "faces 2, components 1, class 0",
               "group < a, b | b^2 > = Z * Z/2, H1 = Z + Z/2, sl = 0",
               "verdict: affine unknot; contractible"],
        expect=dict(faces=2, classes=[0], h1="Z + Z/2", kind="ZstarZ2", sl=0),
    ),
    "two_lines": dict(
        arcs=[[on_circle(30), on_circle(210)], [on_circle(120), on_circle(300)]],
        labels="acbd",
        notes=["1_1^2: two skew projective lines, two chords crossing once",
               "faces 4, components 2, classes 1 and 1",
               "group reduces to < a, c | ac^-1a^-1c > (free abelian of rank two), H1 = Z + Z",
               "verdict: not contractible (homology)"],
        expect=dict(faces=4, classes=[1, 1], h1="Z + Z", kind="FreeAbelianRank2"),
    ),
    "k2_1": dict(
        arcs=[quarter_turn(a) for a in K2_1],
        over=(True, False),
        labels="adceb",
        notes=["projective knot 2_1, 4 boundary points",
               "faces 5 (a, b, c, d, e), components 1, class 0",
               "crossing relations adbe and bdce, boundary relations c = a^-1, e = d^-1",
               "simplifies to < b, d | d^2 = bd^2b >, H1 = Z + Z/2, sl = 2",
               "verdict: not contractible (self-linking)"],
        expect=dict(faces=5, classes=[0], h1="Z + Z/2", sl=2),
    ),
    "k5_2": dict(
        arcs=K5_2,
        over=(True, False, True, False, False),
        notes=["projective knot 5_2, 4 boundary points",
               "components 1, class 0, H1 = Z + Z/2, sl = 0",
               "bracket A^4 + A^2 - 1 - 2A^-2 + A^-4 + 2A^-6 - 2A^-10 + A^-14",
               "verdict: contractibility unknown to the group and sl tests"],
        expect=dict(classes=[0], h1="Z + Z/2", sl=0),
    ),
    "k5_9": dict(
        arcs=K5_9,
        over=(True, True, False, False, True),
        notes=["projective knot 5_9, 6 boundary points",
               "components 1, class 1, H1 = Z",
               "bracket A^-8 + A^-12 - A^-20",
               "verdict: not contractible (homology)"],
        expect=dict(classes=[1], h1="Z"),
    ),
}


def build(entry):
    d = diagram_from_polylines(entry.get("arcs", ()), entry.get("polygons", ()), over=entry.get("over"))
    labels = entry.get("labels")
    if labels == "inside-a":
        labels = "ba" if d.exterior == 0 else "ab"
    if labels:
        d = replace(d, labels=tuple(enumerate(labels)))
    return d


def check(name, d, expect):
    faces = trace_faces(d)
    comps = components(d)
    got = dict(
        faces=len(faces),
        classes=[homology_class(d, c) for c in comps],
        h1=str(h1_from_presentation(dehn_presentation(d))),
        kind=recognize(simplify(dehn_presentation(d))).kind,
    )
    if got["classes"] == [0]:
        got["sl"] = self_linking(d)
    bad = {k: (v, got.get(k)) for k, v in expect.items() if got.get(k) != v}
    if bad:
        raise SystemExit(f"{name}: expected/actual mismatch {bad}")
    classify(d)


def main():
    DATA.mkdir(exist_ok=True)
    for name, entry in FIXTURES.items():
        d = build(entry)
        check(name, d, entry["expect"])
        header = "".join(f"# {line}\n" for line in entry["notes"])
        (DATA / f"{name}.pld").write_text(header + serialize_pld(d), encoding="utf-8")
        print(f"wrote {name}.pld")
    return 0


if __name__ == "__main__":
    sys.exit(main())

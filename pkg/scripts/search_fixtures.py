"""Search random drawings for diagrams matching a quoted bracket polynomial.

Usage: python3 scripts/search_fixtures.py 5_2 [seed]
Prints the drawing (arcs, over/under choices) of the first match.
"""

import math
import random
import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import bracket_polynomial, mirror  # noqa: E402

from projknot.cover import self_linking  # noqa: E402
from projknot.diagram import components, homology_class  # noqa: E402
from projknot.random_diagrams import Degenerate, diagram_from_polylines  # noqa: E402

TARGETS = {
    "5_2": (2, {4: 1, 2: 1, 0: -1, -2: -2, -4: 1, -6: 2, -10: -2, -14: 1}),
    "5_9": (3, {-8: 1, -12: 1, -20: -1}),
}


def drawing(rng, b):
    base = sorted(rng.uniform(0, math.pi) for _ in range(b))
    angles = base + [a + math.pi for a in base]
    pts = [(round(math.cos(a), 12), round(math.sin(a), 12)) for a in angles]
    order = list(range(2 * b))
    rng.shuffle(order)
    arcs = []
    for x, y in zip(order[::2], order[1::2]):
        mid = [(round(rng.uniform(-0.85, 0.85), 2), round(rng.uniform(-0.85, 0.85), 2))
               for _ in range(rng.randint(0, 3))]
        arcs.append([pts[x]] + mid + [pts[y]])
    return angles, order, arcs


def search(name, seed=0, tries=200000):
    b, target = TARGETS[name]
    rng = random.Random(seed)
    for _ in range(tries):
        angles, order, arcs = drawing(rng, b)
        try:
            d = diagram_from_polylines(arcs)
        except (Degenerate, Exception):
            continue
        if len(d.crossings) != 5 or len(components(d)) != 1:
            continue
        for over in product((True, False), repeat=5):
            e = diagram_from_polylines(arcs, over=over)
            v = bracket_polynomial(e)
            if v in (target, mirror(target)):
                cls = homology_class(e, components(e)[0])
                sl = self_linking(e) if cls == 0 else None
                return {"arcs": arcs, "over": over, "mirror": v != target, "class": cls, "sl": sl}
    return None


if __name__ == "__main__":
    which = sys.argv[1]
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    print(search(which, seed))

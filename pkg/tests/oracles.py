"""Independent oracles used by the tests.

These work from the raw incidence data of a Diagram (crossing records,
endpoints, loops) and share no code with the library's face tracing,
presentation, or lifting logic.
"""

from collections import Counter
from itertools import combinations, product


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _edge_ends(d):
    ends = {}
    for k, record in enumerate(d.crossings):
        for s, name in enumerate(record):
            ends.setdefault(name, []).append(("x", k, s))
    for i, name in enumerate(d.endpoints):
        ends.setdefault(name, []).append(("bp", i))
    return ends


def _base_joins(d, uf):
    """Glue the two ends of every edge, and antipodal boundary points."""
    for name, ends in _edge_ends(d).items():
        uf.union(ends[0], ends[1])
    n = d.boundary_count
    for i in range(n // 2):
        uf.union(("bp", i), ("bp", i + n // 2))


def _circles(d, uf):
    nodes = set()
    for k in range(len(d.crossings)):
        nodes.update(("x", k, s) for s in range(4))
    nodes.update(("bp", i) for i in range(d.boundary_count))
    return len({uf.find(x) for x in nodes}) + len(d.loops)


def laurent_mul(p, q):
    out = Counter()
    for (e1, c1), (e2, c2) in product(p.items(), q.items()):
        out[e1 + e2] += c1 * c2
    return {e: c for e, c in out.items() if c}


def orientation(d):
    """Walk every strand; return {(k, slot): +1 leaving the crossing, -1 entering}."""
    ends = _edge_ends(d)
    other = {}
    for name, pair in ends.items():
        other[pair[0]], other[pair[1]] = pair[1], pair[0]
    n = d.boundary_count
    direction = {}
    starts = [("bp", i) for i in range(n)] + [("x", k, s) for k in range(len(d.crossings)) for s in range(4)]
    for start in starts:
        if start in direction:
            continue
        end = start
        while end not in direction:
            direction[end] = 1
            arrive = other[end]
            direction[arrive] = -1
            if arrive[0] == "bp":
                end = ("bp", (arrive[1] + n // 2) % n)
            else:
                end = ("x", arrive[1], (arrive[2] + 2) % 4)
    return direction


def writhe(d):
    direction = orientation(d)
    total = 0
    for k in range(len(d.crossings)):
        under_in_first = direction[("x", k, 0)] == -1
        over_out_second = direction[("x", k, 1)] == 1
        total += 1 if under_in_first == over_out_second else -1
    return total


def bracket_polynomial(d):
    """State sum with A joining slots (0,1),(2,3) and A^-1 joining (0,3),(1,2);
    each state weighs (-A^2 - A^-2)^(circles - 1), circles counted in the
    projective plane whether or not they are essential. Normalized by
    (-A^3)^(-writhe)."""
    m = len(d.crossings)
    total = Counter()
    delta = {2: -1, -2: -1}
    for state in product((0, 1), repeat=m):
        uf = _UnionFind()
        _base_joins(d, uf)
        for k, smoothing in enumerate(state):
            pairs = ((0, 1), (2, 3)) if smoothing == 0 else ((0, 3), (1, 2))
            for s, t in pairs:
                uf.union(("x", k, s), ("x", k, t))
        circles = _circles(d, uf)
        term = {state.count(0) - state.count(1): 1}
        for _ in range(circles - 1):
            term = laurent_mul(term, delta)
        for e, c in term.items():
            total[e] += c
    w = writhe(d)
    norm = {-3 * w: (-1) ** abs(w)}
    return laurent_mul({e: c for e, c in total.items() if c}, norm)


def mirror(poly):
    return {-e: c for e, c in poly.items()}


def determinantal_divisors(m, ncols):
    """d_k = gcd of all k x k minors, by brute force over row/column subsets."""
    from math import gcd

    def det(rows):
        n = len(rows)
        if n == 0:
            return 1
        return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]])
                   for j in range(n))

    out = []
    for k in range(1, min(len(m), ncols) + 1):
        g = 0
        for rs in combinations(range(len(m)), k):
            for cs in combinations(range(ncols), k):
                g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
        out.append(g)
    return out


def invariant_factors(m, ncols):
    divisors = determinantal_divisors(m, ncols)
    factors, prev = [], 1
    for dk in divisors:
        if dk == 0:
            break
        factors.append(dk // prev)
        prev = dk
    return factors

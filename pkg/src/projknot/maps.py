"""Minimal oriented combinatorial maps: rotation systems and face tracing.

A map is given by a rotation (counterclockwise tuple of darts) at every
vertex and a fixed-point-free involution pairing the two darts of each edge.
Faces are traced with the face kept on the left of every dart.
"""


class CombinatorialMap:
    def __init__(self, rotations, partner):
        self.rotations = {v: tuple(r) for v, r in rotations.items()}
        self.partner = dict(partner)
        self._where = {}
        for v, rot in self.rotations.items():
            for pos, dart in enumerate(rot):
                if dart in self._where:
                    raise ValueError(f"dart {dart!r} appears twice in the rotation system")
                self._where[dart] = (v, pos)
        for d, e in self.partner.items():
            if self.partner.get(e) != d or d == e:
                raise ValueError(f"partner map is not an involution at {d!r}")
        if set(self.partner) != set(self._where):
            raise ValueError("every dart must sit at a vertex and belong to an edge")

    @property
    def darts(self):
        return list(self._where)

    def vertex(self, dart):
        return self._where[dart][0]

    def previous(self, dart):
        """Dart immediately clockwise of ``dart`` around its vertex."""
        v, pos = self._where[dart]
        rot = self.rotations[v]
        return rot[(pos - 1) % len(rot)]

    def face_step(self, dart):
        return self.previous(self.partner[dart])

    def face_cycles(self, order=None):
        """Trace every face cycle; ``order`` fixes which darts start cycles first."""
        order = list(order) if order is not None else sorted(self._where, key=repr)
        seen = set()
        cycles = []
        for start in order:
            if start in seen:
                continue
            cycle = []
            d = start
            while d not in seen:
                seen.add(d)
                cycle.append(d)
                d = self.face_step(d)
            cycles.append(tuple(cycle))
        return cycles

    def connected_components(self):
        parent = {v: v for v in self.rotations}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for d, e in self.partner.items():
            a, b = find(self.vertex(d)), find(self.vertex(e))
            if a != b:
                parent[a] = b
        groups = {}
        for v in self.rotations:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def euler_characteristic(self):
        """V - E + F counting every traced face cycle."""
        return len(self.rotations) - len(self.partner) // 2 + len(self.face_cycles())

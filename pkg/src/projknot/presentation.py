"""Dehn-style presentations of pi_1(RP^3 minus L) read off a colored diagram.

One generator per face. Each crossing gives a four-letter relation; each
pair of antipodal boundary arcs identifies the generators of the faces along
them (inverse if the faces share a color, equal otherwise).
"""

import json
import re
from dataclasses import dataclass, replace

from projknot.diagram import (
    DARK,
    arc_face,
    checkerboard,
    crossing_corner_faces,
    exterior_face,
    trace_faces,
)
from projknot.errors import PreconditionError, ValidationError
from projknot.words import format_word, parse_word


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relations: tuple
    provenance: tuple = ()
    incomplete: bool = False

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(tuple((s, int(e)) for s, e in w) for w in self.relations)
        prov = tuple(self.provenance) or tuple("given" for _ in rels)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "provenance", prov)
        if len(set(gens)) != len(gens):
            raise ValueError("repeated generator")
        if len(prov) != len(rels):
            raise ValueError("provenance must match relations one to one")
        known = set(gens)
        for w in rels:
            for s, e in w:
                if s not in known:
                    raise ValueError(f"relation uses unknown generator {s!r}")
                if e not in (1, -1):
                    raise ValueError(f"letter exponent must be +1 or -1, got {e}")

    @property
    def total_length(self):
        return sum(len(w) for w in self.relations)

    def _separator(self):
        return "" if all(len(g) == 1 for g in self.generators) else "*"

    def to_text(self):
        sep = self._separator()
        rels = ", ".join(format_word(w, sep) for w in self.relations)
        text = f"< {', '.join(self.generators)} | {rels} >"
        return text.replace("|  >", "| >")

    __str__ = to_text

    def to_dict(self):
        return {
            "generators": list(self.generators),
            "relations": [[[s, e] for s, e in w] for w in self.relations],
            "provenance": {str(i): p for i, p in enumerate(self.provenance)},
            "incomplete": self.incomplete,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        rels = tuple(tuple((s, e) for s, e in w) for w in data["relations"])
        prov = data.get("provenance") or {}
        prov = tuple(prov.get(str(i), "given") for i in range(len(rels)))
        return cls(tuple(data["generators"]), rels, prov, bool(data.get("incomplete", False)))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_text(cls, text):
        m = re.fullmatch(r"\s*<(.*)\|(.*)>\s*", text, re.S)
        if not m:
            raise ValueError(f"not a presentation: {text!r}")
        gens = tuple(g.strip() for g in m.group(1).split(",") if g.strip())
        rels = tuple(parse_word(r, gens) for r in m.group(2).split(",") if r.strip())
        return cls(gens, rels)

    def rename(self, mapping):
        """Rename generators; ``mapping`` may also send a generator to its inverse via (name, -1)."""
        def image(sym):
            target = mapping.get(sym, sym)
            return target if isinstance(target, tuple) else (target, 1)

        gens = tuple(image(g)[0] for g in self.generators)
        rels = tuple(
            tuple((image(s)[0], e * image(s)[1]) for s, e in w) for w in self.relations)
        return replace(self, generators=gens, relations=rels)


def _faces_and_coloring(d, faces, coloring):
    if faces is None:
        faces = trace_faces(d)
    if coloring is None:
        coloring = checkerboard(d, faces)
    return faces, coloring


def crossing_relation(d, col=None, k=0, faces=None, start=None):
    """Four-letter relation at crossing ``k``.

    Starts at a dark corner (the lower-indexed one unless ``start`` picks the
    other), first steps across an over half-edge, and goes once around.
    """
    faces, col = _faces_and_coloring(d, faces, col)
    corner = crossing_corner_faces(d, faces, k)
    tones = [col[f] for f in corner]
    if any(tones[j] == tones[(j + 1) % 4] for j in range(4)):
        raise ValidationError(f"coloring does not alternate around crossing {k}")
    dark = [j for j in range(4) if tones[j] == DARK]
    if start is None:
        start = dark[0]
    elif start not in dark:
        raise PreconditionError(f"corner {start} of crossing {k} is not dark")
    # corner j is flanked by slots j and j+1; slots 1 and 3 are over
    step = 1 if start % 2 == 0 else -1
    return tuple((faces[corner[(start + step * i) % 4]].symbol, 1) for i in range(4))


def boundary_relations(d, col=None, faces=None):
    """Relations for antipodal boundary-arc pairs, with their provenance."""
    faces, col = _faces_and_coloring(d, faces, col)
    out = []
    n = d.boundary_count
    if n == 0:
        f = exterior_face(faces)
        s = faces[f].symbol
        return [(((s, 1), (s, 1)), "boundary circle")]
    for i in range(d.b):
        f, g = arc_face(d, faces, i), arc_face(d, faces, i + d.b)
        e = 1 if col[f] == col[g] else -1
        word = ((faces[f].symbol, 1), (faces[g].symbol, e))
        out.append((word, f"arcs {i}/{i + d.b}"))
    return out


def dehn_presentation(d, merge_equal=False, classical=False, coloring=None, faces=None):
    """Presentation of pi_1(RP^3 minus L), or of pi_1(R^3 minus L) with ``classical``.

    ``merge_equal`` folds the "equal generators" boundary identifications
    into the symbol assignment instead of emitting them as relations.
    ``classical`` needs a diagram without boundary points; it drops the
    exterior generator and its square relation.
    """
    faces, col = _faces_and_coloring(d, faces, coloring)
    # generators listed by symbol, so relabelled fixtures print like the figures
    symbols = sorted((f.symbol for f in faces), key=lambda s: (len(s), s))
    rels = []
    prov = []
    for k in range(len(d.crossings)):
        rels.append(crossing_relation(d, col, k, faces))
        prov.append(f"crossing {k}")
    for word, where in boundary_relations(d, col, faces):
        rels.append(word)
        prov.append(where)
    gens = list(symbols)

    if merge_equal and d.boundary_count:
        rep = {s: s for s in symbols}

        def find(s):
            while rep[s] != s:
                s = rep[s]
            return s

        kept_r, kept_p = [], []
        for word, where in zip(rels, prov):
            if where.startswith("arcs") and word[1][1] == -1:
                a, b = find(word[0][0]), find(word[1][0])
                lo, hi = sorted((a, b), key=symbols.index)
                rep[hi] = lo
            else:
                kept_r.append(word)
                kept_p.append(where)
        rels = [tuple((find(s), e) for s, e in w) for w in kept_r]
        prov = kept_p
        gens = [s for s in symbols if find(s) == s]

    if classical:
        if d.boundary_count:
            raise PreconditionError("the classical presentation needs a diagram without boundary points")
        ext = faces[exterior_face(faces)].symbol
        keep = [(tuple(x for x in w if x[0] != ext), p)
                for w, p in zip(rels, prov) if p != "boundary circle"]
        rels = [w for w, _ in keep]
        prov = [p for _, p in keep]
        gens = [g for g in gens if g != ext]

    return Presentation(tuple(gens), tuple(rels), tuple(prov))

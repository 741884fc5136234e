"""Decision rules turning presentations and diagram invariants into verdicts.

``yes`` answers need a certified sufficient condition, ``no`` answers a
violated necessary condition; everything else stays ``unknown``.
"""

from dataclasses import dataclass, field

from projknot.cover import self_linking
from projknot.diagram import components, homology_class
from projknot.presentation import dehn_presentation
from projknot.tietze import (
    INFINITE_CYCLIC,
    Z2_FREE_FACTOR,
    Z_STAR_Z2,
    recognize,
    simplify,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"
HOMOLOGY, SELF_LINKING = "homology class != 0", "sl != 0"


@dataclass
class ClassificationVerdict:
    affine_unknot: str = UNKNOWN
    projective_line: str = UNKNOWN
    contractible: str = UNKNOWN
    reason: str = None
    evidence: list = field(default_factory=list)

    def to_dict(self):
        return {
            "affine_unknot": self.affine_unknot,
            "projective_line": self.projective_line,
            "contractible": self.contractible,
            "reason": self.reason,
            "evidence": list(self.evidence),
        }

    def summary(self):
        contractible = self.contractible
        if contractible == NO:
            contractible = f"no ({self.reason})"
        return (f"affine unknot: {self.affine_unknot}; projective line: {self.projective_line}; "
                f"contractible: {contractible}")


def classify(d, budget=None):
    comps = components(d)
    knot = len(comps) == 1
    classes = [homology_class(d, c) for c in comps]
    simplified = simplify(dehn_presentation(d), budget)
    found = recognize(simplified)
    v = ClassificationVerdict()
    yes_rules, no_rules = [], []

    def note(rule, citation):
        v.evidence.append({"rule": rule, "citation": citation})

    if knot and found.kind == INFINITE_CYCLIC:
        v.projective_line = YES
        note("group recognized as Z", "a knot is a projective line iff its group is Z")
    if knot and found.kind == Z_STAR_Z2:
        v.affine_unknot = YES
        yes_rules.append("group recognized as Z * Z/2")
        note("group recognized as Z * Z/2", "a knot is the affine unknot iff its group is Z * Z/2")
    if found.kind == Z2_FREE_FACTOR:
        yes_rules.append(f"free factor <{found.generator} | {found.generator}^2>")
        note(f"free factor <{found.generator} | {found.generator}^2> gives an element of order 2",
             "a link is contractible iff its group has a non-trivial element of order 2")
    if d.boundary_count == 0:
        yes_rules.append("diagram misses the boundary circle")
        note("diagram misses the boundary circle, so the link avoids a projective plane",
             "definition of contractibility")
    if any(classes):
        no_rules.append(HOMOLOGY)
        note("a component realizes the non-zero homology class",
             "homology condition: components of a contractible link are zero-homologous")
    elif knot:
        sl = self_linking(d)
        if sl:
            no_rules.append(SELF_LINKING)
            note(f"self-linking number {sl}", "self-linking condition: contractible knots have sl = 0")

    if yes_rules and no_rules:
        raise AssertionError(f"contradictory verdicts: {yes_rules} against {no_rules}")
    if yes_rules:
        v.contractible = YES
    elif no_rules:
        v.contractible = NO
        v.reason = no_rules[0]
    if v.affine_unknot == YES and v.projective_line == YES:
        raise AssertionError("a knot cannot be both unknots")
    return v

"""Fundamental groups of link complements in RP^3 from projective link diagrams."""

from projknot.errors import (
    DiagramError,
    ParseError,
    PreconditionError,
    ValidationError,
)
from projknot.diagram import (
    Component,
    Diagram,
    Face,
    checkerboard,
    components,
    homology_class,
    trace_faces,
    validate,
)
from projknot.pld import parse_pld, serialize_pld, load_pld
from projknot.presentation import (
    Presentation,
    boundary_relations,
    crossing_relation,
    dehn_presentation,
)
from projknot.tietze import (
    RecognitionResult,
    SimplifyBudget,
    eliminate_generator,
    recognize,
    simplify,
)
from projknot.homology import (
    AbelianGroup,
    abelianize,
    check_homology_dichotomy,
    h1_from_presentation,
    smith_normal_form,
)
from projknot.cover import (
    lift_diagram,
    linking_number,
    orient,
    self_linking,
)
from projknot.classify import classify

__all__ = [
    "AbelianGroup",
    "Component",
    "Diagram",
    "DiagramError",
    "Face",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "RecognitionResult",
    "SimplifyBudget",
    "ValidationError",
    "abelianize",
    "boundary_relations",
    "check_homology_dichotomy",
    "checkerboard",
    "classify",
    "components",
    "crossing_relation",
    "dehn_presentation",
    "eliminate_generator",
    "h1_from_presentation",
    "homology_class",
    "lift_diagram",
    "linking_number",
    "load_pld",
    "orient",
    "parse_pld",
    "recognize",
    "self_linking",
    "serialize_pld",
    "simplify",
    "smith_normal_form",
    "trace_faces",
    "validate",
]

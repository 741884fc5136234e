import pytest

from conftest import FIXTURES, load
from projknot import (
    Presentation,
    PreconditionError,
    boundary_relations,
    checkerboard,
    crossing_relation,
    dehn_presentation,
    trace_faces,
)
from projknot.homology import abelianize
from projknot.words import parse_word, rotations


def cyclic(text):
    return rotations(parse_word(text))


def test_k2_1_crossing_relations():
    d = load("k2_1")
    assert crossing_relation(d, k=0) in cyclic("adbe")
    assert crossing_relation(d, k=1) in cyclic("bdce")


def test_k2_1_boundary_relations():
    words = sorted(w for w, _ in boundary_relations(load("k2_1")))
    # c = a^-1 and e = d^-1
    assert words == [parse_word("ac"), parse_word("de")]


def test_k2_1_raw_presentation():
    p = dehn_presentation(load("k2_1"))
    assert p.generators == tuple("abcde")
    assert len(p.relations) == 4
    assert p.provenance == ("crossing 0", "crossing 1", "arcs 0/2", "arcs 1/3")
    assert abelianize(p) == [[1, 1, 0, 1, 1], [0, 1, 1, 1, 1], [1, 0, 1, 0, 0], [0, 0, 0, 1, 1]]


def test_line_boundary_relation_identifies_faces():
    d = load("line")
    (word, where), = boundary_relations(d)
    assert word == parse_word("ab^-1")
    assert dehn_presentation(d, merge_equal=True).to_text() == "< a | >"


def test_affine_unknot_presentation():
    p = dehn_presentation(load("affine_unknot"))
    assert p.to_text() == "< a, b | bb >"
    assert p.provenance == ("boundary circle",)


def test_classical_presentation_drops_exterior():
    p = dehn_presentation(load("affine_unknot"), classical=True)
    assert p.to_text() == "< a | >"
    with pytest.raises(PreconditionError):
        dehn_presentation(load("line"), classical=True)


def test_two_lines_crossing_relation_abelianizes_trivially():
    d = load("two_lines")
    r = crossing_relation(d, k=0)
    assert len(r) == 4
    p = dehn_presentation(d)
    row = abelianize(p)[0]
    # relation abcd: with b = a^-1, d = c^-1 from the boundary it vanishes
    b_rel = [abelianize(p)[1], abelianize(p)[2]]
    assert [x - y - z for x, y, z in zip(row, *b_rel)] == [0, 0, 0, 0]


@pytest.mark.parametrize("name", FIXTURES)
def test_counts(name):
    d = load(name)
    p = dehn_presentation(d)
    assert len(p.generators) == len(trace_faces(d))
    assert len(p.relations) == len(d.crossings) + max(d.boundary_count // 2, 1)


@pytest.mark.parametrize("name", FIXTURES)
def test_other_dark_corner_gives_rotation(name):
    d = load(name)
    faces = trace_faces(d)
    col = checkerboard(d, faces)
    for k in range(len(d.crossings)):
        r = crossing_relation(d, col, k, faces)
        for start in range(4):
            try:
                s = crossing_relation(d, col, k, faces, start=start)
            except PreconditionError:
                continue
            assert s in rotations(r)


def test_text_and_json_round_trip():
    p = dehn_presentation(load("k2_1"))
    assert Presentation.from_text(p.to_text()) == Presentation(p.generators, p.relations)
    assert Presentation.from_json(p.to_json()) == p
    assert p.to_text() == "< a, b, c, d, e | adbe, bdce, ac, de >"


def test_unknown_letter_rejected():
    with pytest.raises(ValueError):
        Presentation(("a",), ((("b", 1),),))

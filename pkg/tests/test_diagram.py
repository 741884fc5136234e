import pytest

from conftest import all_diagrams, load
from projknot import ValidationError, checkerboard, components, homology_class, parse_pld, trace_faces, validate
from projknot.diagram import Diagram, crossing_corner_faces


def symbols_by_color(d):
    faces = trace_faces(d)
    col = checkerboard(d, faces)
    out = {"dark": set(), "light": set()}
    for f in faces:
        out[col[f.index]].add(f.symbol)
    return out


def test_line():
    d = load("line")
    assert len(trace_faces(d)) == 2
    assert len(components(d)) == 1
    assert homology_class(d, components(d)[0]) == 1
    assert symbols_by_color(d) == {"dark": {"a"}, "light": {"b"}}


def test_affine_unknot():
    d = load("affine_unknot")
    faces = trace_faces(d)
    assert len(faces) == 2
    assert [f.symbol for f in faces if f.annulus] == ["b"]
    assert symbols_by_color(d) == {"dark": {"b"}, "light": {"a"}}
    assert homology_class(d, components(d)[0]) == 0


def test_two_lines():
    d = load("two_lines")
    comps = components(d)
    assert len(comps) == 2
    assert [homology_class(d, c) for c in comps] == [1, 1]


def test_k2_1_faces_and_coloring():
    d = load("k2_1")
    assert sorted(f.symbol for f in trace_faces(d)) == list("abcde")
    colors = symbols_by_color(d)
    # adbe and bdce start with dark letters and alternate
    assert colors in ({"dark": set("abc"), "light": set("de")}, {"dark": set("de"), "light": set("abc")})
    assert len(components(d)) == 1
    assert homology_class(d, components(d)[0]) == 0


def test_k2_1_euler_by_direct_count():
    d = load("k2_1")
    v = len(d.crossings) + d.boundary_count  # 2 + 4
    e = len(d.edges) + d.boundary_count  # 6 diagram edges + 4 boundary arcs
    f = len(trace_faces(d))
    assert (v, e, f) == (6, 10, 5)
    assert v - e + f == 1


def test_k5_9_class_one():
    d = load("k5_9")
    assert d.boundary_count == 6
    assert homology_class(d, components(d)[0]) == 1


def test_corner_faces_alternate_in_color():
    d = load("k2_1")
    faces = trace_faces(d)
    col = checkerboard(d, faces)
    for k in range(len(d.crossings)):
        tones = [col[f] for f in crossing_corner_faces(d, faces, k)]
        assert tones[0] == tones[2] != tones[1] == tones[3]


def test_exactly_two_colorings():
    d = load("k5_2")
    faces = trace_faces(d)
    col = checkerboard(d, faces)
    assert col.flipped().flipped() == col
    assert col.flipped() != col
    assert checkerboard(d, faces) == col


def test_components_partition_edges():
    for d in all_diagrams()[:300]:
        comps = components(d)
        names = [name for c in comps for name, _ in c.edges]
        assert sorted(names) == sorted(d.edges)
        assert sum(len(c.endpoints) for c in comps) == d.boundary_count
        assert all(len(c.endpoints) % 2 == 0 for c in comps)
        total = sum(homology_class(d, c) for c in comps)
        assert total % 2 == (d.boundary_count // 2) % 2


def test_nonplanar_incidence_is_reported():
    # both strands of a crossing joined so that the graph cannot sit in the disk
    d = Diagram(boundary_count=2, endpoints=("p", "q"), crossings=(("p", "x", "q", "y"), ("x", "r", "y", "r")))
    report = validate(d)
    assert report
    with pytest.raises(ValidationError):
        trace_faces(d)


def test_disconnected_diagram_rejected():
    d = parse_pld("boundary 2; edge 1: bp0 -- bp1; edge 2: loop")
    assert "disconnected" in " ".join(validate(d).problems)


def test_labels_override_symbols():
    d = parse_pld("boundary 2; edge 1: bp0 -- bp1; label 0 x; label 1 y")
    assert [f.symbol for f in trace_faces(d)] == ["x", "y"]

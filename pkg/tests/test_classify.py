import pytest

from conftest import all_diagrams, load
from projknot import classify, components, homology_class


def test_affine_unknot():
    v = classify(load("affine_unknot"))
    assert (v.affine_unknot, v.projective_line, v.contractible) == ("yes", "unknown", "yes")


def test_line():
    v = classify(load("line"))
    assert (v.projective_line, v.contractible, v.reason) == ("yes", "no", "homology class != 0")


def test_k2_1():
    v = classify(load("k2_1"))
    assert (v.affine_unknot, v.projective_line) == ("unknown", "unknown")
    assert (v.contractible, v.reason) == ("no", "sl != 0")


def test_k5_2_is_not_yes():
    assert classify(load("k5_2")).contractible in ("unknown", "no")


def test_k5_9():
    v = classify(load("k5_9"))
    assert (v.contractible, v.reason) == ("no", "homology class != 0")


@pytest.mark.parametrize("name", ["line", "affine_unknot", "two_lines", "k2_1", "k5_2", "k5_9"])
def test_every_verdict_cites_evidence(name):
    v = classify(load(name))
    if v.contractible != "unknown" or v.affine_unknot == "yes" or v.projective_line == "yes":
        assert v.evidence
    assert all(set(e) == {"rule", "citation"} for e in v.evidence)


def test_no_contradictions_on_corpus():
    for d in all_diagrams():
        v = classify(d)
        assert not (v.affine_unknot == "yes" and v.projective_line == "yes")
        classes = [homology_class(d, c) for c in components(d)]
        if any(classes):
            assert v.contractible == "no" and v.affine_unknot != "yes"
        if v.contractible == "no":
            assert v.reason in ("homology class != 0", "sl != 0")
        if v.projective_line == "yes":
            assert classes == [1]
        if v.affine_unknot == "yes":
            assert classes == [0]

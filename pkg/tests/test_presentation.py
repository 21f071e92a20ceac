import pytest

from hopfsmith.presentation import Presentation, validate_presentation
from hopfsmith.terms import Gen, comp
from hopfsmith.walking import adj, e_oriental2, mnd, oriental2


def test_shipped_presentations_are_valid():
    for p in (mnd().base, adj().base, oriental2(), e_oriental2()):
        assert validate_presentation(p) == []


def test_duplicate_generator_rejected():
    p = Presentation(max_dim=1)
    p.add("x", 0)
    with pytest.raises(Exception):
        p.add("x", 0)


def test_wrong_dimension_src_flagged():
    p = Presentation(max_dim=2)
    x = p.add("x", 0)
    f = p.add("f", 1, x, x)
    p.add("bad", 2, x, f)  # src is 0-dimensional
    issues = validate_presentation(p)
    assert any(v.where == "bad" and "dimension" in v.issue for v in issues)


def test_nonparallel_relation_flagged():
    p = Presentation(max_dim=1)
    x = p.add("x", 0)
    y = p.add("y", 0)
    f = p.add("f", 1, x, y)
    g = p.add("g", 1, y, x)
    p.relate(1, f, g)
    issues = validate_presentation(p)
    assert any("parallel" in v.issue for v in issues)


def test_mutating_valid_presentation_gives_one_violation():
    # relation whose sides have different 0-boundaries
    p = mnd().base
    q = Presentation.loads(p.dumps())
    q.add("x", 0)
    q.relate(1, Gen("A"), comp(0, Gen("A"), Gen("A")))  # fine
    q.relations[-1] = type(q.relations[-1])(1, Gen("A"), Gen("x"))
    issues = validate_presentation(q)
    assert len(issues) >= 1


def test_json_roundtrip_bit_exact():
    for p in (mnd().base, adj().base, oriental2()):
        text = p.dumps()
        again = Presentation.loads(text)
        assert again.dumps() == text
        assert again.census() == p.census()
        assert len(again.relations) == len(p.relations)


def test_census():
    assert mnd().base.census() == (1, 1, 2)
    assert adj().base.census() == (2, 2, 2)
    assert oriental2().census() == (3, 3, 1)
    assert e_oriental2().census() == (5, 5, 1)

"""Tensor-square structure: censuses, boundary sanity, the smash collapse
and its functoriality."""

import pytest

from hopfsmith.gray import TensorTerms, gray, pair_name, smash
from hopfsmith.presentation import Presentation, validate_presentation
from hopfsmith.rewriting import EQ_EQUAL, eq
from hopfsmith.terms import Comp, Gen, TermError, comp
from hopfsmith.walking import PointedPresentation, globe, mnd, point


def census_product(pc, qc, d):
    return sum(pc[i] * qc[d - i]
               for i in range(d + 1)
               if i < len(pc) and d - i < len(qc))


def test_census_multiplicativity_globes():
    for p in range(3):
        for q in range(3):
            if p + q > 4:
                continue
            g = gray(globe(p), globe(q))
            pc, qc = globe(p).census(), globe(q).census()
            for d in range(len(g.census())):
                assert g.census()[d] == census_product(pc, qc, d)


def test_gray_globe11_census():
    assert gray(globe(1), globe(1)).census() == (4, 4, 1)


def test_gray_mnd_census_and_validity():
    g = gray(mnd().base, mnd().base)
    assert g.census() == (1, 2, 5, 4, 4)
    assert validate_presentation(g) == []


def test_gray_point_unit():
    m = mnd().base
    g = gray(m, point())
    assert g.census() == m.census()
    g2 = gray(point(), m)
    assert g2.census() == m.census()


def test_gray_dimension_overflow():
    with pytest.raises(TermError):
        gray(globe(3), globe(2))


def test_gray_13_pair_builds():
    g = gray(globe(1), globe(3))
    assert validate_presentation(g) == []
    assert g.census()[4] == 1


def test_smash_mnd_census():
    out, _ = smash(mnd(), mnd())
    assert out.census() == (1, 0, 1, 4, 4)
    assert validate_presentation(out) == []


def test_smash_with_two_point_presentation_is_identity_like():
    # smashing with a two-object presentation pointed at one object keeps
    # the other copy intact
    two = Presentation(max_dim=0)
    two.add("base", 0)
    two.add("other", 0)
    m = mnd()
    out, _ = smash(m, PointedPresentation(two, "base"))
    assert out.census() == m.base.census()


def test_collapse_functoriality():
    """The collapse commutes with boundaries and composition on a sample
    of tensor terms."""
    m = mnd()
    big = gray(m.base, m.base)
    out, cm = smash(m, m)
    tt = TensorTerms(m.base, m.base)
    samples = [
        Gen(pair_name("A", "A")),
        Gen(pair_name("m", "A")),
        Gen(pair_name("A", "m")),
        tt.cross(comp(0, Gen("A"), Gen("A")), Gen("A")),
        tt.move12(Gen("A"), Gen("m")),
    ]
    for t in samples:
        d = big.dim(t)
        for k in range(d):
            for side in ("source", "target"):
                lhs = cm.push(big.boundary(t, side, k))
                rhs = out.boundary(cm.push(t), side, k)
                assert eq(lhs, rhs, out) is EQ_EQUAL, (t, side, k)


def test_collapse_commutes_with_compose():
    m = mnd()
    big = gray(m.base, m.base)
    out, cm = smash(m, m)
    c = Gen(pair_name("A", "A"))
    stack = Comp(1, c, c)
    assert eq(cm.push(stack), Comp(1, cm.push(c), cm.push(c)), out) is EQ_EQUAL


def test_smash_adj_survivor_count():
    from hopfsmith.walking import adj
    out, _ = smash(adj(), adj())
    # survivors in dimension 1 pair the non-basepoint object with l or r
    assert out.census()[1] == 4


def test_census_multiplicativity_all_globe_pairs():
    for p in range(5):
        for q in range(5):
            if p + q > 4:
                continue
            g = gray(globe(p), globe(q))
            pc, qc = globe(p).census(), globe(q).census()
            got = g.census()
            for d in range(len(got)):
                assert got[d] == census_product(pc, qc, d), (p, q, d)


def test_census_multiplicativity_mnd_square():
    m = mnd().base
    g = gray(m, m)
    pc = m.census()
    got = g.census()
    for d in range(len(got)):
        assert got[d] == census_product(pc, pc, d)


def test_large_tensor_squares_validate():
    from hopfsmith.walking import adj, e_oriental2, oriental2
    for p in (gray(oriental2(), oriental2()),
              gray(e_oriental2(), e_oriental2()),
              gray(adj().base, adj().base),
              smash(adj(), adj())[0]):
        assert validate_presentation(p) == []

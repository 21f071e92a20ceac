"""The universal shear 3-cell, the bialgebra structure cells of the smashed
monad square, and the boundary-checked factorization chain in the tensor
square of the whiskered triangle.

Everything here is built once at the triangle level and transported by
tensor-square morphisms: collapsing the triangle onto the walking monad
gives the shear in the monad square; whiskering it with the two outer
edges gives the chain whose steps are classified for the invertibility
argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .gray import CollapseMap, TensorTerms, gray, pair_name, smash, split_pair
from .morphism import GrayMorphism, PresMorphism
from .presentation import Presentation
from .rewriting import EQ_DISTINCT, EQ_EQUAL, eq
from .terms import CellTerm, Comp, Gen, Id, comp
from .walking import e_oriental2, mnd, oriental2

# ---------------------------------------------------------------------------
# cached tensor squares


@lru_cache(maxsize=None)
def mnd_gray() -> Presentation:
    return gray(mnd().base, mnd().base)


@lru_cache(maxsize=None)
def mnd_smash() -> Tuple[Presentation, CollapseMap]:
    return smash(mnd(), mnd())


@lru_cache(maxsize=None)
def oriental_gray() -> Presentation:
    o2 = oriental2()
    return gray(o2, o2)


@lru_cache(maxsize=None)
def whiskered_gray() -> Presentation:
    e = e_oriental2()
    return gray(e, e)


def _o2_to_mnd() -> PresMorphism:
    o2 = oriental2()
    m = mnd().base
    A = Gen("A")
    asg = {"x0": Gen("pt"), "x1": Gen("pt"), "x2": Gen("pt"),
           "u": A, "v": A, "w": A, "sigma": Gen("m")}
    return PresMorphism(o2, m, asg)


def _o2_to_eo2() -> PresMorphism:
    o2 = oriental2()
    e = e_oriental2()
    asg = {"x0": Gen("q0"), "x1": Gen("q2"), "x2": Gen("q4"),
           "u": comp(0, Gen("u"), Gen("e1")),
           "v": comp(0, Gen("e2"), Gen("v")),
           "w": comp(0, Gen("e2"), Gen("w"), Gen("e1")),
           "sigma": comp(0, Id(Gen("e2")), Gen("sigma"), Id(Gen("e1")))}
    return PresMorphism(o2, e, asg)


# ---------------------------------------------------------------------------
# the shear at the triangle level


def _g(x: str, y: str) -> CellTerm:
    return Gen(pair_name(x, y))


def oriental_shear_term() -> CellTerm:
    """The universal shear as a 3-cell in the tensor square of the triangle:
    pull the second factor's 2-cell northwest across the first factor's
    incoming leg, then pull the first factor's 2-cell southwest across the
    second factor's outgoing leg."""
    lam1 = comp(0, _g("v", "v"), Id(_g("x1", "u")), Id(_g("u", "x0")))
    w1 = comp(1, Id(lam1),
              comp(0, Id(Id(_g("v", "x2"))), _g("u", "sigma")),
              Id(comp(0, _g("sigma", "x2"), Id(_g("x0", "w")))))
    lam_ab = comp(0, Id(_g("x2", "v")), Id(_g("v", "x1")), _g("u", "u"))
    w2 = comp(1, Id(lam_ab),
              comp(0, _g("sigma", "v"), Id(Id(_g("x0", "u")))),
              Id(comp(0, Id(_g("w", "x2")), _g("x0", "sigma"))))
    return Comp(2, w1, w2)


def oriental_shear_boundaries() -> Tuple[CellTerm, CellTerm]:
    """Hand-encoded fixtures for the two 2-sides of the shear picture:
    four layers each, transcribed from the displayed diagrams."""
    src = comp(
        1,
        comp(0, _g("v", "v"), Id(_g("x1", "u")), Id(_g("u", "x0"))),
        comp(0, Id(_g("v", "x2")), _g("x1", "sigma"), Id(_g("u", "x0"))),
        comp(0, Id(_g("v", "x2")), _g("u", "w")),
        comp(0, _g("sigma", "x2"), Id(_g("x0", "w"))),
    )
    tgt = comp(
        1,
        comp(0, Id(_g("x2", "v")), Id(_g("v", "x1")), _g("u", "u")),
        comp(0, Id(_g("x2", "v")), _g("sigma", "x1"), Id(_g("x0", "u"))),
        comp(0, _g("w", "v"), Id(_g("x0", "u"))),
        comp(0, Id(_g("w", "x2")), _g("x0", "sigma")),
    )
    return src, tgt


@dataclass
class UniversalShear:
    presentation: Presentation          # the monad tensor square
    term: CellTerm                      # the 3-cell there
    source_fixture: CellTerm
    target_fixture: CellTerm
    smashed: Presentation
    collapse: CollapseMap
    collapsed_term: CellTerm


@lru_cache(maxsize=None)
def universal_shear() -> UniversalShear:
    o2 = oriental2()
    og = oriental_gray()
    to_mnd = _o2_to_mnd()
    gm = GrayMorphism(to_mnd, to_mnd, og, mnd_gray())
    term = gm.push(oriental_shear_term())
    s_fix, t_fix = (gm.push(t) for t in oriental_shear_boundaries())
    small, cm = mnd_smash()
    return UniversalShear(mnd_gray(), term, s_fix, t_fix, small, cm,
                          cm.push(term))


def bimnd_cells() -> Dict[str, CellTerm]:
    """The five structure cells of the smashed monad square, as terms over
    the collapsed presentation: crossing, multiplication and unit 3-cells
    (second factor's wire), comultiplication and counit (first factor's)."""
    return {
        "underlying": _g("A", "A"),
        "mult": _g("m", "A"),
        "unit": _g("u", "A"),
        "comult": _g("A", "m"),
        "counit": _g("A", "u"),
    }


# ---------------------------------------------------------------------------
# the factorization chain in the whiskered tensor square


L_TYPE = "L"
R_TYPE = "R"
FOUR_CELL = "4-cell"
COLLAPSE_TRIVIAL = "collapse-trivial"

# under the functor onto the walking adjunction these factor cells collapse
_TRIVIAL_FACTORS = {"w"}


def classify_pair(name: str, p: Presentation) -> str:
    x, y = split_pair(name)
    # dimensions in the respective factors are recoverable from the tensor
    dx = _factor_dim(x)
    dy = _factor_dim(y)
    if x in _TRIVIAL_FACTORS or y in _TRIVIAL_FACTORS:
        return COLLAPSE_TRIVIAL
    if (dx, dy) == (2, 2):
        return FOUR_CELL
    if (dx, dy) == (2, 1):
        return L_TYPE
    if (dx, dy) == (1, 2):
        return R_TYPE
    return "whisker"


def _factor_dim(name: str) -> int:
    if name.startswith("q") or name.startswith("x"):
        return 0
    if name == "sigma":
        return 2
    return 1


def _top_atom(t: CellTerm) -> Optional[str]:
    """The unique top-dimensional generator in a move term, if any."""
    from .terms import generators
    pairs = [n for n in generators(t)
             if _factor_dim(split_pair(n)[0]) + _factor_dim(split_pair(n)[1]) >= 3]
    return pairs[0] if pairs else None


@dataclass
class ChainStep:
    label: str
    term: CellTerm
    classification: str
    composable: Optional[bool] = None


@dataclass
class SkeletonReport:
    steps: List[ChainStep]
    chain_composable: bool
    boundary_match: bool
    hexagon_closes: bool
    table: Dict[str, int] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    def ok(self) -> bool:
        return (self.chain_composable and self.boundary_match
                and self.hexagon_closes and not self.failures)



def _split_moves(t: CellTerm, p: Presentation) -> List[CellTerm]:
    """Expand a 3-cell into a sequence of single generating moves by
    distributing whiskers over 2-composition."""
    t = p.normalize(t)
    if isinstance(t, Id):
        return []
    if isinstance(t, Comp):
        if t.k == 2:
            return _split_moves(t.left, p) + _split_moves(t.right, p)
        la = _split_moves(t.left, p)
        lb = _split_moves(t.right, p)
        if not la:
            return [p.normalize(Comp(t.k, t.left, m)) for m in lb]
        if not lb:
            return [p.normalize(Comp(t.k, m, t.right)) for m in la]
        # sequentialize by interchange: the left part fires first
        first = Comp(t.k, t.left, Id(p.boundary(t.right, "source", 2)))
        second = Comp(t.k, Id(p.boundary(t.left, "target", 2)), t.right)
        return _split_moves(first, p) + _split_moves(second, p)
    return [t]


def proof_skeleton_check(budget: Optional[int] = None,
                         mutate_step: Optional[int] = None) -> SkeletonReport:
    """Build the image of the shear in the whiskered tensor square, split it
    into its four generating pull moves, check consecutive composability and
    the total 2-boundary, then verify the interchange hexagon whose target
    route passes through the collapse-trivial wires.

    `mutate_step` replaces the given step of the chain by its reversed
    orientation, to exhibit the failure mode."""
    eg = whiskered_gray()
    to_e = _o2_to_eo2()
    gm = GrayMorphism(to_e, to_e, oriental_gray(), eg)
    image = gm.push(oriental_shear_term())
    steps_terms = _split_moves(image, eg)
    # the invertibility argument runs on the chain whiskered below by the
    # crossing of the two adjoint-pattern wires; the crossing's target is
    # exactly the image's boundary word, so the whisker composes on the nose
    beta_layer = comp(
        0, Id(_g("q4", "e2")), Id(_g("q4", "v")), Id(_g("e2", "q2")),
        _g("v", "u"), Id(_g("q2", "e1")), Id(_g("u", "q0")),
        Id(_g("e1", "q0")))
    steps_terms = [eg.normalize(Comp(1, Id(beta_layer), t))
                   for t in steps_terms]

    steps: List[ChainStep] = []
    failures: List[str] = []
    for i, t in enumerate(steps_terms):
        atom = _top_atom(t)
        cls = classify_pair(atom, eg) if atom else "unknown"
        steps.append(ChainStep(f"step{i}", t, cls))

    if mutate_step is not None and 0 <= mutate_step < len(steps):
        t = steps[mutate_step].term
        steps[mutate_step] = ChainStep(
            steps[mutate_step].label + ":reversed",
            _reverse_orientation(t, eg),
            steps[mutate_step].classification)

    # (i) consecutive composability
    chain_ok = True
    for i in range(len(steps) - 1):
        a, b = steps[i].term, steps[i + 1].term
        v = eq(eg.boundary(a, "target", 2), eg.boundary(b, "source", 2),
               eg, budget)
        good = v is EQ_EQUAL
        steps[i + 1].composable = good
        if not good:
            chain_ok = False
            failures.append(
                f"boundary mismatch between step{i} and step{i + 1} ({v})")
    if steps:
        steps[0].composable = True

    # (ii) total 2-boundary against the (whiskered) shear image
    whiskered_image = eg.normalize(Comp(1, Id(beta_layer), image))
    bm_src = eq(eg.boundary(steps[0].term, "source", 2),
                eg.boundary(whiskered_image, "source", 2), eg, budget) is EQ_EQUAL
    bm_tgt = eq(eg.boundary(steps[-1].term, "target", 2),
                eg.boundary(whiskered_image, "target", 2), eg, budget) is EQ_EQUAL
    boundary_match = bm_src and bm_tgt and chain_ok
    if not (bm_src and bm_tgt):
        failures.append("total 2-boundary differs from the shear image")

    # (iii) the hexagon: pulls in both orders around the interchange 4-cell
    tt = TensorTerms(e_oriental2(), e_oriental2())
    hex_cell = _g("sigma", "sigma")
    hex_src, hex_tgt = tt.fill22_boundaries(Gen("sigma"), Gen("sigma"))
    hex_ok = True
    for side, route in (("source", hex_src), ("target", hex_tgt)):
        for lvl in (1, 2):
            va = eq(eg.boundary(hex_cell, side, lvl),
                    eg.boundary(route, side, lvl), eg, budget)
            if va is EQ_DISTINCT:
                hex_ok = False
                failures.append(f"hexagon {side} mismatch at level {lvl}")
    for lvl_side in ("source", "target"):
        v = eq(eg.boundary(hex_src, lvl_side, 2),
               eg.boundary(hex_tgt, lvl_side, 2), eg, budget)
        if v is EQ_DISTINCT:
            hex_ok = False
            failures.append(f"hexagon routes differ at their {lvl_side}")

    for t, label in ((hex_cell, "hexagon"),):
        steps.append(ChainStep(label, t, FOUR_CELL))
    for mv, label in ((tt.move21(Gen("sigma"), Gen("w")), "slide-across-w2"),
                      (tt.move12(Gen("w"), Gen("sigma")), "slide-across-w1")):
        atom = _top_atom(mv)
        steps.append(ChainStep(label, mv, classify_pair(atom, eg)))

    table: Dict[str, int] = {}
    for s in steps:
        table[s.classification] = table.get(s.classification, 0) + 1

    return SkeletonReport(steps, chain_ok, boundary_match, hex_ok, table,
                          failures)


def _reverse_orientation(t: CellTerm, p: Presentation) -> CellTerm:
    """The formal inverse of a step.  Boundary computation swaps sides on
    Inv regardless of invertibility marks, which is all the mutation
    fixture needs; validation would flag the term, as it should."""
    from .terms import Inv
    return Inv(t)

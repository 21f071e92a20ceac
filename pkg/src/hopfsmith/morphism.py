"""Generator-to-term morphisms of presentations, and their tensor squares.

A `PresMorphism` sends each generator to a term of the codomain of the
same dimension, with images of boundaries matching boundaries of images.
A `GrayMorphism` is the induced map between tensor presentations: a pair
generator goes to the tensor of the images, built with the same term
constructors that define the tensor boundaries, so functoriality is by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from .gray import TensorTerms, split_pair
from .presentation import Presentation
from .terms import CellTerm, Comp, Gen, Id, Inv, TermError


@dataclass
class PresMorphism:
    domain: Presentation
    codomain: Presentation
    assignment: Dict[str, CellTerm]

    def push(self, t: CellTerm) -> CellTerm:
        return self.codomain.normalize(self._push(t))

    def _push(self, t: CellTerm) -> CellTerm:
        if isinstance(t, Gen):
            return self.assignment[t.name]
        if isinstance(t, Id):
            return Id(self._push(t.inner))
        if isinstance(t, Inv):
            return Inv(self._push(t.inner))
        return Comp(t.k, self._push(t.left), self._push(t.right))


@dataclass
class GrayMorphism:
    """The tensor of two presentation morphisms on pair generators."""
    left: PresMorphism
    right: PresMorphism
    domain: Presentation     # gray(left.domain, right.domain)
    codomain: Presentation   # gray(left.codomain, right.codomain)

    def __post_init__(self):
        self.tt = TensorTerms(self.left.codomain, self.right.codomain)

    def push(self, t: CellTerm) -> CellTerm:
        return self.codomain.normalize(self._push(t))

    def _push(self, t: CellTerm) -> CellTerm:
        if isinstance(t, Gen):
            return self._push_pair(t.name)
        if isinstance(t, Id):
            return Id(self._push(t.inner))
        if isinstance(t, Inv):
            return Inv(self._push(t.inner))
        return Comp(t.k, self._push(t.left), self._push(t.right))

    def _push_pair(self, name: str) -> CellTerm:
        x, y = split_pair(name)
        fx = self.left.push(Gen(x))
        gy = self.right.push(Gen(y))
        dx = self.left.domain.gens[x].dim
        dy = self.right.domain.gens[y].dim
        tt = self.tt
        if dx == 0:
            ox = self._object_name(fx)
            return tt.ten_r(ox, gy)
        if dy == 0:
            oy = self._object_name(gy)
            return tt.ten_l(fx, oy)
        if (dx, dy) == (1, 1):
            return tt.cross(fx, gy)
        if (dx, dy) == (1, 2):
            return tt.move12(fx, gy)
        if (dx, dy) == (2, 1):
            return tt.move21(fx, gy)
        raise TermError(f"no tensor image rule for dimension pair ({dx},{dy})")

    @staticmethod
    def _object_name(t: CellTerm) -> str:
        if not isinstance(t, Gen):
            raise TermError("object image is not an object generator")
        return t.name

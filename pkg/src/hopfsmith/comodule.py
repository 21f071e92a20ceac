"""Finite-dimensional left comodules over an exact bialgebra: validation,
intertwiner spaces, tensor products, duals, and the regular comodule.

A coaction is an (n*d) x d matrix rho with the H-factor on the left;
rows are indexed (h, i) |-> h*d + i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .bialgebra import Bialgebra, HopfData
from .matrix import Matrix, flip_matrix


class ComoduleError(ValueError):
    pass


@dataclass
class Comodule:
    bialgebra: Bialgebra
    d: int
    rho: Matrix  # (n*d) x d

    def __post_init__(self):
        n = self.bialgebra.n
        if (self.rho.rows, self.rho.cols) != (n * self.d, self.d):
            raise ComoduleError(
                f"coaction shape {self.rho.rows}x{self.rho.cols}, expected "
                f"{n * self.d}x{self.d}")

    def check(self) -> List[str]:
        """Names of failing comodule axioms (empty when valid)."""
        B = self.bialgebra
        n, d = B.n, self.d
        I_d = Matrix.identity(B.field, d)
        I_n = Matrix.identity(B.field, n)
        out = []
        if B.delta.kron(I_d) @ self.rho != I_n.kron(self.rho) @ self.rho:
            out.append("coassociativity")
        if B.eps.kron(I_d) @ self.rho != I_d:
            out.append("counit")
        return out

    def is_valid(self) -> bool:
        return not self.check()


def regular_comodule(B: Bialgebra) -> Comodule:
    return Comodule(B, B.n, B.delta)


def trivial_comodule(B: Bialgebra) -> Comodule:
    return Comodule(B, 1, B.u)


def comodule_hom(M: Comodule, N: Comodule) -> List[Matrix]:
    """Exact basis of intertwiners phi: M -> N with
    rho_N . phi = (id (x) phi) . rho_M."""
    if M.bialgebra is not N.bialgebra and M.bialgebra != N.bialgebra:
        raise ComoduleError("comodules over different bialgebras")
    B = M.bialgebra
    F, n = B.field, B.n
    dm, dn = M.d, N.d
    # unknowns phi[a, b], a < dn, b < dm
    rows = []
    for h in range(n):
        for a in range(dn):
            for c in range(dm):
                coeff = [F.zero] * (dn * dm)
                for b in range(dm):
                    coeff[a * dm + b] = F.add(coeff[a * dm + b],
                                              M.rho[h * dm + b, c])
                for b in range(dn):
                    coeff[b * dm + c] = F.sub(coeff[b * dm + c],
                                              N.rho[h * dn + a, b])
                rows.append(coeff)
    basis = Matrix.from_rows(F, rows).nullspace()
    return [Matrix(F, dn, dm, [v[a * dm + b, 0] for a in range(dn)
                               for b in range(dm)]) for v in basis]


def tensor_comodule(M: Comodule, N: Comodule) -> Comodule:
    """Codiagonal coaction: multiply the two H-legs after pulling the
    second one across the first module factor."""
    B = M.bialgebra
    F, n = B.field, B.n
    dm, dn = M.d, N.d
    swap = flip_matrix(F, dm, n)  # (M, H) -> (H, M)
    I_n, I_dm, I_dn = (Matrix.identity(F, k) for k in (n, dm, dn))
    both = M.rho.kron(N.rho)                       # (H M H N) from (M N)
    rearrange = I_n.kron(swap).kron(I_dn)          # (H H M N)
    mul = B.m.kron(I_dm).kron(I_dn)
    return Comodule(B, dm * dn, mul @ rearrange @ both)


def dual_comodule(M: Comodule, hopf: Optional[HopfData] = None) -> Comodule:
    """Left dual with the coaction twisted by the antipode.  Raises
    NoAntipode through antipode() when the bialgebra is not Hopf."""
    if hopf is None:
        from .bialgebra import antipode
        hopf = antipode(M.bialgebra)
    if hopf.bialgebra != M.bialgebra:
        raise ComoduleError("antipode belongs to a different bialgebra")
    B = M.bialgebra
    I_d = Matrix.identity(B.field, M.d)
    rho_t = _coefficient_transpose(M)
    return Comodule(B, M.d, hopf.S.kron(I_d) @ rho_t)


def _coefficient_transpose(M: Comodule) -> Matrix:
    """Swap the two module indices of the matrix-coefficient family: the
    dual coaction uses coefficient (j, i) where the original uses (i, j)."""
    B = M.bialgebra
    F, n, d = B.field, B.n, M.d
    out = [F.zero] * (n * d * d)
    for h in range(n):
        for i in range(d):
            for j in range(d):
                out[(h * d + j) * d + i] = M.rho[h * d + i, j]
    return Matrix(F, n * d, d, out)

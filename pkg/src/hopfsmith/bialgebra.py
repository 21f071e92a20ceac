"""Exact bialgebras on a finite-dimensional (possibly super-graded) space:
structure tensors, axiom checking, the four shear maps, antipodes, and
integrals.

Index convention: the basis of B (x) B is ordered (i, j) |-> i*n + j.
Braidings supported: the flip, and the Koszul sign rule for Z/2-graded
spaces; both are involutions, so no separate inverse braiding is kept.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .field import Field, field_from_json
from .matrix import Matrix, flip_matrix, koszul_matrix

FLIP = "flip"
SUPER = "super"

NW, NE, SW, SE = "NW", "NE", "SW", "SE"


class BialgebraError(ValueError):
    pass


@dataclass
class Bialgebra:
    field: Field
    n: int
    m: Matrix          # n x n^2
    u: Matrix          # n x 1
    delta: Matrix      # n^2 x n
    eps: Matrix        # 1 x n
    grading: Tuple[int, ...] = ()
    braiding: str = FLIP
    basis_names: Tuple[str, ...] = ()

    def __post_init__(self):
        n = self.n
        shapes = ((self.m, n, n * n), (self.u, n, 1),
                  (self.delta, n * n, n), (self.eps, 1, n))
        for mat, r, c in shapes:
            if (mat.rows, mat.cols) != (r, c):
                raise BialgebraError(
                    f"structure tensor shape {mat.rows}x{mat.cols}, "
                    f"expected {r}x{c}")
        if not self.grading:
            self.grading = (0,) * n
        if len(self.grading) != n:
            raise BialgebraError("grading length mismatch")
        if self.braiding not in (FLIP, SUPER):
            raise BialgebraError(f"unknown braiding {self.braiding!r}")
        if not self.basis_names:
            self.basis_names = tuple(f"e{i}" for i in range(n))

    # -- helpers ----------------------------------------------------------

    @property
    def id_n(self) -> Matrix:
        return Matrix.identity(self.field, self.n)

    def br(self) -> Matrix:
        if self.braiding == SUPER:
            return koszul_matrix(self.field, self.grading, self.grading)
        return flip_matrix(self.field, self.n, self.n)

    def coord_name(self, flat: int, factors: int) -> str:
        idx = []
        for _ in range(factors):
            idx.append(flat % self.n)
            flat //= self.n
        return "(" + ",".join(self.basis_names[i] for i in reversed(idx)) + ")"


@dataclass
class AxiomReport:
    name: str
    holds: bool
    witness: Optional[str] = None


def check_bialgebra(B: Bialgebra) -> List[AxiomReport]:
    """All axioms, exactly; a failing axiom carries a witness coordinate."""
    F = B.field
    I = B.id_n
    out: List[AxiomReport] = []

    def cmp(name: str, lhs: Matrix, rhs: Matrix) -> None:
        if lhs == rhs:
            out.append(AxiomReport(name, True))
            return
        diff = lhs - rhs
        where = next((i, j) for i in range(diff.rows)
                     for j in range(diff.cols)
                     if not F.is_zero(diff[i, j]))
        out.append(AxiomReport(name, False, f"entry {where}"))

    m, u, d, e = B.m, B.u, B.delta, B.eps
    cmp("associativity", m @ m.kron(I), m @ I.kron(m))
    cmp("unit_left", m @ u.kron(I), I)
    cmp("unit_right", m @ I.kron(u), I)
    cmp("coassociativity", d.kron(I) @ d, I.kron(d) @ d)
    cmp("counit_left", e.kron(I) @ d, I)
    cmp("counit_right", I.kron(e) @ d, I)
    mid = I.kron(B.br()).kron(I)
    cmp("bialgebra_axiom", m.kron(m) @ mid @ d.kron(d), d @ m)
    cmp("comult_unit", d @ u, u.kron(u))
    cmp("counit_mult", e @ m, e.kron(e))
    cmp("counit_unit", e @ u, Matrix.identity(F, 1))
    if any(B.grading):
        out.append(_check_degree_zero(B))
    return out


def _check_degree_zero(B: Bialgebra) -> AxiomReport:
    F, n, g = B.field, B.n, B.grading
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if not F.is_zero(B.m[k, i * n + j]) and \
                   (g[i] + g[j] - g[k]) % 2:
                    return AxiomReport("degree_zero", False,
                                       f"m[{k},({i},{j})]")
                if not F.is_zero(B.delta[i * n + j, k]) and \
                   (g[i] + g[j] - g[k]) % 2:
                    return AxiomReport("degree_zero", False,
                                       f"delta[({i},{j}),{k}]")
        if not F.is_zero(B.u[k, 0]) and g[k] % 2:
            return AxiomReport("degree_zero", False, f"u[{k}]")
        if not F.is_zero(B.eps[0, k]) and g[k] % 2:
            return AxiomReport("degree_zero", False, f"eps[{k}]")
    return AxiomReport("degree_zero", True)


def is_valid_bialgebra(B: Bialgebra) -> bool:
    return all(r.holds for r in check_bialgebra(B))


# ---------------------------------------------------------------------------
# shears


def shear(B: Bialgebra, which: str) -> Matrix:
    """The four composites of one comultiplication and one multiplication
    on B (x) B; the letter names the direction the exchanged factor
    travels under the quadrant identification."""
    I = B.id_n
    br = B.br()
    if which == SE:
        return I.kron(B.m) @ B.delta.kron(I)
    if which == NW:
        return B.m.kron(I) @ I.kron(B.delta)
    if which == NE:
        return B.m.kron(I) @ I.kron(br) @ B.delta.kron(I)
    if which == SW:
        return I.kron(B.m) @ br.kron(I) @ I.kron(B.delta)
    raise BialgebraError(f"unknown shear direction {which!r}")


def is_hopf(B: Bialgebra) -> bool:
    return shear(B, SE).is_invertible()


def is_cohopf(B: Bialgebra) -> bool:
    return shear(B, NE).is_invertible()


# ---------------------------------------------------------------------------
# antipodes


@dataclass
class HopfData:
    bialgebra: Bialgebra
    S: Matrix
    S_inv: Optional[Matrix] = None


class NoAntipode(BialgebraError):
    def __init__(self, kernel: List[Matrix]):
        super().__init__("shear map is singular; no antipode "
                         f"(kernel dimension {len(kernel)})")
        self.kernel = kernel


def antipode(B: Bialgebra) -> HopfData:
    """S = (eps (x) id) . shear_SE^{-1} . (id (x) u), checked against both
    convolution axioms and against inverting the shear."""
    sh = shear(B, SE)
    if not sh.is_invertible():
        raise NoAntipode(sh.nullspace())
    I = B.id_n
    sh_inv = sh.inverse()
    S = B.eps.kron(I) @ sh_inv @ I.kron(B.u)
    conv_l = B.m @ S.kron(I) @ B.delta
    conv_r = B.m @ I.kron(S) @ B.delta
    ue = B.u @ B.eps
    if conv_l != ue or conv_r != ue:
        raise BialgebraError("antipode candidate fails the convolution axioms")
    undo = I.kron(B.m) @ I.kron(S).kron(I) @ B.delta.kron(I)
    if undo != sh_inv:
        raise BialgebraError("antipode does not invert the shear")
    S_inv = S.inverse() if is_cohopf(B) else None
    return HopfData(B, S, S_inv)


def convolution_inverse(B: Bialgebra) -> Optional[Matrix]:
    """Independent route to the antipode: solve the two-sided convolution
    equations m(T (x) id)delta = u.eps = m(id (x) T)delta as a linear
    system in the entries of T."""
    F, n = B.field, B.n
    I = B.id_n
    rows: List[List] = []
    rhs: List[List] = []
    ue = B.u @ B.eps

    def add_equations(side_left: bool) -> None:
        # entry (r, c) of m (T (x) id) delta is linear in T
        for r in range(n):
            for c in range(n):
                coeff = [F.zero] * (n * n)
                for a in range(n):
                    for b in range(n):
                        # delta[(a,b), c]
                        dab = B.delta[a * n + b, c]
                        if F.is_zero(dab):
                            continue
                        for t in range(n):
                            if side_left:
                                # T[t,a] * m[r, (t,b)]
                                coeff[t * n + a] = F.add(
                                    coeff[t * n + a],
                                    F.mul(dab, B.m[r, t * n + b]))
                            else:
                                coeff[t * n + b] = F.add(
                                    coeff[t * n + b],
                                    F.mul(dab, B.m[r, a * n + t]))
                rows.append(coeff)
                rhs.append([ue[r, c]])

    add_equations(True)
    add_equations(False)
    A = Matrix.from_rows(F, rows)
    b = Matrix.from_rows(F, rhs)
    sol = A.solve(b)
    if sol is None:
        return None
    return Matrix(F, n, n, [sol[i * n + j, 0] for i in range(n)
                            for j in range(n)])


# ---------------------------------------------------------------------------
# integrals


@dataclass
class IntegralData:
    left_integrals: List[Matrix]     # 1 x n rows
    left_cointegrals: List[Matrix]   # n x 1 columns
    pairing: Optional[object] = None  # scalar for the normalized pair
    normalized_integral: Optional[Matrix] = None
    normalized_cointegral: Optional[Matrix] = None


def integrals(B: Bialgebra) -> IntegralData:
    """Solve (id (x) lam)delta = u.lam for integrals and
    m(id (x) Lam) = Lam.eps for cointegrals, exactly."""
    F, n = B.field, B.n

    rows = []
    for r in range(n):
        for c in range(n):
            coeff = [F.zero] * n
            for k in range(n):
                coeff[k] = F.add(coeff[k], B.delta[r * n + k, c])
            coeff[c] = F.sub(coeff[c], B.u[r, 0])
            rows.append(coeff)
    lam_basis = [v.transpose() for v in Matrix.from_rows(F, rows).nullspace()]

    rows = []
    for r in range(n):
        for c in range(n):
            coeff = [F.zero] * n
            for k in range(n):
                coeff[k] = F.add(coeff[k], B.m[r, c * n + k])
            coeff[r] = F.sub(coeff[r], B.eps[0, c])
            rows.append(coeff)
    coint_basis = Matrix.from_rows(F, rows).nullspace()

    data = IntegralData(lam_basis, coint_basis)
    if len(lam_basis) == 1 and len(coint_basis) == 1:
        lam, coint = lam_basis[0], coint_basis[0]
        pairing = (lam @ coint)[0, 0]
        data.pairing = pairing
        if not F.is_zero(pairing):
            data.normalized_integral = lam.scale(F.inv(pairing))
            data.normalized_cointegral = coint
    return data


class IntegralConditionError(BialgebraError):
    pass


def antipode_from_integrals(B: Bialgebra,
                            data: Optional[IntegralData] = None) -> Matrix:
    """The antipode assembled from a normalized integral/cointegral pair:
    split the cointegral, braid the argument past the second leg together
    with the (possibly odd) line the integral takes values in, multiply,
    and evaluate the integral on the product:

        S(h) = sum_(Lam)  +- Lam_(1) . int(h Lam_(2)).

    The sign is the Koszul sign of moving h past Lam_(2) and past the
    integral's value line; over an ungraded field it is trivial."""
    if data is None:
        data = integrals(B)
    if data.normalized_integral is None:
        raise IntegralConditionError(
            "integral and cointegral spaces must be lines with nonzero pairing")
    F, n = B.field, B.n
    I = B.id_n
    lam = data.normalized_integral
    coint = data.normalized_cointegral
    dl = B.delta @ coint         # n^2 x 1, the split cointegral
    if B.braiding == SUPER:
        deg_int = _functional_parity(B, lam)
        br = koszul_matrix(F, [(g + deg_int) % 2 for g in B.grading],
                           B.grading)
    else:
        br = flip_matrix(F, n, n)
    step1 = dl.kron(I)           # h |-> Lam1 (x) Lam2 (x) h
    step2 = I.kron(br)           # braid h past Lam2 and the value line
    step3 = I.kron(B.m)          # multiply h with Lam2
    step4 = I.kron(lam)          # evaluate the integral
    return step4 @ step3 @ step2 @ step1


def _functional_parity(B: Bialgebra, lam: Matrix) -> int:
    F = B.field
    degs = {B.grading[k] % 2 for k in range(B.n)
            if not F.is_zero(lam[0, k])}
    if len(degs) != 1:
        raise IntegralConditionError("integral functional is not homogeneous")
    return degs.pop()


# ---------------------------------------------------------------------------
# duality and serialization


def dual_bialgebra(B: Bialgebra) -> Bialgebra:
    return Bialgebra(B.field, B.n,
                     m=B.delta.transpose(), u=B.eps.transpose(),
                     delta=B.m.transpose(), eps=B.u.transpose(),
                     grading=B.grading, braiding=B.braiding,
                     basis_names=tuple(f"{x}*" for x in B.basis_names))


def _mat_to_json(B: Bialgebra, mat: Matrix) -> list:
    return [[B.field.show(mat[i, j]) for j in range(mat.cols)]
            for i in range(mat.rows)]


def bialgebra_to_json(B: Bialgebra) -> dict:
    return {
        "field": B.field.to_json(),
        "dim": B.n,
        "grading": list(B.grading),
        "braiding": B.braiding,
        "basis": list(B.basis_names),
        "m": _mat_to_json(B, B.m),
        "u": _mat_to_json(B, B.u),
        "delta": _mat_to_json(B, B.delta),
        "epsilon": _mat_to_json(B, B.eps),
    }


def bialgebra_from_json(data: dict) -> Bialgebra:
    F = field_from_json(data.get("field"))
    n = data["dim"]

    def mat(key: str, rows: int, cols: int) -> Matrix:
        raw = data[key]
        if len(raw) != rows or any(len(r) != cols for r in raw):
            raise BialgebraError(f"{key} must be {rows}x{cols}")
        return Matrix.from_rows(F, [[F.parse(str(x)) if isinstance(x, str)
                                     else F(x) for x in row] for row in raw])

    return Bialgebra(
        F, n,
        m=mat("m", n, n * n), u=mat("u", n, 1),
        delta=mat("delta", n * n, n), eps=mat("epsilon", 1, n),
        grading=tuple(data.get("grading", [0] * n)),
        braiding=data.get("braiding", FLIP),
        basis_names=tuple(data.get("basis", [])),
    )


def load_bialgebra(path: str) -> Bialgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return bialgebra_from_json(json.load(fh))

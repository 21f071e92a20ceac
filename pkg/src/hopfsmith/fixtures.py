"""The bialgebra fixture zoo used across the test and acceptance suites.

Group algebras and the function algebra of a finite group, the
two-element idempotent monoid, the four-dimensional non-commutative
non-cocommutative algebra with nilpotent part, and the odd exterior
line.  Everything is exact over Q unless a field is passed in.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Sequence, Tuple

from .bialgebra import Bialgebra, FLIP, SUPER
from .field import Field, QQ
from .matrix import Matrix


def _structure(field: Field, names: Sequence[str],
               mul: Dict[Tuple[int, int], Dict[int, object]],
               unit: Dict[int, object],
               com: Dict[int, Dict[Tuple[int, int], object]],
               counit: Dict[int, object],
               grading: Sequence[int] = (),
               braiding: str = FLIP) -> Bialgebra:
    n = len(names)
    m = Matrix.zero(field, n, n * n)
    md = list(m.data)
    for (i, j), out in mul.items():
        for k, c in out.items():
            md[k * n * n + (i * n + j)] = field(c)
    u = Matrix.zero(field, n, 1)
    ud = list(u.data)
    for k, c in unit.items():
        ud[k] = field(c)
    d = Matrix.zero(field, n * n, n)
    dd = list(d.data)
    for k, out in com.items():
        for (i, j), c in out.items():
            dd[(i * n + j) * n + k] = field(c)
    e = Matrix.zero(field, 1, n)
    ed = list(e.data)
    for k, c in counit.items():
        ed[k] = field(c)
    return Bialgebra(field, n,
                     m=Matrix(field, n, n * n, md),
                     u=Matrix(field, n, 1, ud),
                     delta=Matrix(field, n * n, n, dd),
                     eps=Matrix(field, 1, n, ed),
                     grading=tuple(grading) or (0,) * n,
                     braiding=braiding,
                     basis_names=tuple(names))


# -- groups and monoids ------------------------------------------------------


def _monoid_bialgebra(field: Field, names: Sequence[str],
                      table: Sequence[Sequence[int]],
                      unit_index: int) -> Bialgebra:
    n = len(names)
    mul = {(i, j): {table[i][j]: 1} for i in range(n) for j in range(n)}
    com = {k: {(k, k): 1} for k in range(n)}
    return _structure(field, names, mul, {unit_index: 1}, com,
                      {k: 1 for k in range(n)})


def cyclic_group_algebra(order: int, field: Field = QQ) -> Bialgebra:
    names = [f"g{i}" if i else "e" for i in range(order)]
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    return _monoid_bialgebra(field, names, table, 0)


def symmetric_group_algebra(n: int = 3, field: Field = QQ) -> Bialgebra:
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(n))

    table = [[index[compose(p, q)] for q in elems] for p in elems]
    names = ["".join(str(x) for x in p) for p in elems]
    unit = index[tuple(range(n))]
    return _monoid_bialgebra(field, names, table, unit)


def group_inversion_matrix(B: Bialgebra, order_table=None) -> Matrix:
    """For group-algebra fixtures: the permutation g |-> g^{-1}, found from
    the multiplication tensor."""
    F, n = B.field, B.n
    e = next(k for k in range(n) if not F.is_zero(B.u[k, 0]))
    out = Matrix.zero(F, n, n)
    data = list(out.data)
    for i in range(n):
        inv = next(j for j in range(n) if not F.is_zero(B.m[e, i * n + j]))
        data[inv * n + i] = F.one
    return Matrix(F, n, n, data)


def idempotent_monoid_bialgebra(field: Field = QQ) -> Bialgebra:
    # {1, e} with e*e = e
    return _monoid_bialgebra(field, ["1", "e"], [[0, 1], [1, 1]], 0)


def function_hopf_algebra(order: int, field: Field = QQ) -> Bialgebra:
    """Functions on a cyclic group: pointwise product, convolution
    comultiplication."""
    n = order
    names = [f"d{i}" for i in range(n)]
    mul = {(i, j): ({i: 1} if i == j else {}) for i in range(n)
           for j in range(n)}
    com = {k: {(a, (k - a) % n): 1 for a in range(n)} for k in range(n)}
    return _structure(field, names, mul, {k: 1 for k in range(n)},
                      com, {0: 1})


# -- the four-dimensional fixture ---------------------------------------------


def sweedler_algebra(field: Field = QQ) -> Bialgebra:
    """Basis (1, g, x, gx): g^2 = 1, x^2 = 0, x g = -g x;
    the comultiplication splits x as x (x) 1 + g (x) x."""
    one, g, x, gx = 0, 1, 2, 3
    mul = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1},
        (one, gx): {gx: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {gx: 1}, (g, gx): {x: 1},
        (x, one): {x: 1}, (x, g): {gx: -1}, (x, x): {}, (x, gx): {},
        (gx, one): {gx: 1}, (gx, g): {x: -1}, (gx, x): {}, (gx, gx): {},
    }
    com = {
        one: {(one, one): 1},
        g: {(g, g): 1},
        x: {(x, one): 1, (g, x): 1},
        gx: {(gx, g): 1, (one, gx): 1},
    }
    return _structure(field, ["1", "g", "x", "gx"], mul, {one: 1}, com,
                      {one: 1, g: 1})


def exterior_line_super(field: Field = QQ) -> Bialgebra:
    """One odd generator squaring to zero, with the Koszul braiding."""
    one, th = 0, 1
    mul = {(one, one): {one: 1}, (one, th): {th: 1},
           (th, one): {th: 1}, (th, th): {}}
    com = {one: {(one, one): 1},
           th: {(th, one): 1, (one, th): 1}}
    return _structure(field, ["1", "th"], mul, {one: 1}, com, {one: 1},
                      grading=[0, 1], braiding=SUPER)


# -- negative controls ---------------------------------------------------------


def corrupted_delta(B: Bialgebra) -> Bialgebra:
    """One entry of the comultiplication bumped; breaks the bialgebra axiom
    with a witness coordinate."""
    data = list(B.delta.data)
    data[0] = B.field.add(data[0], B.field.one)
    return Bialgebra(B.field, B.n, m=B.m, u=B.u,
                     delta=Matrix(B.field, B.n * B.n, B.n, data),
                     eps=B.eps, grading=B.grading, braiding=B.braiding,
                     basis_names=B.basis_names)


def standard_fixtures(field: Field = QQ) -> Dict[str, Bialgebra]:
    return {
        "QZ2": cyclic_group_algebra(2, field),
        "QS3": symmetric_group_algebra(3, field),
        "QZ3dual": function_hopf_algebra(3, field),
        "QM": idempotent_monoid_bialgebra(field),
        "sweedler": sweedler_algebra(field),
        "superline": exterior_line_super(field),
    }

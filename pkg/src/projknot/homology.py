"""Abelianization and exact Smith normal form over the integers."""

from dataclasses import dataclass

from projknot.diagram import components, homology_class
from projknot.errors import PreconditionError
from projknot.presentation import dehn_presentation
from projknot.words import exponent_sum


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or any(t < 2 for t in self.torsion):
            raise ValueError("free rank must be nonnegative and torsion coefficients at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def abelianize(p):
    """Relation matrix: rows are relations, columns generators, entries exponent sums."""
    return [[exponent_sum(w, g) for g in p.generators] for w in p.relations]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m, ncols=None):
    """Return (U, D, V) with U * m * V = D, U and V unimodular, D in Smith form.

    ``ncols`` gives the width of a matrix with no rows. Pivots are chosen as
    the entry of smallest absolute value, ties going to the smallest (row, col).
    """
    rows = len(m)
    cols = len(m[0]) if rows else (ncols or 0)
    a = [list(r) for r in m]
    u, v = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        p = a[t][t]
        clean = True
        for i in range(t + 1, rows):
            if a[i][t]:
                add_row(t, i, -(a[i][t] // p))
                clean = clean and a[i][t] == 0
        for j in range(t + 1, cols):
            if a[t][j]:
                add_col(t, j, -(a[t][j] // p))
                clean = clean and a[t][j] == 0
        if not clean:
            continue
        bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
        if bad is not None:
            add_row(bad, t, 1)
            continue
        if p < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def verify_smith(m, u, d, v, ncols=None):
    cols = len(m[0]) if m else (ncols or 0)
    lhs = matmul(matmul(u, m), v) if m else []
    assert lhs == d, "U * m * V != D"
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1, "transform is not unimodular"
    diag = [d[i][i] for i in range(min(len(d), cols))]
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            assert i == j or x == 0, "D is not diagonal"
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    assert diag[:len(nonzero)] == nonzero, "zeros must trail on the diagonal"
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0, "diagonal is not a divisibility chain"


def abelian_group_of_matrix(m, ncols):
    u, d, v = smith_normal_form(m, ncols)
    verify_smith(m, u, d, v, ncols)
    diag = [d[i][i] for i in range(min(len(d), ncols))]
    rank = sum(1 for x in diag if x)
    return AbelianGroup(ncols - rank, tuple(x for x in diag if x > 1))


def h1_from_presentation(p):
    return abelian_group_of_matrix(abelianize(p), len(p.generators))


def check_homology_dichotomy(d):
    """Compare the diagram's homology class of a knot with H_1 of the complement.

    A zero-homologous knot must have H_1 = Z + Z/2, a knot in the class of a
    projective line H_1 = Z.
    """
    comps = components(d)
    if len(comps) != 1:
        raise PreconditionError(f"homology dichotomy needs a knot, got {len(comps)} components")
    cls = homology_class(d, comps[0])
    h1 = h1_from_presentation(dehn_presentation(d))
    expected = AbelianGroup(1, (2,)) if cls == 0 else AbelianGroup(1)
    return {
        "homology_class": cls,
        "h1": h1,
        "expected": expected,
        "agree": h1 == expected,
    }

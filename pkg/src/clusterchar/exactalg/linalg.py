"""Exact linear algebra over the rationals and prime fields.

Matrices are plain lists of rows.  A :class:`Field` coerces entries and
supplies inverses; everything else is ordinary Python arithmetic followed by
``field.norm``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import FieldMismatch


class Field:
    """The rationals (``p is None``) or the integers modulo a prime ``p``."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def order(self):
        return self.p

    def __call__(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldMismatch(f"{x} has no image in {self!r}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if not isinstance(x, int):
            raise FieldMismatch(f"cannot coerce {x!r} into {self!r}")
        return x % self.p

    def norm(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    def elements(self):
        """All field elements (prime fields only)."""
        if self.p is None:
            raise ValueError("QQ is infinite")
        return range(self.p)


QQ = Field()


@lru_cache(maxsize=None)
def GF(p):
    return Field(p)


def coerce_matrix(mat, field):
    return [[field(x) for x in row] for row in mat]


def zeros(r, c, field=QQ):
    z = field(0)
    return [[z] * c for _ in range(r)]


def identity(n, field=QQ):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field(1)
    return m


def matmul(a, b, field, inner=None):
    """Product of an r x k and a k x c matrix.

    ``inner`` gives k explicitly, which matters when r == 0.
    """
    if inner is None:
        inner = len(a[0]) if a else len(b)
    cols = len(b[0]) if b else 0
    if inner == 0:
        return zeros(len(a), cols, field)
    out = []
    bt = list(zip(*b))
    for row in a:
        out.append([field.norm(sum(x * y for x, y in zip(row, col))) for col in bt])
    return out


def matadd(a, b, field):
    return [[field.norm(x + y) for x, y in zip(r, s)] for r, s in zip(a, b)]


def matsub(a, b, field):
    return [[field.norm(x - y) for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(a, c, field):
    return [[field.norm(c * x) for x in r] for r in a]


def transpose(a, ncols=None):
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*a)]


def is_zero_matrix(a):
    return all(x == 0 for r in a for x in r)


def rref(mat, field, ncols=None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    rows = coerce_matrix(mat, field)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.norm(x * inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.norm(x - f * y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat, field, ncols=None):
    return len(rref(mat, field, ncols)[1])


def nullspace(mat, field, ncols=None):
    """Basis (list of vectors) of ``{v : mat v = 0}``."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    red, pivots = rref(mat, field, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, p in zip(red, pivots):
            v[p] = field.norm(-row[f])
        basis.append(v)
    return basis


def row_space(vectors, field, ncols):
    """Canonical (reduced) basis of the span of ``vectors``."""
    return rref(vectors, field, ncols)[0]


def in_span(v, basis, field, ncols):
    return rank(list(basis) + [v], field, ncols) == rank(basis, field, ncols)


@dataclass(frozen=True)
class LinearSolution:
    rank: int
    nullspace: list
    particular: list  # None when the system is inconsistent


def solve_linear(mat, rhs, field=QQ, ncols=None):
    """Solve ``mat @ x = rhs`` exactly.

    ``rhs`` is a vector or a matrix with one column per right-hand side.
    The particular solution (if any) is checked by substitution.
    """
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    mat = coerce_matrix(mat, field)
    matrix_rhs = bool(rhs) and isinstance(rhs[0], (list, tuple))
    cols = transpose(coerce_matrix(rhs, field), 0) if matrix_rhs else [[field(x) for x in rhs]]
    if len(cols[0] if cols else []) != len(mat):
        if not (len(mat) == 0 and all(len(c) == 0 for c in cols)):
            raise ValueError("rhs length does not match the number of rows")
    red, pivots = rref(mat, field, ncols)
    ns = nullspace(mat, field, ncols)
    sols = []
    for col in cols:
        aug = [row + [b] for row, b in zip(mat, col)]
        red_aug, piv_aug = rref(aug, field, ncols + 1)
        if ncols in piv_aug:
            return LinearSolution(len(pivots), ns, None)
        x = [field(0)] * ncols
        for row, p in zip(red_aug, piv_aug):
            x[p] = row[ncols]
        check = [field.norm(sum(a * b for a, b in zip(row, x))) for row in mat]
        assert check == list(col), "substitution check failed"
        sols.append(x)
    particular = transpose(sols) if matrix_rhs else sols[0]
    return LinearSolution(len(pivots), ns, particular)


def complement_basis(vectors, field, ncols):
    """Unit-vector indices completing the span of ``vectors`` to the full space."""
    pivots = set(rref(vectors, field, ncols)[1])
    return [i for i in range(ncols) if i not in pivots]

"""The cluster character and the linear map iota."""

from dataclasses import dataclass

from .exactalg.laurent import LaurentPoly
from .exactalg.linalg import QQ, solve_linear


@dataclass(frozen=True)
class IotaMap:
    """Integer matrix with iota(e) = matrix . e."""

    matrix: tuple

    def __call__(self, e):
        return tuple(sum(row[j] * e[j] for j in range(len(e))) for row in self.matrix)


def compute_iota(cat, samples=None):
    """Solve iota from the values ind(Sigma X) + ind(X) on sampled objects.

    Defaults to all indecomposables.  Every sample is checked against the
    solved matrix, so an inconsistent model fails here.
    """
    n = cat.n
    if samples is None:
        samples = cat.indecomposables()
    data = [(cat.f_dims(x), tuple(a + b for a, b in zip(cat.index(cat.suspend(x)), cat.index(x)))) for x in samples]
    rows, rhs = [], []
    for e, v in data:
        for i in range(n):
            row = [0] * (n * n)
            for j in range(n):
                row[i * n + j] = e[j]
            rows.append(row)
            rhs.append(v[i])
    sol = solve_linear(rows, rhs, QQ, n * n)
    if sol.particular is None:
        raise AssertionError("index data is not linear in the dimension vector")
    if sol.nullspace:
        raise AssertionError("samples do not determine iota")
    if any(x.denominator != 1 for x in sol.particular):
        raise AssertionError("iota is not integral")
    mat = tuple(tuple(int(sol.particular[i * n + j]) for j in range(n)) for i in range(n))
    iota = IotaMap(mat)
    for e, v in data:
        assert iota(e) == v
    return iota


def cc(cat, x):
    """CC_T(x) = x^{ind x} sum_e chi(Gr_e(F x)) x^{-iota(e)}."""
    n = cat.n
    ind = cat.index(x)
    iota = cat.iota
    terms = {}
    for e, chi in cat.f_chi(x).items():
        exp = tuple(a - b for a, b in zip(ind, iota(e)))
        terms[exp] = terms.get(exp, 0) + chi
    return LaurentPoly(terms, n)

"""Exchange matrices, seed mutation and cluster-variable enumeration.

Vertices are 0-based in the Python API; the text format and the printed
variable names ``x1, x2, ...`` are 1-based.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import MalformedInput, NotClosed
from .exactalg.laurent import LaurentPoly


@dataclass(frozen=True)
class ExchangeQuiver:
    """Skew-symmetric exchange matrix ``B``; ``B[i][j]`` counts arrows i->j minus j->i."""

    B: tuple

    def __post_init__(self):
        B = tuple(tuple(int(x) for x in row) for row in self.B)
        n = len(B)
        for i in range(n):
            if len(B[i]) != n:
                raise ValueError("exchange matrix must be square")
            for j in range(n):
                if B[i][j] != -B[j][i]:
                    raise ValueError("exchange matrix must be skew-symmetric")
        object.__setattr__(self, "B", B)

    @property
    def n(self):
        return len(self.B)

    @classmethod
    def from_arrows(cls, n, arrows):
        """Build from ``(i, j, m)`` triples: m arrows i -> j (0-based)."""
        B = [[0] * n for _ in range(n)]
        for i, j, m in arrows:
            if i == j:
                raise ValueError("loops are not allowed")
            B[i][j] += m
            B[j][i] -= m
        return cls(tuple(map(tuple, B)))

    @classmethod
    def linear_a(cls, n):
        """Type A_n with arrows 1 -> 2 -> ... -> n."""
        return cls.from_arrows(n, [(i, i + 1, 1) for i in range(n - 1)])

    def arrows(self):
        return [(i, j, self.B[i][j]) for i in range(self.n) for j in range(self.n) if self.B[i][j] > 0]

    def mutate(self, k):
        n = self.n
        if not 0 <= k < n:
            raise IndexError(f"vertex {k} out of range")
        B = self.B
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == k or j == k:
                    new[i][j] = -B[i][j]
                else:
                    new[i][j] = B[i][j] + (abs(B[i][k]) * B[k][j] + B[i][k] * abs(B[k][j])) // 2
        return ExchangeQuiver(tuple(map(tuple, new)))

    def remove_vertex(self, i):
        keep = [v for v in range(self.n) if v != i]
        return ExchangeQuiver(tuple(tuple(self.B[a][b] for b in keep) for a in keep))

    def is_acyclic(self):
        succ = {i: [j for j in range(self.n) if self.B[i][j] > 0] for i in range(self.n)}
        state = {}

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state.get(w) == 1 or (w not in state and not visit(w)):
                    return False
            state[v] = 2
            return True

        return all(visit(v) for v in range(self.n) if v not in state)

    def format(self):
        lines = [str(self.n)]
        lines += [f"{i + 1} {j + 1} {m}" for i, j, m in self.arrows()]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text):
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        try:
            n = int(rows[0][0])
            if len(rows[0]) != 1 or n < 1:
                raise ValueError
            arrows = []
            for r in rows[1:]:
                i, j, m = (int(x) for x in r)
                if not (1 <= i <= n and 1 <= j <= n) or m < 0:
                    raise ValueError
                arrows.append((i - 1, j - 1, m))
            quiver = cls.from_arrows(n, arrows)
        except (ValueError, IndexError) as exc:
            raise MalformedInput(f"malformed quiver text: {exc}") from exc
        # opposite arrows would cancel into a 2-cycle
        seen = {(i, j) for i, j, m in arrows if m}
        if any((j, i) in seen for i, j in seen):
            raise MalformedInput("quiver has a 2-cycle")
        return quiver


@dataclass(frozen=True)
class Seed:
    quiver: ExchangeQuiver
    cluster: tuple

    @classmethod
    def initial(cls, quiver):
        n = quiver.n
        return cls(quiver, tuple(LaurentPoly.var(i, n) for i in range(n)))

    def key(self):
        return frozenset(self.cluster)


def exchange_polynomial(seed, k):
    """The numerator of the exchange relation at ``k``."""
    B, cluster = seed.quiver.B, seed.cluster
    n = seed.quiver.n
    pos = LaurentPoly.constant(1, cluster[0].nvars)
    neg = pos
    for i in range(n):
        b = B[i][k]
        if b > 0:
            pos = pos * cluster[i] ** b
        elif b < 0:
            neg = neg * cluster[i] ** (-b)
    return pos + neg


def mutate(seed, k):
    """Seed mutation at vertex ``k`` (0-based)."""
    numerator = exchange_polynomial(seed, k)
    try:
        new_var = numerator.divide_exact(seed.cluster[k])
    except ArithmeticError as exc:
        raise AssertionError("exchange relation is not an exact division") from exc
    cluster = list(seed.cluster)
    cluster[k] = new_var
    return Seed(seed.quiver.mutate(k), tuple(cluster))


def enumerate_seeds(quiver, depth_limit=64):
    """Breadth-first closure of seeds, deduplicated by unordered cluster."""
    start = Seed.initial(quiver)
    seen = {start.key(): start}
    queue = deque([(start, 0)])
    while queue:
        seed, depth = queue.popleft()
        for k in range(quiver.n):
            new = mutate(seed, k)
            if new.key() in seen:
                continue
            if depth + 1 > depth_limit:
                raise NotClosed(f"mutation closure not reached within depth {depth_limit}")
            seen[new.key()] = new
            queue.append((new, depth + 1))
    return list(seen.values())


def enumerate_cluster_variables(quiver, depth_limit=64):
    """All cluster variables (as Laurent polynomials in the initial cluster)."""
    return {v for seed in enumerate_seeds(quiver, depth_limit) for v in seed.cluster}


def clusters(quiver, depth_limit=64):
    return [seed.key() for seed in enumerate_seeds(quiver, depth_limit)]


def _monomials(groups, degree_bound, nvars):
    found = {}
    for group in groups:
        group = sorted(group, key=lambda p: p.format())
        for d in range(degree_bound + 1):
            for combo in combinations_with_replacement(range(len(group)), d):
                value = LaurentPoly.constant(1, nvars)
                for idx in combo:
                    value = value * group[idx]
                found.setdefault(value, tuple(group[i] for i in combo))
    return found


def expand_in_cluster_monomials(p, variables, degree_bound=None, clusters=None):
    """Integer combination of monomials in ``variables`` equal to ``p``, or None.

    With ``clusters`` only cluster monomials (monomials inside one cluster) are
    used; these are linearly independent, so the answer is unique.  The result
    is a dict mapping tuples of variables (a monomial) to integer coefficients.
    """
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_decomp

    nvars = p.nvars
    variables = list(variables)
    if degree_bound is None:
        degree_bound = 2 * nvars
    groups = [list(c) for c in clusters] if clusters is not None else [variables]
    monos = _monomials(groups, degree_bound, nvars)
    values = list(monos)
    exps = sorted({e for v in values for e in v.terms} | set(p.terms))
    if not values:
        return {} if not p else None
    if clusters is not None:
        # cluster monomials are independent: the rational solution is the only one
        result = _solve_independent(values, exps, p)
        if result is None:
            return None
        result = {monos[v]: c for v, c in result.items()}
        _check_expansion(result, p)
        return result
    A = Matrix([[v.terms.get(e, 0) for v in values] for e in exps])
    b = Matrix([p.terms.get(e, 0) for e in exps])
    S, U, V = smith_normal_decomp(A, domain=ZZ)
    Ub = U * b
    y = [0] * A.cols
    for i in range(A.rows):
        s = S[i, i] if i < A.cols else 0
        if s == 0:
            if Ub[i] != 0:
                return None
        else:
            if Ub[i] % s:
                return None
            y[i] = Ub[i] // s
    c = V * Matrix(y)
    result = {monos[v]: int(ci) for v, ci in zip(values, c) if ci != 0}
    _check_expansion(result, p)
    return result


def _solve_independent(values, exps, p):
    from sympy import QQ as SQQ
    from sympy.polys.matrices import DomainMatrix

    rows = [[SQQ(v.terms.get(e, 0)) for v in values] + [SQQ(p.terms.get(e, 0))] for e in exps]
    aug = DomainMatrix(rows, (len(exps), len(values) + 1), SQQ)
    red, pivots = aug.rref()
    if len(values) in pivots:
        return None
    if len(pivots) != len(values):
        raise AssertionError("cluster monomials are linearly dependent")
    red = red.to_Matrix()
    out = {}
    for r, c in enumerate(pivots):
        x = red[r, len(values)]
        if not x.is_integer:
            return None
        if x:
            out[values[c]] = int(x)
    return out


def _check_expansion(result, p):
    check = LaurentPoly({}, p.nvars)
    for mono, coeff in result.items():
        term = LaurentPoly.constant(coeff, p.nvars)
        for var in mono:
            term = term * var
        check = check + term
    assert check == p, "integer expansion failed substitution check"

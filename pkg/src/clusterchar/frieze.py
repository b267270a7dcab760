"""Friezes: ring maps from a finite-type cluster algebra to Z, positive on cluster variables.

A frieze is stored by its values on the initial cluster.  Friezes of type A_n
are enumerated from triangulations of the (n+3)-gon with the Conway-Coxeter
recursion; setting a cluster to 1 and mutating back to the initial seed, and
a bounded search over initial values, are kept as independent checks.
"""

from collections import deque
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .clustercat.arcs import ArcCategory
from .cccharacter import cc
from .errors import HypothesisViolated, MalformedInput, NotAFrieze
from .quiver import ExchangeQuiver, enumerate_cluster_variables


@lru_cache(maxsize=None)
def _variables(quiver):
    return tuple(sorted(enumerate_cluster_variables(quiver), key=lambda p: p.format()))


@dataclass(frozen=True)
class Frieze:
    quiver: ExchangeQuiver
    initial: tuple
    values: dict = dc_field(compare=False, hash=False, repr=False)

    def __call__(self, p):
        """f(p) for a Laurent polynomial in the initial variables."""
        v = p.evaluate(self.initial)
        if v.denominator != 1:
            raise NotAFrieze(f"{p.format()} takes the non-integer value {v}")
        return int(v)

    def format(self):
        return self.quiver.format() + " ".join(map(str, self.initial)) + "\n"


def make_frieze(quiver, values):
    """Validate ``values`` on the initial cluster; raises NotAFrieze."""
    values = tuple(int(v) for v in values)
    if len(values) != quiver.n:
        raise MalformedInput(f"expected {quiver.n} initial values, got {len(values)}")
    if any(v <= 0 for v in values):
        raise NotAFrieze("initial values must be positive", values=values)
    table = {}
    for p in _variables(quiver):
        v = p.evaluate(values)
        if v.denominator != 1 or v <= 0:
            raise NotAFrieze(f"{p.format()} evaluates to {v}", variable=p.format(), value=str(v))
        table[p] = int(v)
    return Frieze(quiver, values, table)


def is_frieze(quiver, values):
    try:
        make_frieze(quiver, values)
    except NotAFrieze:
        return False
    return True


# ------------------------------------------------------------ triangulations


def triangulations(N):
    """All triangulations of the N-gon (vertices 1..N) as sorted tuples of diagonals."""

    @lru_cache(maxsize=None)
    def tri(i, j):
        # triangulations of the sub-polygon i, i+1, ..., j
        if j - i < 2:
            return [()]
        out = []
        for k in range(i + 1, j):
            for left in tri(i, k):
                for right in tri(k, j):
                    arcs = left + right
                    arcs += tuple(a for a in ((i, k), (k, j)) if a[1] - a[0] >= 2 and a != (1, N))
                    out.append(arcs)
        return out

    return [tuple(sorted(t)) for t in tri(1, N)]


def quiddity(N, arcs):
    """Number of triangles at each vertex."""
    a = [1] * N
    for i, j in arcs:
        a[i - 1] += 1
        a[j - 1] += 1
    return a


def frieze_entries(N, arcs):
    """Conway-Coxeter values m(i, j) on all pairs of vertices from a triangulation."""
    a = quiddity(N, arcs)
    m = {}
    for i in range(1, N + 1):
        m[(i, i)] = 0
        m[(i, i % N + 1)] = 1
        prev, cur = 0, 1
        k = i % N + 1
        for _ in range(N - 2):
            prev, cur = cur, a[k - 1] * cur - prev
            k = k % N + 1
            m[(i, k)] = cur
    return m


def _type_a_category(quiver):
    n = quiver.n
    cat = ArcCategory(n)
    if cat.module.quiver.B != quiver.B:
        return None
    return cat


def enumerate_friezes(quiver):
    """All friezes of a type A_n quiver, one per triangulation of the (n+3)-gon.

    The quiver must be the fan's quiver (linear A_n in the orientation the
    polygon model picks); other quivers go through :func:`friezes_from_clusters`.
    """
    cat = _type_a_category(quiver)
    if cat is None:
        raise HypothesisViolated("triangulation enumeration needs the linear A_n quiver of the fan")
    N = cat.N
    found = {}
    for arcs in triangulations(N):
        m = frieze_entries(N, arcs)
        initial = tuple(m[t] for t in cat.t_labels)
        f = make_frieze(quiver, initial)
        # the triangulation's own arcs must be sent to 1
        for arc in arcs:
            if f(cc(cat, cat.obj(arc))) != 1:
                raise AssertionError(f"arc {arc} of the triangulation is not sent to 1")
        found.setdefault(initial, f)
    return [found[k] for k in sorted(found)]


def _numeric_mutate(quiver, values, k):
    B = quiver.B
    plus, minus = Fraction(1), Fraction(1)
    for i in range(quiver.n):
        if B[i][k] > 0:
            plus *= Fraction(values[i]) ** B[i][k]
        elif B[i][k] < 0:
            minus *= Fraction(values[i]) ** -B[i][k]
    new = list(values)
    new[k] = (plus + minus) / values[k]
    return quiver.mutate(k), tuple(new)


def friezes_from_clusters(quiver, depth_limit=64):
    """One frieze per cluster: set the cluster to 1 and mutate back to the initial seed."""
    from .quiver import Seed, mutate

    start = Seed.initial(quiver)
    paths = {start.key(): ()}
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        path = paths[seed.key()]
        if len(path) >= depth_limit:
            continue
        for k in range(quiver.n):
            new = mutate(seed, k)
            if new.key() not in paths:
                paths[new.key()] = path + (k,)
                queue.append(new)
    found = set()
    for path in paths.values():
        q = quiver
        for k in path:
            q = q.mutate(k)
        values = (Fraction(1),) * quiver.n
        for k in reversed(path):
            q, values = _numeric_mutate(q, values, k)
        assert q.B == quiver.B
        if any(v.denominator != 1 for v in values):
            raise AssertionError("a cluster frieze has non-integral initial values")
        found.add(tuple(int(v) for v in values))
    return [make_frieze(quiver, v) for v in sorted(found)]


def bounded_search(quiver, bound=4):
    """Friezes with all initial values in 1..bound."""
    return [make_frieze(quiver, v) for v in product(range(1, bound + 1), repeat=quiver.n) if is_frieze(quiver, v)]


# ------------------------------------------------------------------ lifting


@dataclass
class LiftReport:
    frieze: Frieze
    compatible: bool  # f(v) = f'(sigma(v)) on every cluster variable
    matches: int  # friezes of Q with f = f' o sigma among all friezes of Q

    @property
    def passed(self):
        return self.compatible and self.matches == 1

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"


def lift_frieze(quiver, vertex, f_prime, all_friezes=None):
    """The frieze f of Q with f = f' o sigma, where sigma sends x_{vertex+1} to 1.

    ``f_prime`` is a frieze of Q with the vertex removed.  Uniqueness is checked
    against ``all_friezes`` (by default the enumeration of Q's friezes).
    """
    reduced = quiver.remove_vertex(vertex)
    if f_prime.quiver.B != reduced.B:
        raise HypothesisViolated("f' is not a frieze of the reduced quiver")
    values = list(f_prime.initial)
    values.insert(vertex, 1)
    f = make_frieze(quiver, values)

    def composite(p):
        return f_prime(p.specialize(vertex, 1, drop=True))

    compatible = all(f(p) == composite(p) for p in _variables(quiver))
    if all_friezes is None:
        all_friezes = friezes_from_clusters(quiver)
    matches = sum(all(g(p) == composite(p) for p in _variables(quiver)) for g in all_friezes)
    return LiftReport(f, compatible, matches)


def parse_frieze(text):
    """Quiver text followed by one line of initial values."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) < 2:
        raise MalformedInput("a frieze file needs a quiver and a line of values")
    quiver = ExchangeQuiver.parse("\n".join(lines[:-1]))
    try:
        values = [int(x) for x in lines[-1].split()]
    except ValueError as exc:
        raise MalformedInput(f"bad initial values: {lines[-1]!r}") from exc
    if len(values) != quiver.n:
        raise MalformedInput(f"expected {quiver.n} initial values")
    return quiver, values

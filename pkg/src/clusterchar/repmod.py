"""Representations of acyclic quivers over exact fields.

A :class:`Rep` stores one matrix per arrow, of shape ``dims[t] x dims[s]`` for
an arrow ``s -> t``.  Vertices are 0-based.  Hom and Ext are computed as the
kernel and cokernel of the usual map

    d(h)_a = Y_a h_s - h_t X_a

from vertexwise maps to arrowwise maps.  An Ext class is represented by a
cocycle ``c_a : X_s -> Y_t`` whose middle term has arrow maps
``[[Y_a, c_a], [0, X_a]]`` on ``Y_v + X_v``.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import FieldMismatch, HypothesisViolated, MalformedInput
from .exactalg.interpolate import interpolate_and_eval_at_one, primes_for
from .exactalg.linalg import (
    GF,
    QQ,
    Field,
    complement_basis,
    identity,
    matmul,
    nullspace,
    rank,
    rref,
    solve_linear,
    zeros,
)


def quiver_arrows(quiver):
    """Arrow list ``((s, t), ...)`` of an ExchangeQuiver, parallel arrows repeated."""
    return tuple((i, j) for i, j, m in quiver.arrows() for _ in range(m))


def _shape_ok(mat, rows, cols):
    return len(mat) == rows and all(len(r) == cols for r in mat)


class Rep:
    """A representation: dimension vector plus one matrix per arrow."""

    __slots__ = ("arrows", "dims", "maps", "field")

    def __init__(self, arrows, dims, maps, field=QQ):
        self.arrows = tuple(tuple(a) for a in arrows)
        self.dims = tuple(int(d) for d in dims)
        self.field = field
        if len(maps) != len(self.arrows):
            raise ValueError("one matrix per arrow is required")
        clean = []
        for (s, t), mat in zip(self.arrows, maps):
            mat = [[field(x) for x in row] for row in mat]
            if self.dims[t] == 0:
                mat = []
            if not _shape_ok(mat, self.dims[t], self.dims[s]):
                raise ValueError(f"arrow {s}->{t} needs a {self.dims[t]}x{self.dims[s]} matrix")
            clean.append(mat)
        self.maps = tuple(clean)

    @property
    def n(self):
        return len(self.dims)

    @property
    def total_dim(self):
        return sum(self.dims)

    def __repr__(self):
        return f"Rep(dims={self.dims}, field={self.field!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Rep)
            and self.arrows == other.arrows
            and self.dims == other.dims
            and self.field == other.field
            and self.maps == other.maps
        )

    def __hash__(self):
        return hash((self.arrows, self.dims, tuple(tuple(map(tuple, m)) for m in self.maps)))

    @classmethod
    def zero(cls, arrows, n, field=QQ):
        return cls(arrows, (0,) * n, [[] for _ in arrows], field)

    @classmethod
    def simple(cls, arrows, n, i, field=QQ):
        dims = [0] * n
        dims[i] = 1
        return cls(arrows, dims, [[[0] * dims[s] for _ in range(dims[t])] for s, t in arrows], field)

    def reduce(self, field):
        """The same integer matrices read over another field."""
        return Rep(self.arrows, self.dims, self.maps, field)

    def is_zero(self):
        return self.total_dim == 0

    def direct_sum(self, *others):
        out = self
        for other in others:
            out = _sum2(out, other)
        return out

    # text form

    def format(self):
        lines = ["dims " + " ".join(map(str, self.dims))]
        for (s, t), mat in zip(self.arrows, self.maps):
            lines.append(f"arrow {s + 1} {t + 1}")
            if self.dims[s]:  # a matrix with no columns has no rows to print
                lines += [" ".join(str(_int_or_frac(x)) for x in row) for row in mat]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text, field=QQ, arrows=None):
        """Parse :meth:`format` output; ``arrows`` (if given) must match the blocks."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        try:
            head = lines[0].split()
            if head[0] != "dims":
                raise ValueError("first line must start with 'dims'")
            dims = [int(x) for x in head[1:]]
            found, maps, k = [], [], 1
            while k < len(lines):
                m = re.fullmatch(r"arrow\s+(\d+)\s+(\d+)", lines[k])
                if not m:
                    raise ValueError(f"expected an arrow line, got {lines[k]!r}")
                s, t = int(m.group(1)) - 1, int(m.group(2)) - 1
                if dims[s] == 0:
                    rows, k = [[] for _ in range(dims[t])], k + 1
                else:
                    rows = [[_parse_scalar(x) for x in ln.split()] for ln in lines[k + 1:k + 1 + dims[t]]]
                    k += 1 + dims[t]
                found.append((s, t))
                maps.append(rows)
            if arrows is not None and sorted(found) != sorted(tuple(a) for a in arrows):
                raise ValueError("arrow blocks do not match the quiver")
            return cls(found, dims, maps, field)
        except (ValueError, IndexError) as exc:
            raise MalformedInput(f"malformed representation: {exc}") from exc


def _int_or_frac(x):
    from fractions import Fraction

    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _parse_scalar(tok):
    from fractions import Fraction

    return Fraction(tok) if "/" in tok else int(tok)


def _block_diag(a, b, ra, ca, rb, cb, field):
    z = field(0)
    out = [list(r) + [z] * cb for r in a]
    out += [[z] * ca + list(r) for r in b]
    return out


def _sum2(x, y):
    if x.arrows != y.arrows or x.field != y.field:
        raise ValueError("direct sum needs the same quiver and field")
    dims = tuple(a + b for a, b in zip(x.dims, y.dims))
    maps = [
        _block_diag(mx, my, x.dims[t], x.dims[s], y.dims[t], y.dims[s], x.field)
        for (s, t), mx, my in zip(x.arrows, x.maps, y.maps)
    ]
    return Rep(x.arrows, dims, maps, x.field)


def direct_sum(reps, arrows=None, n=None, field=QQ):
    reps = list(reps)
    if not reps:
        return Rep.zero(arrows, n, field)
    return reps[0].direct_sum(*reps[1:])


def _check_pair(x, y):
    if x.arrows != y.arrows or x.dims.__len__() != y.dims.__len__():
        raise ValueError("representations live on different quivers")
    if x.field != y.field:
        raise ValueError("representations live over different fields")


# ---------------------------------------------------------------- Hom and Ext


class _Layout:
    """Flat coordinates for vertexwise maps X -> Y and arrowwise maps X_s -> Y_t."""

    def __init__(self, x, y):
        self.x, self.y = x, y
        self.vert_off = []
        off = 0
        for v in range(x.n):
            self.vert_off.append(off)
            off += y.dims[v] * x.dims[v]
        self.nvert = off
        self.arr_off = []
        off = 0
        for s, t in x.arrows:
            self.arr_off.append(off)
            off += y.dims[t] * x.dims[s]
        self.narr = off

    def vert_index(self, v, r, c):
        return self.vert_off[v] + r * self.x.dims[v] + c

    def arr_index(self, a, r, c):
        s = self.x.arrows[a][0]
        return self.arr_off[a] + r * self.x.dims[s] + c

    def differential(self):
        """Matrix (narr x nvert) of h -> (Y_a h_s - h_t X_a)_a."""
        x, y, f = self.x, self.y, self.x.field
        mat = [[f(0)] * self.nvert for _ in range(self.narr)]
        for a, (s, t) in enumerate(x.arrows):
            ya, xa = y.maps[a], x.maps[a]
            for r in range(y.dims[t]):
                for c in range(x.dims[s]):
                    row = mat[self.arr_index(a, r, c)]
                    # (Y_a h_s)[r][c] = sum_k Y_a[r][k] h_s[k][c]
                    for k in range(y.dims[s]):
                        if ya[r][k]:
                            row[self.vert_index(s, k, c)] += ya[r][k]
                    # (h_t X_a)[r][c] = sum_k h_t[r][k] X_a[k][c]
                    for k in range(x.dims[t]):
                        if xa[k][c]:
                            row[self.vert_index(t, r, k)] -= xa[k][c]
        return [[f.norm(v) for v in row] for row in mat]

    def unflatten_vert(self, vec):
        x, y = self.x, self.y
        out = []
        for v in range(x.n):
            out.append([[vec[self.vert_index(v, r, c)] for c in range(x.dims[v])] for r in range(y.dims[v])])
        return tuple(out)

    def flatten_vert(self, mats):
        vec = [self.x.field(0)] * self.nvert
        for v, m in enumerate(mats):
            for r, row in enumerate(m):
                for c, val in enumerate(row):
                    vec[self.vert_index(v, r, c)] = val
        return vec

    def unflatten_arr(self, vec):
        x, y = self.x, self.y
        out = []
        for a, (s, t) in enumerate(x.arrows):
            out.append([[vec[self.arr_index(a, r, c)] for c in range(x.dims[s])] for r in range(y.dims[t])])
        return tuple(out)

    def flatten_arr(self, mats):
        vec = [self.x.field(0)] * self.narr
        for a, m in enumerate(mats):
            for r, row in enumerate(m):
                for c, val in enumerate(row):
                    vec[self.arr_index(a, r, c)] = val
        return vec


def hom_space(x, y):
    """Basis of Hom(x, y); each element is a tuple of per-vertex matrices."""
    _check_pair(x, y)
    lay = _Layout(x, y)
    basis = nullspace(lay.differential(), x.field, lay.nvert)
    return [lay.unflatten_vert(v) for v in basis]


def hom_dim(x, y):
    _check_pair(x, y)
    lay = _Layout(x, y)
    return lay.nvert - rank(lay.differential(), x.field, lay.nvert)


@dataclass(frozen=True)
class ExtClass:
    """An element of Ext^1(source, target), given by a cocycle."""

    source: Rep
    target: Rep
    cocycle: tuple


class ExtSpace:
    """Ext^1(x, y) as arrowwise maps modulo coboundaries, with a fixed basis."""

    def __init__(self, x, y):
        _check_pair(x, y)
        self.source, self.target = x, y
        self.layout = lay = _Layout(x, y)
        f = x.field
        d = lay.differential()
        # columns of d span the coboundaries
        self._cob = [list(col) for col in zip(*d)] if d and d[0] else []
        red, pivots = rref(self._cob, f, lay.narr)
        self._cob_rows = red
        units = complement_basis(self._cob, f, lay.narr)
        self._units = units
        self.basis = []
        for u in units:
            vec = [f(0)] * lay.narr
            vec[u] = f(1)
            self.basis.append(ExtClass(x, y, lay.unflatten_arr(vec)))

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, cocycle):
        """Coordinates of a cocycle in :attr:`basis` (coboundaries map to 0)."""
        lay, f = self.layout, self.source.field
        vec = lay.flatten_arr(cocycle)
        # reduce by the echelon coboundary rows: pivots are never basis units
        for row in self._cob_rows:
            p = next(i for i, v in enumerate(row) if v != 0)
            if vec[p] != 0:
                c = vec[p]
                vec = [f.norm(a - c * b) for a, b in zip(vec, row)]
        return [vec[u] for u in self._units]

    def element(self, coords):
        f = self.source.field
        vec = [f(0)] * self.layout.narr
        for u, c in zip(self._units, coords):
            vec[u] = f(c)
        return ExtClass(self.source, self.target, self.layout.unflatten_arr(vec))

    def is_trivial(self, cocycle):
        return all(c == 0 for c in self.coordinates(cocycle))


def ext_space(x, y):
    """Ext^1(x, y) with a basis of representative cocycles."""
    return ExtSpace(x, y)


def ext_dim(x, y):
    return ExtSpace(x, y).dim


def middle_term(e):
    """Middle term E of 0 -> target -> E -> source -> 0 for the class ``e``."""
    x, y, f = e.source, e.target, e.source.field
    dims = tuple(a + b for a, b in zip(y.dims, x.dims))
    maps = []
    for a, (s, t) in enumerate(x.arrows):
        ya, xa, ca = y.maps[a], x.maps[a], e.cocycle[a]
        top = [list(ya[r]) + list(ca[r]) for r in range(y.dims[t])]
        bot = [[f(0)] * y.dims[s] + list(xa[r]) for r in range(x.dims[t])]
        maps.append(top + bot)
    return Rep(x.arrows, dims, maps, f)


def euler_form(arrows, u, v):
    """<u, v> = sum u_i v_i - sum over arrows s->t of u_s v_t."""
    return sum(a * b for a, b in zip(u, v)) - sum(u[s] * v[t] for s, t in arrows)


def tits_form(arrows, u):
    return euler_form(arrows, u, u)


# ------------------------------------------------------------ morphisms


def compose(g, f, field):
    """g . f for vertexwise morphisms (tuples of matrices)."""
    return tuple(matmul(gv, fv, field, inner=len(fv)) for gv, fv in zip(g, f))


def pushforward(cocycle, h, arrows, field):
    """h_* of a cocycle: c_a -> h_t c_a."""
    return tuple(matmul(h[t], c, field, inner=len(c)) for (s, t), c in zip(arrows, cocycle))


def pullback(cocycle, g, arrows, field):
    """g^* of a cocycle: c_a -> c_a g_s."""
    return tuple(matmul(c, g[s], field, inner=len(g[s])) for (s, t), c in zip(arrows, cocycle))


def _columns(vectors, nrows, field):
    """Matrix whose columns are ``vectors``."""
    if not vectors:
        return [[] for _ in range(nrows)]
    return [[v[r] for v in vectors] for r in range(nrows)]


def kernel(f, x, y):
    """Kernel K of f: x -> y with its inclusion K -> x."""
    fld = x.field
    incl, kd = [], []
    for v in range(x.n):
        ns = nullspace(f[v], fld, x.dims[v])
        incl.append(_columns(ns, x.dims[v], fld))
        kd.append(len(ns))
    maps = []
    for a, (s, t) in enumerate(x.arrows):
        # X_a incl_s = incl_t K_a
        img = matmul(x.maps[a], incl[s], fld, inner=x.dims[s]) if kd[s] else [[] for _ in range(x.dims[t])]
        if kd[t] == 0 or kd[s] == 0:
            maps.append([[fld(0)] * kd[s] for _ in range(kd[t])])
            continue
        sol = solve_linear(incl[t], img, fld, kd[t])
        assert sol.particular is not None, "kernel is not a subrepresentation"
        maps.append(sol.particular)
    return Rep(x.arrows, kd, maps, fld), tuple(incl)


def cokernel(f, x, y):
    """Cokernel C of f: x -> y with its projection y -> C."""
    fld = y.field
    proj, sect = [], []
    for v in range(y.n):
        # rows r with r f_v = 0
        ft = [[f[v][r][c] for r in range(y.dims[v])] for c in range(x.dims[v])]
        rows = nullspace(ft, fld, y.dims[v]) if x.dims[v] else [list(r) for r in identity(y.dims[v], fld)]
        proj.append(rows)
        # a right inverse of proj_v
        if rows:
            sol = solve_linear(rows, identity(len(rows), fld), fld, y.dims[v])
            assert sol.particular is not None
            sect.append(sol.particular)
        else:
            sect.append([[] for _ in range(y.dims[v])])
    cd = [len(p) for p in proj]
    maps = []
    for a, (s, t) in enumerate(y.arrows):
        if cd[t] == 0 or cd[s] == 0:
            maps.append([[fld(0)] * cd[s] for _ in range(cd[t])])
            continue
        m = matmul(proj[t], matmul(y.maps[a], sect[s], fld, inner=y.dims[s]), fld, inner=y.dims[t])
        maps.append(m)
    return Rep(y.arrows, cd, maps, fld), tuple(proj)


def is_morphism(f, x, y):
    fld = x.field
    for a, (s, t) in enumerate(x.arrows):
        lhs = matmul(y.maps[a], f[s], fld, inner=y.dims[s])
        rhs = matmul(f[t], x.maps[a], fld, inner=x.dims[t])
        if lhs != rhs:
            return False
    return True


def zero_morphism(x, y):
    fld = x.field
    return tuple(zeros(y.dims[v], x.dims[v], fld) for v in range(x.n))


def block_morphism(blocks, sources, targets):
    """Assemble a morphism between direct sums from blocks ``blocks[j][i]: src_i -> tgt_j``."""
    fld = sources[0].field if sources else targets[0].field
    n = (sources or targets)[0].n
    out = []
    for v in range(n):
        rows = []
        for j, tgt in enumerate(targets):
            for r in range(tgt.dims[v]):
                row = []
                for i, src in enumerate(sources):
                    blk = blocks[j][i]
                    row += list(blk[v][r]) if blk is not None else [fld(0)] * src.dims[v]
                rows.append(row)
        out.append(rows)
    return tuple(out)


def block_cocycle(blocks, sources, targets):
    """Assemble a cocycle between direct sums from blocks ``blocks[j][i]``."""
    fld = sources[0].field if sources else targets[0].field
    arrows = (sources or targets)[0].arrows
    out = []
    for a, (s, t) in enumerate(arrows):
        rows = []
        for j, tgt in enumerate(targets):
            for r in range(tgt.dims[t]):
                row = []
                for i, src in enumerate(sources):
                    blk = blocks[j][i]
                    row += list(blk[a][r]) if blk is not None else [fld(0)] * src.dims[s]
                rows.append(row)
        out.append(rows)
    return tuple(out)


# ------------------------------------------------- submodule Grassmannians


@lru_cache(maxsize=None)
def _subspaces(p, d, e):
    """All e-dimensional subspaces of F_p^d as RREF row bases (tuples)."""
    out = []
    for pivots in combinations(range(d), e):
        free = [(r, c) for r in range(e) for c in range(pivots[r] + 1, d) if c not in pivots]
        for vals in product(range(p), repeat=len(free)):
            rows = [[0] * d for _ in range(e)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _image_inside(mat, basis, target, fld, dim_t):
    """Is mat . span(basis) contained in span(target)?"""
    if not basis:
        return True
    imgs = [[fld.norm(sum(mat[r][k] * b[k] for k in range(len(b)))) for r in range(dim_t)] for b in basis]
    if all(all(v == 0 for v in w) for w in imgs):
        return True
    return rank(list(target) + imgs, fld, dim_t) == len(target)


def count_subreps(x, e):
    """Number of subrepresentations of ``x`` (over GF(p)) with dimension vector ``e``."""
    fld = x.field
    if fld.p is None:
        raise ValueError("count_subreps needs a finite field")
    e = tuple(e)
    if any(not 0 <= a <= d for a, d in zip(e, x.dims)):
        return 0
    n = x.n
    order = _topological_order(x.arrows, n)
    by_vertex = {v: [(a, s, t) for a, (s, t) in enumerate(x.arrows) if {s, t} <= set(order[: order.index(v) + 1]) and v in (s, t)] for v in order}
    chosen = {}

    def rec(k):
        if k == n:
            return 1
        v = order[k]
        total = 0
        for sub in _subspaces(fld.p, x.dims[v], e[v]):
            chosen[v] = sub
            ok = True
            for a, s, t in by_vertex[v]:
                if not _image_inside(x.maps[a], chosen[s], chosen[t], fld, x.dims[t]):
                    ok = False
                    break
            if ok:
                total += rec(k + 1)
        del chosen[v]
        return total

    return rec(0)


def _topological_order(arrows, n):
    indeg = [0] * n
    for s, t in arrows:
        if s != t:
            indeg[t] += 1
    order, ready = [], [v for v in range(n) if indeg[v] == 0]
    while ready:
        v = ready.pop(0)
        order.append(v)
        for s, t in arrows:
            if s == v:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    if len(order) != n:
        # cyclic quivers still work; the order only affects pruning
        order += [v for v in range(n) if v not in order]
    return order


def grassmannian_degree_bound(dims, e):
    return sum(a * (d - a) for a, d in zip(e, dims))


def good_primes(x, count):
    """The first ``count`` small primes at which ``x`` keeps its endomorphism dimension."""
    from .exactalg.interpolate import SMALL_PRIMES

    if x.field.p is not None:
        raise ValueError("good_primes needs a representation over QQ")
    end = hom_dim(x, x)
    out = []
    for p in SMALL_PRIMES:
        try:
            ok = hom_dim(x.reduce(GF(p)), x.reduce(GF(p))) == end
        except FieldMismatch:
            ok = False
        if ok:
            out.append(p)
            if len(out) == count:
                return tuple(out)
    raise ValueError("not enough primes of good reduction in the built-in table")


def grassmannian_euler(x, e, primes=None):
    """chi(Gr_e(x)) for ``x`` given by integer (or p-integral) matrices.

    Points are counted over GF(p) for ``degree bound + 2`` primes and the
    counting polynomial is evaluated at 1.  By default the primes are the
    smallest ones at which ``x`` reduces with the same endomorphism dimension.
    """
    e = tuple(e)
    if any(not 0 <= a <= d for a, d in zip(e, x.dims)):
        return 0
    bound = grassmannian_degree_bound(x.dims, e)
    if primes is None:
        primes = primes_for(bound) if _is_01(x) else good_primes(x, bound + 2)
    points = [(p, count_subreps(x.reduce(GF(p)), e)) for p in primes]
    return interpolate_and_eval_at_one(points, bound)


def _is_01(x):
    return all(v in (0, 1) for m in x.maps for row in m for v in row)


def dim_vectors_below(dims):
    return list(product(*(range(d + 1) for d in dims)))


def chi_vector(x):
    """Map e -> chi(Gr_e(x)) over all e with a nonzero value."""
    out = {}
    for e in dim_vectors_below(x.dims):
        c = grassmannian_euler(x, e)
        if c:
            out[e] = c
    return out


def convolve_chi(a, b):
    """chi vector of a direct sum from those of the summands."""
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(u + v for u, v in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


# ------------------------------------------------- Dynkin indecomposables


def positive_roots(arrows, n, limit=200):
    """Positive roots of the Tits form, grown from the simple roots."""
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                u = tuple(r[j] + (j == i) for j in range(n))
                if u not in roots and tits_form(arrows, u) == 1:
                    roots.add(u)
                    nxt.append(u)
        if len(roots) > limit:
            raise HypothesisViolated("quiver is not of Dynkin type")
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


def _extend(x, y):
    """``(middle term, good)`` for a nonzero class in Ext(x, y) that is a brick, or None.

    Unit classes are tried first, then combinations with entries in {0, 1, -1}.
    ``good`` says the brick property survives reduction modulo 2 and 3, so the
    integer matrices can be used over small prime fields.
    """
    space = ext_space(x, y)
    d = space.dim
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    combos = units + [c for c in product((0, 1, -1), repeat=d) if any(c) and c not in units]
    fallback = None
    for coords in combos:
        e = middle_term(space.element(coords))
        if hom_dim(e, e) != 1:
            continue
        if all(hom_dim(r, r) == 1 for r in (e.reduce(GF(2)), e.reduce(GF(3)))):
            return e, True
        fallback = fallback or (e, False)
    return fallback


def _is_good_brick(rep):
    return all(hom_dim(x, x) == 1 for x in (rep, rep.reduce(GF(2)), rep.reduce(GF(3))))


def _small_brick(arrows, dims, max_entries=12):
    """Search 0/1 matrices for a brick that stays one modulo 2 and 3."""
    shapes = [(dims[t], dims[s]) for s, t in arrows]
    total = sum(a * b for a, b in shapes)
    if total > max_entries:
        return None
    for bits in product((0, 1), repeat=total):
        it = iter(bits)
        maps = [[[next(it) for _ in range(c)] for _ in range(r)] for r, c in shapes]
        rep = Rep(arrows, dims, maps)
        if _is_good_brick(rep):
            return rep
    return None


class IndecomposableCache:
    """The indecomposables of a Dynkin quiver, one per positive root."""

    def __init__(self, arrows, n):
        self.arrows, self.n = tuple(arrows), n
        if any(s == t for s, t in self.arrows):
            raise HypothesisViolated("quiver has a loop")
        self.roots = positive_roots(self.arrows, n)
        built = {}
        for r in self.roots:
            if sum(r) == 1:
                built[r] = Rep.simple(self.arrows, n, r.index(1))
                continue
            rep = fallback = None
            for i in range(n):
                if r[i] == 0:
                    continue
                smaller = tuple(r[j] - (j == i) for j in range(n))
                if smaller not in built:
                    continue
                s_i = Rep.simple(self.arrows, n, i)
                for found in (_extend(s_i, built[smaller]), _extend(built[smaller], s_i)):
                    if found is None:
                        continue
                    if found[1]:
                        rep = found[0]
                        break
                    fallback = fallback or found[0]
                if rep is not None:
                    break
            rep = rep or _small_brick(self.arrows, r) or fallback
            if rep is None:
                raise AssertionError(f"no indecomposable found for root {r}")
            built[r] = rep
        self.reps = [built[r] for r in self.roots]
        self.index_of = {r: k for k, r in enumerate(self.roots)}
        self._reduced = {QQ: self.reps}
        self._hom = None

    def __len__(self):
        return len(self.reps)

    def reps_over(self, field):
        if field not in self._reduced:
            self._reduced[field] = [r.reduce(field) for r in self.reps]
        return self._reduced[field]

    def rep(self, k, field=QQ):
        return self.reps_over(field)[k]

    @property
    def hom_matrix(self):
        """H[i][j] = dim Hom(I_i, I_j)."""
        if self._hom is None:
            self._hom = [[hom_dim(a, b) for b in self.reps] for a in self.reps]
        return self._hom

    def hom_vector(self, x):
        reps = self.reps_over(x.field)
        return [hom_dim(i, x) for i in reps]

    def decompose(self, x):
        """Multiplicities of the indecomposables in ``x`` (a dict index -> count)."""
        if x.arrows != self.arrows:
            raise ValueError("representation is on a different quiver")
        h = self.hom_vector(x)
        return self._solve_multiplicities(h)

    def _solve_multiplicities(self, h):
        H = self.hom_matrix
        sol = solve_linear(H, h, QQ, len(self.reps))
        if sol.particular is None or sol.nullspace:
            raise AssertionError("hom vectors do not determine a decomposition")
        out = {}
        for k, m in enumerate(sol.particular):
            if m.denominator != 1 or m < 0:
                raise AssertionError("decomposition is not a nonnegative integer vector")
            if m:
                out[k] = int(m)
        return out

    def is_projective(self, k):
        return all(ext_dim(self.reps[k], other) == 0 for other in self.reps)

    def is_injective(self, k):
        return all(ext_dim(other, self.reps[k]) == 0 for other in self.reps)

    @property
    def projectives(self):
        """Index of P_i for each vertex i."""
        if not hasattr(self, "_proj"):
            self._proj = [self._find(lambda k: self.is_projective(k) and self._top(k) == i) for i in range(self.n)]
        return self._proj

    @property
    def injectives(self):
        """Index of I_i for each vertex i."""
        if not hasattr(self, "_inj"):
            self._inj = [self._find(lambda k: self.is_injective(k) and self._socle(k) == i) for i in range(self.n)]
        return self._inj

    def _find(self, pred):
        hits = [k for k in range(len(self.reps)) if pred(k)]
        assert len(hits) == 1
        return hits[0]

    def _top(self, k):
        tops = [i for i in range(self.n) if hom_dim(self.reps[k], Rep.simple(self.arrows, self.n, i))]
        return tops[0] if len(tops) == 1 else None

    def _socle(self, k):
        socs = [i for i in range(self.n) if hom_dim(Rep.simple(self.arrows, self.n, i), self.reps[k])]
        return socs[0] if len(socs) == 1 else None

    def tau_index(self, k):
        """tau of a non-projective indecomposable, via dim Hom(I, tau M) = dim Ext(M, I)."""
        if self.is_projective(k):
            raise HypothesisViolated("tau of a projective module", index=k)
        h = [ext_dim(self.reps[k], other) for other in self.reps]
        dec = self._solve_multiplicities(h)
        assert len(dec) == 1 and list(dec.values()) == [1]
        return next(iter(dec))

    def tau_inverse_index(self, k):
        """tau^-1 of a non-injective indecomposable, via dim Hom(tau^-1 M, I) = dim Ext(I, M)."""
        if self.is_injective(k):
            raise HypothesisViolated("inverse tau of an injective module", index=k)
        target = [ext_dim(other, self.reps[k]) for other in self.reps]
        hits = [j for j in range(len(self.reps)) if [hom_dim(self.reps[j], o) for o in self.reps] == target]
        assert len(hits) == 1
        return hits[0]


_CACHES = {}


def indecomposables(arrows, n):
    """Cached :class:`IndecomposableCache` for the quiver."""
    key = (tuple(arrows), n)
    if key not in _CACHES:
        _CACHES[key] = IndecomposableCache(arrows, n)
    return _CACHES[key]


def decompose(x):
    return indecomposables(x.arrows, x.n).decompose(x)


def is_isomorphic(x, y):
    if x.dims != y.dims:
        return False
    cache = indecomposables(x.arrows, x.n)
    return cache.hom_vector(x) == cache.hom_vector(y)


def _euler_matrix(arrows, n):
    return [[int(i == j) - sum(1 for s, t in arrows if s == i and t == j) for j in range(n)] for i in range(n)]


def coxeter_dims(arrows, n, dims):
    """Dimension vector predicted for tau M, from <y, tau x> = -<x, y>."""
    E = _euler_matrix(arrows, n)
    rhs = [-sum(E[j][i] * dims[j] for j in range(n)) for i in range(n)]
    sol = solve_linear(E, rhs, QQ, n)
    return tuple(int(v) for v in sol.particular)


def ar_translate(x):
    """tau(x) for a module without projective summands."""
    cache = indecomposables(x.arrows, x.n)
    dec = cache.decompose(x)
    proj = [k for k in dec if cache.is_projective(k)]
    if proj:
        raise HypothesisViolated(
            "module has projective summands", summands=[cache.roots[k] for k in proj]
        )
    parts = []
    for k, m in sorted(dec.items()):
        t = cache.tau_index(k)
        rep = cache.rep(t, x.field)
        expected = coxeter_dims(x.arrows, x.n, cache.roots[k])
        assert rep.dims == expected, "AR translate disagrees with the Coxeter transformation"
        parts += [rep] * m
    return direct_sum(parts, x.arrows, x.n, x.field)


def ar_translate_inverse(x):
    cache = indecomposables(x.arrows, x.n)
    dec = cache.decompose(x)
    inj = [k for k in dec if cache.is_injective(k)]
    if inj:
        raise HypothesisViolated(
            "module has injective summands", summands=[cache.roots[k] for k in inj]
        )
    parts = []
    for k, m in sorted(dec.items()):
        parts += [cache.rep(cache.tau_inverse_index(k), x.field)] * m
    return direct_sum(parts, x.arrows, x.n, x.field)

"""The polygon model of the cluster category of type A_n.

Indecomposables are the diagonals ``(i, j)``, ``1 <= i < j <= N``, of the
N-gon with ``N = n + 3``.  Sigma rotates every endpoint by one step and
dim Hom(X, Sigma Y) is the number of crossings.  The cluster-tilting object is
a fan: ``T_i = (v, v + i + 1)`` for a fan vertex ``v``.

Index and F are transported from the module model through a dictionary that
sends each fan arc to a projective and commutes with Sigma.  The dictionary is
checked against crossing numbers on every pair of arcs when it is built.
"""

import re
from dataclasses import dataclass

from ..errors import MalformedInput
from ..exactalg.linalg import QQ
from ..quiver import ExchangeQuiver
from .base import CatObject, CategoryBase
from .module import ModuleCategory


@dataclass(frozen=True)
class ArcObject(CatObject):
    """A multiset of diagonals of an N-gon."""

    N: int = 0

    def __add__(self, other):
        if self.N != other.N:
            raise ValueError("objects live on different polygons")
        return ArcObject(self.labels + other.labels, self.N)

    @property
    def arcs(self):
        return self.labels


def normalize_arc(i, j, N):
    i, j = (i - 1) % N + 1, (j - 1) % N + 1
    return (min(i, j), max(i, j))


def is_diagonal(arc, N):
    i, j = arc
    return 1 <= i < j <= N and j - i not in (1, N - 1)


def crosses(a, b):
    """Do two diagonals cross in their interiors?"""
    i, j = a
    k, l = b
    if len({i, j, k, l}) < 4:
        return False
    return (i < k < j) != (i < l < j)


def ptolemy(l, m, N):
    """For crossing arcs: the middle terms of the triangles m -> Y -> l and l -> Y -> m.

    Write the four endpoints in cyclic order p1 < q1 < p2 < q2 with p's on ``l``
    and q's on ``m``.  The middle term of m -> Y -> l -> Sigma m pairs each
    endpoint of ``l`` with the endpoint of ``m`` preceding it.  Sides of the
    polygon are zero objects and are dropped.
    """
    p1, p2 = l
    q1, q2 = m
    if not (p1 < q1 < p2):
        q1, q2 = q2, q1
    # now cyclically p1 < q1 < p2 < q2
    first = [normalize_arc(q2, p1, N), normalize_arc(q1, p2, N)]
    second = [normalize_arc(p1, q1, N), normalize_arc(p2, q2, N)]
    keep = lambda arcs: tuple(a for a in arcs if is_diagonal(a, N))
    return keep(first), keep(second)


class ArcCategory(CategoryBase):
    """Cluster category of type A_n as diagonals of an (n+3)-gon."""

    object_type = ArcObject

    def __init__(self, n, fan_vertex=1):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.N = N = n + 3
        self.fan_vertex = fan_vertex
        self.t_labels = [normalize_arc(fan_vertex, fan_vertex + i + 1, N) for i in range(1, n + 1)]
        self._arcs = [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1) if is_diagonal((i, j), N)]
        self._build_dictionary()
        self.rep_arrows = self.module.rep_arrows

    # objects

    def make(self, labels):
        labels = tuple(labels)
        for a in labels:
            if not is_diagonal(a, self.N):
                raise ValueError(f"{a} is not a diagonal of the {self.N}-gon")
        return ArcObject(labels, self.N)

    def indecomposable_labels(self):
        return list(self._arcs)

    def suspend_label(self, arc):
        return normalize_arc(arc[0] + 1, arc[1] + 1, self.N)

    def desuspend_label(self, arc):
        return normalize_arc(arc[0] - 1, arc[1] - 1, self.N)

    def components(self, x, y):
        return [(0, 1)] if crosses(x, y) else []

    # the dictionary to the module model

    def _build_dictionary(self):
        """Match fan arcs with projectives and extend along Sigma.

        The fan's endomorphism quiver is linear; both orientations are tried
        and the first one that reproduces all crossing numbers (for
        Hom(X, Sigma Y)) and all rotated crossing numbers (for Hom(X, Y)) wins.
        """
        n = self.n
        failures = []
        for quiver in (ExchangeQuiver.linear_a(n), _reverse(ExchangeQuiver.linear_a(n))):
            module = ModuleCategory(quiver)
            to_mod = {}
            ok = True
            for i, t in enumerate(self.t_labels):
                arc, lab = t, module.t_labels[i]
                for _ in range(self.N):
                    if to_mod.setdefault(arc, lab) != lab:
                        ok = False
                    arc, lab = self.suspend_label(arc), module.suspend_label(lab)
            if not ok or len(to_mod) != len(self._arcs) or len(set(to_mod.values())) != len(self._arcs):
                failures.append("not a bijection commuting with Sigma")
                continue
            if self._dictionary_agrees(module, to_mod):
                self.module = module
                self.to_module = to_mod
                self.from_module = {v: k for k, v in to_mod.items()}
                return
            failures.append("hom dimensions disagree")
        raise AssertionError(f"no dictionary to the module model: {failures}")

    def _dictionary_agrees(self, module, to_mod):
        for x in self._arcs:
            for y in self._arcs:
                mx, my = to_mod[x], to_mod[y]
                if sum(d for _, d in module.components(mx, my)) != int(crosses(x, y)):
                    return False
                if module.plain_hom_dim(mx, my) != int(crosses(x, self.desuspend_label(y))):
                    return False
        return True

    def to_module_object(self, x):
        return self.module.make(self.to_module[a] for a in x.labels)

    def from_module_object(self, y):
        return self.make(self.from_module[lab] for lab in y.labels)

    # index and F through the dictionary

    def index_label(self, arc):
        return self.module.index_label(self.to_module[arc])

    def f_rep_label(self, arc):
        return self.module.f_rep_label(self.to_module[arc])

    def crossing_vector(self, x):
        """Crossings of x with T_1, ..., T_n; equals dim F x."""
        return tuple(sum(crosses(t, a) for a in x.labels) for t in self.t_labels)

    # cones

    def cone(self, L, M, eps, field=QQ):
        """Y' in the triangle M -> Y' -> L -> Sigma M (eps).

        A morphism supported on one crossing is resolved by the Ptolemy rule;
        anything else is carried to the module model, whose basis vector on
        each crossing pair is identified with the coordinate here.
        """
        space = self.hom_space(L, M)
        eps = [field(c) for c in eps]
        if len(eps) != space.dim:
            raise ValueError("morphism has the wrong number of coordinates")
        nz = [k for k, c in enumerate(eps) if c != 0]
        if not nz:
            return L + M
        if len(nz) == 1:
            a, b, _, _ = space.tags[nz[0]]
            rest = [x for i, x in enumerate(L.labels) if i != a] + [y for i, y in enumerate(M.labels) if i != b]
            middle, _ = ptolemy(L.labels[a], M.labels[b], self.N)
            return self.make(rest + list(middle))
        return self._cone_via_modules(L, M, space, eps, field)

    def _cone_via_modules(self, L, M, space, eps, field):
        mod = self.module
        LB, MB = self.to_module_object(L), self.to_module_object(M)
        pos_l = _positions([self.to_module[a] for a in L.labels])
        pos_m = _positions([self.to_module[a] for a in M.labels])
        bspace = mod.hom_space(LB, MB)
        beps = [field(0)] * bspace.dim
        for k, c in enumerate(eps):
            if c == 0:
                continue
            a, b, _, _ = space.tags[k]
            coords = bspace.pair_coords(pos_l[a], pos_m[b])
            assert len(coords) == 1
            beps[coords[0]] = c
        return self.from_module_object(mod.cone(LB, MB, beps, field))

    # text form

    def format_object(self, x):
        arcs = " ".join(f"({i},{j})" for i, j in x.labels)
        return f"polygon {self.N}; arcs {arcs}".rstrip() + "\n"

    def parse_object(self, text):
        return parse_arc_object(text, self)


def parse_arc_object(text, cat=None):
    m = re.fullmatch(r"\s*polygon\s+(\d+)\s*;\s*arcs\s*(.*?)\s*", text, re.S)
    if not m:
        raise MalformedInput("expected 'polygon N; arcs (i,j) ...'")
    N = int(m.group(1))
    body = m.group(2)
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", body)
    if re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)", "", body).strip():
        raise MalformedInput(f"cannot parse arcs {body!r}")
    arcs = []
    for i, j in pairs:
        i, j = int(i), int(j)
        if not (1 <= i <= N and 1 <= j <= N):
            raise MalformedInput(f"arc ({i},{j}) has an endpoint outside the {N}-gon")
        arc = (min(i, j), max(i, j))
        if not is_diagonal(arc, N):
            raise MalformedInput(f"({i},{j}) is a side of the polygon, not a diagonal")
        arcs.append(arc)
    if cat is not None and cat.N != N:
        raise MalformedInput(f"object lives on a {N}-gon, the category on a {cat.N}-gon")
    return ArcObject(tuple(arcs), N)


def _positions(labels):
    """Position of each entry after sorting (stable for repeated labels)."""
    order = sorted(range(len(labels)), key=lambda i: (labels[i], i))
    pos = [0] * len(labels)
    for p, i in enumerate(order):
        pos[i] = p
    return pos


def _reverse(q):
    return ExchangeQuiver(tuple(tuple(-v for v in row) for row in q.B))

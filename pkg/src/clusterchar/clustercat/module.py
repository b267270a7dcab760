"""The cluster category of a Dynkin quiver, modelled on kQ-modules.

Indecomposable objects are the indecomposable modules ``("m", k)`` (``k`` an
index into the positive roots) and the shifted projectives ``("s", i)``.  The
cluster-tilting object is ``T = kQ``, so ``T_i = P_i``.

Morphisms are computed in the derived category: with ``F = tau^-1 [1]``,

    Hom_C(X, Y) = sum_j Hom_D(X, F^j Y),

and every term is a Hom or an Ext^1 between modules.  An object of the derived
category is handled as a list of stalks ``(k, d)``, meaning module ``k``
placed in shift ``d``.
"""

import re

from ..errors import MalformedInput, UnsupportedCone
from ..exactalg.linalg import QQ
from ..repmod import (
    Rep,
    direct_sum,
    ext_space,
    hom_space as rep_hom_space,
    indecomposables,
    quiver_arrows,
    block_cocycle,
    block_morphism,
    cokernel,
    kernel,
    middle_term,
    pullback,
    pushforward,
    ExtClass,
    ExtSpace,
    hom_dim,
    ext_dim,
)
from ..exactalg.linalg import solve_linear
from .base import CatObject, CategoryBase

_J_RANGE = range(-3, 4)


class ModObject(CatObject):
    """Object of the module model: labels ``("m", k)`` and ``("s", i)``."""

    def module_labels(self):
        return [lab[1] for lab in self.labels if lab[0] == "m"]

    def shifted(self):
        return [lab[1] for lab in self.labels if lab[0] == "s"]


class ModuleCategory(CategoryBase):
    """Cluster category of an acyclic Dynkin quiver with T = kQ."""

    object_type = ModObject

    def __init__(self, quiver):
        if not quiver.is_acyclic():
            raise ValueError("the module model needs an acyclic quiver")
        self.quiver = quiver
        self.n = quiver.n
        self.rep_arrows = quiver_arrows(quiver)
        self.cache = indecomposables(self.rep_arrows, self.n)
        c = self.cache
        self.nind = len(c)
        self.proj = c.projectives
        self.inj = c.injectives
        self._proj_vertex = {k: i for i, k in enumerate(self.proj)}
        self._inj_vertex = {k: i for i, k in enumerate(self.inj)}
        self.tau = [None if k in self._proj_vertex else c.tau_index(k) for k in range(self.nind)]
        self.tau_inv = [None if k in self._inj_vertex else c.tau_inverse_index(k) for k in range(self.nind)]
        self._hom = c.hom_matrix
        self._ext = [[ext_dim(a, b) for b in c.reps] for a in c.reps]
        self._bases = {}
        self._index_cache = {}
        self.t_labels = [("m", self.proj[i]) for i in range(self.n)]

    # labels and stalks

    def indecomposable_labels(self):
        return [("m", k) for k in range(self.nind)] + [("s", i) for i in range(self.n)]

    def stalk(self, lab):
        kind, k = lab
        return (k, 0) if kind == "m" else (self.proj[k], 1)

    def F(self, st, times=1):
        k, d = st
        for _ in range(abs(times)):
            if times > 0:
                k, d = (self.proj[self._inj_vertex[k]], d + 2) if k in self._inj_vertex else (self.tau_inv[k], d + 1)
            else:
                k, d = (self.inj[self._proj_vertex[k]], d - 2) if k in self._proj_vertex else (self.tau[k], d - 1)
        return (k, d)

    def project(self, st):
        """The label of the fundamental domain isomorphic in C to a stalk."""
        k, d = st
        while True:
            if d == 0:
                return ("m", k)
            if d == 1 and k in self._proj_vertex:
                return ("s", self._proj_vertex[k])
            k, d = self.F((k, d), -1 if d > 0 else 1)

    def suspend_label(self, lab):
        k, d = self.stalk(lab)
        return self.project((k, d + 1))

    def d_hom_dim(self, s, t):
        """dim Hom_D between stalks."""
        delta = t[1] - s[1]
        if delta == 0:
            return self._hom[s[0]][t[0]]
        if delta == 1:
            return self._ext[s[0]][t[0]]
        return 0

    def d_hom_basis(self, s, t, field):
        """Basis of Hom_D(s, t) as module maps (delta 0) or cocycles (delta 1)."""
        key = (s[0], t[0], t[1] - s[1], field)
        if key not in self._bases:
            x, y = self.cache.rep(s[0], field), self.cache.rep(t[0], field)
            delta = t[1] - s[1]
            if delta == 0:
                self._bases[key] = ("hom", rep_hom_space(x, y))
            elif delta == 1:
                space = ext_space(x, y)
                self._bases[key] = ("ext", [b.cocycle for b in space.basis])
            else:
                self._bases[key] = ("none", [])
        return self._bases[key]

    def components(self, x, y):
        """Components of Hom_C(x, Sigma y), tagged by the power j of F."""
        s = self.stalk(x)
        k, d = self.stalk(y)
        t = (k, d + 1)
        out = []
        for j in _J_RANGE:
            dim = self.d_hom_dim(s, self.F(t, j))
            if dim:
                out.append((j, dim))
        return out

    def plain_hom_dim(self, x, y):
        """dim Hom_C(x, y) for labels (no suspension)."""
        s, t = self.stalk(x), self.stalk(y)
        return sum(self.d_hom_dim(s, self.F(t, j)) for j in _J_RANGE)

    # index and F

    def index_label(self, lab):
        if lab not in self._index_cache:
            self._index_cache[lab] = self._index_label(lab)
        return self._index_cache[lab]

    def _index_label(self, lab):
        kind, k = lab
        if kind == "s":
            return tuple(-int(i == k) for i in range(self.n))
        rep = self.cache.reps[k]
        simples = [Rep.simple(self.rep_arrows, self.n, i) for i in range(self.n)]
        top = [hom_dim(rep, s) for s in simples]
        pdims = [self.cache.roots[self.proj[i]] for i in range(self.n)]
        p0 = [sum(top[i] * pdims[i][v] for i in range(self.n)) for v in range(self.n)]
        p1 = [a - b for a, b in zip(p0, rep.dims)]
        cols = [[pdims[i][v] for i in range(self.n)] for v in range(self.n)]
        sol = solve_linear(cols, p1, QQ, self.n)
        mult = [int(m) for m in sol.particular]
        assert all(m >= 0 for m in mult) and all(m == v for m, v in zip(sol.particular, mult))
        return tuple(t - m for t, m in zip(top, mult))

    def f_label(self, lab):
        """Index of the indecomposable module F(lab), or None when F(lab) = 0."""
        kind, k = lab
        if kind == "s":
            return self.inj[k]
        return self.tau[k]

    def f_rep_label(self, lab):
        k = self.f_label(lab)
        return None if k is None else self.cache.reps[k]

    # cones

    def cone(self, L, M, eps, field=QQ):
        """Y' in the triangle M -> Y' -> L -> Sigma M (eps) -> ... .

        The morphism is lifted to the derived category.  Three lifts are tried:
        shifts of both sides chosen once for the whole space, when the
        F-degrees of its summand pairs are consistent around every cycle; all
        summands of L unshifted, which works when every summand of Sigma M
        receives a single F-component of this morphism; otherwise each pair carries one
        one-dimensional component and the support graph is a forest, so the
        torus of summand rescalings makes every nonzero scalar equivalent.
        Anything else raises UnsupportedCone.
        """
        space = self.hom_space(L, M)
        eps = [field(c) for c in eps]
        if len(eps) != space.dim:
            raise ValueError("morphism has the wrong number of coordinates")
        if all(c == 0 for c in eps):
            return L + M
        lift = self._lift(space, eps, field)
        cone = self._derived_cone(*lift, field=field)
        return self.make(self._desuspend_label(lab) for lab in cone)

    def _desuspend_label(self, lab):
        k, d = self.stalk(lab)
        return self.project((k, d - 1))

    def _lift(self, space, eps, field):
        L, M = space.source, space.target
        # pair -> {j: [coords]}
        support = {}
        for k, c in enumerate(eps):
            if c != 0:
                a, b, j, _ = space.tags[k]
                support.setdefault((a, b), {}).setdefault(j, None)
        comps = {}
        for (a, b), js in support.items():
            for j in js:
                coords = [eps[k] for k in space.pair_coords(a, b) if space.tags[k][2] == j]
                comps[(a, b, j)] = coords
        targets_j = {}
        for (a, b), js in support.items():
            targets_j.setdefault(b, set()).update(js)
        src = [self.stalk(x) for x in L.labels]
        tgt = [(k, d + 1) for k, d in (self.stalk(y) for y in M.labels)]
        frame = self._space_potentials(space, len(src), len(tgt))
        if frame is not None:
            dshift, eshift = frame
            pairs = {(a, b): comps[(a, b, j)] for (a, b, j) in comps}
        elif all(len(js) == 1 for js in targets_j.values()):
            dshift = [0] * len(src)
            eshift = [next(iter(targets_j[b])) if b in targets_j else 0 for b in range(len(tgt))]
            pairs = {(a, b): comps[(a, b, j)] for (a, b, j) in comps}
        else:
            dshift, eshift = self._forest_potentials(support, comps, len(src), len(tgt))
            pairs = {(a, b): [field(1)] for (a, b) in support}
        sources = [self.F(s, d) for s, d in zip(src, dshift)]
        targets = [self.F(t, e) for t, e in zip(tgt, eshift)]
        return sources, targets, pairs

    def _space_potentials(self, space, na, nb):
        """Shifts d_a, e_b with e_b - d_a = j on every pair of the whole space, or None.

        When they exist, each component is read in Hom_D(F^d_a L_a, F^e_b Sigma M_b)
        and the coordinates keep their values; this frame is fixed by the space,
        not by the morphism, so all morphisms of one space are lifted alike.
        """
        js = {}
        for a, b, j, _ in space.tags:
            js.setdefault((a, b), set()).add(j)
        if any(len(v) != 1 for v in js.values()):
            return None
        adj = {}
        for (a, b), v in js.items():
            j = next(iter(v))
            adj.setdefault(("a", a), []).append((("b", b), j))
            adj.setdefault(("b", b), []).append((("a", a), -j))
        pot = {}
        for start in sorted(adj):
            if start in pot:
                continue
            pot[start] = 0
            stack = [start]
            while stack:
                node = stack.pop()
                for nxt, w in adj[node]:
                    if nxt not in pot:
                        pot[nxt] = pot[node] + w
                        stack.append(nxt)
                    elif pot[nxt] != pot[node] + w:
                        return None
        return [pot.get(("a", a), 0) for a in range(na)], [pot.get(("b", b), 0) for b in range(nb)]

    def _forest_potentials(self, support, comps, na, nb):
        for (a, b), js in support.items():
            if len(js) != 1 or len(comps[(a, b, next(iter(js)))]) != 1:
                raise UnsupportedCone("morphism mixes components on one summand pair", pair=(a, b))
        adj = {}
        for (a, b), js in support.items():
            j = next(iter(js))
            adj.setdefault(("a", a), []).append((("b", b), j))
            adj.setdefault(("b", b), []).append((("a", a), -j))
        pot = {}
        for start in sorted(adj):
            if start in pot:
                continue
            pot[start] = 0
            stack, parent = [start], {start: None}
            while stack:
                node = stack.pop()
                for nxt, w in adj[node]:
                    if nxt == parent[node]:
                        continue
                    if nxt in pot:
                        raise UnsupportedCone("support of the morphism contains a cycle")
                    pot[nxt] = pot[node] + w
                    parent[nxt] = node
                    stack.append(nxt)
        dshift = [pot.get(("a", a), 0) for a in range(na)]
        eshift = [pot.get(("b", b), 0) for b in range(nb)]
        return dshift, eshift

    def _derived_cone(self, sources, targets, pairs, field):
        """Cone of a morphism between sums of stalks, as a list of domain labels.

        In degree d the cone is an extension of Ker(f0 in degree d-1) by
        Coker(f0 in degree d); its class is the Ext part of the morphism,
        restricted to the kernel and pushed to the cokernel.
        """
        zero = Rep.zero(self.rep_arrows, self.n, field)
        degrees = sorted({s[1] for s in sources} | {t[1] for t in targets})
        if not degrees:
            return []
        lo, hi = degrees[0], degrees[-1] + 1
        rep = lambda k: self.cache.rep(k, field)
        src_at = {d: [i for i, s in enumerate(sources) if s[1] == d] for d in range(lo - 1, hi + 1)}
        tgt_at = {d: [i for i, t in enumerate(targets) if t[1] == d] for d in range(lo - 1, hi + 1)}

        def obj(idx, stalks):
            parts = [rep(stalks[i][0]) for i in idx]
            return direct_sum(parts, self.rep_arrows, self.n, field) if parts else zero

        def blocks(d_src, d_tgt, kind):
            rows = []
            for b in tgt_at[d_tgt]:
                row = []
                for a in src_at[d_src]:
                    vec = pairs.get((a, b))
                    if vec is None:
                        row.append(None)
                        continue
                    got, basis = self.d_hom_basis(sources[a], targets[b], field)
                    if got != kind:
                        raise AssertionError("morphism component has the wrong degree")
                    row.append(_combine(basis, vec, field))
                rows.append(row)
            return rows

        for (a, b) in pairs:
            delta = targets[b][1] - sources[a][1]
            if delta not in (0, 1):
                raise AssertionError("lifted component lies outside Hom and Ext")

        out = []
        for d in range(lo, hi + 1):
            a_prev, b_prev = obj(src_at[d - 1], sources), obj(tgt_at[d - 1], targets)
            a_cur, b_cur = obj(src_at[d], sources), obj(tgt_at[d], targets)
            f_prev = _assemble(blocks(d - 1, d - 1, "hom"), src_at[d - 1], tgt_at[d - 1], sources, targets, rep, a_prev, b_prev, block_morphism)
            f_cur = _assemble(blocks(d, d, "hom"), src_at[d], tgt_at[d], sources, targets, rep, a_cur, b_cur, block_morphism)
            ext = _assemble(blocks(d - 1, d, "ext"), src_at[d - 1], tgt_at[d], sources, targets, rep, a_prev, b_cur, block_cocycle)
            ker, incl = kernel(f_prev, a_prev, b_prev)
            cok, proj = cokernel(f_cur, a_cur, b_cur)
            if ker.is_zero() and cok.is_zero():
                continue
            cls = pushforward(pullback(ext, incl, self.rep_arrows, field), proj, self.rep_arrows, field)
            mid = middle_term(ExtClass(ker, cok, cls))
            for k, m in self.cache.decompose(mid).items():
                out += [self.project((k, d))] * m
        return out

    # text form

    def format_object(self, x):
        from ..repmod import direct_sum as dsum

        parts = [self.cache.reps[k] for k in x.module_labels()]
        rep = dsum(parts, self.rep_arrows, self.n, QQ)
        text = rep.format()
        text += "".join(f"shift {i + 1}\n" for i in x.shifted())
        return text

    def parse_object(self, text):
        shifts, rest = [], []
        for ln in text.splitlines():
            m = re.fullmatch(r"\s*shift\s+(\d+)\s*", ln)
            if m:
                i = int(m.group(1)) - 1
                if not 0 <= i < self.n:
                    raise MalformedInput(f"shift index {i + 1} out of range")
                shifts.append(i)
            else:
                rest.append(ln)
        rep = Rep.parse("\n".join(rest), QQ, self.rep_arrows)
        if rep.arrows != self.rep_arrows:
            rep = _reorder(rep, self.rep_arrows)
        if len(rep.dims) != self.n:
            raise MalformedInput("dimension vector has the wrong length")
        labels = []
        for k, m in self.cache.decompose(rep).items():
            labels += [("m", k)] * m
        return ModObject(tuple(labels) + tuple(("s", i) for i in shifts))

    def from_rep(self, rep, shifts=()):
        labels = []
        for k, m in self.cache.decompose(rep).items():
            labels += [("m", k)] * m
        return ModObject(tuple(labels) + tuple(("s", i) for i in shifts))


def _reorder(rep, arrows):
    pool = list(zip(rep.arrows, rep.maps))
    maps = []
    for a in arrows:
        k = next(i for i, (b, _) in enumerate(pool) if b == a)
        maps.append(pool.pop(k)[1])
    return Rep(arrows, rep.dims, maps, rep.field)


def _combine(basis, vec, field):
    """sum_i vec[i] * basis[i] for tuples of matrices."""
    out = None
    for coeff, elem in zip(vec, basis):
        scaled = tuple([[field.norm(coeff * v) for v in row] for row in m] for m in elem)
        if out is None:
            out = scaled
        else:
            out = tuple([[field.norm(u + v) for u, v in zip(r1, r2)] for r1, r2 in zip(m1, m2)] for m1, m2 in zip(out, scaled))
    return out


def _assemble(rows, src_idx, tgt_idx, sources, targets, rep, whole_src, whole_tgt, builder):
    """Block morphism or cocycle between direct sums, with empty sums allowed."""
    srcs = [rep(sources[i][0]) for i in src_idx]
    tgts = [rep(targets[i][0]) for i in tgt_idx]
    if not srcs or not tgts:
        fld = whole_src.field
        if builder is block_morphism:
            return tuple([[fld(0)] * whole_src.dims[v] for _ in range(whole_tgt.dims[v])] for v in range(whole_src.n))
        return tuple(
            [[fld(0)] * whole_src.dims[s] for _ in range(whole_tgt.dims[t])] for s, t in whole_src.arrows
        )
    return builder(rows, srcs, tgts)

"""Objects, morphism spaces and the parts shared by both category models.

An object is a sorted tuple of indecomposable labels (with multiplicity).  A
morphism ``L -> Sigma M`` is a coordinate vector over :class:`MorphismSpace`,
whose basis is split by pairs of summands ``(a, b)`` and, inside a pair, by
components.  Everything downstream of the model (characters, strata, the
factor ideal) only talks to the small interface defined here.
"""

from dataclasses import dataclass
from functools import cached_property

from ..errors import UnsupportedCone
from ..exactalg.linalg import QQ, nullspace
from ..repmod import chi_vector, convolve_chi, hom_dim


@dataclass(frozen=True)
class CatObject:
    """Direct sum of indecomposables; ``labels`` is sorted."""

    labels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    def __add__(self, other):
        return type(self)(self.labels + other.labels)

    def is_zero(self):
        return not self.labels

    def is_indecomposable(self):
        return len(self.labels) == 1

    def __len__(self):
        return len(self.labels)


@dataclass(frozen=True)
class MorphismSpace:
    """Basis of Hom(L, Sigma M).  Tag ``(a, b, comp, i)``: summand pair, component, index."""

    source: CatObject
    target: CatObject
    tags: tuple

    @property
    def dim(self):
        return len(self.tags)

    def pair_coords(self, a, b):
        return [k for k, t in enumerate(self.tags) if t[0] == a and t[1] == b]

    def unit(self, k, field=QQ):
        return [field(int(i == k)) for i in range(self.dim)]

    def support_pairs(self, vec):
        return sorted({self.tags[k][:2] for k, c in enumerate(vec) if c != 0})


class CategoryBase:
    """Shared logic; a model supplies the per-label primitives.

    Required from subclasses: ``n``, ``indecomposable_labels()``,
    ``components(x, y)`` (list of ``(comp, dim)`` for Hom(x, Sigma y)),
    ``suspend_label``, ``index_label``, ``f_rep_label`` (a Rep over QQ or
    None for zero), ``cone`` and ``object_type``.
    """

    object_type = CatObject

    # objects

    def make(self, labels):
        return self.object_type(tuple(labels))

    def obj(self, *labels):
        return self.make(labels)

    def zero(self):
        return self.make(())

    def indecomposables(self):
        return [self.obj(x) for x in self.indecomposable_labels()]

    def suspend(self, x, times=1):
        labels = list(x.labels)
        for _ in range(times):
            labels = [self.suspend_label(lab) for lab in labels]
        return self.make(labels)

    def cluster_tilting(self):
        """The summands T_1, ..., T_n as objects."""
        return [self.obj(lab) for lab in self.t_labels]

    # morphism spaces

    def hom_space(self, L, M):
        tags = []
        for a, x in enumerate(L.labels):
            for b, y in enumerate(M.labels):
                for comp, d in self.components(x, y):
                    tags += [(a, b, comp, i) for i in range(d)]
        return MorphismSpace(L, M, tuple(tags))

    def hom_dim(self, L, M):
        """dim Hom(L, Sigma M)."""
        return sum(d for x in L.labels for y in M.labels for _, d in self.components(x, y))

    def hom_split(self, L, M):
        """Dimensions of Hom(L, Sigma M) by component."""
        out = {}
        for x in L.labels:
            for y in M.labels:
                for comp, d in self.components(x, y):
                    out[comp] = out.get(comp, 0) + d
        return out

    def beta_gram(self, L, M, field=QQ):
        """Gram matrix of the pairing Hom(L, Sigma M) x Hom(M, Sigma L).

        Within a summand pair the components are paired in reverse order and
        by identity blocks, which is the pairing up to a nonzero scalar per
        one-dimensional block.
        """
        left, right = self.hom_space(L, M), self.hom_space(M, L)
        gram = [[field(0)] * right.dim for _ in range(left.dim)]
        for a in range(len(L)):
            for b in range(len(M)):
                lc, rc = left.pair_coords(a, b), right.pair_coords(b, a)
                if len(lc) != len(rc):
                    raise AssertionError("2-CY symmetry fails on a summand pair")
                for i, k in enumerate(lc):
                    gram[k][rc[len(rc) - 1 - i]] = field(1)
        return gram

    def beta_pair(self, L, M, eps, eta, field=QQ):
        gram = self.beta_gram(L, M, field)
        if len(eps) != len(gram) or (gram and len(eta) != len(gram[0])):
            raise ValueError("vector lengths do not match the morphism spaces")
        return field.norm(sum(e * g * h for e, row in zip(eps, gram) for g, h in zip(row, eta)))

    def beta_kernel(self, L, M, V, field=QQ):
        """Basis of {eta in Hom(M, Sigma L) : beta(v, eta) = 0 for all v in V}."""
        gram = self.beta_gram(L, M, field)
        ncols = self.hom_dim(M, L)
        rows = [[field.norm(sum(v[k] * gram[k][j] for k in range(len(v)))) for j in range(ncols)] for v in V]
        return nullspace(rows, field, ncols)

    # index, F, fingerprints

    def index(self, x):
        out = [0] * self.n
        for lab in x.labels:
            for i, v in enumerate(self.index_label(lab)):
                out[i] += v
        return tuple(out)

    def f_dims(self, x):
        out = [0] * self.n
        for lab in x.labels:
            rep = self.f_rep_label(lab)
            if rep is not None:
                out = [u + v for u, v in zip(out, rep.dims)]
        return tuple(out)

    def f_rep(self, x):
        from ..repmod import direct_sum

        reps = [r for r in (self.f_rep_label(lab) for lab in x.labels) if r is not None]
        return direct_sum(reps, self.rep_arrows, self.n, QQ)

    def _label_chi(self, lab):
        cache = self.__dict__.setdefault("_chi_cache", {})
        if lab not in cache:
            rep = self.f_rep_label(lab)
            cache[lab] = chi_vector(rep) if rep is not None else {(0,) * self.n: 1}
        return cache[lab]

    def f_chi(self, x):
        """e -> chi(Gr_e(F x)), by convolving the summands' vectors."""
        out = {(0,) * self.n: 1}
        for lab in x.labels:
            out = convolve_chi(out, self._label_chi(lab))
        return out

    def fingerprint(self, x):
        return (self.index(x), tuple(sorted(self.f_chi(x).items())))

    @cached_property
    def iota(self):
        from ..cccharacter import compute_iota

        return compute_iota(self)

    # the factor ideal (T)(L, Sigma M)

    def factor_ideal_dim_pair(self, x, y):
        """dim of (T)(x, Sigma y) for indecomposables, via C/(T) = mod End(T)."""
        total = sum(d for _, d in self.components(x, y))
        fx = self.f_rep_label(x)
        fsy = self.f_rep_label(self.suspend_label(y))
        quotient = hom_dim(fx, fsy) if fx is not None and fsy is not None else 0
        if quotient > total:
            raise AssertionError("quotient by the ideal is larger than the space")
        return total - quotient

    def factor_ideal_space(self, L, M):
        """Basis (coordinate vectors) of the morphisms L -> Sigma M factoring through add T.

        The ideal is additive over summand pairs; a pair whose space has
        dimension one contributes all of it or nothing.
        """
        space = self.hom_space(L, M)
        basis = []
        for a, x in enumerate(L.labels):
            for b, y in enumerate(M.labels):
                coords = space.pair_coords(a, b)
                if not coords:
                    continue
                d = self.factor_ideal_dim_pair(x, y)
                if d == len(coords):
                    basis += [space.unit(k) for k in coords]
                elif d:
                    raise UnsupportedCone(
                        "factor ideal is a proper nonzero subspace of a summand pair",
                        pair=(x, y),
                    )
        return basis

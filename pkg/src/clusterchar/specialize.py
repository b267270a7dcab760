"""Specializing one initial cluster variable to 1, and Calabi-Yau reduction.

Reduction is done in the polygon model at an ear of the fan: T_n = (v, v+n+1)
or T_1 = (v, v+2) cuts a single triangle off the polygon.  Arcs that do not
cross the ear are arcs of the smaller polygon, and T_n itself goes to zero.

``specialize_cc`` runs the induction on dim Hom(T_n, Sigma X): a non-split
triangle X -> E -> T_n -> Sigma X and the refined identity with V = span(xi)
express sigma(CC(X)) through objects closer to the reduced category.
"""

from dataclasses import dataclass, field as dc_field

from .cccharacter import cc
from .clustercat.arcs import ArcCategory, crosses, normalize_arc
from .errors import HypothesisViolated
from .exactalg.laurent import LaurentPoly
from .multverify import complement_set_R
from .quiver import clusters, enumerate_cluster_variables, expand_in_cluster_monomials


@dataclass
class ReductionContext:
    parent: ArcCategory
    vertex: int  # 0-based index of the removed summand of T
    reduced: ArcCategory
    relabel: dict  # parent polygon vertex -> reduced polygon vertex

    @property
    def arc(self):
        return self.parent.t_labels[self.vertex]

    def in_domain(self, x):
        """Hom(T_n, Sigma X) = 0."""
        return not any(crosses(self.arc, a) for a in x.labels)

    def project(self, x):
        """pi: drop copies of T_n and move the remaining arcs to the cut polygon."""
        if not self.in_domain(x):
            raise HypothesisViolated("object crosses the removed arc", arcs=x.labels)
        out = []
        for a in x.labels:
            if a == self.arc:
                continue
            out.append(normalize_arc(self.relabel[a[0]], self.relabel[a[1]], self.reduced.N))
        return self.reduced.make(out)

    def sigma(self, p):
        return p.specialize(self.vertex, 1, drop=True)


def cy_reduce(cat, vertex):
    """The reduction of ``cat`` at the summand ``T_{vertex+1}`` (an ear of the fan)."""
    if not isinstance(cat, ArcCategory):
        raise HypothesisViolated("reduction is implemented for the polygon model only")
    n = cat.n
    if not 0 <= vertex < n:
        raise HypothesisViolated(f"vertex {vertex + 1} out of range 1..{n}")
    if n < 2:
        raise HypothesisViolated("cannot reduce A_1: the reduced category is zero")
    if vertex not in (0, n - 1):
        raise HypothesisViolated("only ear summands T_1 and T_n of the fan can be removed")
    N, v = cat.N, cat.fan_vertex
    # the tip of the ear is the neighbour of the fan vertex on the cut-off side
    tip = (v if vertex == 0 else v - 2) % N + 1
    kept = [v for v in range(1, N + 1) if v != tip]
    # rotate so the fan vertex stays vertex 1 of the cut polygon
    start = kept.index(cat.fan_vertex)
    order = kept[start:] + kept[:start]
    relabel = {v: k + 1 for k, v in enumerate(order)}
    reduced = ArcCategory(n - 1, fan_vertex=1)
    ctx = ReductionContext(cat, vertex, reduced, relabel)
    for k, t in enumerate(cat.t_labels):
        if k == vertex:
            continue
        image = ctx.project(cat.obj(t))
        expected = reduced.t_labels[k if k < vertex else k - 1]
        if image.labels != (expected,):
            raise AssertionError(f"T_{k + 1} does not map to the matching summand of T'")
    return ctx


# ------------------------------------------------------------ certificates


@dataclass
class SpecializationCertificate:
    """One node of the induction.

    A leaf has ``image`` set.  A step records the triangle X -> E -> T_n -> Sigma X
    with its middle term, and the strata of R with their Euler characteristics.
    """

    obj: object
    measure: int
    image: object = None
    middle: "SpecializationCertificate" = None
    strata: list = dc_field(default_factory=list)  # [(chi, certificate)]

    @property
    def is_leaf(self):
        return self.middle is None

    def replay(self, ctx):
        """sigma(CC(obj)) rebuilt from the reduced characters at the leaves."""
        if self.is_leaf:
            return cc(ctx.reduced, self.image)
        total = self.middle.replay(ctx)
        for chi, child in self.strata:
            total = total + chi * child.replay(ctx)
        return total

    def edges(self):
        if self.is_leaf:
            return
        yield self, self.middle
        for _, child in self.strata:
            yield self, child

    def walk(self):
        yield self
        if not self.is_leaf:
            yield from self.middle.walk()
            for _, child in self.strata:
                yield from child.walk()

    def render(self, cat, ctx, indent=0):
        pad = "  " * indent
        arcs = cat.format_object(self.obj).strip()
        if self.is_leaf:
            lines = [f"{pad}leaf d=0 {arcs} -> {ctx.reduced.format_object(self.image).strip()}"]
        else:
            coeffs = " ".join(str(chi) for chi, _ in self.strata)
            lines = [f"{pad}step d={self.measure} {arcs} | E then R strata with chi: {coeffs or '-'}"]
            lines += self.middle.render(cat, ctx, indent + 1)
            for _, child in self.strata:
                lines += child.render(cat, ctx, indent + 1)
        return lines


def _measure(ctx, x):
    return ctx.parent.hom_dim(ctx.parent.obj(ctx.arc), x)


def _certify(ctx, x, depth, max_depth):
    cat = ctx.parent
    d = _measure(ctx, x)
    if d == 0:
        return SpecializationCertificate(x, 0, image=ctx.project(x))
    if depth > max_depth:
        raise AssertionError("specialization recursion does not terminate")
    t = cat.obj(ctx.arc)
    space = cat.hom_space(t, x)
    xi = space.unit(0)
    middle = cat.cone(t, x, xi)  # X -> E -> T_n -> Sigma X
    _, strata = complement_set_R(cat, t, x, [xi])  # T_n -> Y -> X -> Sigma T_n
    node = SpecializationCertificate(x, d, middle=_certify(ctx, middle, depth + 1, max_depth))
    for s in strata:
        node.strata.append((s.chi, _certify(ctx, s.representative, depth + 1, max_depth)))
    for parent, child in node.edges():
        if child.measure >= parent.measure:
            raise AssertionError("induction measure did not decrease")
    return node


def specialize_cc(ctx, x, max_depth=64):
    """(sigma(CC_T(x)), certificate).  The certificate's replay is checked."""
    direct = ctx.sigma(cc(ctx.parent, x))
    cert = _certify(ctx, x, 0, max_depth)
    replayed = cert.replay(ctx)
    if replayed != direct:
        raise AssertionError(f"certificate replays to {replayed}, direct specialization is {direct}")
    return direct, cert


# --------------------------------------------------------- algebra closure


@dataclass
class ClosureReport:
    vertex: int
    expansions: dict  # specialized variable -> expansion (or None)
    missing: list  # reduced cluster variables not of the form sigma(v)
    reduced_variables: set

    @property
    def passed(self):
        return all(e is not None for e in self.expansions.values()) and not self.missing

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"


def _expand(p, variables, cluster_list, bound):
    # cluster monomials are a basis, so the first degree that works gives the answer
    for d in range(bound + 1):
        found = expand_in_cluster_monomials(p, variables, d, clusters=cluster_list)
        if found is not None:
            return found
    return None


def check_specialization_closure(quiver, vertex, degree_bound=None):
    """sigma(A_Q) = A_Q' on generators: every sigma(v) expands over cluster monomials of Q'.

    ``vertex`` is 0-based.  Surjectivity is checked by finding every cluster
    variable of Q' among the specialized variables.
    """
    if quiver.n < 2:
        raise HypothesisViolated("need at least two vertices")
    if not 0 <= vertex < quiver.n:
        raise HypothesisViolated(f"vertex {vertex + 1} out of range")
    reduced_q = quiver.remove_vertex(vertex)
    reduced_vars = enumerate_cluster_variables(reduced_q)
    reduced_clusters = clusters(reduced_q)
    expansions = {}
    images = set()
    for v in sorted(enumerate_cluster_variables(quiver), key=LaurentPoly.format):
        s = v.specialize(vertex, 1, drop=True)
        images.add(s)
        expansions[v] = _expand(s, reduced_vars, reduced_clusters, degree_bound or 2 * s.nvars)
    missing = sorted((w for w in reduced_vars if w not in images), key=LaurentPoly.format)
    return ClosureReport(vertex, expansions, missing, reduced_vars)


"""Strata of projectivized morphism spaces and the refined multiplication identity.

Two ways to get the Euler characteristic of a stratum are provided.

``combinatorial``: when V is spanned by coordinate vectors whose summand pairs
are distinct, the torus of summand rescalings acts on P(V) with the coordinate
points as its only fixed points, and each stratum is torus-stable.  The
Euler characteristic of a stratum is then the number of coordinate points in
it.

``fq``: count the points of every stratum over several prime fields and
evaluate the interpolated counting polynomial at q = 1.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import lcm

from .cccharacter import cc
from .errors import HypothesisViolated
from .exactalg.interpolate import SMALL_PRIMES, interpolate_and_eval_at_one
from .exactalg.laurent import LaurentPoly
from .exactalg.linalg import GF, QQ, rank, row_space

DEFAULT_PRIMES = (2, 3, 5, 7)


@dataclass
class Stratum:
    """One class of P(V) (or of R) with the cone's fingerprint."""

    fingerprint: tuple
    representative: object
    chi: int

    def describe(self, cat=None):
        rep = self.representative
        text = cat.format_object(rep).strip() if cat is not None and hasattr(cat, "format_object") else repr(rep)
        return f"chi={self.chi} index={self.fingerprint[0]} cone={text}"


@dataclass
class VerificationReport:
    name: str
    lhs: LaurentPoly
    rhs: LaurentPoly
    strata_v: list
    strata_r: list
    extra: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return self.lhs == self.rhs and all(self.extra.get("checks", {}).values())

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def dump(self, cat=None):
        lines = [f"{self.name}: {self.verdict}", f"  lhs = {self.lhs}", f"  rhs = {self.rhs}"]
        for title, strata in (("P(V)", self.strata_v), ("R", self.strata_r)):
            lines.append(f"  strata of {title}:")
            lines += [f"    {s.describe(cat)}" for s in strata]
        for k, v in self.extra.get("checks", {}).items():
            lines.append(f"  check {k}: {'ok' if v else 'FAILED'}")
        return "\n".join(lines)


# ------------------------------------------------------------------ subspaces


def _canonical(V, ncols, field=QQ):
    return row_space([[field(x) for x in v] for v in V], field, ncols)


def coordinate_support(V, ncols):
    """Coordinates spanning V if V is a coordinate subspace, else None."""
    rows = _canonical(V, ncols)
    support = []
    for row in rows:
        nz = [k for k, x in enumerate(row) if x != 0]
        if len(nz) != 1:
            return None
        support.append(nz[0])
    return support


def _torus_ok(space, support):
    pairs = [space.tags[k][:2] for k in support]
    return len(set(pairs)) == len(pairs)


def projective_points(V, ncols, p):
    """Points of P(V) over GF(p), as coordinate vectors in the ambient space."""
    fld = GF(p)
    basis = [[fld(x) for x in v] for v in V]
    if rank(basis, fld, ncols) != len(basis):
        raise HypothesisViolated(f"subspace basis degenerates modulo {p}")
    d = len(basis)
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            coeffs = [0] * lead + [1] + list(tail)
            yield [fld.norm(sum(c * b[k] for c, b in zip(coeffs, basis))) for k in range(ncols)]


# -------------------------------------------------------------------- strata


def _merge(entries):
    """entries: iterable of (fingerprint, representative, chi) -> sorted strata."""
    table = {}
    for fp, rep, chi in entries:
        if fp in table:
            table[fp].chi += chi
        else:
            table[fp] = Stratum(fp, rep, chi)
    return [table[fp] for fp in sorted(table, key=repr)]


def _choose_method(space, V, method, opposite=None):
    """``combinatorial`` when the torus argument applies, else ``fq``."""
    if method != "auto":
        return method
    support = coordinate_support(V, space.dim) if V else []
    ok = support is not None and _torus_ok(space, support)
    if opposite is not None:
        ok = ok and _torus_ok(opposite, range(opposite.dim))
    return "combinatorial" if ok else "fq"


def stratify(cat, L, M, V, method="auto", primes=None):
    """Strata of P(V) for V inside Hom(L, Sigma M), by the cone's fingerprint."""
    space = cat.hom_space(L, M)
    if not V or rank(_canonical(V, space.dim), QQ, space.dim) == 0:
        raise HypothesisViolated("V must be nonzero")
    method = _choose_method(space, V, method)
    if method == "combinatorial":
        support = coordinate_support(V, space.dim)
        if support is None or not _torus_ok(space, support):
            raise ValueError("combinatorial strata need a coordinate subspace on distinct summand pairs")
        entries = []
        for k in support:
            y = cat.cone(L, M, space.unit(k))
            entries.append((cat.fingerprint(y), y, 1))
        return _merge(entries)
    return _fq_strata(cat, L, M, _canonical(V, space.dim), space.dim, None, primes)


def _integral(rows):
    """Rows scaled to integer vectors."""
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _column_ranks(rows, field, ncols):
    # rank of the rows restricted to each set of coordinates: the matroid of V
    out = []
    for mask in range(1, 1 << ncols):
        cols = [k for k in range(ncols) if mask >> k & 1]
        out.append(rank([[field(row[k]) for k in cols] for row in rows], field, len(cols)))
    return out


def _good_primes(requested, need, subspaces, ncols):
    """Primes where every subspace reduces with the same matroid; topped up to ``need``.

    At a prime where, say, the line through (1, 2) becomes a coordinate line,
    the point counts describe a different subspace, so such primes are skipped.
    """
    over_q = [_column_ranks(S, QQ, ncols) if S else [] for S in subspaces]

    def good(p):
        fld = GF(p)
        return all(not S or _column_ranks(S, fld, ncols) == r for S, r in zip(subspaces, over_q))

    chosen = [p for p in requested if good(p)]
    for p in SMALL_PRIMES:
        if len(chosen) >= need:
            break
        if p not in chosen and p not in requested and good(p):
            chosen.append(p)
    if len(chosen) < need:
        raise ValueError("not enough primes of good reduction for this subspace")
    return tuple(chosen)


def torus_normal_form(space, eps, field):
    """A representative of eps up to rescaling the summands of L and M.

    Rescaling summand a of L by s and summand b of M by t multiplies the
    coordinates on the pair (a, b) by t / s and leaves the cone unchanged.
    Along a spanning forest of the support, the first nonzero coordinate of
    each pair is made 1.
    """
    first = {}
    for k, c in enumerate(eps):
        if c != 0:
            first.setdefault(space.tags[k][:2], c)
    adj = {}
    for (a, b), c in first.items():
        adj.setdefault(("a", a), []).append((("b", b), c))
        adj.setdefault(("b", b), []).append((("a", a), field.inv(c)))  # walking the edge backwards
    # scale[node]: factor applied to the summand, coordinate (a, b) becomes c * scale_b / scale_a
    scale = {}
    for start in sorted(adj):
        if start in scale:
            continue
        scale[start] = 1
        stack = [start]
        while stack:
            node = stack.pop()
            for nxt, c in adj[node]:
                if nxt not in scale:
                    # makes c * scale_b / scale_a = 1 along this edge
                    scale[nxt] = field.norm(scale[node] * field.inv(c))
                    stack.append(nxt)
    out = []
    for k, c in enumerate(eps):
        if c == 0:
            out.append(0)
            continue
        a, b = space.tags[k][:2]
        out.append(field.norm(c * scale[("b", b)] * field.inv(scale[("a", a)])))
    return tuple(out)


def _fq_strata(cat, L, M, V, ncols, exclude, primes):
    """Point counts per fingerprint over prime fields, interpolated at q = 1.

    ``exclude`` is a subspace whose points are removed (for R).  Primes where
    V or ``exclude`` lose rank are skipped.
    """
    V = _integral(V)
    exclude = _integral(exclude or [])
    d = len(V)
    bound = d - 1
    primes = _good_primes(tuple(primes or DEFAULT_PRIMES), bound + 2, [V, exclude], ncols)
    space = cat.hom_space(L, M)
    counts, reps = {}, {}
    for p in primes:
        fld = GF(p)
        ex = [[fld(x) for x in v] for v in (exclude or [])]
        ex_rank = rank(ex, fld, ncols)
        seen = {}
        for eps in projective_points(V, ncols, p):
            if ex and rank(ex + [eps], fld, ncols) == ex_rank:
                continue
            key = torus_normal_form(space, eps, fld)
            if key not in seen:
                y = cat.cone(L, M, eps, field=fld)
                seen[key] = (y, cat.fingerprint(y))
            y, fp = seen[key]
            reps.setdefault(fp, y)
            counts.setdefault(fp, {}).setdefault(p, 0)
            counts[fp][p] += 1
    entries = []
    for fp, by_prime in counts.items():
        points = [(p, by_prime.get(p, 0)) for p in primes]
        chi = interpolate_and_eval_at_one(points, bound)
        if chi:
            entries.append((fp, reps[fp], chi))
    return _merge(entries)


def complement_set_R(cat, L, M, V, method="auto", primes=None):
    """R = P Hom(M, Sigma L) minus P Ker beta(V, ?), with its strata.

    Returns ``(kernel_basis, strata)``.  With the combinatorial method the
    stratum values are chi(P Hom_Y) - chi(P Ker_Y).
    """
    space_l = cat.hom_space(L, M)
    space_m = cat.hom_space(M, L)
    V = _canonical(V, space_l.dim)
    if not V:
        raise HypothesisViolated("V must be nonzero")
    kern = cat.beta_kernel(L, M, V)
    W = [space_m.unit(k) for k in range(space_m.dim)]
    method = _choose_method(space_l, V, method, space_m)
    if method == "combinatorial":
        if not _torus_ok(space_m, range(space_m.dim)):
            raise ValueError("combinatorial strata need distinct summand pairs in Hom(M, Sigma L)")
        ksupport = coordinate_support(kern, space_m.dim) if kern else []
        if ksupport is None:
            raise ValueError("kernel is not a coordinate subspace")
        entries = []
        for k in range(space_m.dim):
            y = cat.cone(M, L, space_m.unit(k))
            entries.append((cat.fingerprint(y), y, 0 if k in ksupport else 1))
        strata = [s for s in _merge(entries) if s.chi]
        return kern, strata
    if not W:
        return kern, []
    return kern, _fq_strata(cat, M, L, W, space_m.dim, kern, primes)


def chi_projective(d):
    """chi(P^{d-1}) = d."""
    return d


def _assemble(cat, strata):
    total = LaurentPoly({}, cat.n)
    for s in strata:
        total = total + s.chi * cc(cat, s.representative)
    return total


def verify_refined(cat, L, M, V, method="auto", primes=None, name="refined"):
    """Check chi(PV) CC(L) CC(M) = sum chi(PV_Y) CC(Y) + sum chi(R_Y) CC(Y)."""
    space = cat.hom_space(L, M)
    if space.dim == 0:
        raise HypothesisViolated("Hom(L, Sigma M) is zero")
    Vc = _canonical(V, space.dim) if V else []
    if not Vc:
        raise HypothesisViolated("V must be nonzero")
    method = _choose_method(space, Vc, method, cat.hom_space(M, L))
    sv = stratify(cat, L, M, Vc, method, primes)
    kern, sr = complement_set_R(cat, L, M, Vc, method, primes)
    lhs = chi_projective(len(Vc)) * cc(cat, L) * cc(cat, M)
    rhs = _assemble(cat, sv) + _assemble(cat, sr)
    checks = {
        "strata of P(V) add up to dim V": sum(s.chi for s in sv) == len(Vc),
        "strata of R add up to chi(R)": sum(s.chi for s in sr) == cat.hom_dim(M, L) - len(kern),
    }
    return VerificationReport(name, lhs, rhs, sv, sr, {"method": method, "kernel": kern, "checks": checks})


def verify_palu(cat, L, M, method="auto"):
    """The refined identity with V the whole space."""
    space = cat.hom_space(L, M)
    V = [space.unit(k) for k in range(space.dim)]
    return verify_refined(cat, L, M, V, method, name="palu")


def verify_ar(cat, Z, method="auto"):
    """CC(Z) CC(Sigma Z) = CC(Y) + 1 for the AR triangle Sigma Z -> Y -> Z -> Sigma^2 Z."""
    if not Z.is_indecomposable():
        raise HypothesisViolated("Z must be indecomposable")
    sz = cat.suspend(Z)
    space = cat.hom_space(Z, sz)
    if space.dim != 1:
        raise HypothesisViolated("Hom(Z, Sigma^2 Z) is not one-dimensional", dim=space.dim)
    report = verify_refined(cat, Z, sz, [space.unit(0)], method, name="ar")
    y = cat.cone(Z, sz, space.unit(0))
    expected = cc(cat, Z) * cc(cat, sz)
    report.extra["checks"]["R is a single point with zero cone"] = (
        len(report.strata_r) == 1 and report.strata_r[0].chi == 1 and report.strata_r[0].representative.is_zero()
    )
    report.extra["checks"]["CC(Z)CC(SZ) = CC(Y) + 1"] = expected == cc(cat, y) + 1
    report.extra["middle_term"] = y
    return report


def verify_factor_ideal(cat, L, M, method="auto"):
    """The refined identity with V = (T)(L, Sigma M), plus Ker beta(V, ?) = (T)(M, Sigma L)."""
    V = cat.factor_ideal_space(L, M)
    if not V:
        raise HypothesisViolated("the factor ideal (T)(L, Sigma M) is zero")
    report = verify_refined(cat, L, M, V, method, name="ideal")
    kern = report.extra["kernel"]
    other = cat.factor_ideal_space(M, L)
    ncols = cat.hom_dim(M, L)
    same_dim = len(kern) == len(other)
    contained = all(rank(kern + [v], QQ, ncols) == len(kern) for v in other) if kern else not other
    report.extra["checks"]["dim Ker beta(V,?) = dim (T)(M,SL)"] = same_dim
    report.extra["checks"]["(T)(M,SL) inside Ker beta(V,?)"] = contained
    report.extra["checks"]["dim Ker = dim Hom - dim V"] = len(kern) == cat.hom_dim(L, M) - len(V)
    return report

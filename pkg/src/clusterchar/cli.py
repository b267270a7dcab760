"""Command line entry point.

Every check prints one ``RESULT <name> <PASS|FAIL>`` line.  Exit status: 0 when
everything passed, 1 when a check failed, 2 for unsupported input, 3 for
malformed input.  Diagnostics go to stderr.
"""

import argparse
import re
import sys

from .cccharacter import cc
from .clustercat import ArcCategory, ModuleCategory
from .errors import ClusterCharError, HypothesisViolated, MalformedInput, NotAFrieze, NotClosed, UnsupportedCone
from .exactalg.laurent import LaurentPoly
from .quiver import ExchangeQuiver, Seed, enumerate_cluster_variables, mutate

EXIT_OK, EXIT_FAIL, EXIT_UNSUPPORTED, EXIT_MALFORMED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


class _SubParser(_Parser):
    # lets object files follow options, as in ``verify ar --type A2 z.txt``
    _inner = False

    def parse_known_args(self, args=None, namespace=None):
        if self._inner:
            return super().parse_known_args(args, namespace)
        self._inner = True
        try:
            return self.parse_known_intermixed_args(args, namespace)
        finally:
            self._inner = False


# ------------------------------------------------------------------ inputs


def quiver_for_type(name):
    """``A3``, ``D4``: linear A_n, or D_n with arms 1 -> 2 and n-1, n both into n-2."""
    m = re.fullmatch(r"([AD])(\d+)", name.strip())
    if not m:
        raise MalformedInput(f"unknown type {name!r}; use A<n> or D<n>")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        if n < 1:
            raise MalformedInput("A_n needs n >= 1")
        return ExchangeQuiver.linear_a(n)
    if n < 4:
        raise MalformedInput("D_n needs n >= 4")
    arrows = [(i, i + 1, 1) for i in range(n - 3)] + [(n - 2, n - 3, 1), (n - 1, n - 3, 1)]
    return ExchangeQuiver.from_arrows(n, arrows)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc


def _load_quiver(args):
    if getattr(args, "quiver", None):
        return ExchangeQuiver.parse(_read(args.quiver))
    if getattr(args, "type", None):
        return quiver_for_type(args.type)
    raise MalformedInput("give --type or --quiver")


def _category(args):
    backend = getattr(args, "backend", "arc")
    if backend == "arc":
        if getattr(args, "quiver", None):
            raise MalformedInput("the arc backend takes --type A<n>")
        m = re.fullmatch(r"A(\d+)", (args.type or "").strip())
        if not m:
            raise UnsupportedCone("the arc backend only models type A")
        return ArcCategory(int(m.group(1)))
    return ModuleCategory(_load_quiver(args))


def _object(cat, path):
    return cat.parse_object(_read(path))


def _subspace(text, dim):
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            row = [int(x) for x in chunk.split(",")]
        except ValueError as exc:
            raise MalformedInput(f"bad subspace vector {chunk!r}") from exc
        if len(row) != dim:
            raise MalformedInput(f"subspace vector {chunk!r} needs {dim} coordinates")
        rows.append(row)
    return rows


def short_name(cat, x):
    if isinstance(cat, ArcCategory):
        return "+".join(f"({i},{j})" for i, j in x.labels) or "0"
    parts = []
    for kind, k in x.labels:
        if kind == "m":
            parts.append("M" + "".join(map(str, cat.cache.roots[k])))
        else:
            parts.append(f"SP{k + 1}")
    return "+".join(parts) or "0"


def _result(out, name, ok):
    print(f"RESULT {name} {'PASS' if ok else 'FAIL'}", file=out)
    return ok


# ---------------------------------------------------------------- commands


def cmd_mutate(args, out):
    q = _load_quiver(args)
    seed = Seed.initial(q)
    for k in args.vertex:
        if not 1 <= k <= q.n:
            raise MalformedInput(f"vertex {k} out of range 1..{q.n}")
        seed = mutate(seed, k - 1)
    out.write(seed.quiver.format())
    for i, v in enumerate(seed.cluster):
        print(f"x{i + 1}' = {v.format()}", file=out)
    return True


def cmd_enumerate(args, out):
    q = _load_quiver(args)
    variables = sorted(enumerate_cluster_variables(q, args.depth), key=LaurentPoly.format)
    print(f"{len(variables)} cluster variables", file=out)
    for v in variables:
        print(v.format(), file=out)
    return True


def cmd_cc(args, out):
    cat = _category(args)
    objects = [_object(cat, p) for p in args.objects] if args.objects else cat.indecomposables()
    for x in objects:
        print(f"{short_name(cat, x)}: {cc(cat, x).format()}", file=out)
    return True


def _pairs(cat):
    ind = cat.indecomposables()
    return [(a, b) for a in ind for b in ind if cat.hom_dim(a, b)]


def cmd_verify(args, out):
    from . import multverify as mv

    cat = _category(args)
    ok = True
    if args.check == "refined":
        if not (args.L and args.M and args.V):
            raise MalformedInput("verify refined needs --L, --M and --V")
        L, M = _object(cat, args.L), _object(cat, args.M)
        V = _subspace(args.V, cat.hom_dim(L, M))
        report = mv.verify_refined(cat, L, M, V, args.method, args.primes)
        _emit(cat, report, f"refined:{short_name(cat, L)}|{short_name(cat, M)}", args, out)
        return report.passed
    if args.check == "ar":
        objects = [_object(cat, p) for p in args.objects] if args.objects else cat.indecomposables()
        for z in objects:
            report = mv.verify_ar(cat, z, args.method)
            ok &= _emit(cat, report, f"ar:{short_name(cat, z)}", args, out)
        return ok
    if args.L and args.M:
        pairs = [(_object(cat, args.L), _object(cat, args.M))]
    else:
        pairs = _pairs(cat)
    for L, M in pairs:
        name = f"{args.check}:{short_name(cat, L)}|{short_name(cat, M)}"
        if args.check == "palu":
            report = mv.verify_palu(cat, L, M, args.method)
        else:
            try:
                report = mv.verify_factor_ideal(cat, L, M, args.method)
            except HypothesisViolated:
                if args.L:
                    raise
                continue  # zero ideal: not in scope when sweeping all pairs
        ok &= _emit(cat, report, name, args, out)
    return ok


def _emit(cat, report, name, args, out):
    if args.verbose or not report.passed:
        stream = out if report.passed else sys.stderr
        print(report.dump(cat if isinstance(cat, ArcCategory) else None), file=stream)
    return _result(out, name, report.passed)


def cmd_specialize(args, out):
    from .specialize import check_specialization_closure, cy_reduce, specialize_cc

    cat = _category(args)
    vertex = args.vertex - 1
    ctx = cy_reduce(cat, vertex)
    if args.all:
        objects = cat.indecomposables()
    elif args.objects:
        objects = [_object(cat, p) for p in args.objects]
    else:
        raise MalformedInput("give --all or object files")
    ok = True
    for x in objects:
        value, cert = specialize_cc(ctx, x)
        print(f"# sigma(CC({short_name(cat, x)})) = {value.format()}", file=out)
        for line in cert.render(cat, ctx):
            print(line, file=out)
        ok &= _result(out, f"specialize:{short_name(cat, x)}", True)
    if args.all:
        report = check_specialization_closure(cat.module.quiver, vertex)
        for v, exp in report.expansions.items():
            if exp is None:
                print(f"no expansion for sigma({v.format()})", file=sys.stderr)
        for w in report.missing:
            print(f"not attained: {w.format()}", file=sys.stderr)
        ok &= _result(out, f"closure:vertex{args.vertex}", report.passed)
    return ok


def cmd_frieze(args, out):
    from . import frieze as fz

    if args.action == "check":
        if not args.file:
            raise MalformedInput("frieze check needs a frieze file")
        q, values = fz.parse_frieze(_read(args.file))
        try:
            f = fz.make_frieze(q, values)
        except NotAFrieze as exc:
            print(f"not a frieze: {exc}", file=sys.stderr)
            return _result(out, "frieze:" + ",".join(map(str, values)), False)
        for p, v in sorted(f.values.items(), key=lambda kv: kv[0].format()):
            print(f"{p.format()} -> {v}", file=out)
        return _result(out, "frieze:" + ",".join(map(str, values)), True)
    q = _load_quiver(args)
    if args.action == "enumerate":
        friezes = fz.enumerate_friezes(q)
        print(f"{len(friezes)} friezes", file=out)
        for f in friezes:
            print(" ".join(map(str, f.initial)), file=out)
        others = fz.friezes_from_clusters(q)
        return _result(out, "frieze-enumerate:clusters-agree", [f.initial for f in friezes] == [f.initial for f in others])
    # lift every frieze of the reduced quiver
    if args.vertex is None:
        raise MalformedInput("frieze lift needs --vertex")
    vertex = args.vertex - 1
    if not 0 <= vertex < q.n or q.n < 2:
        raise MalformedInput("vertex out of range")
    reduced = q.remove_vertex(vertex)
    all_friezes = fz.friezes_from_clusters(q)
    ok = True
    for fp in fz.friezes_from_clusters(reduced):
        report = fz.lift_frieze(q, vertex, fp, all_friezes)
        print(" ".join(map(str, fp.initial)), "->", " ".join(map(str, report.frieze.initial)), file=out)
        ok &= _result(out, "lift:" + ",".join(map(str, fp.initial)), report.passed)
    return ok


# ------------------------------------------------------------------ parser


def build_parser():
    p = _Parser(prog="clusterchar", description="Exact cluster characters and identity checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_SubParser)

    def source(sp, backend=False):
        sp.add_argument("--type", help="built-in instance, e.g. A3 or D4")
        sp.add_argument("--quiver", help="quiver file: 'n' then lines 'i j m'")
        if backend:
            sp.add_argument("--backend", choices=("arc", "module"), default="arc")

    sp = sub.add_parser("mutate", help="mutate the initial seed along a vertex sequence")
    source(sp)
    sp.add_argument("vertex", type=int, nargs="+", help="1-based vertices, applied left to right")

    sp = sub.add_parser("enumerate", help="list all cluster variables")
    source(sp)
    sp.add_argument("--depth", type=int, default=64)

    sp = sub.add_parser("cc", help="cluster characters of objects (default: all indecomposables)")
    source(sp, backend=True)
    sp.add_argument("objects", nargs="*")

    sp = sub.add_parser("verify", help="check a multiplication identity")
    sp.add_argument("check", choices=("refined", "palu", "ar", "ideal"))
    source(sp, backend=True)
    sp.add_argument("--L")
    sp.add_argument("--M")
    sp.add_argument("--V", help="subspace basis, e.g. '1,0;0,1'")
    sp.add_argument("--method", choices=("auto", "combinatorial", "fq"), default="auto")
    sp.add_argument("--primes", type=lambda s: tuple(int(x) for x in s.split(",")), default=None)
    sp.add_argument("--verbose", action="store_true")
    sp.add_argument("objects", nargs="*")

    sp = sub.add_parser("specialize", help="specialize CC at an ear of the fan, with certificates")
    source(sp, backend=True)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("objects", nargs="*")

    sp = sub.add_parser("frieze", help="friezes: enumerate, lift, check")
    sp.add_argument("action", choices=("enumerate", "lift", "check"))
    source(sp)
    sp.add_argument("--vertex", type=int)
    sp.add_argument("file", nargs="?")
    return p


COMMANDS = {
    "mutate": cmd_mutate,
    "enumerate": cmd_enumerate,
    "cc": cmd_cc,
    "verify": cmd_verify,
    "specialize": cmd_specialize,
    "frieze": cmd_frieze,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        ok = COMMANDS[args.command](args, out)
    except MalformedInput as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (UnsupportedCone, HypothesisViolated, NotClosed) as exc:
        print(f"error: unsupported: [{exc.code}] {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ClusterCharError as exc:
        print(f"error: [{exc.code}] {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``qspieri kfun | verify | dims | expand | export``.

Exit status is 0 on success, 1 on a domain error (bad vertex, element not in
the requested span, failed verification), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import catalog, pieri, qsym, symfunc, verify
from .poset import LabelledReseau, ReseauError, double, read_reseau

DEFAULT_MAX_DEGREE = 8
OPERATORS = ("rank_selection", "path_count", "descent", "modified_descent", "quantum", "halved", "peak")
BASES = ("M", "F", "theta", "m", "s")


class DomainError(Exception):
    pass


def max_degree_guard() -> int:
    raw = os.environ.get("QSPIERI_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"QSPIERI_MAX_DEGREE must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError("QSPIERI_MAX_DEGREE must be positive")
    return value


class UsageError(Exception):
    pass


def _check_degree(d: int, what: str) -> None:
    guard = max_degree_guard()
    if d > guard:
        raise DomainError(f"{what} {d} exceeds the cost guard {guard} (set QSPIERI_MAX_DEGREE to raise it)")


def load_poset(source: str, target: str | None = None) -> LabelledReseau:
    if source.startswith("catalog:"):
        return catalog.from_name(source[len("catalog:"):], target=target)
    return read_reseau(source)


def _quantum_params(source: str, given: str | None) -> tuple[int, int]:
    if given:
        try:
            m, p = (int(t) for t in given.split(","))
        except ValueError:
            raise UsageError("--quantum-params takes M,P")
        return m, p
    if source.startswith("catalog:quantum:"):
        parts = source.split(":")
        return int(parts[2]), int(parts[3])
    raise UsageError("the quantum operator needs a catalog:quantum poset or --quantum-params M,P")


def _default_endpoint(g: LabelledReseau, which: str) -> str:
    cands = g.minimal_elements() if which == "min" else g.maximal_elements()
    if len(cands) != 1:
        flag = "--from" if which == "min" else "--to"
        raise DomainError(f"no unique {which}imal element; pass {flag}")
    return cands[0]


def format_in_basis(x: qsym.QSymElem, basis: str) -> str:
    if basis == "M":
        return str(x.to_M())
    if basis == "F":
        return str(x.to_F())
    if basis == "theta":
        exp = qsym.peak_expansion(x)
        if exp is None:
            raise DomainError("not in peak span")
        return qsym.render_theta(exp)
    sym = symfunc.try_symmetric(x)
    if sym is None:
        raise DomainError("not symmetric")
    if basis == "m":
        return str(sym)
    return str(symfunc.m_to_schur(sym))


def cmd_kfun(args) -> int:
    g = load_poset(args.poset, target=args.to)
    x = catalog.resolve_vertex(g, args.source) if args.source else _default_endpoint(g, "min")
    y = catalog.resolve_vertex(g, args.to) if args.to else _default_endpoint(g, "max")
    r = g.default_length(x, y, args.length)
    _check_degree(r, "path length")
    op = args.operator
    if op == "peak":
        k = pieri.peak_kfunction(g, x, y, r)
    else:
        if op == "quantum":
            m, p = _quantum_params(args.poset, args.quantum_params)
            fam = pieri.Quantum(g, m, p)
        elif op == "halved":
            fam = pieri.Halved(pieri.ModifiedDescent(double(g)), Fraction(1, 2))
        else:
            target = double(g) if args.double else g
            fam = pieri.make_family(target, op)
        k = pieri.kfunction(fam, x, y, r)
    print(format_in_basis(k, args.basis))
    return 0


def cmd_verify(args) -> int:
    d = args.max_degree
    if d is not None:
        if d < 1:
            raise UsageError("--max-degree must be positive")
        _check_degree(d, "degree")
    suite = args.suite
    if suite == "duality":
        rep = verify.duality_suite(d or 7, min(d or 6, 6))
    elif suite == "hopf":
        if args.poset:
            g = load_poset(args.poset)
            cls = type(pieri.make_family(g, args.operator or "rank_selection"))
            rep = verify.hopf_suite([(args.poset, g, cls)], d)
        else:
            rep = verify.hopf_suite(max_degree=d)
    elif suite == "peak":
        rep = verify.peak_suite(max_degree=d or 6)
    elif suite == "euler":
        if args.poset:
            rep = verify.check_eulerian_reseau(load_poset(args.poset), args.operator or "rank_selection", d)
        else:
            rep = verify.euler_suite(max_boolean=min(d or 4, 4))
    elif suite == "pp":
        rep = verify.pp_suite(max_elements=min(d or 5, 5))
    elif suite == "stanley":
        rep = verify.stanley_suite()
    elif suite == "quantum":
        rep = verify.quantum_suite(degree=d or 4)
    elif suite == "skew":
        rep = verify.skew_schur_suite(min(d or 5, 6))
    else:
        raise UsageError(f"unknown suite {suite!r}")
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_dims(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    _check_degree(n, "degree")
    compute, predict = verify.ALGEBRAS[args.algebra]
    got = [compute(k) for k in range(1, n + 1)]
    want = [predict(k) for k in range(1, n + 1)]
    print("computed:  " + ",".join(map(str, got)))
    print("predicted: " + ",".join(map(str, want)))
    if args.algebra == "xi":
        print("all theta_alpha (no first-part restriction): "
              + ",".join(str(verify.xi_dim_unrestricted(k)) for k in range(1, n + 1)))
    bad = [k for k, (a, b) in enumerate(zip(got, want), start=1) if a != b]
    for k in bad:
        print(f"MISMATCH at n={k}: computed {got[k - 1]}, predicted {want[k - 1]}")
    return 1 if bad else 0


def cmd_expand(args) -> int:
    x = qsym.parse(args.expression)
    print(format_in_basis(x, args.basis))
    return 0


def cmd_export(args) -> int:
    g = load_poset(args.poset, target=args.to)
    text = g.dumps()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qspieri", description="Pieri operators and quasi-symmetric functions")
    sub = ap.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kfun", help="compute K for an interval")
    k.add_argument("--poset", required=True, help="poset file or catalog:NAME[:params]")
    k.add_argument("--operator", required=True, choices=OPERATORS)
    k.add_argument("--from", dest="source", help="lower vertex (default: the unique minimal element)")
    k.add_argument("--to", help="upper vertex (default: the unique maximal element)")
    k.add_argument("--length", type=int, help="path length (default: rank difference)")
    k.add_argument("--basis", default="M", choices=BASES)
    k.add_argument("--double", action="store_true", help="double the reseau before building the operators")
    k.add_argument("--quantum-params", help="M,P for the quantum operator on a poset file")
    k.set_defaults(func=cmd_kfun)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   choices=("hopf", "duality", "peak", "euler", "pp", "stanley", "quantum", "skew"))
    v.add_argument("--max-degree", type=int)
    v.add_argument("--poset", help="poset for the hopf and euler suites")
    v.add_argument("--operator", choices=OPERATORS[:4], help="operator kind used with --poset")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dims", help="graded dimensions of the peak and shifted spans")
    d.add_argument("--algebra", required=True, choices=tuple(verify.ALGEBRAS))
    d.add_argument("--n", type=int, required=True)
    d.set_defaults(func=cmd_dims)

    e = sub.add_parser("expand", help="rewrite a quasi-symmetric expression in another basis")
    e.add_argument("expression")
    e.add_argument("--basis", default="M", choices=BASES)
    e.set_defaults(func=cmd_expand)

    x = sub.add_parser("export", help="write a catalog poset in the poset file format")
    x.add_argument("poset")
    x.add_argument("--to", help="upper shape for catalog:young")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qspieri: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ReseauError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"qspieri: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 computation error,
4 verification failure.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .characters import chi, kron, lr, reduced_kron
from .errors import ComputationError, InputError
from .groth_ring import RingData, cyclic_group, group_grading, load_ring, rep_from_chartable, validate, vect
from .groups import STANDARD, group_from_json, symmetric_group
from .limiting_ring import char_basis, char_basis_eval, hooks_expand, mp, multiply_x, x_to_t
from .limiting_ring.hooks import show_e_poly, show_hooks
from .partitions import parse_partition
from .young_cosets import enumerate_cosets, fully_ordered_rep


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _num(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _builtin_ring(name: str):
    if name.lower() == "vect":
        return vect()
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    s3 = symmetric_group(3)
    if name == "RepS3":
        return s3.ring()
    if name == "VecS3":
        return group_grading(s3.elements, [[s3.elements[x] for x in row] for row in s3.table])
    return None


def resolve_ring(spec: str) -> RingData:
    """A builtin name (Vect, Z<m>, RepS3, VecS3) or a JSON file."""
    ring = _builtin_ring(spec)
    if ring is not None:
        return ring
    ring = load_ring(_read(spec))
    problems = validate(ring)
    if problems:
        raise InputError(f"{spec} is not a valid ring: {problems[0]}")
    return ring


def resolve_group(spec: str):
    if spec in STANDARD:
        return STANDARD[spec]()
    return group_from_json(_read(spec))


def _x_json(ring, terms: dict) -> list:
    return [{"multipartition": k.names(ring), "coefficient": int(v)} for k, v in sorted(terms.items())]


def _show_x(ring, terms: dict) -> str:
    if not terms:
        return "0"
    return " + ".join(f"{_num(v)}*X{k.show(ring)}" for k, v in sorted(terms.items()))


def cmd_scalar(args):
    parts = [parse_partition(x) for x in args.partitions]
    fn = {"chi": chi, "lr": lr, "kron": kron, "rkron": reduced_kron}[args.cmd]
    need = 2 if args.cmd == "chi" else 3
    if len(parts) != need:
        raise UsageError(f"{args.cmd} takes {need} partitions")
    print(fn(*parts))


def cmd_cosets(args):
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    mats = enumerate_cosets(mu, nu)
    if args.json:
        out = {"count": len(mats)}
        if args.reps:
            out["cosets"] = [{"matrix": [list(r) for r in c], "rep": list(fully_ordered_rep(c, mu, nu))} for c in mats]
        print(json.dumps(out))
        return
    print(len(mats))
    if args.reps:
        for c in mats:
            print(json.dumps([list(r) for r in c]), " ".join(map(str, fully_ordered_rep(c, mu, nu))))


def cmd_ring(args):
    if args.action == "validate":
        ring = load_ring(_read(args.arg))
        problems = validate(ring)
        if problems:
            for p in problems:
                print(p, file=sys.stderr)
            raise InputError(f"{len(problems)} violation(s)")
        print("ok")
        return
    if args.action == "cyclic":
        try:
            ring = cyclic_group(int(args.arg))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    elif args.action == "vec-group":
        data = json.loads(_read(args.arg))
        ring = group_grading(data["elements"], data["table"])
    else:
        data = json.loads(_read(args.arg))
        ring = rep_from_chartable([(c["size"], c.get("name", "")) for c in data["classes"]], data["chars"], data.get("labels"))
    print(ring.to_json())


def _check_degree(args, *mps):
    if args.max_degree is not None and any(m.size() > args.max_degree for m in mps):
        raise InputError(f"degree exceeds --max-degree {args.max_degree}")


def cmd_xmul(args):
    ring = resolve_ring(args.ring)
    mu, nu = mp(ring, args.mu), mp(ring, args.nu)
    _check_degree(args, mu, nu)
    methods = ["t", "coefthm"] if args.method == "both" else [args.method]
    results = {m: multiply_x(ring, mu, nu, m) for m in methods}
    first = results[methods[0]]
    agree = all(r == first for r in results.values())
    if args.json:
        out = {"terms": _x_json(ring, first)}
        if args.method == "both":
            out["agree"] = agree
            if not agree:
                out["coefthm"] = _x_json(ring, results["coefthm"])
        print(json.dumps(out))
    else:
        for m in methods:
            print(f"{m}: {_show_x(ring, results[m])}")
    if not agree:
        raise ComputationError("methods disagree")


def cmd_x2t(args):
    ring = resolve_ring(args.ring)
    lam = mp(ring, args.mu)
    _check_degree(args, lam)
    g = x_to_t(ring, lam)
    if args.json:
        terms = [{"word": [[n, ring.labels[u]] for n, u in m], "coefficient": _num(c)} for m, c in sorted(g.terms.items())]
        print(json.dumps(terms))
    else:
        print(g.show())


def cmd_hooks(args):
    ring = resolve_ring(args.ring)
    lam = mp(ring, args.mu)
    _check_degree(args, lam)
    poly = hooks_expand(ring, x_to_t(ring, lam))
    if args.json:
        terms = [{"hooks": [[n, ring.labels[u]] for n, u in m], "coefficient": _num(c)} for m, c in sorted(poly.items())]
        print(json.dumps(terms))
    else:
        print(show_hooks(ring, poly))


def cmd_charbasis(args):
    lam = parse_partition(args.lam)
    poly = char_basis(lam)
    if args.eval is None:
        if args.json:
            print(json.dumps([{"e": list(k), "coefficient": _num(c)} for k, c in sorted(poly.items())]))
        else:
            print(show_e_poly(poly))
        return
    from .partitions import partitions_of

    n = args.eval
    values = {str(list(mu)): _num(char_basis_eval(poly, n, mu)) for mu in partitions_of(n)}
    print(json.dumps(values) if args.json else "\n".join(f"{k} {v}" for k, v in values.items()))


def cmd_oracle(args):
    from .wreath_oracle import DEFAULT_BUDGET, cached_context, indicator_checks, stability_scan, tensor_decomposition

    budget = args.budget or DEFAULT_BUDGET
    if args.action == "checks":
        report = indicator_checks()
        print(json.dumps({"ok": report["ok"]}))
        if not report["ok"]:
            raise ComputationError("indicator checks failed")
        return
    group = resolve_group(args.group)
    ring = group.ring()
    mu, nu = mp(ring, args.mu), mp(ring, args.nu)
    if args.action == "tensor":
        if args.n is None:
            raise UsageError("oracle tensor needs --n")
        ctx = cached_context(group, args.n, budget)
        unit = ring.unit
        a = mu if mu.size() == args.n else mu.pad(unit, args.n)
        b = nu if nu.size() == args.n else nu.pad(unit, args.n)
        dec = tensor_decomposition(ctx, a, b)
        print(json.dumps([{"multipartition": k.names(ring), "multiplicity": int(v)} for k, v in sorted(dec.items())]))
        return
    if args.n_from is None or args.n_to is None:
        raise UsageError("oracle scan needs --n-from and --n-to")
    scan = stability_scan(group, mu, nu, range(args.n_from, args.n_to + 1), budget)
    out = [
        {"multipartition": lam.names(ring), "values": vals, "stabilized": st, "value": v}
        for lam, (vals, st, v) in sorted(scan.items())
    ]
    print(json.dumps(out))


def cmd_verify(args):
    from .verify import SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        res = run_suite(name)
        print(res.line(), flush=True)
        failed |= not (res.ok and res.in_time)
    if failed:
        return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    ap = _Parser(prog="wreathring", description="Stable representation theory of wreath products.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    for name, help_ in [
        ("chi", "character value: chi LAM MU"),
        ("lr", "Littlewood-Richardson coefficient: lr LAM MU NU"),
        ("kron", "Kronecker coefficient: kron LAM MU NU"),
        ("rkron", "reduced Kronecker coefficient: rkron LAM MU NU"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("partitions", nargs="+")
        p.set_defaults(func=cmd_scalar)

    p = sub.add_parser("cosets", help="double cosets of Young subgroups")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--reps", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("ring", help="build or validate Grothendieck ring data")
    p.add_argument("action", choices=["validate", "cyclic", "vec-group", "from-chartable"])
    p.add_argument("arg", help="JSON file, or the order m for cyclic")
    p.set_defaults(func=cmd_ring)

    def ring_opts(p):
        p.add_argument("--ring", required=True, help="Vect, Z<m>, RepS3, VecS3 or a JSON file")
        p.add_argument("--max-degree", type=int)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("xmul", help="structure constants X_mu X_nu")
    ring_opts(p)
    p.add_argument("--method", choices=["t", "coefthm", "both"], default="t")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(func=cmd_xmul)

    p = sub.add_parser("x2t", help="X_mu in the PBW basis")
    ring_opts(p)
    p.add_argument("mu")
    p.set_defaults(func=cmd_x2t)

    p = sub.add_parser("hooks", help="X_mu as a polynomial in basic hooks")
    ring_opts(p)
    p.add_argument("mu")
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("charbasis", help="stable Specht character as a polynomial in e_i")
    p.add_argument("lam")
    p.add_argument("--eval", type=int, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charbasis)

    p = sub.add_parser("oracle", help="brute-force wreath product characters")
    p.add_argument("action", choices=["tensor", "scan", "checks"])
    p.add_argument("--group", default="trivial", help="trivial, Z2, V4, S3, S4 or a JSON file")
    p.add_argument("--n", type=int)
    p.add_argument("--mu", default="{}")
    p.add_argument("--nu", default="{}")
    p.add_argument("--n-from", type=int)
    p.add_argument("--n-to", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run an acceptance suite")
    p.add_argument("suite", choices=["all", *SUITES])
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return code or 0


if __name__ == "__main__":
    sys.exit(main())

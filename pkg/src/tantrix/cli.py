"""Command-line interface: ``tantrix <command> ...``.

Exit codes: 0 success or predicate true, 1 predicate false, 2 usage or input
error, 3 a size limit was exceeded.
"""

import argparse
import itertools
import random
import sys

from . import circuit, compiler, gadgets
from .errors import TantrixError, TooLarge
from .instance import check_solution, parse_instance, parse_solution, serialize_instance, serialize_solution
from .render import render_svg
from .solver import enumerate_solutions, solve

OK, FALSE, INPUT_ERROR, LIMIT = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code, message=""):
        super().__init__(message)
        self.code = code


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(INPUT_ERROR, f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Exit(INPUT_ERROR, f"cannot write {path}: {exc.strerror}") from None


def _emit(text, out):
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------


def cmd_count(args):
    inst = parse_instance(_read(args.instance))
    print(solve(inst).count)
    return OK


def cmd_solve(args):
    inst = parse_instance(_read(args.instance))
    sols = enumerate_solutions(inst, args.cap)
    if not sols:
        print("no solution")
        return FALSE
    _emit("\n".join(serialize_solution(s) for s in sols), args.out)
    return OK


def cmd_unique(args):
    inst = parse_instance(_read(args.instance))
    n = solve(inst, count_cap=2).count
    print(("unique" if n == 1 else "not-unique") + f" {n}")
    return OK if n == 1 else FALSE


def _load_cnf(path, limit):
    f = circuit.parse_dimacs(_read(path))
    if f.num_vars > limit:
        raise TooLarge(f"{f.num_vars} variables exceed the limit of {limit}")
    return f


def cmd_reduce(args):
    f = _load_cnf(args.dimacs, args.limit)
    p = compiler.reduce_sat(f)
    text = serialize_instance(p.instance)
    if args.out:
        _write(args.out, text)
    if args.portmap:
        _write(args.portmap, compiler.serialize_port_map(p.port_map))
    summary = f"tiles {len(p.instance)} tracks {p.num_tracks}"
    if args.out:
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return OK


def cmd_verify_gadgets(args):
    text = None if args.library is None else _read(args.library)
    library = gadgets.load_library(text)
    ok = True
    for report in gadgets.verify_library(library):
        for r in report.rows:
            ins = ",".join(f"{k}={v}" for k, v in r.row.inputs) or "-"
            outs = ",".join(f"{k}={v}" for k, v in r.row.outputs) or "-"
            verdict = "PASS" if r.passed else "FAIL"
            print(
                f"{report.name:<7} in {ins:<8} out {outs:<8} "
                f"expected {r.row.expected_count} count {r.total} {verdict}"
            )
        ok = ok and report.passed
    print("all gadgets pass" if ok else "some gadgets FAIL")
    return OK if ok else FALSE


def cmd_render(args):
    inst = parse_instance(_read(args.instance))
    sol = None
    if args.solution:
        sol = parse_solution(_read(args.solution), inst)
        if not check_solution(inst, sol):
            raise _Exit(INPUT_ERROR, "the solution does not solve the instance")
    _emit(render_svg(inst, sol), args.out)
    return OK


def _oracle_models(f, limit):
    """Models of f by direct clause evaluation; independent of the compiler path."""
    if f.num_vars > limit:
        raise TooLarge(f"{f.num_vars} variables exceed the limit of {limit}")
    found = []
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in cl) for cl in f.clauses):
            found.append(bits)
    return found


def roundtrip(f, limit=20, cap=256):
    """(passed, model count, puzzle count) for one formula."""
    models = _oracle_models(f, limit)
    p = compiler.reduce_sat(f)
    count = solve(p.instance).count
    if count != len(models):
        return False, len(models), count
    if count > cap:
        raise TooLarge(f"{count} solutions exceed the enumeration cap of {cap}")
    extracted = [compiler.extract_assignment(p, s) for s in enumerate_solutions(p.instance, cap)] if count else []
    ok = len(set(extracted)) == len(extracted) and set(extracted) == set(models)
    return ok, len(models), count


def cmd_roundtrip(args):
    if args.dimacs is None and args.seed is None:
        raise _Exit(INPUT_ERROR, "give a DIMACS file or --seed for a random batch")
    if args.dimacs is not None:
        corpus = [(args.dimacs, circuit.parse_dimacs(_read(args.dimacs)))]
    else:
        rng = random.Random(args.seed)
        corpus = [(f"random#{k}", circuit.random_cnf(rng)) for k in range(args.batch)]
    all_ok = True
    for name, f in corpus:
        ok, models, count = roundtrip(f, args.limit, args.cap)
        print(f"{'PASS' if ok else 'FAIL'} {name} models {models} solutions {count}")
        all_ok = all_ok and ok
    return OK if all_ok else FALSE


# -- entry point ----------------------------------------------------------------


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser():
    ap = argparse.ArgumentParser(prog="tantrix", description="Tantrix rotation puzzles and the SAT reduction.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the exact number of solutions")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("solve", help="print solutions in lexicographic order")
    p.add_argument("instance")
    p.add_argument("--cap", type=_positive, default=1, help="how many solutions to print (default 1)")
    p.add_argument("--out", help="write solutions here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("unique", help="exit 0 iff the instance has exactly one solution")
    p.add_argument("instance")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("reduce", help="compile a DIMACS CNF into an instance and port map")
    p.add_argument("dimacs")
    p.add_argument("--out", help="instance file (default stdout)")
    p.add_argument("--portmap", help="port-map sidecar file")
    p.add_argument("--limit", type=int, default=circuit.DEFAULT_LIMIT, help="maximum number of variables")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify-gadgets", help="check every gadget's behaviour table")
    p.add_argument("library", nargs="?", help="gadget library file (default: stock library)")
    p.set_defaults(func=cmd_verify_gadgets)

    p = sub.add_parser("render", help="draw an instance (and optionally a solution) as SVG")
    p.add_argument("instance")
    p.add_argument("solution", nargs="?")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("roundtrip", help="compare model count, puzzle count and extracted models")
    p.add_argument("dimacs", nargs="?")
    p.add_argument("--limit", type=int, default=circuit.DEFAULT_LIMIT, help="maximum number of variables")
    p.add_argument("--cap", type=_positive, default=256, help="maximum number of solutions to enumerate")
    p.add_argument("--seed", type=int, help="check a batch of random CNFs drawn from this seed")
    p.add_argument("--batch", type=_positive, default=20, help="batch size with --seed")
    p.set_defaults(func=cmd_roundtrip)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return LIMIT
    except TantrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Exit codes: 0 success or pass, 1 property false / no factorization / check
failure, 2 syntax error, 3 semantic error.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .classify import PROPERTIES, InconsistencyError, classify
from .expr import (
    ExprError,
    SemanticError,
    elaborate,
    elaborate_ideal,
    elaborate_module,
    parse,
    parse_ideal,
    parse_module,
    to_text,
    tokenize,
)
from .factor import MODES, factor
from .integers import IntegerRing, int_factor_isp, int_factor_sp, int_factor_zpi
from .report import (
    dumps,
    factorization_tree,
    ideals_text,
    ideals_tree,
    report_text,
    report_tree,
    spectrum_text,
    spectrum_tree,
)

DEFAULT_MAX_SIZE = 4096


def _ring(text, max_size):
    node = parse(text)
    return to_text(node), elaborate(node, max_size)


def _finite(text, max_size, what):
    name, A = _ring(text, max_size)
    if isinstance(A, IntegerRing):
        raise SemanticError(f"{what} needs a finite ring; Zint has infinitely many ideals")
    return name, A


# commands: each returns (exit code, output text)


def cmd_classify(expr, fmt="text", max_size=DEFAULT_MAX_SIZE, prop=None):
    name, A = _ring(expr, max_size)
    report = classify(A)
    out = dumps(report_tree(report, name)) if fmt == "json" else report_text(report, name)
    code = 1 if prop is not None and not report.verdicts[prop] else 0
    return code, out


def _classify_tree(expr, max_size):
    name, A = _ring(expr, max_size)
    return report_tree(classify(A), name)


def _classify_text(expr, max_size):
    name, A = _ring(expr, max_size)
    return report_text(classify(A), name)


def cmd_classify_corpus(expressions, fmt="text", max_size=DEFAULT_MAX_SIZE, jobs=1):
    """Classify many expressions; results are assembled in input order whatever ``jobs`` is."""
    for e in expressions:
        parse(e)
    work = _classify_tree if fmt == "json" else _classify_text
    sizes = [max_size] * len(expressions)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, expressions, sizes))
    else:
        results = list(map(work, expressions, sizes))
    if fmt == "json":
        return 0, dumps({"reports": results})
    return 0, "\n\n".join(results)


def cmd_ideals(expr, fmt="text", max_size=DEFAULT_MAX_SIZE):
    name, A = _finite(expr, max_size, "listing ideals")
    return 0, dumps(ideals_tree(A, name)) if fmt == "json" else ideals_text(A, name)


def cmd_spec(expr, fmt="text", max_size=DEFAULT_MAX_SIZE):
    name, A = _finite(expr, max_size, "listing the spectrum")
    return 0, dumps(spectrum_tree(A, name)) if fmt == "json" else spectrum_text(A, name)


_INT_FACTOR = {"isp": "isp", "strong": "isp", "sp": "sp", "ssp": "sp", "zpi": "zpi", "zpui": "zpi"}


def _integer_factor(I, mode):
    if not I.is_proper:
        raise SemanticError("the unit ideal is not proper")
    kind = _INT_FACTOR[mode]
    if kind == "isp":
        m, parts = int_factor_isp(I.n)
    else:
        m, parts = 1, (int_factor_sp if kind == "sp" else int_factor_zpi)(I.n)
    text = f"J=({m}), H=[{','.join(f'({d})' for d in parts)}]"
    tree = {"invertible": m, "radicals": list(parts)}
    return text, tree


def cmd_factor(expr, ideal, mode="isp", fmt="text", max_size=DEFAULT_MAX_SIZE):
    if mode not in MODES:
        raise SemanticError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    name, A = _ring(expr, max_size)
    lit = parse_ideal(ideal)
    I = elaborate_ideal(A, lit)
    if isinstance(A, IntegerRing):
        text, tree = _integer_factor(I, mode)
    else:
        try:
            f = factor(I, mode)
        except ValueError as exc:
            raise SemanticError(str(exc)) from None
        text = "none" if f is None else str(f)
        tree = None if f is None else factorization_tree(I, f)
    code = 1 if text == "none" else 0
    if fmt == "json":
        return code, dumps({"ring": name, "ideal": to_text(lit), "mode": mode, "factorization": tree})
    return code, text


def _instance(args, max_size):
    """First argument is a ring; later ones are ideals or modules of it, or further rings."""
    name, A = _finite(args[0], max_size, "theorem checks")
    out = [A]
    for text in args[1:]:
        head = tokenize(text)[0][1]
        if head == "ideal":
            out.append(elaborate_ideal(A, parse_ideal(text)))
        elif head == "mod":
            out.append(elaborate_module(A, parse_module(text)))
        else:
            out.append(_finite(text, max_size, "theorem checks")[1])
    return out


def _check_tree(c):
    return {"theorem": c.theorem, "instance": c.instance, "status": c.status, "transcript": list(c.transcript)}


def cmd_check(theorem, instance, fmt="text", max_size=DEFAULT_MAX_SIZE):
    from .theorems import THEOREM_IDS, check_theorem

    if theorem not in THEOREM_IDS:
        raise SemanticError(f"unknown theorem {theorem!r}; known: {', '.join(THEOREM_IDS)}")
    if not instance:
        raise SemanticError("a theorem check needs at least one ring expression")
    args = _instance(instance, max_size)
    try:
        c = check_theorem(theorem, *args)
    except ValueError as exc:
        raise SemanticError(str(exc)) from None
    code = 1 if c.status == "fail" else 0
    if fmt == "json":
        return code, dumps(_check_tree(c))
    return code, "\n".join([f"{c.theorem} [{c.instance}]: {c.status}", *("  " + t for t in c.transcript)])


_SUITE = {}


def _suite_init(expressions, max_size):
    from .corpus import load_corpus
    from .theorems import theorem_suite

    rings = [R for _, R in load_corpus(expressions, max_size)]
    _SUITE["entries"] = theorem_suite(rings)


def _suite_shard(shard, shards):
    from .theorems import run_suite

    return [(i, c.theorem, c.instance, c.status) for i, c in run_suite(_SUITE["entries"], shard, shards)]


def cmd_check_all(expressions, fmt="text", max_size=DEFAULT_MAX_SIZE, jobs=1, verbose=False):
    """Run the theorem suite over a corpus; exit 1 if any check fails."""
    for e in expressions:
        parse(e)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_suite_init, initargs=(expressions, max_size)) as pool:
            shards = list(pool.map(_suite_shard, range(jobs), [jobs] * jobs))
    else:
        _suite_init(expressions, max_size)
        shards = [_suite_shard(0, 1)]
    rows = sorted(r for shard in shards for r in shard)
    summary = {}
    for _, tid, _, status in rows:
        counts = summary.setdefault(tid, {"pass": 0, "inapplicable": 0, "fail": 0})
        counts[status] += 1
    failures = [r for r in rows if r[3] == "fail"]
    code = 1 if failures else 0
    if fmt == "json":
        checks = [{"theorem": t, "instance": inst, "status": s} for _, t, inst, s in rows]
        return code, dumps({"checks": checks, "summary": summary, "failures": len(failures)})
    shown = rows if verbose else failures
    lines = [f"{s}: {t} [{inst}]" for _, t, inst, s in shown]
    for tid in sorted(summary):
        c = summary[tid]
        lines.append(f"{tid}: {c['pass']} pass, {c['inapplicable']} inapplicable, {c['fail']} fail")
    lines.append(f"total: {len(rows)} checks, {len(failures)} failures")
    return code, "\n".join(lines)


def _corpus_expressions(path):
    from .corpus import read_expressions, standard_expressions

    if path is None:
        return standard_expressions()
    with open(path, encoding="utf-8") as fh:
        return read_expressions(fh.read())


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE, help="refuse rings with more elements")
    common.add_argument("--corpus", metavar="FILE", help="newline-separated expressions for batch runs")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch runs")

    parser = argparse.ArgumentParser(prog="isprings", description="Classify finite commutative rings by ideal factorization properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="decide every ring property")
    p.add_argument("expr", nargs="?")
    p.add_argument("--property", choices=PROPERTIES, help="exit 1 if this property is false")

    p = sub.add_parser("ideals", parents=[common], help="list all ideals")
    p.add_argument("expr")

    p = sub.add_parser("factor", parents=[common], help="factor one ideal")
    p.add_argument("expr")
    p.add_argument("ideal")
    p.add_argument("--mode", choices=MODES, default="isp")

    p = sub.add_parser("check", parents=[common], help="check a theorem on an instance, or 'all' on a corpus")
    p.add_argument("theorem")
    p.add_argument("instance", nargs="*")
    p.add_argument("-v", "--verbose", action="store_true", help="with 'all': list every check")

    p = sub.add_parser("spec", parents=[common], help="list the prime spectrum")
    p.add_argument("expr")
    return parser


def run(argv):
    args = build_parser().parse_args(argv)
    fmt = "json" if args.json else "text"
    size = args.max_size
    if args.jobs < 1:
        raise SemanticError("--jobs must be at least 1")
    if args.command == "classify":
        if args.corpus or args.expr is None:
            if args.expr is not None:
                raise SemanticError("give either an expression or --corpus, not both")
            return cmd_classify_corpus(_corpus_expressions(args.corpus), fmt, size, args.jobs)
        return cmd_classify(args.expr, fmt, size, args.property)
    if args.command == "ideals":
        return cmd_ideals(args.expr, fmt, size)
    if args.command == "spec":
        return cmd_spec(args.expr, fmt, size)
    if args.command == "factor":
        return cmd_factor(args.expr, args.ideal, args.mode, fmt, size)
    if args.theorem == "all":
        return cmd_check_all(_corpus_expressions(args.corpus), fmt, size, args.jobs, args.verbose)
    return cmd_check(args.theorem, args.instance, fmt, size)


def main(argv=None):
    try:
        code, out = run(sys.argv[1:] if argv is None else argv)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

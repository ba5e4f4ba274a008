"""Command-line front end: ``schubcalc <command> [options]``.

Grassmannians are written ``n,k`` for Gr(n,k), the k-planes in n-space.
Exit status is 0 on success, 2 on invalid input and 3 when a computation cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CapExceeded
from .partitions import (
    AmbientRectangle,
    Partition,
    SkewShape,
    count_syt_hook_formula,
    format_partition,
    parse_partition,
    parse_shifted,
)

DEFAULT_CAP = 10**7


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------------ parsing helpers


def _grassmannian(text: str) -> tuple[int, int]:
    try:
        n, k = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,k, got {text!r}") from None
    if not 0 <= k <= n:
        raise argparse.ArgumentTypeError(f"Gr({n},{k}) needs 0 <= k <= n")
    return n, k


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _shifted(text: str):
    try:
        return parse_shifted(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _permutation(text: str):
    from .permutations import parse_permutation

    try:
        return parse_permutation(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _box(gr: tuple[int, int]) -> AmbientRectangle:
    return AmbientRectangle.for_grassmannian(*gr)


def _fmt_part(lam) -> str:
    return format_partition(lam) or "-"


# ------------------------------------------------------------------ commands


def cmd_lr(a) -> tuple[str, object]:
    from .schur import lr_coefficient
    from .tableaux import enumerate_lr_tableaux

    c = lr_coefficient(a.lam, a.mu, a.nu)
    if not a.tableaux:
        return str(c), c
    tabs = enumerate_lr_tableaux(SkewShape.of(a.nu, a.lam), a.mu, cap=a.cap) if a.nu.contains(a.lam) else []
    text = "\n\n".join([str(c)] + [str(t) for t in tabs])
    return text, {"coefficient": c, "tableaux": [json.loads(t.to_json()) for t in tabs]}


def cmd_product(a):
    from .schur import schur_product

    e = schur_product(a.factors)
    return str(e), json.loads(e.to_json())


def cmd_grprod(a):
    from .schur import grassmannian_product

    e = grassmannian_product(_box(a.grassmannian), a.factors)
    return str(e), json.loads(e.to_json())


def cmd_pieri(a):
    from .schur import pieri

    e = pieri(a.r, a.lam, _box(a.grassmannian) if a.grassmannian else None)
    return str(e), json.loads(e.to_json())


def cmd_dual(a):
    from .schur import duality_pairing

    c = duality_pairing(a.lam, a.mu, _box(a.grassmannian))
    return str(c), c


def cmd_count(a):
    from .schur import intersection_count
    from .tableaux import iter_lr_chains

    box = _box(a.grassmannian)
    c = intersection_count(box, a.classes)
    if not a.chains:
        return str(c), c
    chains = list(iter_lr_chains(a.classes, box.full()))
    blocks = [str(c)]
    for idx, chain in enumerate(chains, 1):
        path = " < ".join([_fmt_part(chain[0].shape.inner)] + [_fmt_part(t.shape.outer) for t in chain])
        blocks.append(f"chain {idx}: {path}\n" + "\n\n".join(
            f"{_fmt_part(t.shape.outer)}/{_fmt_part(t.shape.inner)}:\n{t}" for t in chain))
    return "\n\n".join(blocks), {"count": c, "chains": [[json.loads(t.to_json()) for t in ch] for ch in chains]}


def cmd_syt(a):
    from .tableaux import enumerate_syt

    if a.list:
        tabs = enumerate_syt(a.shape, cap=a.cap)
        return "\n\n".join([str(len(tabs))] + [str(t) for t in tabs]), [json.loads(t.to_json()) for t in tabs]
    c = count_syt_hook_formula(a.shape)
    return str(c), c


def cmd_schubert(a):
    from .schubert import schubert_polynomial

    p = schubert_polynomial(a.w)
    return str(p), json.loads(p.to_json())


def cmd_monk(a):
    from .permutations import format_permutation
    from .schubert import monk_expand

    if a.i < 1:
        raise ValueError("Monk's rule needs i >= 1")
    terms = monk_expand(a.i, a.w)
    return " + ".join(f"S[{format_permutation(v)}]" for v in terms) or "0", [list(v) for v in terms]


def cmd_bruhat(a):
    from .permutations import bruhat_leq

    v, w = a.le
    r = bruhat_leq(v, w)
    return "true" if r else "false", r


def _format_shifted_expansion(d: dict, letter: str) -> str:
    if not d:
        return "0"
    keys = sorted(d, key=lambda lam: (lam.size(), tuple(lam)), reverse=True)
    return " + ".join(f"{'' if d[k] == 1 else f'{d[k]}*'}{letter}[{_fmt_part(k)}]" for k in keys)


def cmd_pq(a):
    from .shifted import p_product_by_elimination, schur_pq_to_monomials, stembridge_product

    if a.expand is not None:
        poly = schur_pq_to_monomials(a.expand, a.variant, a.vars)
        p = poly.to_int_polynomial()
        return str(p), json.loads(p.to_json())
    if not a.factors:
        raise ValueError("pq needs factors or --expand")
    if a.method == "stembridge":
        d = stembridge_product(a.factors, reading=a.reading)
    else:
        d = p_product_by_elimination(a.factors)
        if a.method == "both":
            other = stembridge_product(a.factors, reading=a.reading)
            if other != d:
                raise ValueError("Stembridge rule and elimination disagree on this product")
    d = {k: v for k, v in d.items() if v}
    return _format_shifted_expansion(d, "P"), {"s:" + format_partition(k): v for k, v in d.items()}


def cmd_ogcount(a):
    from .shifted import og_intersection_count

    c = og_intersection_count(a.n, a.classes, method=a.method)
    return str(c), c


def _load_flags(path: str, q: int):
    from .fq import FlagFq, FqMatrix

    with open(path) as fh:
        data = json.load(fh)
    return [FlagFq(FqMatrix.from_ints(m, q)) for m in data]


def cmd_oracle(a):
    from . import fq
    from .fq.empirical import splitting_degree
    from .schur import intersection_count
    from .shifted import og_intersection_count

    q = a.q
    if a.mode == "census":
        if not a.grassmannian:
            raise ValueError("census needs --grassmannian n,k")
        n, k = a.grassmannian
        formula = fq.grassmannian_size(q, n, k)
        streamed = sum(1 for _ in fq.enumerate_grassmannian(q, n, k, cap=a.cap))
        out = {"q": q, "n": n, "k": k, "formula": formula, "enumerated": streamed}
        return f"|Gr({n},{k})(F_{q})| = {streamed} (cell sum {formula})", out
    if a.mode == "cell":
        if a.n is None or a.lam is None:
            raise ValueError("cell needs --n and --lambda")
        c = fq.isotropic_cell_count(q, a.lam, a.n)
        return str(c), c
    if a.mode == "gr":
        if not a.grassmannian or not a.classes:
            raise ValueError("gr needs --grassmannian n,k and --classes")
        n, k = a.grassmannian
        classes = [_partition(c) for c in a.classes]
        ext = a.ext if a.ext else splitting_degree(intersection_count(_box((n, k)), classes))
        if a.flags:
            flags = _load_flags(a.flags, q)
            c = fq.empirical_intersection(q, n, k, flags, classes, q**ext, cap=a.cap)
            return str(c), c
        rep = fq.intersection_trials(q, n, k, classes, a.trials, a.seed, ext, a.threads, a.cap)
        return str(rep), rep.to_json()
    if a.mode == "og":
        if a.n is None or not a.classes:
            raise ValueError("og needs --n and --classes")
        classes = [_shifted(c) for c in a.classes]
        ext = a.ext if a.ext else splitting_degree(og_intersection_count(a.n, classes))
        if a.flags:
            flags = _load_flags(a.flags, q)
            c = fq.empirical_og_intersection(q, a.n, flags, classes, q**ext, cap=a.cap)
            return str(c), c
        rep = fq.og_intersection_trials(q, a.n, classes, a.trials, a.seed, ext, a.threads, a.cap)
        return str(rep), rep.to_json()
    raise ValueError(f"unknown oracle mode {a.mode!r}")


def cmd_plucker(a):
    from .fq import FqMatrix, plucker

    try:
        rows = json.loads(a.matrix)
    except json.JSONDecodeError as e:
        raise ValueError(f"--matrix is not valid JSON: {e}") from None
    if not rows or not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("--matrix must be a JSON array of rows")
    if a.q:
        coords = plucker(FqMatrix.from_ints(rows, a.q))
    else:
        coords = plucker([[Fraction(x) for x in r] for r in rows])
    coords = [int(c) if not isinstance(c, Fraction) or c.denominator == 1 else str(c) for c in coords]
    return "(" + ":".join(str(c) for c in coords) + ")", coords


def cmd_selftest(a):
    from .selftest import SUITES, run_suites

    names = a.suite or list(SUITES)
    for s in names:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}; available: {', '.join(SUITES)}")
    results = run_suites(names)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {msg}" for name, ok, msg in results]
    payload = [{"suite": n, "passed": ok, "detail": m} for n, ok, m in results]
    failed = any(not ok for _, ok, _ in results)
    return "\n".join(lines), payload, (1 if failed else 0)


COMMANDS: dict[str, Callable] = {
    "lr": cmd_lr, "product": cmd_product, "grprod": cmd_grprod, "pieri": cmd_pieri, "dual": cmd_dual,
    "count": cmd_count, "syt": cmd_syt, "schubert": cmd_schubert, "monk": cmd_monk, "bruhat": cmd_bruhat,
    "pq": cmd_pq, "ogcount": cmd_ogcount, "oracle": cmd_oracle, "plucker": cmd_plucker, "selftest": cmd_selftest,
}


def _common(suppress: bool) -> argparse.ArgumentParser:
    # global options are accepted before or after the command name
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    common.add_argument("--threads", type=int, default=d(1), help="worker threads for trial loops")
    common.add_argument("--seed", type=int, default=d(0))
    common.add_argument("--cap", type=int, default=d(DEFAULT_CAP), help="enumeration cap")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    p = _Parser(prog="schubcalc", description="Schubert calculus computations.", parents=[_common(False)])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^nu_{lam,mu}")
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--mu", type=_partition, required=True)
    s.add_argument("--nu", type=_partition, required=True)
    s.add_argument("--tableaux", action="store_true", help="also list the LR tableaux")

    s = sub.add_parser("product", parents=[common], help="product of Schur functions")
    s.add_argument("factors", nargs="+", type=_partition)

    s = sub.add_parser("grprod", parents=[common], help="product in the cohomology of Gr(n,k)")
    s.add_argument("--grassmannian", type=_grassmannian, required=True, metavar="N,K")
    s.add_argument("factors", nargs="+", type=_partition)

    s = sub.add_parser("pieri", parents=[common], help="s_r * s_lam")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--grassmannian", type=_grassmannian, metavar="N,K")

    s = sub.add_parser("dual", parents=[common], help="duality pairing in Gr(n,k)")
    s.add_argument("--grassmannian", type=_grassmannian, required=True, metavar="N,K")
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--mu", type=_partition, required=True)

    s = sub.add_parser("count", parents=[common], help="number of points in a zero-dimensional intersection")
    s.add_argument("--grassmannian", type=_grassmannian, required=True, metavar="N,K")
    s.add_argument("--classes", nargs="+", type=_partition, required=True)
    s.add_argument("--chains", action="store_true", help="list the chains of LR tableaux")

    s = sub.add_parser("syt", parents=[common], help="standard Young tableaux of a shape")
    s.add_argument("--shape", type=_partition, required=True)
    s.add_argument("--list", action="store_true")

    s = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of a permutation")
    s.add_argument("w", type=_permutation)

    s = sub.add_parser("monk", parents=[common], help="Monk's rule: S_{s_i} * S_w")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--w", type=_permutation, required=True)

    s = sub.add_parser("bruhat", parents=[common], help="Bruhat order comparison")
    s.add_argument("--le", nargs=2, type=_permutation, required=True, metavar=("V", "W"))

    s = sub.add_parser("pq", parents=[common], help="Schur P/Q functions")
    s.add_argument("factors", nargs="*", type=_shifted)
    s.add_argument("--expand", type=_shifted, help="monomial expansion of one P or Q function")
    s.add_argument("--variant", choices=["P", "Q"], default="P")
    s.add_argument("--vars", type=int, default=3)
    s.add_argument("--method", choices=["elimination", "stembridge", "both"], default="elimination")
    s.add_argument("--reading", choices=["corrected", "literal"], default="corrected")

    s = sub.add_parser("ogcount", parents=[common], help="intersection count in OG(2n+1,n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--classes", nargs="+", type=_shifted, required=True)
    s.add_argument("--method", choices=["elimination", "stembridge", "both"], default="elimination")

    s = sub.add_parser("oracle", parents=[common], help="finite-field checks")
    s.add_argument("mode", choices=["gr", "og", "census", "cell"])
    s.add_argument("--q", type=int, default=7)
    s.add_argument("--ext", type=int, default=0, help="count over GF(q^ext); 0 picks a splitting degree")
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--grassmannian", type=_grassmannian, metavar="N,K")
    s.add_argument("--n", type=int)
    s.add_argument("--lambda", dest="lam", type=_partition)
    s.add_argument("--classes", nargs="+")
    s.add_argument("--flags", help="JSON file with one integer basis matrix per flag")

    s = sub.add_parser("plucker", parents=[common], help="Pluecker coordinates of a matrix")
    s.add_argument("--matrix", required=True, help="JSON rows, e.g. [[0,0,1,2],[1,-3,0,3]]")
    s.add_argument("--q", type=int, default=0, help="reduce modulo a prime (power)")

    s = sub.add_parser("selftest", parents=[common], help="cross-check independent implementations")
    s.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        if args.cap < 1:
            raise ValueError("--cap must be positive")
        res = COMMANDS[args.command](args)
    except CapExceeded as e:
        print(f"error: computation cap exceeded: {e}", file=err)
        return 3
    except (UsageError, ValueError, argparse.ArgumentTypeError) as e:
        print(f"error: {e}", file=err)
        return 2
    text, payload, code = res if len(res) == 3 else (*res, 0)
    if args.json:
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

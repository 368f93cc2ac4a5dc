"""Command-line front end.

Commands: eval, gaps, table, poly, verify, binet, bench.  Machine output
goes to stdout (text, JSON, or LaTeX for polynomials; big integers in
JSON are decimal strings), diagnostics to stderr.  Exit codes: 0 for
success or a passing verification, 1 for a verification failure, 2 for
usage or parse errors.  The verify, bench, and table commands can also
render a figure to a file with --plot.
"""

import argparse
import json
import random
import sys
import time

from . import identities
from ._bigint import to_decimal
from .chebyshev import binet, stern_via_gaps
from .determinant import stern_via_det
from .encoding import digit_sum, gaps_of, parse_gap_code, parse_nat, to_odd, value_of
from .identities import Report, merge_all
from .stern import build_table, stern_pair
from .subsets import cheb_via_subsets
from .sympoly import cheb_poly, gap_poly

SUBSET_DIGIT_LIMIT = 17

IDENTITY_NAMES = (
    "shift",
    "code",
    "lemma-l2",
    "reversal",
    "splitting",
    "coons",
    "reznick",
    "linear-comb",
    "divisibility",
    "binet",
    "cross",
    "all",
)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sterncheb",
        description="Exact evaluation and verification of the Stern diatomic sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a(n)")
    p.add_argument(
        "nspec",
        help="decimal or 0x-hex integer, a gap-code literal like [2,2], "
        "or ratio:R,T for (2^(R*T)-1)/(2^T-1)",
    )
    p.add_argument(
        "--algo",
        choices=("pair", "gaps", "det", "subsets", "auto"),
        default="auto",
        help="pathway; auto picks the closed form for ratio inputs, else the pair scan",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("gaps", help="gap code and binary metadata of n")
    p.add_argument("n", help="positive integer, decimal or 0x-hex")
    _add_format(p)
    p.set_defaults(handler=_cmd_gaps)

    p = sub.add_parser("table", help="first N sequence values")
    p.add_argument("n", help="table size N >= 2")
    _add_format(p)
    p.add_argument("--plot", metavar="FILE", help="also render a scatter figure to FILE")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("poly", help="symbolic polynomial of a given arity")
    p.add_argument("r", type=int, help="arity")
    p.add_argument(
        "--basis",
        choices=("q", "p"),
        default="q",
        help="q: arguments are gaps plus one; p: arguments are the gaps themselves",
    )
    _add_format(p, latex=True)
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("verify", help="machine-check the sequence identities")
    p.add_argument("identity", choices=IDENTITY_NAMES)
    p.add_argument("--n-max", type=int, default=1 << 12, help="shift: largest n")
    p.add_argument("--c-max", type=int, default=10, help="shift: largest c")
    p.add_argument("--max-len", type=int, default=5, help="code/lemma-l2: longest code")
    p.add_argument("--max-entry", type=int, default=4, help="code/lemma-l2: largest entry")
    p.add_argument("--max", type=int, default=None, help="reversal/cross: sweep odd n below this")
    p.add_argument("--cases", type=int, default=200, help="splitting: number of random splits")
    p.add_argument("--max-total", type=int, default=16, help="splitting: largest k+r")
    p.add_argument("--bits", type=int, default=64, help="splitting: entry size in bits")
    p.add_argument("--e", type=int, default=10, help="coons/reznick/linear-comb: check e = 0..E")
    p.add_argument("--u-max", type=int, default=16, help="coons/linear-comb: largest u")
    p.add_argument("--k-max", type=int, default=8, help="divisibility: check k = 1..K")
    p.add_argument("--trials", type=int, default=10_000, help="divisibility: codes per k")
    p.add_argument("--r-max", type=int, default=40, help="binet: largest r")
    p.add_argument("--t-min", type=int, default=2, help="binet: smallest t")
    p.add_argument("--t-max", type=int, default=6, help="binet: largest t")
    p.add_argument(
        "--subset-digit-limit",
        type=int,
        default=SUBSET_DIGIT_LIMIT,
        help="cross: skip the subset pathway above this digit sum",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized sweeps")
    p.add_argument(
        "--quick",
        action="store_true",
        help="explicitly select the default ranges (the CI preset, under a minute in total)",
    )
    _add_format(p)
    p.add_argument("--plot", metavar="FILE", help="render a pass/fail summary figure to FILE")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("binet", help="closed-form a((2^(R*T)-1)/(2^T-1))")
    p.add_argument("r", type=int)
    p.add_argument("t", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_binet)

    p = sub.add_parser("bench", help="time the pathways on a pseudorandom input")
    p.add_argument("--bits", type=int, required=True, help="bit length of the odd input")
    p.add_argument(
        "--algo",
        default="pair",
        help="comma-separated subset of pair,gaps,det,subsets",
    )
    p.add_argument("--reps", type=int, default=1, help="timed repetitions per pathway")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.add_argument("--csv", metavar="FILE", help="also write the timing rows to FILE")
    p.add_argument("--plot", metavar="FILE", help="also render a timing chart to FILE")
    p.set_defaults(handler=_cmd_bench)

    return parser


def _add_format(p: argparse.ArgumentParser, latex: bool = False) -> None:
    choices = ("text", "json", "latex") if latex else ("text", "json")
    p.add_argument("--format", choices=choices, default="text")


def _parse_nspec(text: str) -> tuple[int, dict]:
    """Resolve an eval input to (n, meta); meta notes ratio parameters."""
    t = text.strip()
    if t.startswith("["):
        return value_of(parse_gap_code(t)), {}
    if t.startswith("ratio:"):
        parts = t[len("ratio:") :].split(",")
        if len(parts) != 2:
            raise ValueError("ratio input must look like ratio:R,T")
        r, tt = (int(x.strip()) for x in parts)
        if r < 1 or tt < 1:
            raise ValueError("ratio parameters must satisfy R >= 1, T >= 1")
        n = ((1 << (r * tt)) - 1) // ((1 << tt) - 1)
        return n, {"ratio": (r, tt)}
    return parse_nat(t), {}


def _cmd_eval(args) -> int:
    n, meta = _parse_nspec(args.nspec)
    algo = args.algo
    if algo == "auto":
        ratio = meta.get("ratio")
        algo = "binet" if ratio and ratio[1] >= 2 else "pair"
    if algo == "binet":
        r, t = meta["ratio"]
        value = binet(r, t)
    elif algo == "pair":
        value = stern_pair(n)
    else:
        m = n
        if m == 0:
            raise ValueError(f"the {algo} pathway needs n >= 1")
        if m & 1 == 0:
            m, twos = to_odd(m)
            print(
                f"note: even input reduced to odd part {_brief(m)} "
                f"(2^{twos} stripped; the value is unchanged)",
                file=sys.stderr,
            )
        if algo == "gaps":
            value = stern_via_gaps(m)
        elif algo == "det":
            value = stern_via_det(m)
        else:
            s = digit_sum(m)
            if s > SUBSET_DIGIT_LIMIT:
                raise ValueError(
                    f"subset pathway refused: digit sum {s} exceeds {SUBSET_DIGIT_LIMIT} "
                    "(combinatorial blow-up)"
                )
            value = cheb_via_subsets([c + 1 for c in gaps_of(m)])
    if args.format == "json":
        print(
            json.dumps(
                {
                    "input": args.nspec,
                    "n": to_decimal(n),
                    "algo": algo,
                    "value": to_decimal(value),
                }
            )
        )
    else:
        print(to_decimal(value))
    return 0


def _brief(n: int) -> str:
    text = to_decimal(n) if n.bit_length() <= 64 else f"<{n.bit_length()} bits>"
    return text


def _cmd_gaps(args) -> int:
    n = parse_nat(args.n)
    if n < 1:
        raise ValueError("need n >= 1")
    odd, twos = to_odd(n)
    code = gaps_of(odd)
    data = {
        "odd": to_decimal(odd),
        "twos": twos,
        "gaps": code,
        "digit_sum": digit_sum(n),
        "bits": n.bit_length(),
    }
    if args.format == "json":
        print(json.dumps(data))
    else:
        gaps_text = "[" + ",".join(map(str, code)) + "]"
        print(
            f"odd={data['odd']} twos={twos} gaps={gaps_text} "
            f"digit_sum={data['digit_sum']} bits={data['bits']}"
        )
    return 0


def _cmd_table(args) -> int:
    n = parse_nat(args.n)
    values = build_table(n)
    if args.format == "json":
        print(json.dumps({"n": n, "values": values}))
    else:
        print("n,a_n")
        out = sys.stdout
        for m, v in enumerate(values):
            out.write(f"{m},{v}\n")
    if args.plot:
        from .plotting import save_table_figure

        save_table_figure(values, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


def _cmd_poly(args) -> int:
    poly = cheb_poly(args.r) if args.basis == "q" else gap_poly(args.r)
    if args.format == "json":
        print(json.dumps({"basis": args.basis, "r": args.r, "terms": poly.json_terms()}))
    else:
        print(poly.render("latex" if args.format == "latex" else "text"))
    return 0


def _cmd_binet(args) -> int:
    value = binet(args.r, args.t)
    if args.format == "json":
        print(json.dumps({"r": args.r, "t": args.t, "value": to_decimal(value)}))
    else:
        print(to_decimal(value))
    return 0


def _cmd_verify(args) -> int:
    name = args.identity
    if args.max is not None and args.max < 2:
        raise ValueError("--max must be at least 2")
    reports: list[Report] = []

    def wants(ident: str) -> bool:
        return name in (ident, "all")

    if wants("shift"):
        reports.append(identities.verify_shift(args.n_max, args.c_max))
    if wants("code"):
        reports.append(identities.sweep_code_identities(args.max_len, args.max_entry))
    if wants("lemma-l2"):
        reports.append(identities.sweep_lemma_l2(args.max_len, args.max_entry))
    if wants("reversal"):
        reports.append(identities.verify_reversal(args.max or (1 << 18)))
    if wants("splitting"):
        reports.append(
            identities.sweep_splitting(args.cases, args.max_total, args.bits, args.seed)
        )
    if wants("coons"):
        reports.append(
            merge_all([identities.verify_coons(e, args.u_max) for e in range(args.e + 1)])
        )
    if wants("reznick"):
        reports.append(merge_all([identities.verify_reznick_split(e) for e in range(args.e + 1)]))
    if wants("linear-comb"):
        reports.append(
            merge_all([identities.verify_linear_comb(e, args.u_max) for e in range(args.e + 1)])
        )
    if wants("divisibility"):
        for k in range(1, args.k_max + 1):
            reports.append(identities.verify_divisibility(k, args.trials, args.seed))
    if wants("binet"):
        reports.append(identities.verify_binet(args.r_max, args.t_min, args.t_max))
    if wants("cross"):
        top = args.max or (1 << 16)
        reports.append(
            identities.verify_cross(range(1, top, 2), args.subset_digit_limit)
        )

    if args.plot:
        from .plotting import save_verify_figure

        save_verify_figure(reports, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return _emit_reports(reports, args.format)


def _emit_reports(reports: list[Report], fmt: str) -> int:
    """Print reports and map them to the exit code (0 pass, 1 fail)."""
    all_passed = all(r.passed for r in reports)
    if fmt == "json":
        if len(reports) == 1:
            print(json.dumps(reports[0].to_json()))
        else:
            print(json.dumps({"passed": all_passed, "reports": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{r.identity:<18} checked={r.checked:<9} failures={len(r.failures):<3}"
                f" {r.elapsed_ms:10.1f} ms  {status}"
            )
            for f in r.failures:
                print(f"    counterexample: input={f.inputs} lhs={f.lhs} rhs={f.rhs}")
        if len(reports) > 1:
            print("result: " + ("ALL PASS" if all_passed else "FAILURES FOUND"))
    return 0 if all_passed else 1


_BENCH_ALGOS = {
    "pair": stern_pair,
    "gaps": stern_via_gaps,
    "det": stern_via_det,
    "subsets": lambda n: cheb_via_subsets([c + 1 for c in gaps_of(n)]),
}


def _cmd_bench(args) -> int:
    if args.bits < 1:
        raise ValueError("need --bits >= 1")
    if args.reps < 1:
        raise ValueError("need --reps >= 1")
    algos = [a.strip() for a in args.algo.split(",") if a.strip()]
    unknown = [a for a in algos if a not in _BENCH_ALGOS]
    if unknown or not algos:
        raise ValueError(f"unknown pathway names: {', '.join(unknown) or '(none given)'}")

    rng = random.Random(args.seed)
    n = rng.getrandbits(args.bits - 1) | (1 << (args.bits - 1)) | 1
    s = digit_sum(n)
    if "subsets" in algos and s > SUBSET_DIGIT_LIMIT:
        raise ValueError(
            f"subsets pathway refused: digit sum {s} exceeds {SUBSET_DIGIT_LIMIT} "
            "(combinatorial blow-up)"
        )

    values = {}
    timings = []
    for algo in algos:
        fn = _BENCH_ALGOS[algo]
        times = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            value = fn(n)
            times.append(time.perf_counter() - t0)
        values[algo] = value
        timings.append(
            {
                "algo": algo,
                "bits": args.bits,
                "reps": args.reps,
                "mean_s": sum(times) / len(times),
                "min_s": min(times),
            }
        )

    distinct = {v for v in values.values()}
    if len(distinct) > 1:
        print("cross-check FAILED: pathways disagree on the benchmark input", file=sys.stderr)
        for algo, v in values.items():
            print(f"  {algo}: {v.bit_length()}-bit value", file=sys.stderr)
        return 1
    value = next(iter(values.values()))
    print(
        f"input: {args.bits} bits (seed {args.seed}); a(n): {value.bit_length()} bits; "
        f"cross-check OK across {len(algos)} pathway(s)",
        file=sys.stderr,
    )

    header = "algo,bits,reps,mean_s,min_s"
    rows = [
        f"{t['algo']},{t['bits']},{t['reps']},{t['mean_s']:.6f},{t['min_s']:.6f}"
        for t in timings
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "bits": args.bits,
                    "seed": args.seed,
                    "reps": args.reps,
                    "value": to_decimal(value),
                    "results": [
                        {"algo": t["algo"], "mean_s": t["mean_s"], "min_s": t["min_s"]}
                        for t in timings
                    ],
                }
            )
        )
    else:
        print(header)
        for row in rows:
            print(row)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(header + "\n")
            for row in rows:
                fh.write(row + "\n")
        print(f"timings written to {args.csv}", file=sys.stderr)
    if args.plot:
        from .plotting import save_bench_figure

        save_bench_figure(timings, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

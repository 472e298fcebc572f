"""Command-line front end.

Exit codes: 0 ok / corrected, 1 decode failure or failed self-test,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import selftest as _selftest
from .decode import DUAL_SOLVERS, PRIMAL_ALGOS, decode
from .errors import DualRSError
from .gf import Field
from .rs import (
    CodeSpec,
    Variant,
    add_words,
    encode,
    random_error,
    random_info,
)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2
DEFAULT_FIELD = "2,8,285,2"


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_word(text: str) -> list[int]:
    """Comma-separated symbols, a JSON list, or a JSON object with a word key."""
    text = text.strip()
    if text.startswith(("[", "{")):
        obj = json.loads(text)
        if isinstance(obj, dict):
            for key in ("word", "codeword"):
                if obj.get(key) is not None:
                    obj = obj[key]
                    break
            else:
                raise UsageError("JSON input has no 'word' or 'codeword' entry")
        return [int(v) for v in obj]
    return _ints(text)


def _read_word(args, n: int, q: int) -> list[int]:
    text = args.word if args.word not in (None, "-") else sys.stdin.read()
    word = parse_word(text)
    if len(word) != n:
        raise UsageError(f"word has {len(word)} symbols, expected n = {n}")
    if any(not 0 <= c < q for c in word):
        raise UsageError(f"symbol out of range for GF({q})")
    return word


def _spec(args) -> CodeSpec:
    field = Field.from_string(args.field)
    return CodeSpec(field, args.k, Variant(args.variant))


def _emit(args, plain: str, obj) -> None:
    print(json.dumps(obj) if args.json else plain)


def _words(word) -> str:
    return ",".join(str(c) for c in word)


# -- subcommands --------------------------------------------------------------

def cmd_field_info(args) -> int:
    f = Field.from_string(args.field)
    info = {"p": f.p, "m": f.m, "q": f.q, "n": f.n, "modulus": f.modulus_int,
            "alpha": f.alpha}
    if f.q <= 64:
        info["exp_table"] = list(f.exp_table)
    lines = [f"{key}={val}" for key, val in info.items() if key != "exp_table"]
    if "exp_table" in info:
        lines.append("exp_table=" + _words(info["exp_table"]))
    _emit(args, "\n".join(lines), info)
    return EXIT_OK


def cmd_encode(args) -> int:
    spec = _spec(args)
    info = _ints(args.info)
    if len(info) != spec.k or any(not 0 <= c < spec.field.q for c in info):
        raise UsageError(f"--info needs {spec.k} symbols in [0, {spec.field.q})")
    word = encode(spec, info)
    _emit(args, _words(word), {"word": word})
    return EXIT_OK


def _parse_errors(text: str, spec: CodeSpec) -> list[int]:
    e = [0] * spec.n
    for item in filter(None, (tok.strip() for tok in text.split(","))):
        try:
            pos, val = (int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"error entries look like pos:val, got {item!r}") from None
        if not 0 <= pos < spec.n:
            raise UsageError(f"error position {pos} out of range")
        if not 0 < val < spec.field.q:
            raise UsageError(f"error value at {pos} must be nonzero and < q")
        if e[pos]:
            raise UsageError(f"duplicate error position {pos}")
        e[pos] = val
    return e


def cmd_corrupt(args) -> int:
    spec = _spec(args)
    word = _read_word(args, spec.n, spec.field.q)
    if args.errors is not None:
        e = _parse_errors(args.errors, spec)
    else:
        if not 0 <= args.weight <= spec.n:
            raise UsageError(f"--weight must lie in [0, {spec.n}]")
        e = random_error(spec, args.weight, np.random.default_rng(args.seed))
    out = add_words(spec.field, word, e)
    _emit(args, _words(out), {"word": out, "error": e})
    return EXIT_OK


def _error_text(error) -> str:
    return ",".join(f"{v}@{i}" for i, v in enumerate(error) if v) or "none"


def cmd_decode(args) -> int:
    spec = _spec(args)
    word = _read_word(args, spec.n, spec.field.q)
    _check_algo(spec, args.algo)
    res = decode(spec, word, args.algo, trace=args.trace)
    payload = res.to_dict()
    if args.trace:
        payload["trace"] = res.solution.trace_records() if res.solution else []
    if args.json:
        print(json.dumps(payload))
    else:
        summary = f"{res.status.value} algo={res.algo} iterations={res.iterations} " \
                  f"locator={res.locator.to_text()} evaluator={res.evaluator.to_text()}"
        if res.ok:
            print(_words(res.codeword))
            summary += f" error={_error_text(res.error)}"
        print(summary, file=sys.stderr)
        if args.trace:
            print(json.dumps(payload["trace"]), file=sys.stderr)
    return EXIT_OK if res.ok else EXIT_FAILURE


def cmd_trace(args) -> int:
    args.trace = True
    args.json = True
    return cmd_decode(args)


def cmd_selftest(args) -> int:
    spec = _spec(args)
    results = _selftest.run_all(spec, seed=args.seed, trials=args.trials)
    failed = [r for r in results if r.violations]
    if args.json:
        print(json.dumps([r.to_dict() for r in results]))
    else:
        for r in results:
            state = "FAIL" if r.violations else "PASS"
            print(f"{state} {r.name} ({r.checks} checks)")
            for v in r.violations[:5]:
                print(f"    {v}")
    return EXIT_FAILURE if failed else EXIT_OK


def _check_algo(spec: CodeSpec, algo):
    if algo is None:
        return
    allowed = DUAL_SOLVERS if spec.variant is Variant.DUAL else PRIMAL_ALGOS
    if algo not in allowed:
        raise UsageError(f"--algo {algo} is not available for {spec.variant.value} codes "
                         f"(choose from {', '.join(allowed)})")


def bench(spec: CodeSpec, algos, trials: int, seed: int) -> list[dict]:
    """Decode the same seeded corrupted words with every algorithm."""
    if trials <= 0:
        return []
    rng = np.random.default_rng(seed)
    words = []
    for _ in range(trials):
        c = encode(spec, random_info(spec, rng))
        e = random_error(spec, int(rng.integers(0, spec.t_max + 1)), rng)
        words.append(add_words(spec.field, c, e))
    report = []
    for algo in algos:
        start = time.perf_counter()
        results = [decode(spec, u, algo) for u in words]
        elapsed = time.perf_counter() - start
        traced = [decode(spec, u, algo, trace=True) for u in words]
        rem = sum(r.solution.remainder_updates for r in results if r.solution)
        mults = sum(r.solution.discrepancy_mults for r in results if r.solution)
        report.append({
            "algo": algo,
            "trials": trials,
            "seconds": round(elapsed, 6),
            "decodes_per_s": round(trials / elapsed, 1) if elapsed else None,
            "mean_iterations": sum(r.iterations for r in results) / trials,
            "mean_mu_length": sum(len(r.mu or []) for r in traced) / trials,
            "remainder_updates": rem,
            "discrepancy_mults": mults,
            "failures": sum(not r.ok for r in results),
            "iterations": [r.iterations for r in results],
        })
    return report


def cmd_bench(args) -> int:
    spec = _spec(args)
    _check_algo(spec, args.algo)
    if args.algo:
        algos = [args.algo]
    elif spec.variant is Variant.DUAL:
        algos = list(DUAL_SOLVERS)
    else:
        algos = list(PRIMAL_ALGOS)
    report = bench(spec, algos, args.trials, args.seed)
    if args.json:
        print(json.dumps(report))
    else:
        for row in report:
            print(" ".join(f"{k}={v}" for k, v in row.items() if k != "iterations"))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=DEFAULT_FIELD,
                        help="p,m,modulus,alpha (default %(default)s)")
    common.add_argument("--k", type=int, default=223, help="code dimension")
    common.add_argument("--variant", choices=[v.value for v in Variant], default="dual")
    common.add_argument("--algo", choices=sorted({*DUAL_SOLVERS, *PRIMAL_ALGOS}), default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="JSON output")

    parser = argparse.ArgumentParser(prog="dualrs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", parents=[common], help="show field parameters")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("encode", parents=[common], help="encode k information symbols")
    p.add_argument("--info", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", parents=[common], help="add an error pattern to a word")
    p.add_argument("--word", help="symbols, JSON, or '-' for stdin (default stdin)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--errors", help="pos:val,pos:val,...")
    group.add_argument("--weight", type=int, help="random error weight (uses --seed)")
    p.set_defaults(func=cmd_corrupt)

    for name, func, help_ in (("decode", cmd_decode, "decode a received word"),
                              ("trace", cmd_trace, "decode and dump the solver trace as JSON")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--word", help="symbols, JSON, or '-' for stdin (default stdin)")
        p.add_argument("--trace", action="store_true", help="include per-iteration records")
        p.set_defaults(func=func)

    p = sub.add_parser("selftest", parents=[common], help="run invariant checks")
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", parents=[common], help="decode throughput per algorithm")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DualRSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

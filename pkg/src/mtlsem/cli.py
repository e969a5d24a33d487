"""Command-line surface.

Exit codes: 0 verdict true / success, 1 verdict false, 2 unknown verdict,
3 input error, 4 internal invariant failure.  Machine output is JSON on
stdout; --pretty switches to an indented human layout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gallery
from .compilers import compile_itw, compile_pw
from .encodings import compact, compact_lasso, word_to_tss
from .errors import InvariantError, MtlsemError
from .formulas import (
    alphabet,
    atoms,
    horizon,
    is_bounded,
    parse,
    subformulas,
    temporal_depth,
    to_text,
    uses_beta,
)
from .interval_based import (
    Verdict3,
    eval_its,
    eval_itw,
    eval_itw_lasso,
    sat_set_its,
    sat_set_itw,
)
from .intervals import INF, rat_str, rational
from .mixed import eval_mx, eval_mx_lasso, sat_set_mx
from .oracle import (
    critical_points,
    gen_formula,
    gen_word,
    oracle_eval_its,
    oracle_eval_itw,
    oracle_eval_mx,
    oracle_eval_pw,
)
from .pointwise import eval_pw, eval_pw_lasso, sat_positions
from .structures import (
    Lasso,
    TimedStateSequence,
    TimedWord,
    lasso_to_json,
    load_input,
    tss_to_json,
    word_to_json,
)

OK, FALSE, UNKNOWN, INPUT_ERROR, INVARIANT = 0, 1, 2, 3, 4


def _emit(obj, pretty: bool):
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True))


def _load(path: str, allow_raw: bool):
    return load_input(path, allow_nonzero_start=allow_raw)


def _the_alphabet(args, loaded=None):
    if args.alphabet:
        return alphabet(args.alphabet)
    symbols = set()
    if isinstance(loaded, TimedWord):
        symbols = set(loaded.actions)
    elif isinstance(loaded, Lasso):
        symbols = set(loaded.prefix.actions) | set(loaded.period_actions)
    elif isinstance(loaded, TimedStateSequence):
        for props, _ in loaded.steps:
            symbols |= props
    if not symbols:
        raise MtlsemError("no --alphabet given and none inferable from the input")
    return alphabet(sorted(symbols))


def _formula(args, sigma, allow_beta: bool):
    text = args.formula
    if text is None and getattr(args, "formula_file", None):
        with open(args.formula_file) as fh:
            text = fh.read().strip()
    if text is None:
        raise MtlsemError("no formula given (use --formula or --formula-file)")
    return parse(text, sigma, allow_beta=allow_beta)


def _verdict_exit(v) -> int:
    if isinstance(v, Verdict3):
        return {Verdict3.TRUE: OK, Verdict3.FALSE: FALSE, Verdict3.UNKNOWN: UNKNOWN}[v]
    return OK if v else FALSE


def _verdict_str(v) -> str:
    return v.value if isinstance(v, Verdict3) else ("true" if v else "false")


# ---------------------------------------------------------------------------
# subcommands

def cmd_parse(args) -> int:
    sigma = alphabet(args.alphabet) if args.alphabet else alphabet("a,b,c")
    f = _formula(args, sigma, allow_beta=args.beta)
    h = horizon(f)
    _emit({
        "canonical": to_text(f),
        "atoms": sorted(atoms(f)),
        "horizon": rat_str(h) if h != INF else "inf",
        "bounded": is_bounded(f),
        "uses_beta": uses_beta(f),
        "temporal_depth": temporal_depth(f),
    }, args.pretty)
    return OK


def cmd_eval(args, via_oracle: bool = False) -> int:
    loaded = _load(args.word, args.allow_nonzero_start)
    sigma = _the_alphabet(args, loaded)
    f = _formula(args, sigma, allow_beta=args.semantics == "mx")
    sem = args.semantics
    cut = rational(args.horizon) if args.horizon else None

    if isinstance(loaded, Lasso):
        if via_oracle:
            raise MtlsemError("the oracle evaluates finite inputs only")
        if sem == "pw":
            verdict = eval_pw_lasso(loaded, f, max_copies=args.max_unroll)
        elif sem == "itw":
            verdict = eval_itw_lasso(loaded, f, cut=cut)
        elif sem == "mx":
            verdict = eval_mx_lasso(loaded, f, cut=cut)
        else:
            raise MtlsemError("state-sequence semantics takes no lasso input")
    elif isinstance(loaded, TimedStateSequence):
        if sem != "its":
            raise MtlsemError(f"a state sequence cannot be read under {sem}")
        t = rational(args.time or "0")
        verdict = (oracle_eval_its if via_oracle else eval_its)(loaded, t, f)
    else:
        if sem == "pw":
            i = args.position or 0
            verdict = (oracle_eval_pw if via_oracle else eval_pw)(loaded, i, f)
        elif sem == "itw":
            t = rational(args.time or "0")
            verdict = (oracle_eval_itw if via_oracle else eval_itw)(loaded, t, f)
        elif sem == "its":
            kappa = word_to_tss(loaded)
            t = rational(args.time or "0")
            verdict = (oracle_eval_its if via_oracle else eval_its)(kappa, t, f)
        else:
            cw = compact(loaded)
            t = rational(args.time or "0")
            j = args.pos or 0
            verdict = (oracle_eval_mx if via_oracle else eval_mx)(cw, t, j, f)

    _emit({"semantics": sem, "formula": to_text(f), "verdict": _verdict_str(verdict)},
          args.pretty)
    return _verdict_exit(verdict)


def cmd_satset(args) -> int:
    loaded = _load(args.word, args.allow_nonzero_start)
    if isinstance(loaded, Lasso):
        raise MtlsemError("satisfaction sets are computed over finite inputs")
    sigma = _the_alphabet(args, loaded)
    sem = args.semantics
    f = _formula(args, sigma, allow_beta=sem == "mx")
    out = {"semantics": sem, "sets": []}
    if sem == "itw":
        if not isinstance(loaded, TimedWord):
            raise MtlsemError("itw needs a timed word")
        for sub in subformulas(f):
            got = sat_set_itw(loaded, sub)
            out["sets"].append({"formula": to_text(sub),
                                "parts": [str(p) for p in got.parts]})
    elif sem == "its":
        kappa = loaded if isinstance(loaded, TimedStateSequence) else word_to_tss(loaded)
        for sub in subformulas(f):
            got = sat_set_its(kappa, sub)
            out["sets"].append({"formula": to_text(sub),
                                "parts": [str(p) for p in got.parts]})
    elif sem == "mx":
        if not isinstance(loaded, TimedWord):
            raise MtlsemError("mx needs a timed word")
        cw = compact(loaded)
        for sub in subformulas(f):
            got = sat_set_mx(cw, sub)
            out["sets"].append({
                "formula": to_text(sub),
                "points": sorted([k, j] for k, j in got.points),
                "gaps": [str(p) for p in got.gap.parts],
            })
    else:
        raise MtlsemError("satisfaction sets exist for itw, its and mx only")
    _emit(out, args.pretty)
    return OK


def cmd_compile(args) -> int:
    sigma = alphabet(args.alphabet) if args.alphabet else alphabet("a,b,c")
    f = _formula(args, sigma, allow_beta=False)
    compiled = compile_pw(f, sigma) if args.target == "pw2mx" else compile_itw(f, sigma)
    _emit({"target": args.target, "source": to_text(f), "compiled": to_text(compiled)},
          args.pretty)
    return OK


def cmd_encode(args) -> int:
    loaded = _load(args.word, args.allow_nonzero_start)
    if isinstance(loaded, Lasso):
        if args.to == "word":
            _emit(lasso_to_json(loaded), args.pretty)
            return OK
        cl = compact_lasso(loaded)
        prefix = {"blocks": [[list(a), rat_str(t)] for a, t in cl.prefix.blocks]}
        if args.to == "compact":
            _emit({"prefix": prefix,
                   "period": {"blocks": [[list(a), rat_str(o)] for a, o in cl.period_blocks],
                              "duration": rat_str(cl.period_duration)}}, args.pretty)
            return OK
        from .encodings import lasso_to_tss_steps

        _emit(tss_to_json(lasso_to_tss_steps(loaded, copies=2)), args.pretty)
        return OK
    if isinstance(loaded, TimedStateSequence):
        raise MtlsemError("state sequences are encoding targets, not sources")
    if args.to == "word":
        _emit(word_to_json(loaded), args.pretty)
    elif args.to == "compact":
        cw = compact(loaded)
        _emit({"blocks": [[list(a), rat_str(t)] for a, t in cw.blocks]}, args.pretty)
    else:
        _emit(tss_to_json(word_to_tss(loaded)), args.pretty)
    return OK


def cmd_check(args) -> int:
    from .structures import is_action_based, is_strictly_monotone, is_stutter_free

    loaded = _load(args.word, args.allow_nonzero_start)
    if isinstance(loaded, Lasso):
        out = {"kind": "lasso", "valid": True,
               "prefix_length": len(loaded.prefix),
               "period_length": len(loaded.period_actions),
               "period_duration": rat_str(loaded.period_duration)}
    elif isinstance(loaded, TimedStateSequence):
        out = {"kind": "state-sequence", "valid": True, "length": len(loaded),
               "action_based": is_action_based(loaded)}
    else:
        out = {"kind": "word", "valid": True, "length": len(loaded),
               "stutter_free": is_stutter_free(loaded),
               "strictly_monotone": is_strictly_monotone(loaded)}
    _emit(out, args.pretty)
    return OK


def _fuzz_one(engine: str, seed: int):
    """Compare one fuzzed case against the oracle; return a divergence or None."""
    sigma = alphabet("a,b,c")
    rho = gen_word(seed)
    f = gen_formula(seed * 2654435761 % (2**31), sigma,
                    allow_beta=engine == "mx")
    if engine == "pw":
        got = sat_positions(rho, f)
        for i in range(len(rho)):
            expect = oracle_eval_pw(rho, i, f)
            if (i in got) != expect:
                return {"at": i, "engine": i in got, "oracle": expect,
                        "word": word_to_json(rho), "formula": to_text(f)}
    elif engine == "itw":
        got = sat_set_itw(rho, f)
        for t in critical_points(rho, f):
            expect = oracle_eval_itw(rho, t, f)
            if got.member(t) != expect:
                return {"at": rat_str(t), "engine": got.member(t), "oracle": expect,
                        "word": word_to_json(rho), "formula": to_text(f)}
    elif engine == "its":
        kappa = word_to_tss(rho)
        got = sat_set_its(kappa, f)
        for t in critical_points(kappa, f):
            expect = oracle_eval_its(kappa, t, f)
            if got.member(t) != expect:
                return {"at": rat_str(t), "engine": got.member(t), "oracle": expect,
                        "word": word_to_json(rho), "formula": to_text(f)}
    elif engine == "mx":
        cw = compact(rho)
        got = sat_set_mx(cw, f)
        stamps = set(cw.times)
        samples = [(t, j) for k, (acts, t) in enumerate(cw.blocks)
                   for j in range(len(acts))]
        samples += [(t, 0) for t in critical_points(cw, f) if t not in stamps]
        for t, j in samples:
            k = next((kk for kk, (_, ts) in enumerate(cw.blocks) if ts == t), None)
            engine_v = ((k, j) in got.points) if k is not None else got.gap.member(t)
            expect = oracle_eval_mx(cw, t, j, f)
            if engine_v != expect:
                return {"at": [rat_str(t), j], "engine": engine_v, "oracle": expect,
                        "word": word_to_json(rho), "formula": to_text(f)}
    return None


def cmd_fuzz(args) -> int:
    engines = ["pw", "itw", "its", "mx"] if args.engine == "all" else [args.engine]
    ran = 0
    for engine in engines:
        for case in range(args.cases):
            seed = args.seed + case
            diverged = _fuzz_one(engine, seed)
            ran += 1
            if diverged:
                diverged.update({"engine_name": engine, "seed": seed})
                _emit({"cases_run": ran, "divergence": diverged}, args.pretty)
                return INVARIANT
    _emit({"cases_run": ran, "divergence": None}, args.pretty)
    return OK


def cmd_paper(args) -> int:
    results = gallery.run_all()
    if args.name:
        results = [r for r in results if args.name in r.name]
        if not results:
            raise MtlsemError(f"no gallery check matches {args.name!r}")
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{mark}  {r.name}: {r.detail}")
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return OK if failed == 0 else INVARIANT


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="mtlsem",
        description="Exact MTL evaluation over timed words: pointwise, "
                    "interval-based, and mixed semantics.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, word_input=True):
        p.add_argument("--alphabet", help="comma-separated action symbols")
        p.add_argument("--pretty", action="store_true", help="indented output")
        p.add_argument("--formula", help="formula in concrete syntax")
        p.add_argument("--formula-file", help="file holding the formula")
        if word_input:
            p.add_argument("--word", required=True,
                           help="JSON file: timed word, lasso, or state sequence")
            p.add_argument("--allow-nonzero-start", action="store_true",
                           help="accept raw inputs that do not start at time 0")

    p = sub.add_parser("parse", help="echo the canonical form and metrics")
    common(p, word_input=False)
    p.add_argument("--beta", action="store_true", help="allow the position-zero atom")
    p.set_defaults(fn=cmd_parse)

    for name, oracle_flag in (("eval", False), ("oracle", True)):
        p = sub.add_parser(
            name, help="evaluate a formula" + (" with the brute-force oracle"
                                               if oracle_flag else ""))
        common(p)
        p.add_argument("--semantics", required=True, choices=["pw", "itw", "its", "mx"])
        p.add_argument("--position", type=int, help="event position (pw)")
        p.add_argument("--time", help="evaluation time (itw/its/mx)")
        p.add_argument("--pos", type=int, help="intra-timestamp position (mx)")
        p.add_argument("--horizon", help="override the lasso unroll horizon")
        p.add_argument("--max-unroll", type=int,
                       help="extra period copies for pointwise lasso evaluation")
        p.set_defaults(fn=lambda a, flag=oracle_flag: cmd_eval(a, via_oracle=flag))

    p = sub.add_parser("satset", help="dump per-subformula satisfaction sets")
    common(p)
    p.add_argument("--semantics", required=True, choices=["itw", "its", "mx"])
    p.set_defaults(fn=cmd_satset)

    p = sub.add_parser("compile", help="compile into the mixed semantics")
    common(p, word_input=False)
    p.add_argument("--target", required=True, choices=["pw2mx", "itw2mx"])
    p.set_defaults(fn=cmd_compile)

    p = sub.add_parser("encode", help="translate between the timed models")
    common(p)
    p.add_argument("--to", required=True, choices=["compact", "tss", "word"])
    p.set_defaults(fn=cmd_encode)

    p = sub.add_parser("check", help="validate an input and report its classes")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("fuzz", help="differential-test the engines against the oracle")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--engine", default="all", choices=["pw", "itw", "its", "mx", "all"])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_fuzz)

    p = sub.add_parser("paper", help="replay the bundled worked-example checks")
    p.add_argument("--all", action="store_true", help="run every check (default)")
    p.add_argument("--name", help="run only checks whose name contains this")
    p.set_defaults(fn=cmd_paper)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return INVARIANT
    except (MtlsemError, IndexError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())

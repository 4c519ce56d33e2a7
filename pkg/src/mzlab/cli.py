"""Command-line front end.

Commands: expand, eval, verify, enumerate, conjecture, latex, probe.
Exit codes: 0 on success / all checks passing, 1 on validation errors,
2 when a verification sweep finds a failing case.

All exact numbers are serialized as strings, never floats; output is
byte-identical across runs for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import relations, sums
from .algebra import WordCombo, circled_product, star_sum
from .expander import drop_ones, expand_index
from .indices import (
    DomainError,
    canonical_key,
    composition_to_index,
    enumerate_class,
    index_to_composition,
    index_to_word,
    is_admissible,
    mzv_dual,
    validate_composition,
    validate_index,
)


class CLIError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message)


def parse_index(text: str):
    try:
        entries = tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise DomainError(f"cannot parse index {text!r}")
    validate_index(entries)
    return entries


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse rational {text!r}")


def _t_samples(args) -> tuple:
    if getattr(args, "t", None):
        return tuple(sums.require_noninteger(parse_rational(s)) for s in args.t)
    if getattr(args, "seed", None) is not None:
        return sums.random_noninteger_rationals(args.seed, 5)
    return sums.T_SAMPLES


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def expansion_payload(k) -> dict:
    terms = expand_index(k)
    return {
        "index": list(k),
        "weight": sum(k),
        "terms": [
            {"index": list(l), "coeff": str(c)}
            for l, c in sorted(terms.items(), key=lambda kv: canonical_key(kv[0]))
        ],
    }


def expansion_latex(k) -> str:
    terms = expand_index(k)
    lhs = "\\zeta(" + ",".join(map(str, k)) + ")"
    parts = []
    for l, c in sorted(terms.items(), key=lambda kv: canonical_key(kv[0])):
        zeta = "\\zeta(" + ",".join(map(str, l)) + ")"
        mag = abs(c)
        body = zeta if mag == 1 else f"{mag}{zeta}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return f"{lhs}={''.join(parts) if parts else '0'}"


# ---------------------------------------------------------------------------
# verification families.  Each generator yields JSON-able case dicts; the
# top-level runner evaluates one case so sweeps can fan out to worker
# processes.


def _all_indices(max_weight: int):
    out = []
    for w in range(1, max_weight + 1):
        for depth in range(1, w + 1):
            out.extend(relations.compositions_of(w, depth))
    return sorted(out, key=canonical_key)


def _admissible(max_weight: int):
    out = []
    for w in range(2, max_weight + 1):
        out.extend(enumerate_class(w, "adm"))
    return out


def _ge2_words(max_weight: int):
    out = []
    for w in range(2, max_weight + 1):
        out.extend(index_to_word(k) for k in enumerate_class(w, "ge2"))
    return out


def generate_cases(family: str, max_weight: int, n_max: int, t_samples) -> list:
    t_strs = [str(t) for t in t_samples]
    cases = []
    if family == "msw":
        for k in _all_indices(max_weight):
            for N in range(1, n_max + 1):
                cases.append({"k": k, "N": N})
    elif family == "two-row":
        max_entry = 3
        pairs = []
        for depth in (1, 2):
            idxs = [
                t
                for w in range(depth, depth * max_entry + 1)
                for t in relations.compositions_of(w, depth)
                if max(t) <= max_entry
            ]
            pairs.extend((l, k) for l in idxs for k in idxs if len(l) == len(k))
        for l, k in pairs:
            for N in range(2, n_max + 1):
                cases.append({"l": l, "k": k, "N": N})
    elif family in ("dia-flat", "dia-duality", "dia-star", "central"):
        for k in _admissible(max_weight):
            for N in range(2, n_max + 1):
                cases.append({"k": k, "N": N})
    elif family == "harmonic":
        w2_words = _ge2_words(min(max_weight - 1, 4))
        for k1 in _admissible(min(max_weight, 5)):
            for w2 in w2_words:
                for N in range(2, n_max + 1):
                    cases.append({"k1": k1, "w2": w2, "N": N})
    elif family == "kawashima":
        words = [w for v in range(1, 4) for w in relations.yh_words(v)]
        for w1 in words:
            for w2 in words:
                if w2 < w1:
                    continue
                for m in range(1, 4):
                    for N in range(2, n_max + 1):
                        cases.append({"w1": w1, "w2": w2, "m": m, "N": N})
    elif family == "f-mult":
        idxs = _all_indices(min(max_weight, 4))
        for k in idxs:
            for l in idxs:
                if canonical_key(l) < canonical_key(k):
                    continue
                for t in t_strs:
                    for N in range(2, n_max + 1):
                        cases.append({"k": k, "l": l, "t": t, "N": N})
    elif family == "fg-duality":
        for k in _all_indices(max_weight):
            for t in t_strs:
                for N in range(2, n_max + 1):
                    cases.append({"k": k, "t": t, "N": N})
    elif family == "g-series":
        for k in _all_indices(max_weight):
            for N in range(2, n_max + 1):
                cases.append({"k": k, "N": N, "M": 3})
    elif family in ("difference", "h-forms"):
        comps = [
            c
            for w in range(2, max_weight + 1)
            for parts in range(2, w + 1, 2)
            for c in relations.compositions_of(w, parts)
        ]
        for c in comps:
            for N in range(1 if family == "difference" else 2, n_max + 1):
                cases.append({"c": c, "N": N})
    elif family == "boundary":
        idxs = [k for k in _all_indices(min(max_weight, 4)) if len(k) <= 2]
        for k in idxs:
            for t in t_strs[:2]:
                for N in range(2, n_max + 1):
                    cases.append({"k": k, "t": t, "N": N})
    elif family == "transport":
        idxs = [k for k in _all_indices(min(max_weight, 3)) if len(k) <= 2]
        for k in idxs:
            for l in idxs:
                for t in t_strs[:2]:
                    for N in range(2, n_max + 1):
                        cases.append({"k": k, "l": l, "t": t, "N": N})
    elif family == "kaneko-sakata":
        for a in range(1, max_weight):
            for b in range(1, max_weight - a + 1):
                cases.append({"a": a, "b": b, "n_max": n_max})
    elif family == "murahara-sakata":
        for a in range(1, max_weight):
            for wb in range(1, max_weight - a + 1):
                for s in range(1, min(a, wb) + 1):
                    for b in relations.compositions_of(wb, s):
                        cases.append({"a": a, "b": b, "n_max": n_max})
    elif family == "linkaw":
        for total in range(2, max_weight):
            for v1 in range(1, total):
                for w1 in relations.yh_words(v1):
                    for w2 in relations.yh_words(total - v1):
                        if w2 < w1:
                            continue
                        cases.append({"w1": w1, "w2": w2, "n_max": n_max})
    elif family == "linkaw-star":
        for w3 in [""] + _ge2_words(max(max_weight - 4, 2)):
            rem = max_weight - 1 - len(w3)
            for total in range(2, rem + 1):
                for v1 in range(1, total):
                    for w1 in relations.yh_words(v1):
                        for w2 in relations.yh_words(total - v1):
                            if w2 < w1:
                                continue
                            cases.append(
                                {"w1": w1, "w2": w2, "w3": w3, "n_max": n_max}
                            )
    elif family == "duality":
        for k in _admissible(max_weight):
            cases.append({"k": k, "n_max": n_max})
    else:
        raise DomainError(f"unknown verification family {family!r}")
    return cases


def run_case(family: str, case: dict) -> dict:
    """Evaluate one verification case; returns the JSON-able report line."""
    ok = False
    if family == "msw":
        k, N = tuple(case["k"]), case["N"]
        ok = sums.zeta_n(k, N) == sums.zeta_flat(k, N)
    elif family == "two-row":
        l, k, N = tuple(case["l"]), tuple(case["k"]), case["N"]
        ok = sums.zeta_tworow(l, k, N) == sums.zeta_flat_tworow(l, k, N)
    elif family == "dia-flat":
        k, N = tuple(case["k"]), case["N"]
        ok = sums.zeta_dia(k, N) == sums.zeta_dia_flat(k, N)
    elif family == "dia-duality":
        k, N = tuple(case["k"]), case["N"]
        ok = sums.zeta_dia(k, N) == sums.zeta_dia(mzv_dual(k), N)
    elif family == "dia-star":
        k, N = tuple(case["k"]), case["N"]
        try:
            sums.zeta_dia_star(k, N)
            ok = True
        except AssertionError:
            ok = False
    elif family == "central":
        k, N = tuple(case["k"]), case["N"]
        combo = drop_ones(index_to_composition(k))
        ok = sums.zeta_dia(k, N) == sums.eval_Z_dia(combo, N)
    elif family == "harmonic":
        k1, w2, N = tuple(case["k1"]), case["w2"], case["N"]
        a = WordCombo.from_index(k1)
        b = WordCombo.from_word(w2)
        from .algebra import harmonic_product

        lhs = sums.eval_Z_dia(harmonic_product(a, b), N)
        ok = lhs == sums.eval_Z_dia(a, N) * sums.eval_Z_dia(b, N)
    elif family == "kawashima":
        ok = relations.kawashima_dia_holds(
            case["w1"], case["w2"], case["m"], case["N"]
        )
    elif family == "f-mult":
        from .algebra import star_harmonic_product

        k, l = tuple(case["k"]), tuple(case["l"])
        t, N = Fraction(case["t"]), case["N"]
        prod = star_harmonic_product(
            WordCombo.from_index(k), WordCombo.from_index(l)
        )
        lhs = sums.F_kawashima(k, N, t) * sums.F_kawashima(l, N, t)
        ok = lhs == sums.eval_F(prod, N, t)
    elif family == "fg-duality":
        from .indices import hoffman_dual

        k, t, N = tuple(case["k"]), Fraction(case["t"]), case["N"]
        ok = sums.F_kawashima(k, N, t) == sums.G_kawashima(hoffman_dual(k), N, t)
    elif family == "g-series":
        k, N, M = tuple(case["k"]), case["N"], case["M"]
        series = sums.G_series(k, N, M)
        ok = series[0] == 0
        base = star_sum(index_to_word(k))
        for m in range(1, M + 1):
            merged = circled_product(base, WordCombo.from_word("y" * m))
            expected = sums.eval_Z_dia(merged, N)
            if m % 2 == 0:
                expected = -expected
            ok = ok and series[m] == expected
    elif family == "difference":
        ok = sums.difference_check(tuple(case["c"]), case["N"])
    elif family == "h-forms":
        c, N = tuple(case["c"]), case["N"]
        h = sums.f_g_h(c, N)[2]
        ok = h == sums.h_via_f(c, N) and h == sums.h_via_g(c, N)
    elif family == "boundary":
        k, t, N = tuple(case["k"]), Fraction(case["t"]), case["N"]
        ok = sums.connected_sum_up(k, N, t) == sums.G_kawashima(k, N, t)
        ok = ok and sums.connected_sum((1,), k, N, t) == sums.F_kawashima(k, N, t)
    elif family == "transport":
        k, l = tuple(case["k"]), tuple(case["l"])
        t, N = Fraction(case["t"]), case["N"]
        k_up = k[:-1] + (k[-1] + 1,)
        l_left = (1,) + l
        k_right = k + (1,)
        l_up = (l[0] + 1,) + l[1:]
        ok = sums.connected_sum(k_up, l, N, t) == sums.connected_sum(
            k, l_left, N, t
        )
        ok = ok and sums.connected_sum(k_right, l, N, t) == sums.connected_sum(
            k, l_up, N, t
        )
        ok = ok and sums.connected_sum_up(k, N, t) == sums.connected_sum(
            k, (1,), N, t
        )
    elif family == "kaneko-sakata":
        inst = relations.kaneko_sakata(case["a"], case["b"])
        ok = _relation_ok(inst, case["n_max"])
    elif family == "murahara-sakata":
        inst = relations.murahara_sakata(case["a"], tuple(case["b"]))
        ok = _relation_ok(inst, case["n_max"])
    elif family == "linkaw":
        inst = relations.linkaw(case["w1"], case["w2"])
        ok = _relation_ok(inst, case["n_max"])
    elif family == "linkaw-star":
        w3 = case["w3"]
        if w3:
            inst = relations.linkaw_star(case["w1"], case["w2"], w3)
        else:
            inst = relations.linkaw(case["w1"], case["w2"])
        ok = _relation_ok(inst, case["n_max"])
    elif family == "duality":
        inst = relations.duality_instance(tuple(case["k"]))
        ok = _relation_ok(inst, case["n_max"])
    else:
        raise DomainError(f"unknown verification family {family!r}")
    line = {"family": family, "case": case, "ok": ok}
    if "N" in case:
        line["N"] = case["N"]
    return line


def _relation_ok(inst, n_max: int) -> bool:
    by_nf = relations.verify(inst, "normal_form")["ok"]
    by_eval = relations.verify(inst, "dia_eval", range(2, n_max + 1))["ok"]
    return by_nf and by_eval


_FAMILY_DEFAULTS = {
    # family: (max_weight, n_max)
    "msw": (6, 20),
    "two-row": (6, 12),
    "dia-flat": (7, 15),
    "dia-duality": (8, 20),
    "dia-star": (6, 15),
    "central": (8, 25),
    "harmonic": (5, 15),
    "kawashima": (3, 12),
    "f-mult": (4, 10),
    "fg-duality": (5, 10),
    "g-series": (4, 10),
    "difference": (6, 15),
    "h-forms": (6, 15),
    "boundary": (4, 8),
    "transport": (3, 8),
    "kaneko-sakata": (8, 12),
    "murahara-sakata": (7, 12),
    "linkaw": (8, 12),
    "linkaw-star": (9, 12),
    "duality": (8, 12),
}

def _pool_run(payload):
    family, case = payload
    return run_case(family, case)


def cmd_verify(args) -> int:
    families = (
        sorted(_FAMILY_DEFAULTS) if args.family == "all" else [args.family]
    )
    t_samples = _t_samples(args)
    counts = {}
    failed = 0
    out = sys.stdout
    for family in families:
        default_w, default_n = _FAMILY_DEFAULTS.get(family, (5, 10))
        max_weight = args.max_weight or default_w
        n_max = args.n_max or default_n
        cases = generate_cases(family, max_weight, n_max, t_samples)
        payloads = [(family, case) for case in cases]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_pool_run, payloads, chunksize=16))
        else:
            results = [_pool_run(p) for p in payloads]
        passed_count = 0
        for line in results:
            if not line["ok"]:
                failed += 1
            else:
                passed_count += 1
            if args.format == "text":
                status = "ok" if line["ok"] else "FAIL"
                print(f"{status} {family} {line['case']}", file=out)
            else:
                print(_dump(line), file=out)
        counts[family] = (passed_count, len(results) - passed_count)
    if args.plot:
        from .plotting import save_verify_figure

        save_verify_figure(counts, args.plot)
    return 2 if failed else 0


def cmd_expand(args) -> int:
    k = parse_index(args.index)
    if not k or not is_admissible(k):
        raise DomainError(f"index {args.index!r} is not admissible")
    if args.format == "latex":
        print(expansion_latex(k))
    elif args.format == "text":
        payload = expansion_payload(k)
        for term in payload["terms"]:
            print(f"{term['coeff']}\t{','.join(map(str, term['index']))}")
    else:
        print(_dump(expansion_payload(k)))
    return 0


def cmd_latex(args) -> int:
    k = parse_index(args.index)
    if not k or not is_admissible(k):
        raise DomainError(f"index {args.index!r} is not admissible")
    print(expansion_latex(k))
    return 0


def cmd_eval(args) -> int:
    N = args.n
    if N is None:
        raise DomainError("eval needs --n")
    t_samples = _t_samples(args)
    t = t_samples[0]
    if args.composition:
        c = parse_index(args.composition)
        validate_composition(c)
        k = composition_to_index(c)
    else:
        if not args.index:
            raise DomainError("eval needs an index (or --composition)")
        k = parse_index(args.index)
        c = None
    kind = args.kind
    if kind == "n":
        value = sums.zeta_n(k, N)
    elif kind == "dia":
        value = sums.zeta_dia(k, N)
    elif kind == "dia-star":
        value = sums.zeta_dia_star(k, N)
    elif kind == "flat":
        value = sums.zeta_flat(k, N)
    elif kind == "dia-flat":
        value = sums.zeta_dia_flat(k, N)
    elif kind == "float":
        value = sums.zeta_float(k, N)
    elif kind == "kaw-f":
        value = sums.F_kawashima(k, N, t)
    elif kind == "kaw-g":
        value = sums.G_kawashima(k, N, t)
    elif kind in ("f", "g", "h"):
        if c is None:
            c = index_to_composition(k)
        value = sums.f_g_h(c, N)[{"f": 0, "g": 1, "h": 2}[kind]]
    else:
        raise DomainError(f"unknown eval kind {kind!r}")
    rendered = repr(value) if kind == "float" else str(value)
    if args.format == "json":
        payload = {"kind": kind, "index": list(k), "n": N, "value": rendered}
        if c is not None:
            payload["composition"] = list(c)
        print(_dump(payload))
    else:
        print(rendered)
    return 0


def cmd_enumerate(args) -> int:
    rows = enumerate_class(args.weight, args.cls)
    if args.format == "json":
        for k in rows:
            print(_dump(list(k)))
    else:
        for k in rows:
            print(",".join(map(str, k)))
    return 0


def cmd_conjecture(args) -> int:
    weights = [args.weight] if args.weight else [5, 6, 7, 8]
    reports = []
    all_met = True
    for w in weights:
        report = relations.conjecture_explorer(w, budget=args.budget)
        reports.append(report)
        all_met = all_met and report["met"]
        print(_dump(report))
    if args.plot:
        from .plotting import save_conjecture_figure

        save_conjecture_figure(reports, args.plot)
    return 0 if all_met else 2


def cmd_probe(args) -> int:
    k = parse_index(args.index)
    if not k or not is_admissible(k):
        raise DomainError(f"index {args.index!r} is not admissible")
    expansion = expand_index(k)
    ns = [int(part) for part in args.n_list.split(",")]
    rows = []
    for N in ns:
        lhs = sums.zeta_float(k, N)
        rhs = sum(c * sums.zeta_float(l, N) for l, c in expansion.items())
        rows.append((N, lhs, rhs, abs(lhs - rhs)))
    for N, lhs, rhs, err in rows:
        print(_dump({"N": N, "lhs": repr(lhs), "rhs": repr(rhs), "abs_error": repr(err)}))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("N,lhs,rhs,abs_error\n")
            for N, lhs, rhs, err in rows:
                fh.write(f"{N},{lhs!r},{rhs!r},{err!r}\n")
    if args.plot:
        from .plotting import save_probe_figure

        save_probe_figure(rows, args.plot, title="expansion residual for " + args.index)
    return 0


def build_parser() -> Parser:
    parser = Parser(prog="mzlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format="json"):
        p.add_argument(
            "--format", choices=("json", "text", "latex"), default=default_format
        )
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--t", action="append", default=None, metavar="RATIONAL")

    p = sub.add_parser("expand", help="integer expansion over the ge-2 indices")
    p.add_argument("index")
    add_common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("latex", help="expansion rendered as a LaTeX identity")
    p.add_argument("index")
    add_common(p)
    p.set_defaults(func=cmd_latex)

    p = sub.add_parser("eval", help="evaluate one truncated sum exactly")
    p.add_argument(
        "kind",
        choices=(
            "n",
            "dia",
            "dia-star",
            "flat",
            "dia-flat",
            "float",
            "kaw-f",
            "kaw-g",
            "f",
            "g",
            "h",
        ),
    )
    p.add_argument("index", nargs="?", default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--composition", default=None)
    add_common(p, default_format="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="exact verification sweeps by family")
    p.add_argument(
        "--family", default="all", choices=["all"] + sorted(_FAMILY_DEFAULTS)
    )
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--plot", default=None, metavar="FILE")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list an index class at one weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("adm", "ge2", "hoffman"), required=True)
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("conjecture", help="rank exploration of the closed Kawashima span")
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--budget", type=int, default=5000)
    p.add_argument("--plot", default=None, metavar="FILE")
    add_common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("probe", help="floating-point convergence probe of an expansion")
    p.add_argument("index")
    p.add_argument("--n-list", default="500,2000")
    p.add_argument("--csv", default=None, metavar="FILE")
    p.add_argument("--plot", default=None, metavar="FILE")
    add_common(p)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

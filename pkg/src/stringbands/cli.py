"""Command-line front end.

Every subcommand prints one JSON document on stdout with a fixed key order,
so outputs are byte-stable for golden tests.  Exit codes: 0 success, 2
parse error, 3 domain-precondition error, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .algebra import (
    gentle_vertices,
    is_gentle_algebra,
    load_algebra,
    validate_algebra,
)
from .bands import BandClass, canonical_class, enumerate_bands
from .components import (
    Case1Witness,
    Case2Witness,
    concat_extension,
    decide_component,
    extendable,
    negligible,
    reverse_piece,
    split_band,
)
from .errors import DomainError, InvalidWitness, NotAString, NotBand, ParseError, ZeroParameter
from .hom import (
    hom_band_band,
    hom_band_string,
    hom_string_band,
    hom_string_string,
    make_sequence,
)
from .oracle import dim_hom, realize_band, realize_string
from .words import canonical_word, enumerate_strings, format_word, is_string, parse_word

_PARAMETER_POOL = (Fraction(2), Fraction(3), Fraction(5))


def _result(command, inputs, result, witnesses=None):
    out = {"command": command, "inputs": inputs, "result": result}
    if witnesses:
        out["witnesses"] = witnesses
    return out


def _fmt_band(qb) -> str:
    return format_word(qb.as_word())


def _fmt_class(cls: BandClass) -> str:
    return _fmt_band(cls.canonical)


def _class_or_none(spec, qb):
    try:
        return _fmt_class(canonical_class(spec, qb))
    except NotBand:
        return None


def cmd_validate(args) -> dict:
    spec = load_algebra(args.file)
    report = validate_algebra(spec)
    result = {
        "valid": report.valid,
        "violations": [list(v) for v in report.violations],
        "quadratic": report.quadratic,
        "admissibility_bound": report.admissibility_bound,
        "redundant_relations": [".".join(r) for r in report.redundant_relations],
        "gentle_vertices": None,
        "gentle": None,
    }
    if report.valid:
        gentle = gentle_vertices(spec)
        result["gentle_vertices"] = [u for u in spec.vertices if u in gentle]
        result["gentle"] = is_gentle_algebra(spec)
    return _result("validate", {"file": args.file}, result)


def cmd_enumerate(args) -> dict:
    spec = load_algebra(args.file)
    if args.kind == "strings":
        entries = [format_word(w) for w in enumerate_strings(spec, args.max_len)]
    else:
        entries = [_fmt_class(b) for b in enumerate_bands(spec, args.max_len)]
    inputs = {"file": args.file, "kind": args.kind, "max_len": args.max_len}
    return _result("enumerate", inputs, {"count": len(entries), "entries": entries})


def _parse_module(spec, text: str):
    if text.startswith("string:"):
        word = parse_word(text[len("string:") :])
        if not is_string(spec, word):
            raise NotAString(text[len("string:") :])
        return "string", canonical_word(spec, word)
    if text.startswith("band:"):
        return "band", canonical_class(spec, parse_word(text[len("band:") :]))
    raise ParseError(f"module must be string:<word> or band:<word>, got {text!r}")


def _check_parameter(value):
    if value is not None and value == 0:
        raise ZeroParameter("band parameter must be nonzero")
    return value


def cmd_hom(args) -> dict:
    spec = load_algebra(args.file)
    src_kind, src = _parse_module(spec, args.src)
    dst_kind, dst = _parse_module(spec, args.dst)
    lam = _check_parameter(args.lam)
    mu = _check_parameter(args.mu)
    inputs = {
        "file": args.file,
        "from": f"{src_kind}:{format_word(src) if src_kind == 'string' else _fmt_class(src)}",
        "to": f"{dst_kind}:{format_word(dst) if dst_kind == 'string' else _fmt_class(dst)}",
        "oracle": args.oracle,
        "lambda": str(lam) if lam is not None else None,
        "mu": str(mu) if mu is not None else None,
        "seed": args.seed,
    }
    if args.oracle:
        rng = random.Random(args.seed)
        if src_kind == "band" and lam is None:
            lam = rng.choice(_PARAMETER_POOL)
        if dst_kind == "band" and mu is None:
            mu = rng.choice([p for p in _PARAMETER_POOL if p != lam])
        X = realize_string(spec, src) if src_kind == "string" else realize_band(spec, src, lam)
        Y = realize_string(spec, dst) if dst_kind == "string" else realize_band(spec, dst, mu)
        result = {
            "dim": dim_hom(X, Y),
            "backend": "oracle",
            "lambda": str(lam) if lam is not None else None,
            "mu": str(mu) if mu is not None else None,
        }
    else:
        if src_kind == "string" and dst_kind == "string":
            dim = hom_string_string(spec, src, dst)
        elif src_kind == "band" and dst_kind == "string":
            dim = hom_band_string(spec, src, dst)
        elif src_kind == "string" and dst_kind == "band":
            dim = hom_string_band(spec, src, dst)
        else:
            dim = hom_band_band(spec, src, dst)
        result = {"dim": dim, "backend": "counts", "lambda": None, "mu": None}
    return _result("hom", inputs, result)


def cmd_component(args) -> dict:
    spec = load_algebra(args.file)
    words = [parse_word(w) for w in args.bands.split(",") if w.strip()]
    if not words:
        raise ParseError("--bands needs at least one band word")
    seq = make_sequence(spec, words)
    verdict = decide_component(spec, seq)
    witnesses = []
    classes = seq.classes
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            for x, y in ((i, j), (j, i)):
                wit = extendable(spec, classes[x], classes[y])
                if wit is not None:
                    witnesses.append(
                        {
                            "kind": "extendable",
                            "pair": [x, y],
                            "rot_b": _fmt_band(wit.rot_b),
                            "rot_c": _fmt_band(wit.rot_c),
                            "w": format_word(wit.w),
                            "beta": wit.beta,
                            "delta": wit.delta,
                            "concat": _fmt_band(wit.d),
                        }
                    )
    for i, cls in enumerate(classes):
        wit = negligible(spec, cls)
        if isinstance(wit, Case1Witness):
            witnesses.append(
                {
                    "kind": "negligible-case1",
                    "class": i,
                    "rot": _fmt_band(wit.rot),
                    "n": wit.n,
                    "w": format_word(wit.w),
                    "pieces": [_fmt_band(p) for p in wit.pieces],
                }
            )
        elif isinstance(wit, Case2Witness):
            witnesses.append(
                {
                    "kind": "negligible-case2",
                    "class": i,
                    "rot": _fmt_band(wit.rot),
                    "w": format_word(wit.w),
                    "u": format_word(wit.u),
                    "v": format_word(wit.v),
                    "reversed": _fmt_band(wit.reversed_band),
                }
            )
    inputs = {"file": args.file, "bands": [_fmt_class(c) for c in classes]}
    result = {
        "status": verdict.status,
        "reasons": list(verdict.reasons),
        "dimension": verdict.dimension,
    }
    return _result("component", inputs, result, witnesses)


def cmd_degenerate(args) -> dict:
    spec = load_algebra(args.file)
    band_word = parse_word(args.band)
    inputs = {"file": args.file, "band": args.band, "mode": args.mode}
    if args.mode == "reverse":
        if args.w is None or args.u is None or args.v is None:
            raise ParseError("reverse mode needs --w, --u and --v")
        inputs.update({"w": args.w, "u": args.u, "v": args.v})
        out = reverse_piece(
            spec,
            band_word,
            parse_word(args.w),
            parse_word(args.u),
            parse_word(args.v),
        )
        result = {
            "rotation": _fmt_band(out),
            "dominating": _class_or_none(spec, out),
        }
    elif args.mode == "split":
        wit = negligible(spec, canonical_class(spec, band_word))
        if not isinstance(wit, Case1Witness):
            raise InvalidWitness("band admits no case 1 witness")
        pieces = split_band(spec, wit)
        result = {
            "rot": _fmt_band(wit.rot),
            "n": wit.n,
            "w": format_word(wit.w),
            "pieces": [_fmt_band(p) for p in pieces],
            "piece_classes": [_class_or_none(spec, p) for p in pieces],
        }
    else:
        if args.other is None:
            raise ParseError("concat mode needs --with")
        inputs["with"] = args.other
        wit = extendable(spec, band_word, parse_word(args.other))
        if wit is None:
            raise InvalidWitness("pair is not extendable")
        d = concat_extension(spec, wit)
        result = {
            "rot_b": _fmt_band(wit.rot_b),
            "rot_c": _fmt_band(wit.rot_c),
            "w": format_word(wit.w),
            "beta": wit.beta,
            "delta": wit.delta,
            "concat": _fmt_band(d),
            "class": _class_or_none(spec, d),
        }
    return _result("degenerate", inputs, result)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stringbands",
        description="string and band module calculator for string algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the algebra axioms")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("enumerate", help="list strings or band classes")
    p.add_argument("file")
    p.add_argument("kind", choices=("strings", "bands"))
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("hom", help="hom dimension between two modules")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--lambda", dest="lam", type=_fraction, default=None)
    p.add_argument("--mu", dest="mu", type=_fraction, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_hom)

    p = sub.add_parser("component", help="decide a band sequence's closure")
    p.add_argument("file")
    p.add_argument("--bands", required=True, help="comma separated band words")
    p.set_defaults(handler=cmd_component)

    p = sub.add_parser("degenerate", help="rewrite a band along a degeneration")
    p.add_argument("file")
    p.add_argument("--band", required=True)
    p.add_argument("--mode", choices=("reverse", "split", "concat"), required=True)
    p.add_argument("--w", default=None)
    p.add_argument("--u", default=None)
    p.add_argument("--v", default=None)
    p.add_argument("--with", dest="other", default=None)
    p.set_defaults(handler=cmd_degenerate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args)
    except ParseError as exc:
        print(json.dumps({"error": "ParseError", "detail": str(exc)}), file=sys.stderr)
        return 2
    except DomainError as exc:
        kind = type(exc).__name__
        print(json.dumps({"error": kind, "detail": str(exc)}), file=sys.stderr)
        return 3
    except OSError as exc:
        print(json.dumps({"error": "ParseError", "detail": str(exc)}), file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 -- invariant violations map to 4
        kind = type(exc).__name__
        print(json.dumps({"error": kind, "detail": str(exc)}), file=sys.stderr)
        return 4
    print(json.dumps(payload, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())

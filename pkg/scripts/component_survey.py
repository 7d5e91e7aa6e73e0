#!/usr/bin/env python3
"""Survey component verdicts for the band families of an algebra.

Walks every band class up to a period bound, decides singleton component
status, then does the same for unordered pairs of classes.  Witnesses are
shown in compact form.

    python3 scripts/component_survey.py fixtures/two_loops_cubic.alg --max-period 6
"""

import argparse
import itertools
import sys

from stringbands import (
    Case1Witness,
    band_dimension,
    decide_component,
    enumerate_bands,
    extendable,
    format_word,
    load_algebra,
    negligible,
)


def class_name(cls):
    return format_word(cls.canonical.as_word())


def describe_negligible(wit):
    if wit is None:
        return "-"
    if isinstance(wit, Case1Witness):
        pieces = " + ".join(format_word(p.as_word()) for p in wit.pieces)
        return f"case1 n={wit.n} -> {pieces}"
    return (
        f"case2 w={format_word(wit.w)} u={format_word(wit.u)}"
        f" v={format_word(wit.v)}"
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("file", help="algebra description file")
    ap.add_argument("--max-period", type=int, default=6)
    ap.add_argument("--pairs", action="store_true",
                    help="also decide every unordered pair of classes")
    args = ap.parse_args(argv)

    spec = load_algebra(args.file)
    classes = enumerate_bands(spec, args.max_period)
    print(f"{args.file}: {len(classes)} band classes of period <= {args.max_period}\n")

    width = max((len(class_name(c)) for c in classes), default=10)
    print(f"{'class':<{width}}  dim  verdict       negligible")
    for cls in classes:
        verdict = decide_component(spec, [cls])
        line = (
            f"{class_name(cls):<{width}}  {band_dimension(cls):>3}"
            f"  {verdict.status:<12}"
        )
        if verdict.dimension is not None:
            line += f" dim {verdict.dimension:<4}"
        else:
            line += " " * 9
        print(line + describe_negligible(negligible(spec, cls)))

    if not args.pairs:
        return 0

    print("\nunordered pairs")
    for B, C in itertools.combinations_with_replacement(classes, 2):
        verdict = decide_component(spec, [B, C])
        tag = verdict.status
        if verdict.dimension is not None:
            tag += f" dim {verdict.dimension}"
        joins = []
        for left, right in ((B, C), (C, B)):
            wit = extendable(spec, left, right)
            if wit is not None:
                joins.append(format_word(wit.d.as_word()))
        extra = f"  joins: {', '.join(joins)}" if joins else ""
        print(f"  [{class_name(B)}, {class_name(C)}]  {tag}{extra}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

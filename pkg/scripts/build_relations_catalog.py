#!/usr/bin/env python3
"""Regenerate the relation catalog data file.

The catalog lists every exchange relation the verifier checks, as
expression trees over the named currents.  Records come in three families:
"plus" (checked with u symbolic), "double" (the same identities re-stated
for the doubled current system, checked with v symbolic), and "extra"
(identities that hold on every representation built here but are not part
of the asserted presentation lists).  One deliberately wrong variant is
recorded with expected = "fail".

Usage: build_relations_catalog.py [--check]
  --check  verify the existing data file matches instead of rewriting it
"""

import argparse
import json
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "yangian_sl3" / "data" / "relations.json"


def cur(name, var):
    return {"op": "current", "name": name, "var": var}


def diff(name):
    return {"op": "diff", "name": name}


def comm(a, b):
    return {"op": "commutator", "a": a, "b": b}


def acomm(a, b):
    return {"op": "anticommutator", "a": a, "b": b}


def prod(*fs):
    return {"op": "product", "factors": list(fs)}


def over(a):
    return {"op": "over_uv", "a": a}


def neg(a):
    return {"op": "neg", "a": a}


def add(*ts):
    return {"op": "add", "terms": list(ts)}


def scale(c, a):
    return {"op": "scale", "c": c, "a": a}


ZERO = {"op": "zero"}


def base_records():
    """The shared relation list, keyed by tag, with statements."""
    recs = []

    def rec(tag, statement, lhs, rhs, **kw):
        recs.append(dict(tag=tag, statement=statement, lhs=lhs, rhs=rhs, **kw))

    pretty = {"e3p": "e3'", "f3p": "f3'"}

    def nm(x):
        return pretty.get(x, x)

    # same-root exchange: raising currents close with a squared difference
    for i in (1, 2, 3):
        e = f"e{i}"
        rec(
            f"ee.{i}{i}",
            f"[{e}(u), {e}(v)] = -(({e}(u)-{e}(v))^2)/(u-v)",
            comm(cur(e, "u"), cur(e, "v")),
            neg(over(prod(diff(e), diff(e)))),
        )
        f = f"f{i}"
        rec(
            f"ff.{i}{i}",
            f"[{f}(u), {f}(v)] = (({f}(u)-{f}(v))^2)/(u-v)",
            comm(cur(f, "u"), cur(f, "v")),
            over(prod(diff(f), diff(f))),
        )

    # raising against lowering: diagonal current difference or zero
    for i in (1, 2):
        for j in (1, 2):
            if i == j:
                rec(
                    f"ef.{i}{j}",
                    f"[e{i}(u), f{i}(v)] = -(h{i}(u)-h{i}(v))/(u-v)",
                    comm(cur(f"e{i}", "u"), cur(f"f{j}", "v")),
                    neg(over(diff(f"h{i}"))),
                )
            else:
                rec(
                    f"ef.{i}{j}",
                    f"[e{i}(u), f{j}(v)] = 0",
                    comm(cur(f"e{i}", "u"), cur(f"f{j}", "v")),
                    ZERO,
                )
    rec(
        "ef.33",
        "[e3(u), f3(v)] = -(h3(u)-h3(v))/(u-v)",
        comm(cur("e3", "u"), cur("f3", "v")),
        neg(over(diff("h3"))),
    )

    # diagonal currents commute
    for i, j in ((1, 1), (1, 2), (2, 2)):
        rec(
            f"hh.{i}{j}",
            f"[h{i}(u), h{j}(v)] = 0",
            comm(cur(f"h{i}", "u"), cur(f"h{j}", "v")),
            ZERO,
        )

    # diagonal against same-root simple currents
    for i in (1, 2):
        rec(
            f"he.{i}{i}",
            f"[h{i}(u), e{i}(v)] = -{{h{i}(u), e{i}(u)-e{i}(v)}}/(u-v)",
            comm(cur(f"h{i}", "u"), cur(f"e{i}", "v")),
            neg(over(acomm(cur(f"h{i}", "u"), diff(f"e{i}")))),
        )
        rec(
            f"hf.{i}{i}",
            f"[h{i}(u), f{i}(v)] = {{h{i}(u), f{i}(u)-f{i}(v)}}/(u-v)",
            comm(cur(f"h{i}", "u"), cur(f"f{i}", "v")),
            over(acomm(cur(f"h{i}", "u"), diff(f"f{i}"))),
        )

    # diagonal against the other simple root: halved anticommutators
    for i, j in ((1, 2), (2, 1)):
        rec(
            f"he.{i}{j}",
            f"[h{i}(u), e{j}(v)] = 1/2 {{h{i}(u), e{j}(u)-e{j}(v)}}/(u-v)",
            comm(cur(f"h{i}", "u"), cur(f"e{j}", "v")),
            scale("1/2", over(acomm(cur(f"h{i}", "u"), diff(f"e{j}")))),
        )
        rec(
            f"hf.{i}{j}",
            f"[h{i}(u), f{j}(v)] = -1/2 {{h{i}(u), f{j}(u)-f{j}(v)}}/(u-v)",
            comm(cur(f"h{i}", "u"), cur(f"f{j}", "v")),
            scale("-1/2", over(acomm(cur(f"h{i}", "u"), diff(f"f{j}")))),
        )

    # simple cross relations feed the long root
    rec(
        "ee.12",
        "[e1(u), e2(v)] = -1/2 {e1(u)-e1(v), e2(v)}/(u-v) + (e3(u)-e3(v))/(u-v)",
        comm(cur("e1", "u"), cur("e2", "v")),
        add(
            scale("-1/2", over(acomm(diff("e1"), cur("e2", "v")))),
            over(diff("e3")),
        ),
    )
    rec(
        "ff.12",
        "[f1(u), f2(v)] = 1/2 {f1(u)-f1(v), f2(v)}/(u-v) - (f3(u)-f3(v))/(u-v)",
        comm(cur("f1", "u"), cur("f2", "v")),
        add(
            scale("1/2", over(acomm(diff("f1"), cur("f2", "v")))),
            neg(over(diff("f3"))),
        ),
    )

    # long root against the first simple root: ordered product form
    rec(
        "ee.13",
        "[e1(u), e3(v)] = -((e1(u)-e1(v))(e3(u)-e3(v)))/(u-v)",
        comm(cur("e1", "u"), cur("e3", "v")),
        neg(over(prod(diff("e1"), diff("e3")))),
    )
    rec(
        "ff.13",
        "[f1(u), f3(v)] = ((f1(u)-f1(v))(f3(u)-f3(v)))/(u-v)",
        comm(cur("f1", "u"), cur("f3", "v")),
        over(prod(diff("f1"), diff("f3"))),
    )

    # second simple root against the companion long current
    rec(
        "ee.23p",
        "[e2(u), e3'(v)] = -((e2(u)-e2(v))(e3'(u)-e3'(v)))/(u-v)",
        comm(cur("e2", "u"), cur("e3p", "v")),
        neg(over(prod(diff("e2"), diff("e3p")))),
    )
    rec(
        "ff.23p",
        "[f2(u), f3'(v)] = ((f2(u)-f2(v))(f3'(u)-f3'(v)))/(u-v)",
        comm(cur("f2", "u"), cur("f3p", "v")),
        over(prod(diff("f2"), diff("f3p"))),
    )
    return recs


def build():
    records = []
    base = base_records()
    for family in ("plus", "double"):
        for r in base:
            records.append(
                {
                    "id": f"{family}.{r['tag']}",
                    "family": family,
                    "statement": r["statement"],
                    "lhs": r["lhs"],
                    "rhs": r["rhs"],
                }
            )

    # wrong companion symbol in the lowering cross relation, kept on record
    records.append(
        {
            "id": "plus.ff.12.literal",
            "family": "plus",
            "statement": "[f1(u), f2(v)] = 1/2 {f1(u)-f1(v), f2(v)}/(u-v) - (e3(u)-e3(v))/(u-v)",
            "lhs": comm(cur("f1", "u"), cur("f2", "v")),
            "rhs": add(
                scale("1/2", over(acomm(diff("f1"), cur("f2", "v")))),
                neg(over(diff("e3"))),
            ),
            "expected": "fail",
            "notes": "variant with the raising companion in the last term; "
            "recorded as a counterexample, the corrected ff.12 is the "
            "asserted relation",
        }
    )

    # diagonal commutativity involving the composite long-root diagonal
    # current: it commutes with itself but not with the simple diagonals
    # once the representation stops being a single evaluation module
    for i, j, expected in ((1, 3, "fail"), (2, 3, "fail"), (3, 3, "pass")):
        rec = {
            "id": f"extra.hh.{i}{j}",
            "family": "extra",
            "statement": f"[h{i}(u), h{j}(v)] = 0",
            "lhs": comm(cur(f"h{i}", "u"), cur(f"h{j}", "v")),
            "rhs": ZERO,
            "notes": "not asserted by the presentation lists; outcome "
            "recorded from tensor product representations",
        }
        if expected == "fail":
            rec["expected"] = "fail"
        records.append(rec)
    return records


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    text = json.dumps(build(), indent=2, sort_keys=True) + "\n"
    if args.check:
        if not OUT.exists() or OUT.read_text() != text:
            print("catalog out of date; rerun without --check", file=sys.stderr)
            return 1
        print(f"catalog up to date ({OUT})")
        return 0
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(text)
    print(f"wrote {OUT} ({len(build())} records)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

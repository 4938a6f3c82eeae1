"""The ``invconj`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import bicyclic as bc
from . import charts as ch
from . import free_inverse as fi
from . import mcalister as mc
from .conjugacy import (
    EquivalenceViolated,
    characterize,
    check_factorizable_unit_conjugacy,
    conjugator_set,
    iconj_classes,
)
from .partitions import class_count, enumerate_class_representatives
from .table import NotMonoid, TableError, green_relations, load_table


class BadUsage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadUsage(message)


DOMAIN_ERRORS = (ch.ChartError, fi.FreeInverseError, bc.NotConjugate, mc.TripleError,
                 TableError, EquivalenceViolated, ValueError, KeyError, OSError)


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data: Any = None) -> None:
        if self.as_json:
            print(json.dumps(text if data is None else data, sort_keys=True))
        else:
            print(text)

    def boolean(self, value: bool, extra: dict | None = None) -> None:
        text = "true" if value else "false"
        if self.as_json:
            print(json.dumps({"result": value, **(extra or {})}, sort_keys=True))
        else:
            print(text)


# -- charts ----------------------------------------------------------------

def _charts(args, k: int) -> list[ch.Chart]:
    texts = list(args.charts) + list(args.chart or [])
    if len(texts) != k:
        raise BadUsage(f"expected {k} chart(s), got {len(texts)}")
    ground = ch.parse_ground(args.ground) if args.ground else None
    if ground is None and k > 1:
        # without an explicit ground, both charts live on the union of their points
        pts = set()
        for t in texts:
            pts |= ch.parse_chart(t).ground
        ground = frozenset(pts)
    return [ch.parse_chart(t, ground) for t in texts]


def cmd_chart_type(args, out: Output) -> None:
    (a,) = _charts(args, 1)
    t = ch.cycle_chain_type(a)
    comps = [str(c) for c in ch.decompose(a)]
    out.emit(f"{t}\ncomponents: {' '.join(comps) or '(none)'}",
             {"type": t.to_dict(), "components": comps, "span": len(a.span)})


def cmd_chart_conj(args, out: Output) -> None:
    a, b = _charts(args, 2)
    out.boolean(ch.conjugate_charts(a, b))


def cmd_chart_conjugator(args, out: Output) -> None:
    a, b = _charts(args, 2)
    build = ch.build_permutation_conjugator if args.permutation else ch.build_conjugator
    tau = build(a, b)
    if tau is None:
        raise ch.ChartError(f"{a} and {b} are not conjugate")
    out.emit(ch.format_chart(tau), {"conjugator": ch.format_chart(tau),
                                    "pairs": [[str(x), str(y)] for x, y in tau.pairs]})


def cmd_chart_ideal_conj(args, out: Output) -> None:
    a, b = _charts(args, 2)
    out.boolean(ch.conjugate_in_ideal(a, b, args.rank), {"rank": args.rank})


def cmd_count_classes(args, out: Output) -> None:
    if args.n < 0:
        raise ValueError("n must be nonnegative")
    count = class_count(args.n)
    if args.reps:
        reps = [ch.format_chart(r) for r in enumerate_class_representatives(args.n)]
        out.emit("\n".join([str(count)] + reps), {"count": count, "representatives": reps})
    else:
        out.emit(str(count), {"count": count})


# -- free inverse ----------------------------------------------------------

def cmd_fis_canon(args, out: Output) -> None:
    c = fi.canonical_of(fi.parse_word(args.word))
    out.emit(str(c), c.to_dict())


def cmd_fis_eq(args, out: Output) -> None:
    out.boolean(fi.words_equal(fi.parse_word(args.w1), fi.parse_word(args.w2)))


def cmd_fis_class(args, out: Output) -> None:
    tree = fi.conjugacy_class(fi.parse_word(args.word))
    if out.as_json:
        out.emit("", {"size": len(tree), **tree.to_dict()})
    elif args.tree:
        out.emit(tree.render())
    else:
        out.emit("\n".join(str(n) for n in tree.nodes))


def cmd_fis_conj(args, out: Output) -> None:
    out.boolean(fi.conjugate_words(fi.parse_word(args.w1), fi.parse_word(args.w2)))


def cmd_fis_idem(args, out: Output) -> None:
    rep = fi.idempotent_class_experiment(args.alphabet, args.max_len)
    lines = [f"{e.idempotent}\tlen={e.length}\tclass={e.class_size}\tpredicted={e.predicted}"
             + ("" if e.matches else "\tDISCREPANCY") for e in rep.entries]
    lines.append(f"{len(rep.entries)} idempotents, {len(rep.discrepancies)} discrepancies")
    out.emit("\n".join(lines), rep.to_dict())


# -- bicyclic --------------------------------------------------------------

def _pairs(args) -> tuple[bc.BicyclicPair, bc.BicyclicPair]:
    return bc.pair(args.a, args.b), bc.pair(args.c, args.d)


def cmd_bicyclic_conj(args, out: Output) -> None:
    out.boolean(bc.b_conjugate(*_pairs(args)))


def cmd_bicyclic_conjugator(args, out: Output) -> None:
    g = bc.b_conjugator(*_pairs(args))
    out.emit(str(g), {"conjugator": list(g)})


def cmd_bicyclic_witness(args, out: Output) -> None:
    rep = bc.b_stability_witness()
    text = "\n".join([
        "(1,1) ~i (2,2): " + str(rep["conjugate"]).lower(),
        f"conjugator: ({rep['conjugator'][0]},{rep['conjugator'][1]})",
        "(2,2) < (1,1): " + str(rep["less"]).lower(),
        "stable: false",
    ])
    out.emit(text, rep)


# -- P-semigroups ----------------------------------------------------------

def cmd_psemigroup(args, out: Output) -> None:
    t = mc.load_triple(args.file)
    if args.action == "validate":
        rep = mc.validate_triple(t)
        if out.as_json:
            out.emit("", rep.to_dict())
        else:
            out.emit("valid" if rep.valid else "\n".join(
                f"{type(e).__name__}: {e}" for e in rep.violations))
        if not rep.valid:
            raise _Quiet(1)
        return
    mc.require_valid(t)
    if args.action == "export":
        out.as_json = True
        out.emit("", mc.export_table(t).to_json())
    elif args.action == "conj":
        if len(args.elements) != 2:
            raise BadUsage("psemigroup conj needs two elements '(A,g)' '(B,h)'")
        u, v = (mc.parse_pelement(x) for x in args.elements)
        res = mc.p_conjugate(t, u, v)
        out.boolean(res.conjugate, {"witness": res.to_dict()["witness"]})


class _Quiet(Exception):
    """Exit with a status after output has already been written."""

    def __init__(self, status: int):
        self.status = status


# -- tables ----------------------------------------------------------------

def cmd_table(args, out: Output) -> None:
    t = load_table(args.file)
    names = t.elements

    def named(classes):
        return [[names[i] for i in c] for c in classes]

    if args.action == "analyze":
        g = green_relations(t)
        data = {
            "size": t.n,
            "idempotents": [names[e] for e in t.idempotents],
            "inverse": {names[x]: names[int(y)] for x, y in enumerate(t.inverse)},
            "green": {k: named(getattr(g, k)) for k in "LRHDJ"},
            "iconj_classes": named(iconj_classes(t)),
        }
        text = [f"size: {t.n}", f"idempotents: {' '.join(data['idempotents'])}"]
        text += [f"{k}-classes: {len(v)}" for k, v in data["green"].items()]
        text += ["~i classes:"] + ["  {" + ", ".join(c) + "}" for c in data["iconj_classes"]]
        out.emit("\n".join(text), data)
    elif args.action == "conj":
        if len(args.elements) != 2:
            raise BadUsage("table conj needs two element names")
        a, b = (t.index(x) for x in args.elements)
        ws = conjugator_set(t, a, b)
        wit = sorted(("1" if g == t.n else names[g]) for g in ws.witnesses)
        out.boolean(bool(ws), {"conjugators": wit})
    elif args.action == "characterize":
        data = characterize(t).to_dict()
        try:
            data["factorizable"] = check_factorizable_unit_conjugacy(t).to_dict()
        except NotMonoid:
            data["factorizable"] = None
        out.emit("\n".join(f"{k}: {json.dumps(v)}" for k, v in sorted(data.items())), data)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="invconj", description="i-conjugacy in inverse semigroups")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def chart_cmd(name, func, k, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("charts", nargs="*", help=f"{k} chart(s) in cycle-chain notation")
        s.add_argument("--chart", action="append", help="a chart (may repeat)")
        s.add_argument("--ground", help="ground set, e.g. 1..9 or 1,2,3")
        s.set_defaults(func=func)
        return s

    chart_cmd("chart-type", cmd_chart_type, 1, "cycle-chain type of a chart")
    chart_cmd("chart-conj", cmd_chart_conj, 2, "are two charts conjugate")
    chart_cmd("chart-conjugator", cmd_chart_conjugator, 2, "explicit conjugator").add_argument(
        "--permutation", action="store_true", help="extend to a permutation of the ground set")
    chart_cmd("chart-ideal-conj", cmd_chart_ideal_conj, 2, "conjugacy in the ideal of rank < r").add_argument(
        "--rank", "-r", type=int, required=True)

    s = sub.add_parser("count-classes", help="number of conjugacy classes of I(n)")
    s.add_argument("n", type=int)
    s.add_argument("--reps", action="store_true", help="list one chart per class")
    s.set_defaults(func=cmd_count_classes)

    s = sub.add_parser("fis-canon", help="canonical form of a word")
    s.add_argument("word")
    s.set_defaults(func=cmd_fis_canon)
    for name, func, help_ in (("fis-eq", cmd_fis_eq, "do two words name the same element"),
                              ("fis-conj", cmd_fis_conj, "are two words conjugate")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("w1")
        s.add_argument("w2")
        s.set_defaults(func=func)
    s = sub.add_parser("fis-class", help="conjugacy class of a word")
    s.add_argument("word")
    s.add_argument("--tree", action="store_true")
    s.set_defaults(func=cmd_fis_class)
    s = sub.add_parser("fis-idem-experiment", help="class sizes of canonical idempotents")
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--alphabet", default="ab")
    s.set_defaults(func=cmd_fis_idem)

    for name, func, help_ in (("bicyclic-conj", cmd_bicyclic_conj, "are (a,b) and (c,d) conjugate"),
                              ("bicyclic-conjugator", cmd_bicyclic_conjugator, "conjugator g for (a,b) and (c,d)")):
        s = sub.add_parser(name, help=help_)
        for x in "abcd":
            s.add_argument(x, type=int)
        s.set_defaults(func=func)
    sub.add_parser("bicyclic-witness", help="conjugate pair that is also strictly ordered").set_defaults(func=cmd_bicyclic_witness)

    s = sub.add_parser("psemigroup", help="McAlister P-semigroups")
    s.add_argument("action", choices=["validate", "conj", "export"])
    s.add_argument("file")
    s.add_argument("elements", nargs="*")
    s.set_defaults(func=cmd_psemigroup)

    s = sub.add_parser("table", help="finite inverse semigroups from Cayley tables")
    s.add_argument("action", choices=["analyze", "conj", "characterize"])
    s.add_argument("file")
    s.add_argument("elements", nargs="*")
    s.set_defaults(func=cmd_table)
    return p


def _error(kind: str, exc: BaseException) -> None:
    msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
    print(json.dumps({"error": kind, "message": str(msg)}, sort_keys=True), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except BadUsage as exc:
        _error("BadUsage", exc)
        return 2
    out = Output(args.json)
    try:
        args.func(args, out)
    except BadUsage as exc:
        _error("BadUsage", exc)
        return 2
    except _Quiet as exc:
        return exc.status
    except DOMAIN_ERRORS as exc:
        _error(type(exc).__name__, exc)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

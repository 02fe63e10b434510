"""Command-line front-end.

Verbs: ``tw``, ``hytw``, ``ctw``, ``mtw``, ``chtw`` (widths plus
certificates), ``validate`` (check a decomposition file against an
object file), ``check`` (axiom suites for a named instance), ``demo``
(the counterexample reproductions).  Exit codes: 0 success, 1 parse
error, 2 cap exceeded, 3 validation/check failed.

All sampling is seeded; identical input and seed produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional

from .chordal import (
    TREEWIDTH_CAP,
    treewidth_dp,
    validate_tree_decomposition,
)
from .complement import complemented_treewidth, independence_number, rmono_instance
from .core import (
    CapExceededError,
    Morphism,
    SFunctorSpec,
    SpinedError,
    SpinedInstance,
    check_sc1,
    check_sc2,
    check_spinal,
    sample_spans,
)
from .formats import (
    FormatError,
    decomposition_dict,
    format_pace,
    parse_edge_list,
    parse_hypergraph,
    parse_pace,
)
from .graph import clique_number, complement, grph_mono_instance
from .hypergraph import gaifman, hgr_instance, hypergraph_treewidth
from .induced import (
    PARTITION_CAP,
    chromatic_treewidth,
    modular_treewidth,
    quotient_graph,
)
from .witness import (
    MPE_SFUNCTOR,
    demo_clique_failure,
    demo_order_failure,
    demo_poset_no_sfunctor,
    ndiv_instance,
    pseudo_chordal_witness,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_FAILED = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _enforce_cap(size: int, default: int, user: Optional[int], what: str) -> None:
    cap = default if user is None else min(default, user)
    if size > cap:
        raise CapExceededError(f"{what}: size {size} exceeds cap {cap}")


def _emit(args, human_lines: list[str], pace_text: Optional[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    elif args.format == "pace" and pace_text is not None:
        for line in human_lines:
            print(f"c {line}")
        sys.stdout.write(pace_text)
    else:
        for line in human_lines:
            print(line)
        if pace_text is not None:
            sys.stdout.write(pace_text)


def _cmd_tw(args) -> int:
    g = parse_edge_list(_read(args.input))
    _enforce_cap(g.n, TREEWIDTH_CAP, args.cap, "tree-width")
    res = treewidth_dp(g)
    pace = format_pace(res.decomposition, g.n)
    _emit(
        args,
        [f"tw={res.width} delta={res.width + 1}"],
        pace,
        {
            "command": "tw",
            "tw": res.width,
            "delta": res.width + 1,
            "decomposition": decomposition_dict(res.decomposition, g.n),
        },
    )
    return EXIT_OK


def _cmd_hytw(args) -> int:
    h = parse_hypergraph(_read(args.input))
    _enforce_cap(h.n, TREEWIDTH_CAP, args.cap, "hypergraph tree-width")
    width, td = hypergraph_treewidth(h)
    pace = format_pace(td, h.n)
    _emit(
        args,
        [f"tw={width} delta={width + 1}"],
        pace,
        {
            "command": "hytw",
            "tw": width,
            "delta": width + 1,
            "decomposition": decomposition_dict(td, h.n),
        },
    )
    return EXIT_OK


def _cmd_ctw(args) -> int:
    g = parse_edge_list(_read(args.input))
    _enforce_cap(g.n, TREEWIDTH_CAP, args.cap, "complemented tree-width")
    res = treewidth_dp(complement(g))
    delta = res.width + 1
    if delta != complemented_treewidth(g):
        raise SpinedError("internal error: complemented width mismatch")
    pace = format_pace(res.decomposition, g.n)
    _emit(
        args,
        [f"complement_tw={res.width} delta={delta}"],
        pace,
        {
            "command": "ctw",
            "complement_tw": res.width,
            "delta": delta,
            "decomposition": decomposition_dict(res.decomposition, g.n),
        },
    )
    return EXIT_OK


def _cmd_mtw(args) -> int:
    g = parse_edge_list(_read(args.input))
    _enforce_cap(g.n, PARTITION_CAP, args.cap, "modular tree-width")
    res = modular_treewidth(g)
    quotient = quotient_graph(res.witness)
    qres = treewidth_dp(quotient)
    pace = format_pace(qres.decomposition, quotient.n)
    human = [
        f"mtw={res.value} delta={res.value + 1}",
        f"one_class_value={res.one_class_value}",
    ]
    human.extend(f"{v} {l}" for v, l in enumerate(res.witness.labels))
    _emit(
        args,
        human,
        pace,
        {
            "command": "mtw",
            "mtw": res.value,
            "delta": res.value + 1,
            "one_class_value": res.one_class_value,
            "witness": list(res.witness.labels),
            "quotient_decomposition": decomposition_dict(
                qres.decomposition, quotient.n
            ),
        },
    )
    return EXIT_OK


def _cmd_chtw(args) -> int:
    g = parse_edge_list(_read(args.input))
    _enforce_cap(g.n, PARTITION_CAP, args.cap, "chromatic tree-width")
    res = chromatic_treewidth(g)
    quotient = quotient_graph(res.witness)
    qres = treewidth_dp(quotient)
    pace = format_pace(qres.decomposition, quotient.n)
    human = [f"chtw={res.value} delta={res.value + 1}"]
    human.extend(f"{v} {l}" for v, l in enumerate(res.witness.labels))
    _emit(
        args,
        human,
        pace,
        {
            "command": "chtw",
            "chtw": res.value,
            "delta": res.value + 1,
            "witness": list(res.witness.labels),
            "quotient_decomposition": decomposition_dict(
                qres.decomposition, quotient.n
            ),
        },
    )
    return EXIT_OK


def _cmd_validate(args) -> int:
    obj_text = _read(args.object)
    if args.hypergraph:
        obj = parse_hypergraph(obj_text)
    else:
        obj = parse_edge_list(obj_text)
    td, declared_width_plus_one, declared_n = parse_pace(_read(args.decomposition))
    problems = []
    if declared_n != obj.n:
        problems.append(
            f"header names {declared_n} vertices, object has {obj.n}"
        )
    if declared_width_plus_one != td.width + 1:
        problems.append(
            f"header width+1 is {declared_width_plus_one},"
            f" bags give {td.width + 1}"
        )
    check = validate_tree_decomposition(obj, td)
    if not check:
        problems.append(f"{check.problem} (witness: {check.witness})")
    payload = {
        "command": "validate",
        "valid": not problems,
        "problems": problems,
        "width": td.width,
    }
    _emit(
        args,
        [("valid" if not problems else "invalid: " + "; ".join(problems))],
        None,
        payload,
    )
    return EXIT_OK if not problems else EXIT_FAILED


_CHECK_FUNCTORS = {
    "grph": (
        grph_mono_instance,
        [
            SFunctorSpec("clique-number", clique_number),
            SFunctorSpec(
                "triangulation", lambda g: treewidth_dp(g).width + 1
            ),
        ],
    ),
    "hgr": (
        hgr_instance,
        [
            SFunctorSpec(
                "hypergraph-triangulation",
                lambda h: treewidth_dp(gaifman(h)).width + 1,
            )
        ],
    ),
    "rmono": (
        rmono_instance,
        [
            SFunctorSpec("independence-number", independence_number),
            SFunctorSpec("complemented-triangulation", complemented_treewidth),
        ],
    ),
    "ndiv": (ndiv_instance, [MPE_SFUNCTOR]),
}


def _identity_extension(instance: SpinedInstance, obj, kind: str) -> Morphism:
    if instance.size is None:
        return Morphism(obj, obj, (), kind)
    return Morphism(obj, obj, tuple(range(instance.size(obj))), kind)


def _cmd_check(args) -> int:
    if args.instance not in _CHECK_FUNCTORS:
        raise UsageError(
            f"unknown instance {args.instance!r};"
            f" choose from {sorted(_CHECK_FUNCTORS)}"
        )
    factory, functors = _CHECK_FUNCTORS[args.instance]
    instance = factory()
    max_part = args.max_part if args.cap is None else min(args.max_part, args.cap)
    spans = sample_spans(instance, args.spans, args.seed, max_part)
    lines = []
    ok = True

    sc1_failures = 0
    for span in spans:
        for obj in (span.left.codomain, span.right.codomain):
            try:
                check_sc1(instance, obj)
            except SpinedError:
                sc1_failures += 1
    lines.append(f"sc1: {2 * len(spans) - sc1_failures}/{2 * len(spans)} objects map into the spine")
    ok = ok and sc1_failures == 0

    sc2_failures = 0
    for span in spans:
        kind = span.left.kind
        try:
            check_sc2(
                instance,
                span,
                _identity_extension(instance, span.left.codomain, kind),
                _identity_extension(instance, span.right.codomain, kind),
            )
        except SpinedError:
            sc2_failures += 1
    lines.append(
        f"sc2: {len(spans) - sc2_failures}/{len(spans)} spans have unique mediators"
    )
    ok = ok and sc2_failures == 0

    functor_results = {}
    for spec in functors:
        verdict = check_spinal(instance, spec, spans)
        if args.instance == "ndiv":
            # spine indices 0 and 1 both name the unit; index 1 is the one
            # admissible spine-preservation failure
            clean = (
                verdict.sf1_failures in ((), ((1, 1, 0),))
                and verdict.sf2_ok
                and verdict.monotone
            )
            note = " (unit collision at index 1 expected)"
        else:
            clean = verdict.ok
            note = ""
        functor_results[spec.name] = clean
        lines.append(
            f"spinal[{spec.name}]: sf1_failures={len(verdict.sf1_failures)}"
            f" sf2_failures={len(verdict.sf2_failures)}"
            f" monotone={verdict.monotone}{note}"
        )
        ok = ok and clean

    lines.append("result: " + ("all checks passed" if ok else "CHECKS FAILED"))
    payload = {
        "command": "check",
        "instance": args.instance,
        "seed": args.seed,
        "spans": len(spans),
        "sc1_failures": sc1_failures,
        "sc2_failures": sc2_failures,
        "functors": functor_results,
        "ok": ok,
    }
    _emit(args, lines, None, payload)
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_demo(args) -> int:
    if args.name == "ndiv":
        report = demo_clique_failure(seed=args.seed)
    elif args.name == "poset":
        report = demo_poset_no_sfunctor()
    elif args.name == "order":
        report = demo_order_failure()
    elif args.name == "pseudochordal":
        n = 4 if args.n is None else args.n
        report = pseudo_chordal_witness(n)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown demo {args.name!r}")
    if args.format == "json":
        payload = {"command": "demo", "name": args.name}
        payload["report"] = dataclasses.asdict(report)
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(report)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="spinedcat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--format", choices=["human", "json", "pace"], default="human")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cap", type=int, default=None,
                       help="lower the relevant size caps (never raises them)")

    for verb, fn in (
        ("tw", _cmd_tw),
        ("hytw", _cmd_hytw),
        ("ctw", _cmd_ctw),
        ("mtw", _cmd_mtw),
        ("chtw", _cmd_chtw),
    ):
        p = sub.add_parser(verb)
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("validate")
    p.add_argument("object", help="graph or hypergraph file")
    p.add_argument("decomposition", help="decomposition file (.td syntax)")
    p.add_argument("--hypergraph", action="store_true")
    common(p, with_input=False)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("check")
    p.add_argument("instance", choices=sorted(_CHECK_FUNCTORS))
    p.add_argument("--spans", type=int, default=50)
    p.add_argument("--max-part", type=int, default=5)
    common(p, with_input=False)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("demo")
    p.add_argument("name", choices=["ndiv", "poset", "order", "pseudochordal"])
    p.add_argument("n", type=int, nargs="?", default=None)
    common(p, with_input=False)
    p.set_defaults(fn=_cmd_demo)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SpinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())

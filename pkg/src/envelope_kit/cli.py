"""Command-line front end.

Exit codes are stable across subcommands: 0 = everything passed,
1 = a mathematical check failed, 2 = input or usage error.
"""

import argparse
import json
import sys

from . import enumeration
from .birkhoff import build_envelope
from .envelope import build_venvelope, check_equivalence
from .errors import (
    CycleDetected,
    DuplicateLabel,
    EnvelopeKitError,
    ParseError,
    SizeCap,
    UnknownLabel,
)
from .formats import (
    envelope_to_dot,
    instance_to_poset,
    load_instance,
    poset_to_dot,
)
from .semilattice import validate_sus
from .valuation import build_vring, check_basis

STRUCTURAL_ERRORS = (ParseError, CycleDetected, DuplicateLabel,
                     UnknownLabel, OSError, SizeCap)


def _fail_text(exc) -> str:
    name = type(exc).__name__
    msg = str(exc)
    if msg.startswith(name):
        return msg
    return "%s(%s)" % (name, msg) if msg else name


def _emit_json(doc):
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _load_sus(path):
    elements, covers = load_instance(path)
    return validate_sus(instance_to_poset(elements, covers))


def cmd_check(args) -> int:
    try:
        s = _load_sus(args.path)
    except STRUCTURAL_ERRORS as exc:
        print(_fail_text(exc))
        return 2
    except EnvelopeKitError as exc:
        print(_fail_text(exc))
        return 1
    if args.json:
        _emit_json({"status": "ok", "elements": s.n,
                    "irreducibles": sorted(str(s.label(m))
                                           for m in s.irreducibles)})
    else:
        print("distributive strong upper semilattice")
    return 0


def _birkhoff_doc(e):
    return {
        "filters": [e.label(i) for i in range(e.size)],
        "bottom": e.label(e.bottom),
        "top": e.label(e.top_filter),
        "nu": {str(e.source.label(x)): e.label(e.filter_of_element[x])
               for x in range(e.source.n)},
        "size": e.size,
    }


def _valuation_doc(r, e):
    venv = build_venvelope(r, e)
    return {
        "size": len(venv.elements),
        "canonical_forms": [r.format_vector(v) for v in venv.elements],
        "filter_of": {r.format_vector(v): e.label(f)
                      for v, f in zip(venv.elements, venv.filter_of)},
    }


def cmd_envelope(args) -> int:
    try:
        s = _load_sus(args.path)
        e = build_envelope(s)
        doc = {}
        if args.method in ("birkhoff", "both"):
            doc["birkhoff"] = _birkhoff_doc(e)
        if args.method in ("valuation", "both"):
            r = build_vring(s)
            doc["valuation"] = _valuation_doc(r, e)
        if args.method == "both":
            item = check_equivalence(build_vring(s), e, seed=args.seed)
            doc["isomorphic"] = item.passed
    except STRUCTURAL_ERRORS as exc:
        print(_fail_text(exc))
        return 2
    except EnvelopeKitError as exc:
        print(_fail_text(exc))
        return 1
    if args.json:
        _emit_json(doc)
    else:
        if "birkhoff" in doc:
            b = doc["birkhoff"]
            print("filter lattice: %d filters" % b["size"])
            for f in b["filters"]:
                print("  %s" % f)
            print("bottom: %s   top: %s" % (b["bottom"], b["top"]))
            for x, f in b["nu"].items():
                print("  nu(%s) = %s" % (x, f))
        if "valuation" in doc:
            v = doc["valuation"]
            print("ring envelope: %d canonical forms" % v["size"])
            for form in v["canonical_forms"]:
                print("  %s" % form)
        if "isomorphic" in doc:
            print("isomorphic: %s" % ("yes" if doc["isomorphic"] else "no"))
    if doc.get("isomorphic") is False:
        return 1
    return 0


def cmd_vring(args) -> int:
    try:
        s = _load_sus(args.path)
        r = build_vring(s)
        basis_item = check_basis(r)
    except STRUCTURAL_ERRORS as exc:
        print(_fail_text(exc))
        return 2
    except EnvelopeKitError as exc:
        print(_fail_text(exc))
        return 1
    doc = {
        "generators": len(r.ideal.generators),
        "hnf_basis": [r.format_vector(g) for g in r.ideal.hnf_basis],
        "snf_invariants": list(r.ideal.snf_invariants),
        "rank": r.rank,
        "iota": {str(s.label(x)): r.format_vector(r.embed(x))
                 for x in range(s.n)},
        "irreducible_basis": basis_item.passed,
    }
    if args.json:
        _emit_json(doc)
    else:
        print("generators: %d" % doc["generators"])
        print("relation basis:")
        for row in doc["hnf_basis"]:
            print("  %s" % row)
        print("snf invariants: %s" % doc["snf_invariants"])
        print("rank: %d" % doc["rank"])
        for x, form in doc["iota"].items():
            print("  iota(%s) = %s" % (x, form))
        print("irreducible classes form a basis: %s"
              % ("yes" if doc["irreducible_basis"] else "NO"))
    return 0 if basis_item.passed else 1


def cmd_verify(args) -> int:
    try:
        s = _load_sus(args.path)
        report = enumeration.run_suite(s, seed=args.seed)
    except STRUCTURAL_ERRORS as exc:
        print(_fail_text(exc))
        return 2
    except EnvelopeKitError as exc:
        print(_fail_text(exc))
        return 1
    if args.json:
        _emit_json(report.as_dict())
    else:
        for item in report.items:
            status = "PASS" if item.passed else "FAIL"
            extra = " (%s)" % item.witness if item.witness else ""
            print("%s %s%s" % (status, item.name, extra))
    return 0 if report.all_passed else 1


def cmd_sweep(args) -> int:
    try:
        summary = enumeration.sweep(args.max_size, jobs=args.jobs,
                                    seed=args.seed)
    except SizeCap as exc:
        print(_fail_text(exc))
        return 2
    if args.json:
        _emit_json(summary.as_dict())
    else:
        for n, count in sorted(summary.instances_per_size.items()):
            print("size %d: %d instances" % (n, count))
        print("instances: %d" % summary.instance_count)
        print("failures: %d" % summary.failure_count)
        print("bottom-caveat instances: %d" % summary.caveat_count)
        print("elapsed: %.2fs" % summary.elapsed)
        for report in summary.reports:
            for item in report.failures():
                print("FAIL %s %s (%s)" % (report.instance_id, item.name,
                                           item.witness))
    return 0 if summary.failure_count == 0 else 1


def cmd_dot(args) -> int:
    try:
        elements, covers = load_instance(args.path)
        p = instance_to_poset(elements, covers)
        if args.target == "poset":
            sys.stdout.write(poset_to_dot(p))
        else:
            e = build_envelope(validate_sus(p))
            sys.stdout.write(envelope_to_dot(e))
    except STRUCTURAL_ERRORS as exc:
        print(_fail_text(exc))
        return 2
    except EnvelopeKitError as exc:
        print(_fail_text(exc))
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="envelope-kit",
        description="Envelopes of finite distributive strong upper "
                    "semilattices, with exhaustive lemma verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("check", cmd_check, help="validate the semilattice axioms")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")

    p = add("envelope", cmd_envelope, help="construct the envelope(s)")
    p.add_argument("path")
    p.add_argument("--method", choices=("birkhoff", "valuation", "both"),
                   default="both")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("vring", cmd_vring, help="present the valuation ring")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")

    p = add("verify", cmd_verify, help="run every lemma check")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("sweep", cmd_sweep, help="verify all instances up to a size")
    p.add_argument("--max-size", type=int, required=True,
                   choices=range(1, enumeration.MAX_N + 1))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("dot", cmd_dot, help="emit a Hasse diagram in DOT syntax")
    p.add_argument("path")
    p.add_argument("--target", choices=("poset", "envelope"),
                   default="poset")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())

"""Instance documents (JSON) and DOT output.

An instance is a single JSON object

    {"elements": ["a", "b", "1"], "covers": [["a", "1"], ["b", "1"]]}

Cover pairs are (lower, upper) and may be redundant; the element order in
the file fixes the index order.
"""

import json

from .birkhoff import FilterLattice
from .errors import ParseError
from .order import Poset, build_poset


def parse_instance(text: str):
    """Parse an instance document into (elements, covers) label lists."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    elements = doc.get("elements")
    covers = doc.get("covers")
    if not isinstance(elements, list) or not elements:
        raise ParseError("'elements' must be a nonempty list")
    if not all(isinstance(e, (str, int)) for e in elements):
        raise ParseError("element labels must be strings or integers")
    if not isinstance(covers, list):
        raise ParseError("'covers' must be a list of [lower, upper] pairs")
    pairs = []
    for pair in covers:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError("cover entries must be two-element lists")
        pairs.append((str(pair[0]), str(pair[1])))
    return [str(e) for e in elements], pairs


def load_instance(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def serialize_instance(elements, covers) -> str:
    doc = {"elements": list(elements),
           "covers": [[lo, hi] for lo, hi in covers]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def instance_to_poset(elements, covers) -> Poset:
    return build_poset(elements, covers)


def poset_to_instance(p: Poset):
    return list(p.names), [(p.label(lo), p.label(hi)) for lo, hi in p.covers]


def _dot(names, cover_label_pairs) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for name in sorted(names):
        lines.append('  "%s";' % name)
    for lo, hi in sorted(cover_label_pairs):
        lines.append('  "%s" -> "%s";' % (lo, hi))
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(p: Poset) -> str:
    return _dot([str(x) for x in p.names],
                [(str(p.label(lo)), str(p.label(hi))) for lo, hi in p.covers])


def envelope_to_dot(e: FilterLattice) -> str:
    names = [e.label(i) for i in range(e.size)]
    covers = []
    for i in range(e.size):
        for j in range(e.size):
            if i == j or not e.leq(i, j):
                continue
            between = any(k != i and k != j and e.leq(i, k) and e.leq(k, j)
                          for k in range(e.size))
            if not between:
                covers.append((names[i], names[j]))
    return _dot(names, covers)

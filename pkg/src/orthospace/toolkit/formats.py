"""The .osp text format, DOT export, and JSON reports.

Grammar (UTF-8, one directive per line, ``#`` starts a comment):

    format: 1                 optional, assumed 1
    name: <free text>         optional metadata
    provenance: <free text>   optional metadata
    elements: a b c ...       at least one such line
    ortho: a-b c-d ...        zero or more; unordered edges, deduplicated

Serialisation is canonical: sorted labels, sorted edges, metadata first.  A
file produced by serialize_osp parses back to the identical document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..classify import ClassReport
from ..core import OrthoSpace, new_space
from ..errors import ParseError, SelfLoop
from ..lattice import OrthoLattice

FORMAT_VERSION = 1

REPORT_SCHEMA_ID = "orthospace.report/1"


@dataclass(frozen=True)
class SpaceDocument:
    """A parsed .osp file: labels, edges and optional metadata."""

    labels: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    name: str | None = None
    provenance: str | None = None
    format_version: int = FORMAT_VERSION

    def space(self) -> OrthoSpace:
        return new_space(len(self.labels), list(self.edges), self.labels)

    @classmethod
    def of(cls, space: OrthoSpace, name: str | None = None, provenance: str | None = None) -> "SpaceDocument":
        labels = tuple(sorted(space.labels))
        edges = tuple(sorted(
            tuple(sorted((space.labels[i], space.labels[j]))) for i, j in space.edges()
        ))
        return cls(labels, edges, name=name, provenance=provenance)


def parse_osp_document(text: str) -> SpaceDocument:
    labels: list[str] = []
    edges: set[tuple[str, str]] = set()
    name = None
    provenance = None
    version = FORMAT_VERSION
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", line=lineno, column=1)
        key, _, rest = line.partition(":")
        key = key.strip()
        rest = rest.strip()
        if key == "format":
            try:
                version = int(rest)
            except ValueError:
                raise ParseError(f"bad format version {rest!r}", line=lineno) from None
            if version != FORMAT_VERSION:
                raise ParseError(f"unsupported format version {version}", line=lineno)
        elif key == "name":
            name = rest
        elif key == "provenance":
            provenance = rest
        elif key == "elements":
            for lab in rest.split():
                if lab in labels:
                    raise ParseError(f"duplicate element {lab!r}", line=lineno)
                labels.append(lab)
        elif key == "ortho":
            for token in rest.split():
                column = raw.index(token) + 1
                parts = token.split("-")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise ParseError(f"bad edge token {token!r}", line=lineno, column=column)
                x, y = parts
                if x == y:
                    raise SelfLoop(f"edge {token!r} relates an element to itself (line {lineno})")
                if x not in labels or y not in labels:
                    raise ParseError(f"edge {token!r} mentions an unknown element", line=lineno, column=column)
                edges.add(tuple(sorted((x, y))))
        else:
            raise ParseError(f"unknown directive {key!r}", line=lineno, column=1)
    if not labels:
        raise ParseError("no 'elements:' line found", line=1)
    return SpaceDocument(tuple(labels), tuple(sorted(edges)), name=name,
                         provenance=provenance, format_version=version)


def parse_osp(text: str) -> OrthoSpace:
    return parse_osp_document(text).space()


def serialize_osp_document(doc: SpaceDocument) -> str:
    lines = [f"format: {doc.format_version}"]
    if doc.name is not None:
        lines.append(f"name: {doc.name}")
    if doc.provenance is not None:
        lines.append(f"provenance: {doc.provenance}")
    lines.append("elements: " + " ".join(sorted(doc.labels)))
    edges = sorted(tuple(sorted(e)) for e in doc.edges)
    if edges:
        lines.append("ortho: " + " ".join(f"{x}-{y}" for x, y in edges))
    return "\n".join(lines) + "\n"


def serialize_osp(space: OrthoSpace, name: str | None = None, provenance: str | None = None) -> str:
    return serialize_osp_document(SpaceDocument.of(space, name=name, provenance=provenance))


# -- DOT ----------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace('"', r'\"') + '"'


def export_dot_space(space: OrthoSpace) -> str:
    lines = ["graph orthogonality {"]
    for lab in sorted(space.labels):
        lines.append(f"  {_quote(lab)};")
    for i, j in sorted(space.edges(), key=lambda e: (space.labels[e[0]], space.labels[e[1]])):
        a, b = sorted((space.labels[i], space.labels[j]))
        lines.append(f"  {_quote(a)} -- {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _element_name(lattice: OrthoLattice, idx: int) -> str:
    labels = lattice.subset(idx).labels()
    return "{" + ",".join(labels) + "}"


def export_dot_lattice(lattice: OrthoLattice) -> str:
    """Hasse diagram of the lattice, edges pointing upward."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for idx in range(lattice.size):
        lines.append(f"  {_quote(_element_name(lattice, idx))};")
    for a, b in sorted(lattice.covers()):
        lines.append(f"  {_quote(_element_name(lattice, a))} -> {_quote(_element_name(lattice, b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- JSON reports --------------------------------------------------------------

def report_to_dict(report: ClassReport, labels=None) -> dict:
    doc = {
        "schema": REPORT_SCHEMA_ID,
        "flags": report.flags(),
        "lattice_size": report.lattice_size,
        "witnesses": {k: v for k, v in sorted(report.witnesses.items())},
    }
    if labels is not None:
        doc["labels"] = list(labels)
    return doc


def report_json(report: ClassReport, labels=None) -> str:
    return json.dumps(report_to_dict(report, labels), indent=2, sort_keys=True, default=list) + "\n"

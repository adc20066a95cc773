"""JSON and DOT serialisation of enumerated lattices."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .heyting import is_join_irreducible, is_regular
from .lattice import LatticeSnapshot, make_path
from .paths import HeightSeqB, ValidationError, heights_to_word_a, heights_to_word_b, mono_word

FORMAT_TAG = "dyck-heyting/1"


@dataclass(frozen=True)
class ExportElement:
    id: int
    heights: tuple[int, ...]
    word: str
    regular: bool
    join_irreducible: bool


@dataclass(frozen=True)
class ExportDocument:
    family: str
    params: tuple[int, ...]
    elements: tuple[ExportElement, ...]
    covers: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        params = {"n": self.params[0]}
        if self.family == "mono":
            params["m"] = self.params[1]
        return {
            "format": FORMAT_TAG,
            "family": self.family.lower(),
            "params": params,
            "elements": [
                {
                    "id": e.id,
                    "heights": list(e.heights),
                    "word": e.word,
                    "regular": e.regular,
                    "join_irreducible": e.join_irreducible,
                }
                for e in self.elements
            ],
            "covers": [list(c) for c in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> ExportDocument:
        if doc.get("format") != FORMAT_TAG:
            raise ValidationError(f"unsupported document format {doc.get('format')!r}, expected {FORMAT_TAG!r}")
        family = {"a": "A", "b": "B", "mono": "mono"}.get(doc["family"])
        if family is None:
            raise ValidationError(f"unknown family {doc['family']!r}")
        p = doc["params"]
        params = (p["n"], p["m"]) if family == "mono" else (p["n"],)
        elements = tuple(
            ExportElement(e["id"], tuple(e["heights"]), e["word"], e["regular"], e["join_irreducible"])
            for e in doc["elements"]
        )
        for pos, e in enumerate(elements):
            if e.id != pos:
                raise ValidationError(f"element ids must be 0..N-1 in order; found {e.id} at position {pos}")
        covers = tuple(tuple(c) for c in doc["covers"])
        return cls(family, params, elements, covers)

    @classmethod
    def from_json(cls, text: str) -> ExportDocument:
        return cls.from_dict(json.loads(text))

    def to_snapshot(self) -> LatticeSnapshot:
        n = self.params[0]
        m = self.params[1] if self.family == "mono" else None
        elems = tuple(make_path(self.family, e.heights, n=n, m=m) for e in self.elements)
        return LatticeSnapshot(self.family, self.params, elems, _covers=frozenset(self.covers))


def _word(p) -> str:
    if p.family == "A":
        return heights_to_word_a(p).steps
    if isinstance(p, HeightSeqB):
        return heights_to_word_b(p).steps
    return mono_word(p)


def export_document(snapshot: LatticeSnapshot) -> ExportDocument:
    elements = tuple(
        ExportElement(i, p.h, _word(p), is_regular(p), is_join_irreducible(p)) for i, p in enumerate(snapshot)
    )
    return ExportDocument(snapshot.family, snapshot.params, elements, tuple(sorted(snapshot.covers)))


def lattice_name(family: str, params) -> str:
    if family == "mono":
        return f"L_{params[0]},{params[1]}"
    return f"D_{params[0]}^{family}"


def to_dot(snapshot: LatticeSnapshot) -> str:
    """Hasse diagram as a DOT digraph; edges point from lower to upper cover."""
    lines = [
        f'digraph "{lattice_name(snapshot.family, snapshot.params)}" {{',
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for i, p in enumerate(snapshot):
        style = ", style=filled, fillcolor=lightgray" if is_regular(p) else ""
        lines.append(f'  n{i} [label="{p}"{style}];')
    for lo, hi in sorted(snapshot.covers):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"

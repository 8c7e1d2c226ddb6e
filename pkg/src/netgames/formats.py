"""TSV edge lists and vector files, and result documents.

Edge list: one ``src<TAB>dst<TAB>weight`` record per line, where ``src`` is
the influenced player and ``dst`` the influencer (row ``src``, column
``dst``). Lines starting with ``#`` are comments, except an optional
``#nodes<TAB>label<TAB>...`` header that declares nodes with no edges.
Labels are sorted lexicographically to assign matrix indices.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import DuplicateEdge, LabelMismatch, NegativeWeight, ParseError
from .matrix import WeightMatrix

NODES_HEADER = "#nodes"


def _records(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        yield lineno, line


def _number(token, lineno):
    try:
        x = float(token)
    except ValueError:
        raise ParseError(f"not a number: {token!r}", lineno) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite value: {token!r}", lineno)
    return x


def parse_edge_list(text: str) -> WeightMatrix:
    declared = set()
    edges = {}
    for lineno, line in _records(text):
        if line.startswith("#"):
            fields = line.split("\t")
            if fields[0] == NODES_HEADER:
                declared.update(f for f in fields[1:] if f)
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ParseError(f"expected 3 tab-separated fields, got {len(fields)}", lineno)
        src, dst, token = fields
        if not src or not dst:
            raise ParseError("empty node label", lineno)
        w = _number(token, lineno)
        if w < 0:
            raise NegativeWeight(f"line {lineno}: negative weight {token}")
        if (src, dst) in edges:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {src} -> {dst}")
        edges[(src, dst)] = w

    labels = sorted(declared.union(*((s, d) for s, d in edges)))
    if not labels:
        raise ParseError("edge list declares no nodes")
    index = {s: k for k, s in enumerate(labels)}
    a = np.zeros((len(labels), len(labels)))
    for (src, dst), w in edges.items():
        a[index[src], index[dst]] = w
    return WeightMatrix(a, tuple(labels))


def format_edge_list(W: WeightMatrix) -> str:
    labels = W.node_labels()
    lines = [NODES_HEADER + "\t" + "\t".join(labels)]
    for i, j in zip(*np.nonzero(W.entries)):
        lines.append(f"{labels[i]}\t{labels[j]}\t{float(W.entries[i, j])!r}")
    return "\n".join(lines) + "\n"


def parse_vector_file(text: str, labels) -> np.ndarray:
    """Values from ``label<TAB>value`` records, aligned to ``labels``.

    Every label must appear exactly once and no other label may appear.
    """
    index = {s: k for k, s in enumerate(labels)}
    values = {}
    for lineno, line in _records(text):
        if line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab-separated fields, got {len(fields)}", lineno)
        label, token = fields
        if label in values:
            raise ParseError(f"duplicate label {label!r}", lineno)
        values[label] = _number(token, lineno)
    extra = sorted(set(values) - set(index))
    missing = [s for s in labels if s not in values]
    if extra or missing:
        raise LabelMismatch(f"vector labels do not match the graph (missing: {missing}, unexpected: {extra})")
    return np.array([values[s] for s in labels])


def fmt_number(x) -> str:
    return format(float(x), ".17g")


@dataclass
class ResultDocument:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)
    diagnostics: dict[str, Any] = field(default_factory=dict)
    rows: list[tuple[int, float, float]] | None = None
    output_format: str = "json"

    def to_dict(self) -> dict:
        d = {
            "command": self.command,
            "parameters": self.parameters,
            "values": self.values,
            "diagnostics": self.diagnostics,
        }
        return _plain(d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, allow_nan=False) + "\n"

    def render(self) -> str:
        return self.to_csv() if self.output_format == "csv" else self.to_json()

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        if self.rows is not None:
            out.writerow(["k", "alpha", "value"])
            out.writerows((k, fmt_number(a), fmt_number(v)) for k, a, v in self.rows)
        else:
            out.writerow(["name", "key", "value"])
            for name, value in self.values.items():
                out.writerows(_flatten(name, "", value))
        return buf.getvalue()


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def _flatten(name, prefix, value):
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            out += _flatten(name, f"{prefix}/{k}" if prefix else str(k), v)
        return out
    if isinstance(value, (list, tuple)):
        return [(name, prefix, json.dumps(_plain(value)))]
    if isinstance(value, (bool, np.bool_)):
        return [(name, prefix, str(bool(value)).lower())]
    if isinstance(value, (int, np.integer)):
        return [(name, prefix, int(value))]
    if isinstance(value, (float, np.floating)):
        return [(name, prefix, fmt_number(value))]
    return [(name, prefix, value)]

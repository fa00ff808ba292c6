"""Report envelopes: schema version, graph provenance, deterministic
serialization.

Every subcommand wraps its payload in the same envelope so downstream
tooling can rely on one shape.  JSON is dumped with sorted keys and fixed
separators, so identical inputs give byte-identical documents regardless of
construction order or worker count.
"""

from __future__ import annotations

import io
import json

from .generators import GenSpec
from .graph import Graph, graph_sha256

SCHEMA_VERSION = "1.0.0"


def report_schema_version() -> str:
    return SCHEMA_VERSION


def file_provenance(path: str, g: Graph) -> dict:
    return {
        "source": "file",
        "path": path,
        "sha256": graph_sha256(g),
        "n": g.n,
        "m": g.m,
    }


def genspec_provenance(spec: GenSpec, seed: int, g: Graph) -> dict:
    return {
        "source": "genspec",
        "spec": spec.spec_string(),
        "family": spec.family,
        "params": list(spec.params),
        "seed": seed,
        "sha256": graph_sha256(g),
        "n": g.n,
        "m": g.m,
    }


def envelope(
    subcommand: str,
    report: dict,
    seed: int | None = None,
    graph_provenance: dict | None = None,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "subcommand": subcommand,
        "seed": seed,
        "graph_provenance": graph_provenance,
        "report": report,
    }


def dumps(doc: dict) -> str:
    """Deterministic JSON text: sorted keys, fixed separators, newline end."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def error_line(message: str, subcommand: str | None = None) -> str:
    """One-line machine-parsable error document."""
    doc = {"schema_version": SCHEMA_VERSION, "error": message}
    if subcommand:
        doc["subcommand"] = subcommand
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def csv_table(header: list[str], rows: list[list]) -> str:
    """Small deterministic CSV writer (no quoting needs beyond commas)."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join("" if v is None else str(v) for v in row) + "\n")
    return buf.getvalue()

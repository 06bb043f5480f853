"""Versioned JSON documents: coloring certificates and thrackle families.

Documents are the exchange currency of the tool, so they are strict both
ways: emission is byte-deterministic and parsing rejects unknown fields,
out-of-range cells and duplicates, naming the offending location.
"""

from __future__ import annotations

import json

from .coloring import ColoringCertificate, CoverVerdict

TOOL = "convexcolor"
TOOL_VERSION = "0.1.0"
CERTIFICATE_SCHEMA = "convexcolor/coloring-certificate"
THRACKLE_SCHEMA = "convexcolor/thrackle-family"
SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Malformed or out-of-contract document; message names the location."""


def _require_fields(doc: dict, required: dict, optional: dict, where: str) -> None:
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected a JSON object, got {type(doc).__name__}")
    for key, typ in required.items():
        if key not in doc:
            raise DocumentError(f"{where}: missing required field '{key}'")
        if not isinstance(doc[key], typ):
            raise DocumentError(f"{where}.{key}: expected {typ.__name__}")
    unknown = set(doc) - set(required) - set(optional)
    if unknown:
        raise DocumentError(f"{where}: unknown fields {sorted(unknown)}")
    for key, typ in optional.items():
        if key in doc and not isinstance(doc[key], typ):
            raise DocumentError(f"{where}.{key}: expected {typ.__name__}")


def _check_header(doc: dict, schema: str, where: str) -> None:
    if doc.get("schema") != schema:
        raise DocumentError(f"{where}.schema: expected '{schema}', got {doc.get('schema')!r}")
    if doc.get("version") != SCHEMA_VERSION:
        raise DocumentError(f"{where}.version: unsupported version {doc.get('version')!r}")


def _parse_cells(raw, n: int, where: str, forbid_duplicates: bool) -> tuple[tuple[int, int], ...]:
    if not isinstance(raw, list):
        raise DocumentError(f"{where}: expected a list of [a, b] pairs")
    cells = []
    for idx, pair in enumerate(raw):
        loc = f"{where}[{idx}]"
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
            raise DocumentError(f"{loc}: expected an [a, b] integer pair, got {pair!r}")
        a, b = pair
        if not 1 <= a < b <= n:
            raise DocumentError(f"{loc}: cell [{a}, {b}] invalid: need 1 <= a < b <= {n}")
        cells.append((a, b))
    if forbid_duplicates and len(set(cells)) != len(cells):
        dup = next(c for c in cells if cells.count(c) > 1)
        raise DocumentError(f"{where}: duplicate cell {list(dup)}")
    return tuple(cells)


# --- coloring certificates ----------------------------------------------------

def certificate_to_doc(cert: ColoringCertificate, verdict: CoverVerdict | None = None) -> dict:
    doc = {
        "schema": CERTIFICATE_SCHEMA,
        "version": SCHEMA_VERSION,
        "n": cert.n,
        "classes": [[list(c) for c in sorted(cls)] for cls in cert.classes],
        "class_labels": list(cert.class_labels),
        "generator": {"tool": TOOL, "tool_version": TOOL_VERSION},
    }
    if verdict is not None:
        doc["verdict"] = {
            "valid": verdict.valid,
            "uncovered_cells": len(verdict.uncovered),
            "conflicting_pairs": len(verdict.conflicts),
        }
    return doc


def certificate_from_doc(doc) -> ColoringCertificate:
    _require_fields(
        doc,
        required={"schema": str, "version": int, "n": int, "classes": list},
        optional={"class_labels": list, "generator": dict, "verdict": dict},
        where="certificate",
    )
    _check_header(doc, CERTIFICATE_SCHEMA, "certificate")
    n = doc["n"]
    if n < 0:
        raise DocumentError(f"certificate.n: need n >= 0, got {n}")
    classes = tuple(
        frozenset(_parse_cells(cls, n, f"certificate.classes[{ci}]", forbid_duplicates=True))
        for ci, cls in enumerate(doc["classes"])
    )
    labels = doc.get("class_labels")
    if labels is None:
        labels = [0] * len(classes)
    if len(labels) != len(classes) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in labels):
        raise DocumentError("certificate.class_labels: need one integer per class")
    return ColoringCertificate(n=n, classes=classes, class_labels=tuple(labels))


def emit_certificate(cert: ColoringCertificate, verdict: CoverVerdict | None = None) -> str:
    return json.dumps(certificate_to_doc(cert, verdict), indent=2, sort_keys=True) + "\n"


def parse_certificate(text: str) -> ColoringCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from e
    return certificate_from_doc(doc)


# --- thrackle families -----------------------------------------------------------

def thrackles_to_doc(n: int, edge_sets) -> dict:
    return {
        "schema": THRACKLE_SCHEMA,
        "version": SCHEMA_VERSION,
        "n": n,
        "thrackles": [[list(e) for e in sorted(es)] for es in edge_sets],
        "generator": {"tool": TOOL, "tool_version": TOOL_VERSION},
    }


def thrackles_from_doc(doc) -> tuple[int, tuple[frozenset, ...]]:
    _require_fields(
        doc,
        required={"schema": str, "version": int, "n": int, "thrackles": list},
        optional={"generator": dict},
        where="family",
    )
    _check_header(doc, THRACKLE_SCHEMA, "family")
    n = doc["n"]
    if n < 1:
        raise DocumentError(f"family.n: need n >= 1, got {n}")
    edge_sets = tuple(
        frozenset(_parse_cells(es, n, f"family.thrackles[{ti}]", forbid_duplicates=True))
        for ti, es in enumerate(doc["thrackles"])
    )
    return n, edge_sets


def emit_thrackles(n: int, edge_sets) -> str:
    return json.dumps(thrackles_to_doc(n, edge_sets), indent=2, sort_keys=True) + "\n"


def parse_thrackles(text: str) -> tuple[int, tuple[frozenset, ...]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from e
    return thrackles_from_doc(doc)


def sniff_document(text: str):
    """Parse either document kind; returns ('certificate', cert) or ('thrackles', (n, sets))."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object at top level")
    schema = doc.get("schema")
    if schema == CERTIFICATE_SCHEMA:
        return "certificate", certificate_from_doc(doc)
    if schema == THRACKLE_SCHEMA:
        return "thrackles", thrackles_from_doc(doc)
    raise DocumentError(f"unrecognised schema {schema!r}")

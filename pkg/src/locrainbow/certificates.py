"""JSON certificate documents.

A certificate records ``n``, ``k``, ``colors`` (colors of v_1..v_n), an
optional ``family`` tag and the ``codes`` table. Writers always include the
codes; readers recompute them against the graph and refuse mismatches. Solver
output adds a ``report`` object.
"""

from __future__ import annotations

import json
from typing import Any

from .coloring import Coloring, rainbow_codes
from .errors import CertificateError, ParseError
from .graph import Graph


def certificate_dict(g: Graph, c: Coloring, family: str | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"n": g.n, "k": c.k, "colors": list(c.colors)}
    if family is not None:
        doc["family"] = family
    doc["codes"] = [list(code) for code in rainbow_codes(g, c)]
    return doc


def dumps_certificate(g: Graph, c: Coloring, family: str | None = None, report=None) -> str:
    doc = certificate_dict(g, c, family)
    if report is not None:
        doc["report"] = report.to_dict()
    # one line per field, one line per code row
    lines = []
    for key, val in doc.items():
        if key == "codes":
            rows = ",\n".join("    " + json.dumps(row) for row in val)
            lines.append(f'  "codes": [\n{rows}\n  ]')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(val)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def parse_certificate(text: str) -> tuple[Coloring, dict[str, Any]]:
    """Parse and shape-check a certificate without a graph."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("certificate must be a JSON object")
    for key in ("n", "k", "colors"):
        if key not in doc:
            raise ParseError(f"certificate is missing {key!r}")
    n, k, colors = doc["n"], doc["k"], doc["colors"]
    if not isinstance(n, int) or not isinstance(k, int) or isinstance(n, bool) or isinstance(k, bool):
        raise ParseError("'n' and 'k' must be integers")
    if not isinstance(colors, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in colors):
        raise ParseError("'colors' must be an array of integers")
    if len(colors) != n:
        raise ParseError(f"'colors' has {len(colors)} entries, expected n={n}")
    if "family" in doc and not isinstance(doc["family"], str):
        raise ParseError("'family' must be a string")
    try:
        c = Coloring(tuple(colors), k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return c, doc


def load_certificate(text: str, g: Graph) -> Coloring:
    """Parse a certificate for ``g``, recomputing any stored codes."""
    c, doc = parse_certificate(text)
    if c.n != g.n:
        raise CertificateError(f"certificate is for n={c.n}, graph has n={g.n}")
    stored = doc.get("codes")
    if stored is not None:
        if not isinstance(stored, list) or len(stored) != g.n:
            raise CertificateError("'codes' must hold one code per vertex")
        if c.is_surjective():
            actual = rainbow_codes(g, c)
            for v, (want, got) in enumerate(zip(stored, actual), start=1):
                if not isinstance(want, list) or tuple(want) != got:
                    raise CertificateError(f"stored code of v_{v} is {want}, recomputed {list(got)}")
        else:
            raise CertificateError("codes are undefined for a coloring that leaves a color unused")
    return c
